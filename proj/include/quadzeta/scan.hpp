#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quadzeta/arith.hpp"

namespace quadzeta {

struct ScanOptions {
    int workers = 0;                                   // 0 = available parallelism
    std::uint64_t sieve_budget_bytes = 800'000'000ull; // sigma table cap (8 bytes/entry)
    bool deep_ordering_checks = false;                 // verify() turns this on
};

struct ZetaCheck {
    std::string label;
    std::string lang;   // exact "p/q"
    std::string closed; // exact "p/q"
    bool equal = false;
};

struct OrderingCheck {
    std::string label;
    std::string swapped; // lang value under the reversed basis ordering
    bool equal = false;
};

struct RhsEvaluation {
    Int p;
    bool four_distinct = false; // P, A, B, C(p) in four distinct wide classes
    bool printed_matches = false;
    bool derived_matches = false;
};

// One verification record per family member. Every boolean is an exact
// comparison; no rounding anywhere.
struct ScanRecord {
    Int m, d, D;
    Int eps_x, eps_y;
    int eps_norm = 1;
    bool unit_cf_ok = false; // continued-fraction oracle matches the closed form

    Int h_narrow, h_wide;
    std::vector<Int> wide_structure;
    std::vector<ZetaCheck> zeta; // P, A, B, Binv, C(p)...
    std::vector<std::pair<std::string, std::string>> coincidences;

    std::string siegel_total; // "p/q"
    Int divisor_sum;
    bool siegel_substitution_ok = false;  // 60 * siegel total == divisor sum
    bool total_zeta_identity_ok = false;  // sum of lang over wide classes == siegel

    bool theorem1_applicable = false; // h_wide == 4 and some p gives 4 distinct classes
    Int theorem1_p_used = 0;
    bool theorem1_printed_matches = false;
    bool theorem1_derived_matches = false;
    std::vector<RhsEvaluation> theorem1_evaluations; // every prime p | m

    bool h_ge_4_ok = false;
    bool h_even_ok = false;
    bool genus_parity_ok = false; // genus prediction agrees with computed parity

    std::vector<OrderingCheck> ordering_checks; // deep (verify) runs only

    std::vector<std::pair<std::string, double>> timings_ms;
    std::string error; // nonempty if this member failed unexpectedly

    // True when all of OUR independent routes to the same quantity agree.
    // Findings about the printed claims (RHS variant, coincidences, h = 4
    // structure) are data, not inconsistencies.
    bool internally_consistent() const;
};

// One record per valid m in [start, end], ascending. Per-m failures are
// captured in the record, never aborting the scan. Content is deterministic
// and independent of the worker count.
std::vector<ScanRecord> scan(const Int& start, const Int& end, const ScanOptions& opts = {});

// Deep single-m report including per-class evaluation under both basis
// orderings. Throws the make_field errors for invalid m.
ScanRecord verify(const Int& m, const ScanOptions& opts = {});

// JSON array with stable field order; rationals as "p/q" strings. Timings are
// emitted only on request so that scan output is byte-identical across runs
// and worker counts.
std::string emit_json(const std::vector<ScanRecord>& records, bool include_timings = false);

// One row per m with flattened flags; header always present.
std::string emit_csv(const std::vector<ScanRecord>& records);

} // namespace quadzeta

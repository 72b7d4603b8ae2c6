#include "quadzeta/scan.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "quadzeta/dedekind.hpp"
#include "quadzeta/errors.hpp"
#include "quadzeta/forms.hpp"
#include "quadzeta/lang_zeta.hpp"
#include "quadzeta/siegel.hpp"

namespace quadzeta {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ints fit JSON numbers only up to 2^53; beyond that emit decimal strings
ordered_json int_json(const Int& v) {
    static const Int kMax = Int(1) << 53;
    if (abs(v) <= kMax)
        return ordered_json(v.get_si());
    return ordered_json(to_string(v));
}

ScanRecord scan_one(const Int& m, const ScanOptions& opts, const SigmaTable* table) {
    ScanRecord rec;
    rec.m = m;
    auto t_all = Clock::now();
    FieldParams field = make_field(m);
    rec.d = field.d;
    rec.D = field.D;
    rec.eps_x = field.eps_x;
    rec.eps_y = field.eps_y;
    rec.eps_norm = field.eps_norm;

    // independent unit oracle
    PellSolution pell = fundamental_unit_cf(field.d);
    rec.unit_cf_ok =
        pell.x == field.eps_x && pell.y == field.eps_y && pell.norm == field.eps_norm;

    // class group
    auto t0 = Clock::now();
    ClassGroupReport cg = wide_group(field);
    rec.timings_ms.emplace_back("class_group", ms_since(t0));
    rec.h_narrow = cg.h_narrow;
    rec.h_wide = cg.h_wide;
    rec.wide_structure = cg.wide_structure;
    rec.coincidences = cg.coincidences;
    rec.h_ge_4_ok = cg.h_wide >= 4;
    rec.h_even_ok = mod_floor(cg.h_wide, 2) == 0;
    rec.genus_parity_ok = genus_parity_predicted(field.d) == (mod_floor(cg.h_wide, 2) == 1);

    // labelled partial zetas, both routes
    t0 = Clock::now();
    std::vector<ClassLabel> labels = {ClassLabel::P(), ClassLabel::A(), ClassLabel::B(),
                                      ClassLabel::Binv()};
    for (const Int& p : c_label_primes(field))
        labels.push_back(ClassLabel::C(p));
    for (const ClassLabel& lab : labels) {
        IdealBasis basis = standard_ideal(lab, field);
        Rat lz = lang_zeta(basis, field);
        Rat cz = closed_zeta(lab, field);
        rec.zeta.push_back({lab.str(), to_string(lz), to_string(cz), lz == cz});
        if (opts.deep_ordering_checks) {
            IdealBasis swapped = unimodular_change(basis, 0, 1, 1, 0);
            Rat sz = lang_zeta(swapped, field);
            rec.ordering_checks.push_back({lab.str(), to_string(sz), sz == lz});
        }
    }
    rec.timings_ms.emplace_back("lang_zeta", ms_since(t0));

    // Siegel total and the divisor-sum substitution
    t0 = Clock::now();
    Rat siegel = table ? zeta_total_siegel(field.D, *table) : zeta_total_siegel(field.D);
    Int dsum = table ? family_divisor_sum(field, *table) : family_divisor_sum(field);
    rec.siegel_total = to_string(siegel);
    rec.divisor_sum = dsum;
    rec.siegel_substitution_ok = 60 * siegel == Rat(dsum);
    rec.timings_ms.emplace_back("siegel", ms_since(t0));

    // end-to-end: sum of Lang partials over one ideal per wide class
    t0 = Clock::now();
    Rat total(0);
    for (const IdealBasis& ideal : all_wide_class_ideals(cg, field))
        total += lang_zeta(ideal, field);
    rec.total_zeta_identity_ok = total == siegel;
    rec.timings_ms.emplace_back("total_zeta", ms_since(t0));

    // divisor-sum identity, both printed and derived right-hand sides
    auto wide_of = [&](const std::string& name) {
        for (const auto& [lab, idx] : cg.label_classes)
            if (lab == name)
                return idx;
        throw std::logic_error("label class missing: " + name);
    };
    for (const Int& p : c_label_primes(field)) {
        RhsEvaluation ev;
        ev.p = p;
        int wp = wide_of("P"), wa = wide_of("A"), wb = wide_of("B");
        int wc = wide_of(ClassLabel::C(p).str());
        ev.four_distinct = wp != wa && wp != wb && wp != wc && wa != wb && wa != wc && wb != wc;
        Rat printed = divisor_identity_rhs(field, p, RhsVariant::printed);
        Rat derived = divisor_identity_rhs(field, p, RhsVariant::derived);
        ev.printed_matches = printed == Rat(dsum);
        ev.derived_matches = derived == Rat(dsum);
        rec.theorem1_evaluations.push_back(ev);
        if (cg.h_wide == 4 && ev.four_distinct && !rec.theorem1_applicable) {
            rec.theorem1_applicable = true;
            rec.theorem1_p_used = p;
            rec.theorem1_printed_matches = ev.printed_matches;
            rec.theorem1_derived_matches = ev.derived_matches;
        }
    }

    rec.timings_ms.emplace_back("total", ms_since(t_all));
    return rec;
}

ordered_json record_json(const ScanRecord& r, bool include_timings) {
    ordered_json j;
    j["m"] = int_json(r.m);
    j["d"] = int_json(r.d);
    j["D"] = int_json(r.D);
    j["unit"] = ordered_json{{"x", int_json(r.eps_x)}, {"y", int_json(r.eps_y)},
                             {"norm", r.eps_norm}};
    j["unit_cf_ok"] = r.unit_cf_ok;
    j["h_narrow"] = int_json(r.h_narrow);
    j["h_wide"] = int_json(r.h_wide);
    ordered_json ws = ordered_json::array();
    for (const Int& e : r.wide_structure)
        ws.push_back(int_json(e));
    j["wide_structure"] = ws;
    ordered_json z = ordered_json::object();
    for (const ZetaCheck& zc : r.zeta)
        z[zc.label] =
            ordered_json{{"lang", zc.lang}, {"closed", zc.closed}, {"equal", zc.equal}};
    j["zeta"] = z;
    ordered_json co = ordered_json::array();
    for (const auto& [x, y] : r.coincidences)
        co.push_back(ordered_json::array({x, y}));
    j["coincidences"] = co;
    j["siegel_total"] = r.siegel_total;
    j["divisor_sum"] = int_json(r.divisor_sum);
    j["siegel_substitution_ok"] = r.siegel_substitution_ok;
    j["total_zeta_identity_ok"] = r.total_zeta_identity_ok;
    ordered_json evs = ordered_json::array();
    for (const RhsEvaluation& ev : r.theorem1_evaluations)
        evs.push_back(ordered_json{{"p", int_json(ev.p)},
                                   {"four_distinct", ev.four_distinct},
                                   {"printed_matches", ev.printed_matches},
                                   {"derived_matches", ev.derived_matches}});
    j["theorem1"] = ordered_json{{"applicable", r.theorem1_applicable},
                                 {"p_used", int_json(r.theorem1_p_used)},
                                 {"printed_matches", r.theorem1_printed_matches},
                                 {"derived_matches", r.theorem1_derived_matches},
                                 {"evaluations", evs}};
    j["h_ge_4_ok"] = r.h_ge_4_ok;
    j["h_even_ok"] = r.h_even_ok;
    j["genus_parity_ok"] = r.genus_parity_ok;
    if (!r.ordering_checks.empty()) {
        ordered_json oc = ordered_json::array();
        for (const OrderingCheck& o : r.ordering_checks)
            oc.push_back(
                ordered_json{{"label", o.label}, {"swapped", o.swapped}, {"equal", o.equal}});
        j["ordering_checks"] = oc;
    }
    j["error"] = r.error;
    ordered_json t = ordered_json::object();
    if (include_timings)
        for (const auto& [k, v] : r.timings_ms)
            t[k] = v;
    j["timings"] = t;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

bool ScanRecord::internally_consistent() const {
    if (!error.empty())
        return false;
    if (!unit_cf_ok)
        return false;
    for (const ZetaCheck& z : zeta)
        if (!z.equal)
            return false;
    for (const OrderingCheck& o : ordering_checks)
        if (!o.equal)
            return false;
    if (!siegel_substitution_ok || !total_zeta_identity_ok)
        return false;
    if (h_narrow != 2 * h_wide)
        return false; // N(eps) = +1 forces the 2:1 narrow-to-wide quotient
    if (!genus_parity_ok)
        return false;
    return true;
}

std::vector<ScanRecord> scan(const Int& start, const Int& end, const ScanOptions& opts) {
    calibrate_dedekind(300);
    std::vector<Int> ms = valid_m_stream(start, end);
    std::vector<ScanRecord> records(ms.size());
    if (ms.empty())
        return records;

    // shared sigma table when the largest radicand fits the budget
    std::unique_ptr<SigmaTable> table;
    Int d_max = 9 * ms.back() * ms.back() + 2 * ms.back();
    if (d_max <= Int(static_cast<unsigned long>(opts.sieve_budget_bytes / 8)))
        table = std::make_unique<SigmaTable>(d_max.get_ui());

    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                        : (hw > 0 ? hw : 1u);
    workers = std::min<unsigned>(workers, static_cast<unsigned>(ms.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ms.size())
                break;
            try {
                records[i] = scan_one(ms[i], opts, table.get());
            } catch (const std::exception& e) {
                records[i] = ScanRecord{};
                records[i].m = ms[i];
                records[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    return records;
}

ScanRecord verify(const Int& m, const ScanOptions& opts) {
    calibrate_dedekind(300);
    ScanOptions deep = opts;
    deep.deep_ordering_checks = true;
    FieldParams field = make_field(m); // let hypothesis errors propagate
    std::unique_ptr<SigmaTable> table;
    if (field.d <= Int(static_cast<unsigned long>(deep.sieve_budget_bytes / 8)))
        table = std::make_unique<SigmaTable>(field.d.get_ui());
    return scan_one(m, deep, table.get());
}

std::string emit_json(const std::vector<ScanRecord>& records, bool include_timings) {
    ordered_json arr = ordered_json::array();
    for (const ScanRecord& r : records)
        arr.push_back(record_json(r, include_timings));
    return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "m,d,D,eps_x,eps_y,eps_norm,unit_cf_ok,h_narrow,h_wide,wide_structure,"
           "zeta_P_lang,zeta_P_closed,zeta_P_equal,zeta_A_lang,zeta_A_closed,zeta_A_equal,"
           "zeta_B_lang,zeta_B_closed,zeta_B_equal,zeta_Binv_lang,zeta_Binv_closed,"
           "zeta_Binv_equal,zeta_C,coincidences,siegel_total,divisor_sum,"
           "siegel_substitution_ok,total_zeta_identity_ok,theorem1_applicable,"
           "theorem1_p_used,theorem1_printed_matches,theorem1_derived_matches,"
           "h_ge_4_ok,h_even_ok,genus_parity_ok,error\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const ScanRecord& r : records) {
        out << to_string(r.m) << ',' << to_string(r.d) << ',' << to_string(r.D) << ','
            << to_string(r.eps_x) << ',' << to_string(r.eps_y) << ',' << r.eps_norm << ','
            << flag(r.unit_cf_ok) << ',' << to_string(r.h_narrow) << ',' << to_string(r.h_wide)
            << ',';
        std::string ws;
        for (const Int& e : r.wide_structure) {
            if (!ws.empty())
                ws += 'x';
            ws += to_string(e);
        }
        out << ws << ',';
        for (const char* want : {"P", "A", "B", "Binv"}) {
            bool found = false;
            for (const ZetaCheck& z : r.zeta) {
                if (z.label == want) {
                    out << z.lang << ',' << z.closed << ',' << flag(z.equal) << ',';
                    found = true;
                    break;
                }
            }
            if (!found)
                out << ",,,";
        }
        std::string cs;
        for (const ZetaCheck& z : r.zeta) {
            if (z.label.rfind("C(", 0) == 0) {
                if (!cs.empty())
                    cs += ';';
                cs += z.label + ":" + z.lang + ":" + z.closed + ":" + flag(z.equal);
            }
        }
        out << csv_escape(cs) << ',';
        std::string co;
        for (const auto& [x, y] : r.coincidences) {
            if (!co.empty())
                co += ';';
            co += x + "=" + y;
        }
        out << csv_escape(co) << ',' << r.siegel_total << ',' << to_string(r.divisor_sum) << ','
            << flag(r.siegel_substitution_ok) << ',' << flag(r.total_zeta_identity_ok) << ','
            << flag(r.theorem1_applicable) << ',' << to_string(r.theorem1_p_used) << ','
            << flag(r.theorem1_printed_matches) << ',' << flag(r.theorem1_derived_matches) << ','
            << flag(r.h_ge_4_ok) << ',' << flag(r.h_even_ok) << ',' << flag(r.genus_parity_ok)
            << ',' << csv_escape(r.error) << '\n';
    }
    return out.str();
}

} // namespace quadzeta

#pragma once

#include <stdexcept>
#include <string>

namespace quadzeta {

// Field-family hypothesis violations. Each names the failed condition so a
// caller can tell the user exactly which requirement on m was broken.
struct NotOddError : std::domain_error {
    explicit NotOddError(const std::string& msg) : std::domain_error(msg) {}
};
struct NotCongruent2Mod3Error : std::domain_error {
    explicit NotCongruent2Mod3Error(const std::string& msg) : std::domain_error(msg) {}
};
struct NotSquarefreeError : std::domain_error {
    explicit NotSquarefreeError(const std::string& msg) : std::domain_error(msg) {}
};

// The C label needs a prime p >= 5 dividing m.
struct InvalidPrimeForC : std::domain_error {
    explicit InvalidPrimeForC(const std::string& msg) : std::domain_error(msg) {}
};

// Unit transform matrix has a non-integer entry: the given module is not an
// ideal of Z[sqrt(d)].
struct NonIntegralEntry : std::domain_error {
    explicit NonIntegralEntry(const std::string& msg) : std::domain_error(msg) {}
};

// Lower-left transform entry vanished; cannot happen for a genuine ideal basis.
struct ZeroC : std::logic_error {
    explicit ZeroC(const std::string& msg) : std::logic_error(msg) {}
};

struct NotUnimodular : std::domain_error {
    explicit NotUnimodular(const std::string& msg) : std::domain_error(msg) {}
};

struct NonStandardBasis : std::domain_error {
    explicit NonStandardBasis(const std::string& msg) : std::domain_error(msg) {}
};

struct CompositionFailure : std::runtime_error {
    explicit CompositionFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Two routes that must agree disagreed (e.g. Dedekind-sum calibration, CF unit
// vs closed form). Carries enough context to reproduce.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace quadzeta

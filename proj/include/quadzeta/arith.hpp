#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quadzeta {

// All integer work is exact GMP arithmetic; rationals are kept canonical
// (positive denominator, gcd(num, den) = 1) after every operation.
using Int = mpz_class;
using Rat = mpq_class;

struct FactorPower {
    Int prime;
    unsigned exponent = 0;
    bool operator==(const FactorPower&) const = default;
};
// Primes strictly ascending; product of prime^exponent reconstructs the input.
using Factorization = std::vector<FactorPower>;

// Trial division to 10^6, then Brent-Pollard rho with a deterministic
// Miller-Rabin certificate (exact for n < 3.3e24, far past anything the
// scanner produces). factorize(1) is the empty product. Rejects n <= 0.
Factorization factorize(const Int& n);

bool is_prime(const Int& n);

// Sum of divisors, multiplicative over factorize(n). Rejects n <= 0.
Int sigma(const Int& n);

// True iff every exponent in factorize(n) is 1. Rejects n <= 0.
bool is_squarefree(const Int& n);

// Dense sigma table built by a divisor sieve; entry(n) is bit-identical to
// sigma(n) for 1 <= n <= limit.
class SigmaTable {
  public:
    explicit SigmaTable(std::uint64_t limit);
    std::uint64_t limit() const { return limit_; }
    Int entry(std::uint64_t n) const;
    std::uint64_t entry_u64(std::uint64_t n) const;

  private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> table_;
};

// Canonical rational with checked denominator. Mostly used by tests; library
// code builds Rats through arithmetic which keeps them canonical.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& n);
// Always "numerator/denominator" in lowest terms, e.g. "2449/30", "141/1".
std::string to_string(const Rat& q);

// Floored remainder, result in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

} // namespace quadzeta

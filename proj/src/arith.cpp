#include "quadzeta/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quadzeta {

namespace {

// Deterministic Miller-Rabin witness set: exact for every n < 3.317e24
// (first twelve primes as bases), which covers the whole scanner range.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(const Int& n, const Int& nm1, const Int& d, unsigned long r,
                          unsigned long a) {
    Int x;
    mpz_powm(x.get_mpz_t(), Int(a).get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == nm1)
            return false;
    }
    return true; // composite witness found
}

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of odd
// composite n. Deterministic: the polynomial increment starts at 1 and bumps
// on failure.
Int pollard_brent(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, q = 1, g = 1, xs = 0;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += step) {
                xs = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            Int ys = xs;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n)
            return g;
        // whole cycle collapsed; retry with the next increment
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int f = pollard_brent(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    Int nm1 = n - 1;
    Int d = nm1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long a : kWitnesses)
        if (miller_rabin_witness(n, nm1, d, r, a))
            return false;
    // Exact below 3.3e24; after that add GMP's randomized rounds on top.
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 81)
        return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
    return true;
}

Factorization factorize(const Int& n) {
    if (n <= 0)
        throw std::domain_error("factorize: n must be positive, got " + to_string(n));
    Factorization out;
    if (n == 1)
        return out;
    Int rest = n;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e)
            out.push_back({Int(static_cast<unsigned long>(p)), e});
    };
    strip(2);
    strip(3);
    // 6k+-1 wheel up to 10^6 (or sqrt(rest), whichever comes first)
    for (unsigned long p = 5; p <= 1000000ul; p += 6) {
        if (Int(p) * p > rest)
            break;
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        if (Int(1000000ul) * 1000000ul > rest && !is_prime(rest)) {
            // composite below 10^12 would have had a factor <= 10^6
            throw std::logic_error("factorize: trial division invariant violated");
        }
        std::map<Int, unsigned> extra;
        factor_into(rest, extra);
        for (const auto& [p, e] : extra)
            out.push_back({p, e});
    }
    std::sort(out.begin(), out.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.prime < b.prime; });
    return out;
}

Int sigma(const Int& n) {
    if (n <= 0)
        throw std::domain_error("sigma: n must be positive, got " + to_string(n));
    Int s = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e + 1);
        s *= (pk - 1) / (p - 1);
    }
    return s;
}

bool is_squarefree(const Int& n) {
    if (n <= 0)
        throw std::domain_error("is_squarefree: n must be positive, got " + to_string(n));
    for (const auto& fp : factorize(n))
        if (fp.exponent > 1)
            return false;
    return true;
}

SigmaTable::SigmaTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 1)
        throw std::domain_error("sigma_table: limit must be positive");
    table_.assign(limit + 1, 0);
    for (std::uint64_t i = 1; i <= limit; ++i)
        for (std::uint64_t j = i; j <= limit; j += i)
            table_[j] += i;
}

std::uint64_t SigmaTable::entry_u64(std::uint64_t n) const {
    if (n < 1 || n > limit_)
        throw std::out_of_range("sigma_table: index out of range");
    return table_[n];
}

Int SigmaTable::entry(std::uint64_t n) const {
    return Int(static_cast<unsigned long>(entry_u64(n)));
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& n) {
    return n.get_str();
}

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace quadzeta

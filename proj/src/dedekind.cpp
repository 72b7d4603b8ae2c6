#include "quadzeta/dedekind.hpp"

#include <cstdint>
#include <stdexcept>

#include "quadzeta/errors.hpp"

namespace quadzeta {

namespace {

using i128 = __int128;

void add_i128(Int& acc, i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    Int t(static_cast<unsigned long>(u >> 64));
    t <<= 64;
    t += static_cast<unsigned long>(u);
    if (neg)
        acc -= t;
    else
        acc += t;
}

// Numerator loop over int64 residues; valid while all intermediates fit in
// i128, i.e. k < 2^31. The mpz fallback below covers anything larger.
Int sum_scaled_i64(int i, std::int64_t h, std::int64_t k) {
    // acc magnitude per term is <= k^4 (i=2) or ~0.1 k^4 (i=3) < 2^124;
    // flush into the bignum before the i128 accumulator can saturate.
    constexpr i128 flush_at = static_cast<i128>(1) << 120;
    Int total = 0;
    i128 acc = 0;
    if (i == 2) {
        std::int64_t b = 0;
        for (std::int64_t a = 0; a < k; ++a) {
            i128 f1 = static_cast<i128>(a) * a * 6 - static_cast<i128>(a) * k * 6 +
                      static_cast<i128>(k) * k;
            i128 f2 = static_cast<i128>(b) * b * 6 - static_cast<i128>(b) * k * 6 +
                      static_cast<i128>(k) * k;
            acc += f1 * f2;
            if (acc > flush_at || acc < -flush_at) {
                add_i128(total, acc);
                acc = 0;
            }
            b += h;
            if (b >= k)
                b -= k;
        }
    } else {
        std::int64_t b = h;
        for (std::int64_t a = 1; a < k; ++a) { // a = 0 term vanishes: B̄_1(0) = 0
            i128 f1 = 2 * a - k;
            i128 f2 = static_cast<i128>(b) * b * (2 * b) -
                      static_cast<i128>(b) * b * (3 * k) + static_cast<i128>(b) * k * k;
            acc += f1 * f2;
            if (acc > flush_at || acc < -flush_at) {
                add_i128(total, acc);
                acc = 0;
            }
            b += h;
            if (b >= k)
                b -= k;
        }
    }
    add_i128(total, acc);
    return total;
}

Int sum_scaled_mpz(int i, const Int& h, const Int& k) {
    Int total = 0, b = 0, f1, f2;
    if (i == 2) {
        for (Int a = 0; a < k; ++a) {
            f1 = 6 * a * a - 6 * a * k + k * k;
            f2 = 6 * b * b - 6 * b * k + k * k;
            total += f1 * f2;
            b += h;
            if (b >= k)
                b -= k;
        }
    } else {
        b = h;
        for (Int a = 1; a < k; ++a) {
            f1 = 2 * a - k;
            f2 = 2 * b * b * b - 3 * b * b * k + b * k * k;
            total += f1 * f2;
            b += h;
            if (b >= k)
                b -= k;
        }
    }
    return total;
}

} // namespace

Rat bernoulli_bar(int p, const Int& num, const Int& den) {
    if (den < 1)
        throw std::domain_error("bernoulli_bar: den must be >= 1");
    Int r = mod_floor(num, den);
    switch (p) {
    case 1:
        if (r == 0)
            return Rat(0);
        return make_rat(2 * r - den, 2 * den);
    case 2:
        return make_rat(6 * r * r - 6 * r * den + den * den, 6 * den * den);
    case 3:
        return make_rat(2 * r * r * r - 3 * r * r * den + r * den * den, 2 * den * den * den);
    default:
        throw std::domain_error("bernoulli_bar: p must be 1, 2 or 3");
    }
}

Rat dedekind_S(int i, const Int& h, const Int& k) {
    if (i != 2 && i != 3)
        throw std::domain_error("dedekind_S: i must be 2 or 3");
    if (k < 1)
        throw std::domain_error("dedekind_S: k must be >= 1");
    Int hr = mod_floor(h, k);
    Int num;
    if (k < Int(1) << 31)
        num = sum_scaled_i64(i, hr.get_si(), k.get_si());
    else
        num = sum_scaled_mpz(i, hr, k);
    Int k4;
    mpz_pow_ui(k4.get_mpz_t(), k.get_mpz_t(), 4);
    return make_rat(num, (i == 2 ? 36 : 4) * k4);
}

Rat dedekind_S_closed(int i, int sign, const Int& k) {
    if (i != 2 && i != 3)
        throw std::domain_error("dedekind_S_closed: i must be 2 or 3");
    if (sign != 1 && sign != -1)
        throw std::domain_error("dedekind_S_closed: sign must be +-1");
    if (k < 1)
        throw std::domain_error("dedekind_S_closed: k must be >= 1");
    Int k2 = k * k;
    Int k3 = k2 * k;
    Int k4 = k2 * k2;
    if (i == 3)
        return make_rat(sign * (-k4 + 5 * k2 - 4), 120 * k3);
    return make_rat(k4 + 10 * k2 - 6, 180 * k3);
}

void calibrate_dedekind(unsigned k_max) {
    for (unsigned k = 1; k <= k_max; ++k) {
        for (int i : {2, 3}) {
            for (int s : {1, -1}) {
                Rat lhs = dedekind_S(i, Int(s), Int(k));
                Rat rhs = dedekind_S_closed(i, s, Int(k));
                if (lhs != rhs)
                    throw InconsistencyError(
                        "dedekind calibration failed at i=" + std::to_string(i) +
                        " sign=" + std::to_string(s) + " k=" + std::to_string(k) + ": sum " +
                        to_string(lhs) + " != closed " + to_string(rhs));
            }
        }
    }
}

} // namespace quadzeta

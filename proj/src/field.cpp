#include "quadzeta/field.hpp"

#include <stdexcept>

#include "quadzeta/errors.hpp"

namespace quadzeta {

FieldParams make_field(const Int& m) {
    if (m <= 0)
        throw std::domain_error("make_field: m must be positive, got " + to_string(m));
    if (mod_floor(m, 2) != 1)
        throw NotOddError("make_field: m = " + to_string(m) + " is not odd");
    if (mod_floor(m, 3) != 2)
        throw NotCongruent2Mod3Error("make_field: m = " + to_string(m) +
                                     " is not congruent to 2 mod 3");
    FieldParams f;
    f.m = m;
    f.d = 9 * m * m + 2 * m;
    if (!is_squarefree(f.d))
        throw NotSquarefreeError("make_field: 9m^2+2m = " + to_string(f.d) +
                                 " is not squarefree (m = " + to_string(m) + ")");
    f.D = 4 * f.d;
    f.eps_x = 9 * m + 1;
    f.eps_y = 3;
    f.eps_norm = 1;
    if (mod_floor(f.d, 4) != 3)
        throw std::logic_error("make_field: d mod 4 != 3 cannot happen for odd m");
    if (f.eps_x * f.eps_x - f.d * f.eps_y * f.eps_y != 1)
        throw std::logic_error("make_field: Pell identity for the closed-form unit failed");
    return f;
}

PellSolution fundamental_unit_cf(const Int& d) {
    if (d <= 1)
        throw std::domain_error("fundamental_unit_cf: need d > 1, got " + to_string(d));
    if (mpz_perfect_square_p(d.get_mpz_t()))
        throw std::domain_error("fundamental_unit_cf: d = " + to_string(d) +
                                " is a perfect square");
    Int a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    // P/Q recurrences for the expansion of sqrt(d); exact integers throughout.
    Int P = 0, Q = 1, a = a0;
    Int h_prev = 1, h = a0; // convergent numerators
    Int k_prev = 0, k = 1;  // convergent denominators
    int norm = 1;
    for (;;) {
        norm = -norm;
        P = a * Q - P;
        Q = (d - P * P) / Q;
        if (Q == 1)
            return {h, k, norm};
        a = (a0 + P) / Q;
        Int hn = a * h + h_prev;
        Int kn = a * k + k_prev;
        h_prev = h;
        h = hn;
        k_prev = k;
        k = kn;
    }
}

std::vector<Int> valid_m_stream(const Int& start, const Int& end) {
    std::vector<Int> out;
    Int m = start < 1 ? Int(1) : start;
    // members satisfy m = 5 mod 6; jump to the first candidate
    Int r = mod_floor(m, 6);
    m += mod_floor(Int(5) - r, 6);
    for (; m <= end; m += 6) {
        if (is_squarefree(9 * m * m + 2 * m))
            out.push_back(m);
    }
    return out;
}

} // namespace quadzeta

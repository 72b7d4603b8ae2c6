#pragma once

#include <vector>

#include "quadzeta/arith.hpp"

namespace quadzeta {

// One member of the family k_m = Q(sqrt(9m^2+2m)). The radicand is 3 mod 4,
// so the ring of integers is Z[sqrt(d)] and the field discriminant is 4d.
// The fundamental unit is (9m+1) + 3*sqrt(d) with norm +1; it is stored in
// closed form and Pell-verified at construction. The continued-fraction
// solver below is an independent oracle, not the source of truth.
struct FieldParams {
    Int m;
    Int d;       // 9m^2 + 2m
    Int D;       // 4d
    Int eps_x;   // 9m + 1
    Int eps_y;   // 3
    int eps_norm = 1;
};

// Validates m (positive, odd, m = 2 mod 3, d squarefree) and fills the unit.
// Throws NotOddError / NotCongruent2Mod3Error / NotSquarefreeError.
FieldParams make_field(const Int& m);

struct PellSolution {
    Int x, y;
    int norm; // x^2 - d y^2 = norm, +1 or -1
};

// Smallest solution > 1 of x^2 - d y^2 = +-1 from the continued-fraction
// expansion of sqrt(d), using exact integer P/Q recurrences. Rejects perfect
// squares and d <= 1.
PellSolution fundamental_unit_cf(const Int& d);

// All m in [start, end] accepted by make_field, ascending.
std::vector<Int> valid_m_stream(const Int& start, const Int& end);

} // namespace quadzeta

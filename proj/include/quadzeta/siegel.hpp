#pragma once

#include "quadzeta/arith.hpp"
#include "quadzeta/field.hpp"

namespace quadzeta {

// zeta_k(-1) = (1/60) * sum over |b| < sqrt(D), b^2 = D mod 4, of
// sigma((D - b^2)/4). D must be a fundamental positive discriminant.
// The overload with a SigmaTable must cover (D - b^2)/4 up to D/4 and is
// bit-identical to the per-value route.
Rat zeta_total_siegel(const Int& D);
Rat zeta_total_siegel(const Int& D, const SigmaTable& table);

// sum over |l| < sqrt(9m^2+2m) of sigma(9m^2+2m - l^2); equals
// 60 * zeta_total_siegel(4d) via the b = 2l substitution.
Int family_divisor_sum(const FieldParams& field);
Int family_divisor_sum(const FieldParams& field, const SigmaTable& table);

// Right-hand side of the divisor-sum identity conjectured for h = 4 members,
// for a prime divisor p >= 5 of m. The `printed` variant ends in 9p^2; the
// `derived` variant ends in 3p^2 (the value forced by expanding the four
// closed-form partial zetas). The scanner adjudicates empirically which one
// matches; this module takes no side.
enum class RhsVariant { printed, derived };
Rat divisor_identity_rhs(const FieldParams& field, const Int& p, RhsVariant variant);

// 60 * (closed P + closed A + closed B + closed C(p)); agrees with the
// derived RHS variant as a polynomial identity.
Rat partials_sum_times60(const FieldParams& field, const Int& p);

} // namespace quadzeta

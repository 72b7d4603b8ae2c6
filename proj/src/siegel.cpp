#include "quadzeta/siegel.hpp"

#include <functional>
#include <stdexcept>

#include "quadzeta/errors.hpp"
#include "quadzeta/lang_zeta.hpp"

namespace quadzeta {

namespace {

void check_fundamental(const Int& D) {
    bool ok = D > 0 && mpz_perfect_square_p(D.get_mpz_t()) == 0;
    if (ok) {
        Int r = mod_floor(D, 4);
        if (r == 1)
            ok = is_squarefree(D);
        else if (r == 0) {
            Int q = D / 4;
            Int q4 = mod_floor(q, 4);
            ok = (q4 == 2 || q4 == 3) && is_squarefree(q);
        } else
            ok = false;
    }
    if (!ok)
        throw std::domain_error("zeta_total_siegel: " + to_string(D) +
                                " is not a fundamental positive discriminant");
}

Rat siegel_sum(const Int& D, const std::function<Int(const Int&)>& sig) {
    check_fundamental(D);
    Int s0;
    mpz_sqrt(s0.get_mpz_t(), D.get_mpz_t());
    Int total = 0;
    Int b = 2;
    if (mod_floor(D, 4) == 0)
        total += sig(D / 4); // b = 0 term
    else
        b = 1;
    for (; b <= s0; b += 2)
        total += 2 * sig((D - b * b) / 4); // +-b
    return make_rat(total, 60);
}

} // namespace

Rat zeta_total_siegel(const Int& D) {
    return siegel_sum(D, [](const Int& n) { return sigma(n); });
}

Rat zeta_total_siegel(const Int& D, const SigmaTable& table) {
    return siegel_sum(D, [&](const Int& n) { return table.entry(n.get_ui()); });
}

Int family_divisor_sum(const FieldParams& field) {
    Rat z = zeta_total_siegel(field.D);
    Int num = z.get_num() * 60;
    if (mod_floor(num, z.get_den()) != 0)
        throw std::logic_error("family_divisor_sum: 60 * zeta is not integral");
    return num / z.get_den();
}

Int family_divisor_sum(const FieldParams& field, const SigmaTable& table) {
    Rat z = zeta_total_siegel(field.D, table);
    Int num = z.get_num() * 60;
    if (mod_floor(num, z.get_den()) != 0)
        throw std::logic_error("family_divisor_sum: 60 * zeta is not integral");
    return num / z.get_den();
}

Rat divisor_identity_rhs(const FieldParams& field, const Int& p, RhsVariant variant) {
    // validate p the same way the C label does
    closed_zeta(ClassLabel::C(p), field);
    const Int& m = field.m;
    Int m2 = m * m, m3 = m2 * m, p2 = p * p;
    Rat rhs = make_rat(147 * m3 + 49 * m2 + 308 * m + 46, 3);
    rhs += make_rat(m2 * (36 * m + 12), p2);
    rhs += Rat(9 * m * p2 + 10 * m);
    rhs += Rat((variant == RhsVariant::printed ? 9 : 3) * p2);
    return rhs;
}

Rat partials_sum_times60(const FieldParams& field, const Int& p) {
    Rat sum = closed_zeta(ClassLabel::P(), field) + closed_zeta(ClassLabel::A(), field) +
              closed_zeta(ClassLabel::B(), field) + closed_zeta(ClassLabel::C(p), field);
    return 60 * sum;
}

} // namespace quadzeta

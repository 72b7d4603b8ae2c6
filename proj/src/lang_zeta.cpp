#include "quadzeta/lang_zeta.hpp"

#include <stdexcept>

#include "quadzeta/dedekind.hpp"
#include "quadzeta/errors.hpp"

namespace quadzeta {

std::string ClassLabel::str() const {
    switch (kind) {
    case LabelKind::P:
        return "P";
    case LabelKind::A:
        return "A";
    case LabelKind::B:
        return "B";
    case LabelKind::Binv:
        return "Binv";
    case LabelKind::C:
        return "C(" + to_string(p) + ")";
    }
    return "?";
}

namespace {

// delta(a) = r1 r2' - r1' r2 = -2 (x1 y2 - x2 y1) sqrt(d): a pure sqrt(d)
// multiple. Returns the coefficient divided by -2, i.e. x1 y2 - x2 y1.
Int basis_det(const QuadInt& r1, const QuadInt& r2) {
    return r1.x * r2.y - r2.x * r1.y;
}

void check_c_prime(const Int& p, const FieldParams& field) {
    if (p < 5)
        throw InvalidPrimeForC("C label needs p >= 5, got p = " + to_string(p));
    if (!is_prime(p))
        throw InvalidPrimeForC("C label needs a prime p, got p = " + to_string(p));
    if (mod_floor(field.m, p) != 0)
        throw InvalidPrimeForC("C label needs p | m: p = " + to_string(p) +
                               " does not divide m = " + to_string(field.m));
}

} // namespace

IdealBasis make_ideal_basis(const QuadInt& r1, const QuadInt& r2, const Int& norm,
                            std::optional<ClassLabel> label) {
    if (basis_det(r1, r2) == 0)
        throw std::domain_error("ideal basis is degenerate: delta = 0");
    if (norm <= 0)
        throw std::domain_error("ideal basis needs a positive norm");
    return IdealBasis{r1, r2, norm, std::move(label)};
}

IdealBasis standard_ideal(const ClassLabel& label, const FieldParams& field) {
    switch (label.kind) {
    case LabelKind::P:
        return make_ideal_basis({0, 1}, {1, 0}, 1, label);
    case LabelKind::A:
        return make_ideal_basis({2, 0}, {1, 1}, 2, label);
    case LabelKind::B:
        return make_ideal_basis({3, 0}, {1, 1}, 3, label);
    case LabelKind::Binv:
        return make_ideal_basis({3, 0}, {1, -1}, 3, label);
    case LabelKind::C:
        check_c_prime(label.p, field);
        return make_ideal_basis({0, 1}, {label.p, 0}, label.p, label);
    }
    throw std::logic_error("unreachable label kind");
}

TransformMatrix transform_matrix(const IdealBasis& basis, const FieldParams& field) {
    const Int &x1 = basis.r1.x, &y1 = basis.r1.y;
    const Int &x2 = basis.r2.x, &y2 = basis.r2.y;
    const Int &u = field.eps_x, &v = field.eps_y, &d = field.d;
    Int det = basis_det(basis.r1, basis.r2);
    if (det == 0)
        throw std::domain_error("transform_matrix: delta = 0");
    // eps * r_i written in the (1, sqrt(d)) basis, then expressed back in
    // (r1, r2) by an exact linear solve. Divisibility by det is exactly the
    // condition that the module is stable under eps.
    Int X1 = u * x1 + v * d * y1, Y1 = u * y1 + v * x1;
    Int X2 = u * x2 + v * d * y2, Y2 = u * y2 + v * x2;
    auto exact_div = [&](const Int& n, const char* which) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), det.get_mpz_t());
        if (r != 0)
            throw NonIntegralEntry(std::string("transform_matrix: entry ") + which +
                                   " is not an integer; the module is not an ideal of "
                                   "Z[sqrt(d)]");
        return q;
    };
    TransformMatrix M;
    M.a = exact_div(X1 * y2 - x2 * Y1, "a");
    M.b = exact_div(x1 * Y1 - X1 * y1, "b");
    M.c = exact_div(X2 * y2 - x2 * Y2, "c");
    M.d = exact_div(x1 * Y2 - X2 * y1, "d");
    if (M.c == 0)
        throw ZeroC("transform_matrix: c = 0, impossible for an ideal basis");
    if (M.det() != field.eps_norm)
        throw std::logic_error("transform_matrix: det != N(eps)");
    return M;
}

Rat lang_zeta(const IdealBasis& basis, const FieldParams& field) {
    TransformMatrix M = transform_matrix(basis, field);
    const Int& d = field.d;
    // sgn(delta): delta is the pure sqrt(d) multiple -2(x1 y2 - x2 y1) sqrt(d)
    int sgn_delta = basis_det(basis.r1, basis.r2) < 0 ? 1 : -1;
    Int r2n = basis.r2.x * basis.r2.x - d * basis.r2.y * basis.r2.y; // r2 r2'
    Int k = abs(M.c);
    int sgn_c = M.c < 0 ? -1 : 1;
    Int c3 = M.c * M.c * M.c;
    Rat S3a = dedekind_S(3, M.a, k);
    Rat S2a = dedekind_S(2, M.a, k);
    Rat S3d = dedekind_S(3, M.d, k);
    Rat S2d = dedekind_S(2, M.d, k);
    Int t = M.trace();
    Rat brace = Rat(t * t * t - 6 * t * field.eps_norm);
    Rat cs = Rat(c3 * sgn_c);
    brace -= 240 * cs * S3a;
    brace += 180 * Rat(M.a) * cs * S2a;
    brace -= 240 * cs * S3d;
    brace += 180 * Rat(M.d) * cs * S2d;
    return make_rat(sgn_delta * r2n, 360 * basis.norm * c3) * brace;
}

Rat closed_zeta(const ClassLabel& label, const FieldParams& field) {
    const Int& m = field.m;
    Int m2 = m * m, m3 = m2 * m;
    switch (label.kind) {
    case LabelKind::P:
        return make_rat(108 * m3 + 36 * m2 + 57 * m + 9, 180);
    case LabelKind::A:
        return make_rat(27 * m3 + 9 * m2 + 138 * m + 36, 180);
    case LabelKind::B:
    case LabelKind::Binv:
        return make_rat(12 * m3 + 4 * m2 + 113 * m + 1, 180);
    case LabelKind::C: {
        check_c_prime(label.p, field);
        Int p2 = label.p * label.p, p4 = p2 * p2;
        return make_rat(108 * m3 + 36 * m2 + 27 * p4 * m + 30 * p2 * m + 9 * p4, 180 * p2);
    }
    }
    throw std::logic_error("unreachable label kind");
}

IdealBasis unimodular_change(const IdealBasis& basis, const Int& u11, const Int& u12,
                             const Int& u21, const Int& u22) {
    Int det = u11 * u22 - u12 * u21;
    if (det != 1 && det != -1)
        throw NotUnimodular("unimodular_change: determinant " + to_string(det) +
                            " is not +-1");
    QuadInt n1{u11 * basis.r1.x + u12 * basis.r2.x, u11 * basis.r1.y + u12 * basis.r2.y};
    QuadInt n2{u21 * basis.r1.x + u22 * basis.r2.x, u21 * basis.r1.y + u22 * basis.r2.y};
    return make_ideal_basis(n1, n2, basis.norm, basis.label);
}

std::vector<Int> c_label_primes(const FieldParams& field) {
    std::vector<Int> out;
    for (const auto& fp : factorize(field.m))
        out.push_back(fp.prime);
    return out;
}

} // namespace quadzeta

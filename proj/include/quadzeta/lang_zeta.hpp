#pragma once

#include <optional>
#include <string>

#include "quadzeta/arith.hpp"
#include "quadzeta/field.hpp"

namespace quadzeta {

// x + y*sqrt(d) relative to an ambient FieldParams. Conjugate is (x, -y),
// norm x^2 - d y^2, trace 2x.
struct QuadInt {
    Int x, y;
    bool operator==(const QuadInt&) const = default;
};

enum class LabelKind { P, A, B, Binv, C };

// P: principal. A: class of (2, 1+sqrt(d)). B / Binv: the two classes over 3.
// C(p): class of (p, sqrt(d)) for a prime p >= 5 dividing m.
struct ClassLabel {
    LabelKind kind = LabelKind::P;
    Int p = 0; // only meaningful for C

    static ClassLabel P() { return {LabelKind::P, 0}; }
    static ClassLabel A() { return {LabelKind::A, 0}; }
    static ClassLabel B() { return {LabelKind::B, 0}; }
    static ClassLabel Binv() { return {LabelKind::Binv, 0}; }
    static ClassLabel C(const Int& p) { return {LabelKind::C, p}; }

    std::string str() const; // "P", "A", "B", "Binv", "C(5)"
    bool operator==(const ClassLabel&) const = default;
};

// An integral ideal as the module Z r1 + Z r2. Construct through
// make_ideal_basis (rejects degenerate pairs with delta = 0).
struct IdealBasis {
    QuadInt r1, r2;
    Int norm; // N(a) = [O : a]
    std::optional<ClassLabel> label;
};

IdealBasis make_ideal_basis(const QuadInt& r1, const QuadInt& r2, const Int& norm,
                            std::optional<ClassLabel> label = std::nullopt);

// Matrix of multiplication by the fundamental unit on the basis (r1, r2):
// eps * (r1, r2)^T = M (r1, r2)^T. Integer entries iff the module is stable
// under eps; determinant equals N(eps) and the off-diagonal entries are
// nonzero for every genuine ideal basis.
struct TransformMatrix {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
};

// Standard representative ideals from the ramification/splitting of 2, 3, p:
//   P    -> {sqrt(d), 1}      (norm 1)
//   A    -> {2, 1+sqrt(d)}    (norm 2)
//   B    -> {3, 1+sqrt(d)}    (norm 3)
//   Binv -> {3, 1-sqrt(d)}    (norm 3)
//   C(p) -> {sqrt(d), p}      (norm p), requires p >= 5 prime, p | m
// Orderings keep the matrix entry c small where possible (the Dedekind-sum
// cost of lang_zeta is O(|c|)).
IdealBasis standard_ideal(const ClassLabel& label, const FieldParams& field);

// Throws NonIntegralEntry if the module is not an ideal of Z[sqrt(d)].
TransformMatrix transform_matrix(const IdealBasis& basis, const FieldParams& field);

// Exact zeta_{k_m}(-1, A) where the supplied ideal lies in the INVERSE of the
// class A whose value is returned (Lang's convention). For the order-2
// classes of this family the distinction vanishes; it matters on general
// fields, hence the note.
Rat lang_zeta(const IdealBasis& basis, const FieldParams& field);

// The four closed-form polynomials; Binv returns the same value as B.
Rat closed_zeta(const ClassLabel& label, const FieldParams& field);

// Basis change by an integer matrix with determinant +-1; spans the same
// module, keeps norm and label. Throws NotUnimodular.
IdealBasis unimodular_change(const IdealBasis& basis, const Int& u11, const Int& u12,
                             const Int& u21, const Int& u22);

// Prime divisors of m admissible for the C label (all of them: m is odd and
// coprime to 3 by construction), ascending.
std::vector<Int> c_label_primes(const FieldParams& field);

} // namespace quadzeta

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadzeta/arith.hpp"
#include "quadzeta/field.hpp"
#include "quadzeta/lang_zeta.hpp"

namespace quadzeta {

// Integral binary quadratic form a x^2 + b xy + c y^2 of positive nonsquare
// discriminant b^2 - 4ac. All comparisons against sqrt(D) below are exact
// integer inequalities (squared with sign analysis); no floating point.
struct QForm {
    Int a, b, c;
    bool operator==(const QForm&) const = default;
    bool operator<(const QForm& o) const {
        if (a != o.a)
            return a < o.a;
        if (b != o.b)
            return b < o.b;
        return c < o.c;
    }
    std::string str() const {
        return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
    }
};

Int discriminant(const QForm& f);

// D > 0, not a perfect square, D = 0 or 1 mod 4.
bool valid_indefinite_discriminant(const Int& D);

// Reduced: |sqrt(D) - 2|a|| < b < sqrt(D). For such forms ac < 0 and the rho
// operator permutes them in disjoint cycles.
bool is_reduced(const QForm& f, const Int& D);

// One reduction step (c, r, (r^2-D)/(4c)) with r = -b mod 2|c| normalized
// into (sqrt(D)-2|c|, sqrt(D)) when c^2 < D, else into (-|c|, |c|].
QForm rho_step(const QForm& f, const Int& D);

// Applies rho_step until reduced; bounded iterations with a failure report.
QForm reduce(const QForm& f, const Int& D);

// The full rho-cycle through a form; cycle[0] is the lexicographically least
// triple (the canonical class representative).
struct FormClass {
    std::vector<QForm> cycle;
    const QForm& representative() const { return cycle.front(); }
};
FormClass cycle_of(const QForm& f, const Int& D);

// All reduced primitive forms of discriminant D, sorted, duplicate-free.
std::vector<QForm> reduced_forms(const Int& D);

// Dirichlet composition of primitive forms of equal discriminant. Result is
// some (generally unreduced) form in the product class.
QForm compose(const QForm& f, const QForm& g, const Int& D);

// Principal form (1, b0, (b0^2-D)/4), b0 the largest b <= floor(sqrt(D)) with
// b = D mod 2.
QForm principal_form(const Int& D);

// Narrow class group: cycles of reduced forms with the composition law.
struct NarrowGroup {
    Int D;
    std::vector<FormClass> classes;
    std::vector<std::vector<int>> table; // table[i][j] = index of class product
    int identity = 0;

    Int h() const { return Int(static_cast<unsigned long>(classes.size())); }
    // Reduce an arbitrary form of discriminant D and locate its cycle.
    int class_index(const QForm& f) const;

  private:
    friend NarrowGroup narrow_group(const Int& D);
    std::map<QForm, int> index_;
};
NarrowGroup narrow_group(const Int& D);

// Wide (ideal) class group as the quotient of the narrow group by the class
// of (-1, b0, (D-b0^2)/4). When that class is principal (unit of norm -1)
// the quotient is trivial and wide = narrow; in this family N(eps) = +1
// forces the 2:1 quotient. This is computed, never assumed.
struct ClassGroupReport {
    Int D;
    Int h_narrow;
    Int h_wide;
    std::vector<Int> wide_structure; // elementary divisors, product = h_wide
    NarrowGroup narrow;
    std::vector<std::vector<int>> wide_orbits; // narrow class indices per wide class
    std::vector<int> wide_of_narrow;
    std::vector<std::vector<int>> wide_table;
    int wide_identity = 0;
    // Family labels (only filled by the FieldParams overload)
    std::vector<std::pair<std::string, int>> label_classes; // label -> wide index
    std::vector<std::pair<std::string, std::string>> coincidences;

    QForm wide_representative(int wide_index) const;
    int wide_index_of(const QForm& f) const;
};
ClassGroupReport wide_group(const Int& D);
ClassGroupReport wide_group(const FieldParams& field);

// Bridge from the standard-shape ideals {q, s+sqrt(d)} / {sqrt(d), q} to
// forms of discriminant 4d. Throws NonStandardBasis.
QForm ideal_to_form(const IdealBasis& basis, const FieldParams& field);

// One ideal per wide class: from the lexicographically least reduced form
// (a, b, c) with a > 0 in each class, the ideal {a, -b/2 + sqrt(d)}.
std::vector<IdealBasis> all_wide_class_ideals(const ClassGroupReport& report,
                                              const FieldParams& field);
std::vector<IdealBasis> all_wide_class_ideals(const FieldParams& field);

// Genus-theory parity: h(d) odd iff d = p, 2 p1 or p1 p2 with p prime and
// p1 = p2 = 3 mod 4 prime.
bool genus_parity_predicted(const Int& d);

// Elementary divisors of a finite abelian group given its multiplication
// table, by order counting. Exposed for tests.
std::vector<Int> abelian_structure(const std::vector<std::vector<int>>& table, int identity);

} // namespace quadzeta

#include "quadzeta/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "quadzeta/errors.hpp"

namespace quadzeta {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// g = gcd(a,b) >= 0 and x a + y b = g
Int extgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_primitive(const QForm& f) {
    return gcd3(f.a, f.b, f.c) == 1;
}

// Walk to a reduced form with positive leading coefficient (signs alternate
// around a cycle, so at most one extra rho step).
QForm positive_reduced(const QForm& f, const Int& D) {
    QForm g = reduce(f, D);
    if (g.a < 0)
        g = rho_step(g, D);
    if (g.a <= 0)
        throw std::logic_error("positive_reduced: no positive representative found");
    return g;
}

// Dirichlet composition on forms with positive leading coefficients
// (classical algorithm via the united-forms congruences). Inputs must be
// primitive with equal discriminant.
QForm compose_positive(QForm f1, QForm f2, const Int& D) {
    if (f1.a > f2.a)
        std::swap(f1, f2);
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;
    Int y1, d0;
    {
        Int u, v;
        if (mod_floor(f2.a, f1.a) == 0) {
            y1 = 0;
            d0 = f1.a;
        } else {
            d0 = extgcd(f2.a, f1.a, u, v);
            y1 = u;
        }
    }
    Int x2, y2, d1;
    if (d0 != 0 && mod_floor(s, d0) == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d0;
    } else {
        Int u, v;
        d1 = extgcd(s, d0, u, v);
        x2 = u;
        y2 = -v;
    }
    Int v1 = f1.a / d1;
    Int v2 = f2.a / d1;
    Int r = mod_floor(y1 * y2 * n - x2 * f2.c, v1);
    QForm out;
    out.a = v1 * v2;
    out.b = f2.b + 2 * v2 * r;
    Int num = out.b * out.b - D;
    Int den = 4 * out.a;
    if (mod_floor(num, den) != 0)
        throw CompositionFailure("compose: (b^2 - D) not divisible by 4a");
    out.c = num / den;
    return out;
}

// Fallback: hunt through the two cycles for members whose leading
// coefficients are coprime (with the half-sum of the b's), then apply the
// plain united-forms construction. Guards gcd corner cases in the algorithm
// above; not expected to run.
QForm compose_fallback(const QForm& f, const QForm& g, const Int& D) {
    FormClass cf = cycle_of(positive_reduced(f, D), D);
    FormClass cg = cycle_of(positive_reduced(g, D), D);
    for (const QForm& p : cf.cycle) {
        if (p.a <= 0)
            continue;
        for (const QForm& q : cg.cycle) {
            if (q.a <= 0)
                continue;
            if (gcd3(p.a, q.a, (p.b + q.b) / 2) == 1)
                return compose_positive(p, q, D);
        }
    }
    throw CompositionFailure("compose: no united-forms transformation found for " + f.str() +
                             " * " + g.str());
}

} // namespace

Int discriminant(const QForm& f) {
    return f.b * f.b - 4 * f.a * f.c;
}

bool valid_indefinite_discriminant(const Int& D) {
    if (D <= 0)
        return false;
    Int r4 = mod_floor(D, 4);
    if (r4 != 0 && r4 != 1)
        return false;
    return mpz_perfect_square_p(D.get_mpz_t()) == 0;
}

bool is_reduced(const QForm& f, const Int& D) {
    if (f.b <= 0 || f.b * f.b >= D)
        return false;
    Int t = 2 * abs(f.a);
    // |sqrt(D) - t| < b  <=>  sqrt(D) < t + b  and  t - b < sqrt(D)
    if ((t + f.b) * (t + f.b) <= D)
        return false;
    if (t > f.b && (t - f.b) * (t - f.b) >= D)
        return false;
    return true;
}

QForm rho_step(const QForm& f, const Int& D) {
    if (!valid_indefinite_discriminant(D))
        throw std::domain_error("rho_step: invalid discriminant " + to_string(D));
    if (discriminant(f) != D)
        throw std::domain_error("rho_step: form " + f.str() + " does not have discriminant " +
                                to_string(D));
    if (f.c == 0)
        throw std::domain_error("rho_step: c = 0 (square discriminant form)");
    Int ac = abs(f.c);
    Int r;
    if (f.c * f.c < D) {
        // largest r < sqrt(D) with r = -b (mod 2|c|); automatically lands in
        // (sqrt(D) - 2|c|, sqrt(D))
        Int s0 = isqrt(D);
        r = s0 - mod_floor(s0 + f.b, 2 * ac);
    } else {
        r = mod_floor(-f.b, 2 * ac);
        if (r > ac)
            r -= 2 * ac;
    }
    Int cnew = (r * r - D) / (4 * f.c);
    return QForm{f.c, r, cnew};
}

QForm reduce(const QForm& f, const Int& D) {
    if (discriminant(f) != D)
        throw std::domain_error("reduce: form " + f.str() + " has discriminant " +
                                to_string(discriminant(f)) + ", not " + to_string(D));
    QForm g = f;
    // |c| strictly decreases until the form is reduced; generous guard
    std::size_t bound = 64 + 2 * (mpz_sizeinbase(g.a.get_mpz_t(), 2) +
                                  mpz_sizeinbase(g.b.get_mpz_t(), 2) +
                                  mpz_sizeinbase(g.c.get_mpz_t(), 2));
    for (std::size_t i = 0; i < bound; ++i) {
        if (is_reduced(g, D))
            return g;
        g = rho_step(g, D);
    }
    throw std::runtime_error("reduce: did not terminate for " + f.str() + " (D = " +
                             to_string(D) + ")");
}

FormClass cycle_of(const QForm& f, const Int& D) {
    QForm start = reduce(f, D);
    FormClass cls;
    cls.cycle.push_back(start);
    std::size_t guard = 1;
    for (QForm g = rho_step(start, D); !(g == start); g = rho_step(g, D)) {
        cls.cycle.push_back(g);
        if (++guard > 1u << 24)
            throw std::runtime_error("cycle_of: cycle did not close (D = " + to_string(D) + ")");
    }
    // rotate so the canonical (lex-least) member leads
    auto least = std::min_element(cls.cycle.begin(), cls.cycle.end());
    std::rotate(cls.cycle.begin(), least, cls.cycle.end());
    return cls;
}

std::vector<QForm> reduced_forms(const Int& D) {
    if (!valid_indefinite_discriminant(D))
        throw std::domain_error("reduced_forms: invalid discriminant " + to_string(D));
    std::vector<QForm> out;
    Int s0 = isqrt(D);
    auto try_leading = [&](const Int& aa, const Int& b, const Int& P) {
        Int t = 2 * aa;
        if ((t + b) * (t + b) <= D)
            return;
        if (t > b && (t - b) * (t - b) >= D)
            return;
        QForm f{aa, b, -(P / aa)};
        if (!is_primitive(f))
            return;
        out.push_back(f);
        out.push_back(QForm{-aa, b, P / aa});
    };
    for (Int b = mod_floor(D, 2) == 0 ? 2 : 1; b <= s0; b += 2) {
        if (b * b >= D)
            break;
        Int P = (D - b * b) / 4; // parity of b makes this exact
        for (Int u = 1; u * u <= P; ++u) {
            if (mod_floor(P, u) != 0)
                continue;
            try_leading(u, b, P);
            if (u * u != P)
                try_leading(P / u, b, P);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

QForm principal_form(const Int& D) {
    Int s0 = isqrt(D);
    Int b0 = (mod_floor(s0, 2) == mod_floor(D, 2)) ? s0 : s0 - 1;
    return QForm{1, b0, (b0 * b0 - D) / 4};
}

QForm compose(const QForm& f, const QForm& g, const Int& D) {
    if (discriminant(f) != D || discriminant(g) != D)
        throw std::domain_error("compose: discriminants differ");
    if (!is_primitive(f) || !is_primitive(g))
        throw std::domain_error("compose: forms must be primitive");
    QForm fp = positive_reduced(f, D);
    QForm gp = positive_reduced(g, D);
    QForm prod;
    try {
        prod = compose_positive(fp, gp, D);
    } catch (const CompositionFailure&) {
        prod = compose_fallback(fp, gp, D);
    }
    if (discriminant(prod) != D || !is_primitive(prod)) {
        prod = compose_fallback(fp, gp, D);
        if (discriminant(prod) != D || !is_primitive(prod))
            throw CompositionFailure("compose: result invalid for " + f.str() + " * " + g.str());
    }
    return prod;
}

int NarrowGroup::class_index(const QForm& f) const {
    QForm g = reduce(f, D);
    auto it = index_.find(g);
    if (it == index_.end())
        throw std::logic_error("class_index: reduced form " + g.str() +
                               " missing from enumeration (D = " + to_string(D) + ")");
    return it->second;
}

NarrowGroup narrow_group(const Int& D) {
    NarrowGroup ng;
    ng.D = D;
    std::vector<QForm> forms = reduced_forms(D);
    for (const QForm& f : forms) {
        if (ng.index_.count(f))
            continue;
        FormClass cls = cycle_of(f, D);
        int idx = static_cast<int>(ng.classes.size());
        for (const QForm& g : cls.cycle) {
            auto [it, fresh] = ng.index_.emplace(g, idx);
            if (!fresh)
                throw std::logic_error("narrow_group: cycles are not disjoint at " + g.str());
        }
        ng.classes.push_back(std::move(cls));
    }
    if (ng.index_.size() != forms.size())
        throw std::logic_error("narrow_group: cycles do not partition the reduced forms");
    ng.identity = ng.class_index(principal_form(D));
    int h = static_cast<int>(ng.classes.size());
    ng.table.assign(h, std::vector<int>(h, 0));
    for (int i = 0; i < h; ++i) {
        for (int j = i; j < h; ++j) {
            QForm prod = compose(ng.classes[i].representative(), ng.classes[j].representative(), D);
            int idx = ng.class_index(prod);
            ng.table[i][j] = ng.table[j][i] = idx;
        }
    }
    return ng;
}

std::vector<Int> abelian_structure(const std::vector<std::vector<int>>& table, int identity) {
    int n = static_cast<int>(table.size());
    std::vector<int> order(n, 0);
    for (int i = 0; i < n; ++i) {
        int o = 1, x = i;
        while (x != identity) {
            x = table[x][i];
            ++o;
            if (o > n)
                throw std::logic_error("abelian_structure: order exceeds group size");
        }
        order[i] = o;
    }
    std::vector<Int> divisors;
    if (n <= 1)
        return divisors;
    for (const auto& [p, e] : factorize(Int(static_cast<unsigned long>(n)))) {
        (void)e;
        unsigned long pu = p.get_ui();
        // mu[j] = log_p #{x : x^(p^j) = 1}; the increments are the counts of
        // partition parts >= j, from which the p-part type follows.
        std::vector<unsigned> mu{0};
        for (unsigned j = 1;; ++j) {
            Int pj;
            mpz_ui_pow_ui(pj.get_mpz_t(), pu, j);
            unsigned long cnt = 0;
            for (int i = 0; i < n; ++i)
                if (mod_floor(pj, Int(order[i])) == 0)
                    ++cnt;
            unsigned muj = 0;
            unsigned long t = cnt;
            while (t > 1) {
                if (t % pu != 0)
                    throw std::logic_error("abelian_structure: p-subgroup count not a p-power");
                t /= pu;
                ++muj;
            }
            if (muj == mu.back())
                break;
            mu.push_back(muj);
        }
        std::vector<unsigned> parts_ge; // parts_ge[j-1] = #parts >= j
        for (std::size_t j = 1; j < mu.size(); ++j)
            parts_ge.push_back(mu[j] - mu[j - 1]);
        unsigned nparts = parts_ge.empty() ? 0 : parts_ge[0];
        for (unsigned idx = 0; idx < nparts; ++idx) {
            unsigned lam = 0;
            for (std::size_t j = 0; j < parts_ge.size(); ++j)
                if (parts_ge[j] > idx)
                    lam = static_cast<unsigned>(j + 1);
            Int pl;
            mpz_ui_pow_ui(pl.get_mpz_t(), pu, lam);
            divisors.push_back(pl);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

QForm ClassGroupReport::wide_representative(int wide_index) const {
    const auto& orbit = wide_orbits.at(static_cast<std::size_t>(wide_index));
    QForm best = narrow.classes[orbit[0]].representative();
    for (int ci : orbit) {
        const QForm& r = narrow.classes[ci].representative();
        if (r < best)
            best = r;
    }
    return best;
}

int ClassGroupReport::wide_index_of(const QForm& f) const {
    return wide_of_narrow[narrow.class_index(f)];
}

ClassGroupReport wide_group(const Int& D) {
    ClassGroupReport rep;
    rep.D = D;
    rep.narrow = narrow_group(D);
    int h = static_cast<int>(rep.narrow.classes.size());
    rep.h_narrow = h;
    // class of (-1, b0, .): principal iff a unit of norm -1 exists
    QForm pf = principal_form(D);
    QForm J{-1, pf.b, (D - pf.b * pf.b) / 4};
    int jidx = rep.narrow.class_index(J);
    rep.wide_of_narrow.assign(h, -1);
    if (jidx == rep.narrow.identity) {
        for (int i = 0; i < h; ++i) {
            rep.wide_of_narrow[i] = i;
            rep.wide_orbits.push_back({i});
        }
    } else {
        for (int i = 0; i < h; ++i) {
            if (rep.wide_of_narrow[i] >= 0)
                continue;
            int j = rep.narrow.table[i][jidx];
            if (j == i)
                throw std::logic_error("wide_group: J-orbit of size 1 on a nonprincipal J");
            int w = static_cast<int>(rep.wide_orbits.size());
            rep.wide_of_narrow[i] = rep.wide_of_narrow[j] = w;
            rep.wide_orbits.push_back({i, j});
        }
    }
    int hw = static_cast<int>(rep.wide_orbits.size());
    rep.h_wide = hw;
    rep.wide_table.assign(hw, std::vector<int>(hw, 0));
    for (int i = 0; i < hw; ++i)
        for (int j = 0; j < hw; ++j)
            rep.wide_table[i][j] =
                rep.wide_of_narrow[rep.narrow.table[rep.wide_orbits[i][0]][rep.wide_orbits[j][0]]];
    rep.wide_identity = rep.wide_of_narrow[rep.narrow.identity];
    rep.wide_structure = abelian_structure(rep.wide_table, rep.wide_identity);
    return rep;
}

ClassGroupReport wide_group(const FieldParams& field) {
    ClassGroupReport rep = wide_group(field.D);
    std::vector<ClassLabel> labels = {ClassLabel::P(), ClassLabel::A(), ClassLabel::B(),
                                      ClassLabel::Binv()};
    for (const Int& p : c_label_primes(field))
        labels.push_back(ClassLabel::C(p));
    for (const ClassLabel& lab : labels) {
        QForm f = ideal_to_form(standard_ideal(lab, field), field);
        rep.label_classes.emplace_back(lab.str(), rep.wide_index_of(f));
    }
    for (std::size_t i = 0; i < rep.label_classes.size(); ++i)
        for (std::size_t j = i + 1; j < rep.label_classes.size(); ++j)
            if (rep.label_classes[i].second == rep.label_classes[j].second)
                rep.coincidences.emplace_back(rep.label_classes[i].first,
                                              rep.label_classes[j].first);
    return rep;
}

QForm ideal_to_form(const IdealBasis& basis, const FieldParams& field) {
    const Int& d = field.d;
    Int q, s;
    // accepted shapes: {q, s + sqrt(d)} and {sqrt(d), q} (either order)
    const QuadInt &r1 = basis.r1, &r2 = basis.r2;
    if (r1.y == 0 && abs(r2.y) == 1) {
        q = abs(r1.x);
        s = r2.y == 1 ? r2.x : -r2.x;
    } else if (r2.y == 0 && abs(r1.y) == 1) {
        q = abs(r2.x);
        s = r1.y == 1 ? r1.x : -r1.x;
    } else {
        throw NonStandardBasis("ideal_to_form: basis " + r1.x.get_str() + "+" +
                               r1.y.get_str() + "w, " + r2.x.get_str() + "+" + r2.y.get_str() +
                               "w is not in standard shape");
    }
    if (q == 0)
        throw NonStandardBasis("ideal_to_form: degenerate standard shape");
    if (q == 1)
        return principal_form(field.D);
    s = mod_floor(s, q);
    if (mod_floor(s * s - d, q) != 0)
        throw NonStandardBasis("ideal_to_form: q does not divide s^2 - d; not an ideal");
    return QForm{q, 2 * s, (s * s - d) / q};
}

std::vector<IdealBasis> all_wide_class_ideals(const ClassGroupReport& report,
                                              const FieldParams&) {
    std::vector<IdealBasis> out;
    for (std::size_t w = 0; w < report.wide_orbits.size(); ++w) {
        // lexicographically least reduced form with a > 0 in the wide class
        bool found = false;
        QForm best;
        for (int ci : report.wide_orbits[w]) {
            for (const QForm& g : report.narrow.classes[ci].cycle) {
                if (g.a > 0 && (!found || g < best)) {
                    best = g;
                    found = true;
                }
            }
        }
        if (!found)
            throw std::logic_error("all_wide_class_ideals: class without positive form");
        if (mod_floor(best.b, 2) != 0)
            throw std::logic_error("all_wide_class_ideals: odd b on a 0 mod 4 discriminant");
        // ideal {a, -b/2 + sqrt(d)}
        out.push_back(make_ideal_basis({best.a, 0}, {-best.b / 2, 1}, best.a));
    }
    return out;
}

std::vector<IdealBasis> all_wide_class_ideals(const FieldParams& field) {
    return all_wide_class_ideals(wide_group(field), field);
}

bool genus_parity_predicted(const Int& d) {
    if (d <= 0)
        throw std::domain_error("genus_parity_predicted: d must be positive");
    if (!is_squarefree(d))
        throw std::domain_error("genus_parity_predicted: d must be squarefree");
    Factorization f = factorize(d);
    if (f.size() == 1)
        return true; // d = p
    if (f.size() == 2) {
        const Int& p1 = f[0].prime;
        const Int& p2 = f[1].prime;
        if (p1 == 2)
            return mod_floor(p2, 4) == 3; // d = 2 p1
        return mod_floor(p1, 4) == 3 && mod_floor(p2, 4) == 3; // d = p1 p2
    }
    return false;
}

} // namespace quadzeta

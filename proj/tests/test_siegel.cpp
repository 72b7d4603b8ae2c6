#include <doctest.h>

#include "quadzeta/errors.hpp"
#include "quadzeta/lang_zeta.hpp"
#include "quadzeta/siegel.hpp"

using namespace quadzeta;

TEST_CASE("siegel total examples") {
    CHECK(zeta_total_siegel(940) == Rat(141));
    CHECK(to_string(zeta_total_siegel(940)) == "141/1");
    CHECK(zeta_total_siegel(8) == make_rat(1, 12));
    // odd fundamental discriminant: only odd b contribute
    CHECK(zeta_total_siegel(5) == make_rat(2 * 1, 60)); // b = +-1: sigma(1) each
}

TEST_CASE("siegel rejects non-discriminants") {
    CHECK_THROWS_AS(zeta_total_siegel(7), std::domain_error);   // 3 mod 4
    CHECK_THROWS_AS(zeta_total_siegel(25), std::domain_error);  // perfect square
    CHECK_THROWS_AS(zeta_total_siegel(20), std::domain_error);  // 20/4 = 5 = 1 mod 4
    CHECK_THROWS_AS(zeta_total_siegel(45), std::domain_error);  // 45 = 9*5 not squarefree
    CHECK_THROWS_AS(zeta_total_siegel(48), std::domain_error);  // 48/4 = 12 not squarefree
    CHECK_THROWS_AS(zeta_total_siegel(-8), std::domain_error);
    CHECK_THROWS_AS(zeta_total_siegel(0), std::domain_error);
}

TEST_CASE("family divisor sum, m = 5") {
    FieldParams f = make_field(5);
    CHECK(family_divisor_sum(f) == 8460);
    // boundary term: l = +-15 contributes sigma(10) = 18 each
    CHECK(sigma(235 - 15 * 15) == 18);
    // center term: l = 0 contributes sigma(d)
    CHECK(sigma(235) == 288);
}

TEST_CASE("sieve-backed route is bit-identical") {
    FieldParams f = make_field(5);
    SigmaTable table(235);
    CHECK(family_divisor_sum(f, table) == family_divisor_sum(f));
    CHECK(zeta_total_siegel(f.D, table) == zeta_total_siegel(f.D));
    FieldParams f11 = make_field(11);
    SigmaTable t11(1111);
    CHECK(family_divisor_sum(f11, t11) == family_divisor_sum(f11));
}

TEST_CASE("substitution b = 2l ties the two sums together, m <= 40") {
    for (const Int& m : valid_m_stream(1, 40)) {
        FieldParams f = make_field(m);
        CHECK(60 * zeta_total_siegel(f.D) == Rat(family_divisor_sum(f)));
    }
}

TEST_CASE("both RHS variants at m = 5, p = 5") {
    FieldParams f = make_field(5);
    CHECK(divisor_identity_rhs(f, 5, RhsVariant::printed) == Rat(8654));
    CHECK(divisor_identity_rhs(f, 5, RhsVariant::derived) == Rat(8504));
    CHECK(partials_sum_times60(f, 5) == Rat(8504));
    CHECK_THROWS_AS(divisor_identity_rhs(f, 7, RhsVariant::printed), InvalidPrimeForC);
}

TEST_CASE("derived variant equals 60x the closed partial sum, all (m, p), m <= 100") {
    for (const Int& m : valid_m_stream(1, 100)) {
        FieldParams f = make_field(m);
        for (const Int& p : c_label_primes(f)) {
            CHECK(partials_sum_times60(f, p) == divisor_identity_rhs(f, p, RhsVariant::derived));
            // printed and derived differ by exactly 6 p^2
            CHECK(divisor_identity_rhs(f, p, RhsVariant::printed) -
                      divisor_identity_rhs(f, p, RhsVariant::derived) ==
                  Rat(6 * p * p));
        }
    }
}

TEST_CASE("60 * siegel total is a nonnegative integer on tested discriminants") {
    for (long D : {8, 5, 40, 60, 229, 316, 940}) {
        Rat v = 60 * zeta_total_siegel(D);
        CHECK(v.get_den() == 1);
        CHECK(v.get_num() >= 0);
    }
}

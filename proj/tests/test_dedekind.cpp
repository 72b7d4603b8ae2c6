#include <doctest.h>

#include <random>

#include "quadzeta/dedekind.hpp"

using namespace quadzeta;

namespace {

// reference route: straight sum of periodic-Bernoulli products, no scaling
Rat dedekind_S_reference(int i, const Int& h, const Int& k) {
    Rat total(0);
    for (Int a = 0; a < k; ++a)
        total += bernoulli_bar(4 - i, a, k) * bernoulli_bar(i, h * a, k);
    return total;
}

} // namespace

TEST_CASE("bernoulli_bar examples") {
    CHECK(bernoulli_bar(1, 0, 1) == Rat(0)); // convention B1bar(integer) = 0
    CHECK(bernoulli_bar(1, 7, 7) == Rat(0));
    CHECK(bernoulli_bar(2, 1, 2) == make_rat(-1, 12));
    CHECK(bernoulli_bar(3, 1, 3) == make_rat(1, 27));
    CHECK(bernoulli_bar(2, 0, 1) == make_rat(1, 6));
    CHECK(bernoulli_bar(1, 1, 4) == make_rat(-1, 4));
    // argument is taken mod 1
    CHECK(bernoulli_bar(2, 5, 3) == bernoulli_bar(2, 2, 3));
    CHECK(bernoulli_bar(3, -1, 3) == bernoulli_bar(3, 2, 3));
}

TEST_CASE("bernoulli_bar rejects bad orders") {
    CHECK_THROWS_AS(bernoulli_bar(0, 1, 2), std::domain_error);
    CHECK_THROWS_AS(bernoulli_bar(4, 1, 2), std::domain_error);
    CHECK_THROWS_AS(bernoulli_bar(2, 1, 0), std::domain_error);
}

TEST_CASE("dedekind_S examples") {
    CHECK(dedekind_S(3, 1, 3) == make_rat(-1, 81));
    CHECK(dedekind_S(2, 1, 3) == make_rat(11, 324));
    CHECK(dedekind_S(3, -1, 3) == make_rat(1, 81));
    CHECK(dedekind_S(2, 1, 1) == make_rat(1, 36));
    CHECK_THROWS_AS(dedekind_S(1, 1, 3), std::domain_error);
    CHECK_THROWS_AS(dedekind_S(4, 1, 3), std::domain_error);
    CHECK_THROWS_AS(dedekind_S(2, 1, 0), std::domain_error);
}

TEST_CASE("dedekind_S_closed examples") {
    CHECK(dedekind_S_closed(3, 1, 2) == Rat(0));
    CHECK(dedekind_S_closed(3, 1, 3) == make_rat(-1, 81));
    CHECK(dedekind_S_closed(2, 1, 1) == make_rat(1, 36));
    CHECK_THROWS_AS(dedekind_S_closed(2, 0, 3), std::domain_error);
    CHECK_THROWS_AS(dedekind_S_closed(2, 2, 3), std::domain_error);
}

TEST_CASE("scaled accumulator equals the periodic-Bernoulli reference") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 80; ++t) {
        Int k = Int(rng() % 40 + 1);
        Int h = Int(static_cast<long>(rng() % 101) - 50);
        for (int i : {2, 3})
            CHECK(dedekind_S(i, h, k) == dedekind_S_reference(i, h, k));
    }
}

TEST_CASE("calibration against the closed forms, k <= 120") {
    for (unsigned k = 1; k <= 120; ++k) {
        for (int s : {1, -1}) {
            CHECK(dedekind_S(3, s, k) == dedekind_S_closed(3, s, k));
            CHECK(dedekind_S(2, s, k) == dedekind_S_closed(2, s, k));
        }
    }
    CHECK_NOTHROW(calibrate_dedekind(120));
}

TEST_CASE("periodicity and parity") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        Int k = Int(rng() % 100 + 1);
        Int h = Int(static_cast<long>(rng() % 401) - 200);
        for (int i : {2, 3}) {
            CHECK(dedekind_S(i, h + k, k) == dedekind_S(i, h, k));
            CHECK(dedekind_S(i, h - 7 * k, k) == dedekind_S(i, h, k));
        }
        CHECK(dedekind_S(3, -h, k) == -dedekind_S(3, h, k));
        CHECK(dedekind_S(2, -h, k) == dedekind_S(2, h, k));
    }
}

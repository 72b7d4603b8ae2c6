#include <doctest.h>

#include <random>

#include "quadzeta/arith.hpp"

using namespace quadzeta;

namespace {

// independent oracle: plain divisor enumeration
Int sigma_brute(unsigned long n) {
    Int s = 0;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0)
            s += d;
    return s;
}

} // namespace

TEST_CASE("factorize examples") {
    CHECK(factorize(1).empty());
    Factorization f = factorize(235);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == 5);
    CHECK(f[0].exponent == 1);
    CHECK(f[1].prime == 47);
    Factorization g = factorize(4807);
    REQUIRE(g.size() == 3);
    CHECK(g[0].prime == 11);
    CHECK(g[1].prime == 19);
    CHECK(g[2].prime == 23);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(-5), std::domain_error);
}

TEST_CASE("factorize reconstructs and ascends") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        unsigned long n = rng() % 1000000 + 1;
        Factorization f = factorize(Int(n));
        Int prod = 1;
        Int prev = 1;
        for (const auto& [p, e] : f) {
            CHECK(p > prev);
            prev = p;
            CHECK(is_prime(p));
            for (unsigned i = 0; i < e; ++i)
                prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("factorize beyond the trial-division bound") {
    // semiprime with both factors above 10^6 exercises the rho stage
    Int n = Int(1000003) * Int(1000033);
    Factorization f = factorize(n);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == 1000003);
    CHECK(f[1].prime == 1000033);
    // prime power
    Factorization g = factorize(Int(1000003) * Int(1000003));
    REQUIRE(g.size() == 1);
    CHECK(g[0].prime == 1000003);
    CHECK(g[0].exponent == 2);
}

TEST_CASE("sigma examples") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(234) == 546);
    CHECK(sigma(199) == 200);
    CHECK_THROWS_AS(sigma(0), std::domain_error);
}

TEST_CASE("sigma matches divisor enumeration up to 10^4") {
    for (unsigned long n = 1; n <= 10000; ++n)
        CHECK(sigma(Int(n)) == sigma_brute(n));
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 100) {
        Int a = Int(rng() % 5000 + 1);
        Int b = Int(rng() % 5000 + 1);
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1)
            continue;
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
        ++done;
    }
}

TEST_CASE("sigma_table") {
    SigmaTable t1(1);
    CHECK(t1.entry(1) == 1);
    SigmaTable t(235);
    CHECK(t.entry(10) == 18);
    CHECK(t.entry(235) == 288);
    CHECK_THROWS_AS(SigmaTable(0), std::domain_error);
    CHECK_THROWS_AS(t.entry(236), std::out_of_range);
    CHECK_THROWS_AS(t.entry(0), std::out_of_range);
    SigmaTable big(5000);
    for (unsigned long n = 1; n <= 5000; ++n)
        CHECK(big.entry(n) == sigma(Int(n)));
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(235));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1111));
    CHECK(is_squarefree(1));
    CHECK_THROWS_AS(is_squarefree(0), std::domain_error);
}

TEST_CASE("rational canonical form and ring axioms") {
    std::mt19937_64 rng(13);
    auto rnd_rat = [&]() {
        long num = static_cast<long>(rng() % 2001) - 1000;
        long den = static_cast<long>(rng() % 999) + 1;
        if (rng() & 1)
            den = -den;
        return make_rat(Int(num), Int(den));
    };
    for (int t = 0; t < 300; ++t) {
        Rat a = rnd_rat(), b = rnd_rat(), c = rnd_rat();
        for (const Rat& q :
             {Rat(a + b), Rat(a - b), Rat(a * b), Rat(a * b + c), Rat((a + b) * c)}) {
            CHECK(q.get_den() > 0);
            Int g;
            mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
            CHECK(g == 1);
        }
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        CHECK(a - a == Rat(0));
    }
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("serialization") {
    CHECK(to_string(make_rat(2449, 30)) == "2449/30");
    CHECK(to_string(make_rat(4898, 60)) == "2449/30");
    CHECK(to_string(make_rat(141, 1)) == "141/1");
    CHECK(to_string(make_rat(-5, -10)) == "1/2");
    CHECK(to_string(make_rat(5, -10)) == "-1/2");
    CHECK(to_string(Int(-1234)) == "-1234");
}

TEST_CASE("mod_floor") {
    CHECK(mod_floor(7, 3) == 1);
    CHECK(mod_floor(-7, 3) == 2);
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(0, 5) == 0);
}

#include <catch_amalgamated.hpp>

#include <random>

#include "cliffgen/multivector.hpp"
#include "support.hpp"

using namespace cliffgen;
using namespace testsupport;

TEST_CASE("blade product sign rule") {
    Signature cl01(0, 1), cl02(0, 2), cl03(0, 3);
    // gamma1 gamma1 = -1 when the generator squares negative
    auto sq = blade_product(Blade::from_indices({1}), Blade::from_indices({1}), cl01);
    CHECK(sq.sign == -1);
    CHECK(sq.blade.is_scalar());

    auto g12 = blade_product(Blade::from_indices({1}), Blade::from_indices({2}), cl02);
    CHECK(g12.sign == 1);
    CHECK(g12.blade == Blade::from_indices({1, 2}));

    auto g21 = blade_product(Blade::from_indices({2}), Blade::from_indices({1}), cl03);
    CHECK(g21.sign == -1);
    CHECK(g21.blade == Blade::from_indices({1, 2}));

    Signature cl05(0, 5);
    auto unit = blade_product(Blade(), Blade::from_indices({5}), cl05);
    CHECK(unit.sign == 1);
    CHECK(unit.blade == Blade::from_indices({5}));

    CHECK_THROWS_AS(blade_product(Blade::from_indices({3}), Blade(), cl02), std::out_of_range);
}

TEST_CASE("canonical basis ordering") {
    CHECK(canonical_basis(Signature(0, 0)).size() == 1);
    auto b2 = canonical_basis(Signature(0, 2));
    REQUIRE(b2.size() == 4);
    CHECK(b2[0].name() == "1");
    CHECK(b2[1].name() == "g1");
    CHECK(b2[2].name() == "g2");
    CHECK(b2[3].name() == "g12");
    auto b3 = canonical_basis(Signature(0, 3));
    REQUIRE(b3.size() == 8);
    CHECK(b3[4].name() == "g12");
    CHECK(b3[5].name() == "g13");
    CHECK(b3[6].name() == "g23");
    CHECK(b3[7].name() == "g123");
    // lex order within a grade: (1,4) before (2,3)
    auto b4 = canonical_basis(Signature(0, 4));
    std::vector<std::string> grade2;
    for (Blade b : b4)
        if (b.grade() == 2)
            grade2.push_back(b.name());
    CHECK(grade2 == std::vector<std::string>{"g12", "g13", "g14", "g23", "g24", "g34"});
}

TEST_CASE("geometric product worked examples") {
    Signature cl03(0, 3);
    Multivector g123 = Multivector::from_blade(cl03, Blade::from_indices({1, 2, 3}));
    CHECK(g123 * g123 == Multivector::unit(cl03));

    Signature cl02(0, 2);
    Multivector g12 = Multivector::from_blade(cl02, Blade::from_indices({1, 2}));
    CHECK(g12 * g12 == -Multivector::unit(cl02));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        Multivector x = random_multivector(cl03, rng);
        CHECK(Multivector::unit(cl03) * x == x);
        CHECK(x * Multivector::unit(cl03) == x);
    }

    Multivector a(Signature(1, 1)), b(Signature(2, 0));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("grade projection") {
    Signature cl20(2, 0);
    Multivector x = Multivector::unit(cl20) + Multivector::generator(cl20, 1) +
                    Multivector::from_blade(cl20, Blade::from_indices({1, 2}));
    CHECK(x.grade_project(1) == Multivector::generator(cl20, 1));
    CHECK(x.grade_project(5).is_zero());
    Multivector sum(cl20);
    for (int k = 0; k <= cl20.n(); ++k)
        sum = sum + x.grade_project(k);
    CHECK(sum == x);

    // grade_project(g12 * g2, 1) = g1 in Cl(2,0)
    Multivector g12 = Multivector::from_blade(cl20, Blade::from_indices({1, 2}));
    CHECK((g12 * Multivector::generator(cl20, 2)).grade_project(1) ==
          Multivector::generator(cl20, 1));
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(99);
    for (const Signature& sig : {Signature(0, 3), Signature(2, 2), Signature(3, 1),
                                 Signature(1, 4), Signature(5, 0)}) {
        for (int t = 0; t < 1000; ++t) {
            Multivector a = random_multivector(sig, rng, 4);
            Multivector b = random_multivector(sig, rng, 4);
            Multivector c = random_multivector(sig, rng, 4);
            REQUIRE((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("anticommutation relations for all signatures up to n = 8") {
    for (int n = 0; n <= 8; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Multivector gi = Multivector::generator(sig, i);
                    Multivector gj = Multivector::generator(sig, j);
                    Multivector lhs = gi * gj + gj * gi;
                    Multivector rhs =
                        i == j ? Multivector::scalar(sig, Dyadic(2 * sig.metric(i)))
                               : Multivector::zero(sig);
                    REQUIRE(lhs == rhs);
                }
        }
}

TEST_CASE("bitmask product agrees with the naive rewriting oracle") {
    std::mt19937_64 rng(123);
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            for (int t = 0; t < 200; ++t) {
                Multivector a = random_multivector(sig, rng);
                Multivector b = random_multivector(sig, rng);
                REQUIRE(naive_equal(a * b, naive_product(a, b)));
            }
        }
}

TEST_CASE("textual round-trip is the identity") {
    std::mt19937_64 rng(7);
    for (const Signature& sig : {Signature(0, 3), Signature(4, 2), Signature(2, 5)}) {
        for (int t = 0; t < 300; ++t) {
            Multivector x = random_multivector(sig, rng);
            CHECK(Multivector::parse(sig, x.str()) == x);
        }
        CHECK(Multivector::parse(sig, "0").is_zero());
    }
    Signature sig(1, 3);
    CHECK(Multivector::parse(sig, "1/2 + 1/2 g124") ==
          Multivector::scalar(sig, Dyadic(BigInt(1), 1)) +
              Multivector::from_blade(sig, Blade::from_indices({1, 2, 4}),
                                      Dyadic(BigInt(1), 1)));
    CHECK_THROWS_AS(Multivector::parse(sig, "g9"), std::out_of_range);
    CHECK_THROWS_AS(Multivector::parse(sig, "g"), std::invalid_argument);
    CHECK_THROWS_AS(Multivector::parse(sig, "1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Multivector::parse(sig, ""), std::invalid_argument);
}

TEST_CASE("blade names cover double-digit indices") {
    Blade b = Blade::from_indices({1, 10, 16});
    CHECK(b.name() == "g1ag");
    CHECK(Blade::char_index('a') == 10);
    CHECK(Blade::char_index('g') == 16);
}

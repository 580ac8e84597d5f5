#include <catch_amalgamated.hpp>

#include "cliffgen/idempotent.hpp"

using namespace cliffgen;

namespace {

std::vector<std::string> member_names(const GeneratingSet& g) {
    std::vector<std::string> out;
    for (Blade b : g.members)
        out.push_back(b.name());
    return out;
}

}  // namespace

TEST_CASE("Radon-Hurwitz numbers") {
    CHECK(radon_hurwitz(0) == 0);
    CHECK(radon_hurwitz(1) == 1);
    CHECK(radon_hurwitz(2) == 2);
    CHECK(radon_hurwitz(3) == 2);
    for (int j = 4; j <= 7; ++j)
        CHECK(radon_hurwitz(j) == 3);
    CHECK(radon_hurwitz(9) == 5);
    CHECK(radon_hurwitz(16) == 8);
    CHECK(radon_hurwitz(-1) == -1);
    CHECK(radon_hurwitz(-2) == -1);
    CHECK(radon_hurwitz(-5) == -2);
    CHECK_THROWS_AS(radon_hurwitz(65), std::out_of_range);
}

TEST_CASE("involution count agrees across both formulas") {
    CHECK(involution_count(Signature(0, 7)) == 4);
    CHECK(involution_count(Signature(1, 3)) == 1);
    CHECK(involution_count(Signature(0, 0)) == 0);
    CHECK(involution_count(Signature(3, 1)) == 2);
    for (int p = 0; p <= 9; ++p)
        for (int q = 0; q <= 9 - p; ++q)
            CHECK_NOTHROW(involution_count(Signature(p, q)));  // asserts agreement inside
}

TEST_CASE("generating sets match the published constructions") {
    CHECK(member_names(generating_set(Signature(0, 7))) ==
          std::vector<std::string>{"g124", "g235", "g346", "g457"});
    CHECK(member_names(generating_set(Signature(2, 3))) ==
          std::vector<std::string>{"g13", "g24"});
    CHECK(member_names(generating_set(Signature(3, 3))) ==
          std::vector<std::string>{"g14", "g25", "g36"});
    CHECK(member_names(generating_set(Signature(7, 1))) ==
          std::vector<std::string>{"g18", "g2345", "g2367"});
    CHECK(member_names(generating_set(Signature(4, 0))) == std::vector<std::string>{"g1"});
    CHECK(member_names(generating_set(Signature(3, 1))) ==
          std::vector<std::string>{"g1", "g24"});
    CHECK(member_names(generating_set(Signature(0, 8))) ==
          std::vector<std::string>{"g1234", "g1256", "g1278", "g1357"});
}

TEST_CASE("generating-set invariants hold for every signature with p+q <= 9") {
    for (int n = 0; n <= 9; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            GeneratingSet gens = generating_set(sig);  // construction validates internally
            REQUIRE(int(gens.members.size()) == involution_count(sig));
            for (Blade g : gens.members) {
                Multivector m = Multivector::from_blade(sig, g);
                REQUIRE(m * m == Multivector::unit(sig));
            }
            for (std::size_t i = 0; i < gens.members.size(); ++i)
                for (std::size_t j = i + 1; j < gens.members.size(); ++j) {
                    Multivector a = Multivector::from_blade(sig, gens.members[i]);
                    Multivector b = Multivector::from_blade(sig, gens.members[j]);
                    REQUIRE(a * b == b * a);
                }
        }
}

TEST_CASE("primitive idempotents") {
    auto f31 = primitive_idempotent(Signature(3, 1));
    Signature s31(3, 1);
    Dyadic quarter(BigInt(1), 2);
    Multivector expected = Multivector::scalar(s31, quarter) +
                           Multivector::from_blade(s31, Blade::from_indices({1}), quarter) +
                           Multivector::from_blade(s31, Blade::from_indices({2, 4}), quarter) +
                           Multivector::from_blade(s31, Blade::from_indices({1, 2, 4}), quarter);
    CHECK(f31.f == expected);

    CHECK(primitive_idempotent(Signature(0, 0)).f == Multivector::unit(Signature(0, 0)));

    auto f07 = primitive_idempotent(Signature(0, 7));
    CHECK(f07.f.term_count() == 16);
    for (const auto& [b, c] : f07.f.terms())
        CHECK((c == Dyadic(BigInt(1), 4) || c == Dyadic(BigInt(-1), 4)));
    CHECK(f07.f * f07.f == f07.f);
}

TEST_CASE("one-factor idempotents annihilate pairwise and sum to one") {
    for (const Signature& sig : {Signature(0, 7), Signature(2, 3), Signature(4, 2)}) {
        GeneratingSet gens = generating_set(sig);
        Dyadic half(BigInt(1), 1);
        for (Blade g : gens.members) {
            Multivector plus =
                (Multivector::unit(sig) + Multivector::from_blade(sig, g)).scaled(half);
            Multivector minus =
                (Multivector::unit(sig) - Multivector::from_blade(sig, g)).scaled(half);
            CHECK(plus * plus == plus);
            CHECK(minus * minus == minus);
            CHECK((plus * minus).is_zero());
            CHECK((minus * plus).is_zero());
            CHECK(plus + minus == Multivector::unit(sig));
        }
    }
}

TEST_CASE("k formulas agree on the full 10x10 grid") {
    for (int p = 0; p <= 9; ++p)
        for (int q = 0; q <= 9; ++q) {
            auto [rh, mod8] = involution_count_formulas(p, q);
            CHECK(rh == mod8);
        }
}

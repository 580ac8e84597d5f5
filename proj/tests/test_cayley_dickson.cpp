#include <catch_amalgamated.hpp>

#include <random>

#include "cliffgen/cayley_dickson.hpp"
#include "cliffgen/fixtures.hpp"

using namespace cliffgen;

namespace {

Octonion random_oct(std::mt19937_64& rng, bool split) {
    auto comp = [&] { return Dyadic(BigInt(std::int64_t(rng() % 9) - 4), unsigned(rng() % 2)); };
    return {{comp(), comp(), comp(), comp()}, {comp(), comp(), comp(), comp()}, split};
}

const Octonion oi = Octonion::basis(1);
const Octonion oj = Octonion::basis(2);
const Octonion ok = Octonion::basis(3);
const Octonion ol = Octonion::basis(4);

}  // namespace

TEST_CASE("doubling product witnesses") {
    CHECK(cd_multiply(cd_multiply(oi, oj), ol) == Octonion::basis(7));       // (ij)l = kl
    CHECK(cd_multiply(oi, cd_multiply(oj, ol)) == -Octonion::basis(7));      // i(jl) = -kl
    CHECK(cd_multiply(ol, oi) == -Octonion::basis(5));                       // l i = -il
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Octonion x = random_oct(rng, false);
        CHECK(cd_multiply(x, Octonion::unit()) == x);
        CHECK(cd_multiply(Octonion::unit(), x) == x);
    }
    Octonion eps = Octonion::basis(4, true);
    CHECK(cd_multiply(eps, eps) == Octonion::unit(true));  // split: eps^2 = +1
    CHECK_THROWS_AS(cd_multiply(oi, eps), std::invalid_argument);
}

TEST_CASE("cayley table cells") {
    auto table = cayley_table(false);
    CHECK(table[0][5] == CayleyEntry{-1, 7});  // i * jl = -kl
    CHECK(table[6][6] == CayleyEntry{-1, 0});  // kl * kl = -1
    auto split = cayley_table(true);
    CHECK(split[4][4] == CayleyEntry{1, 0});  // (i eps)^2 = +1
    for (int t = 4; t <= 6; ++t)
        CHECK(split[t][t] == CayleyEntry{1, 0});
    for (int t = 0; t <= 2; ++t)
        CHECK(split[t][t] == CayleyEntry{-1, 0});
}

TEST_CASE("regenerated table matches the published one except the known cell") {
    for (bool split : {false, true}) {
        auto computed = cayley_table(split);
        std::istringstream printed(split ? fixtures::split_cayley_printed()
                                         : fixtures::octonion_cayley_printed());
        int mismatches = 0;
        std::vector<std::pair<int, int>> cells;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) {
                std::string tok;
                printed >> tok;
                auto [sign, unit] = fixtures::parse_cayley_cell(tok, split);
                if (computed[r][c] != CayleyEntry{sign, unit}) {
                    ++mismatches;
                    cells.emplace_back(r, c);
                }
            }
        if (split) {
            CHECK(mismatches == 0);
        } else {
            // row j, column kl: printed jl, closure forces -il
            CHECK(mismatches == 1);
            REQUIRE(cells.size() == 1);
            CHECK(cells[0] == std::pair<int, int>{1, 6});
            CHECK(computed[1][6] == CayleyEntry{-1, 5});
        }
    }
}

TEST_CASE("left multiplication matrices") {
    CHECK(left_mult_matrix(Octonion::unit()) == DyadicMatrix::identity(8));

    // the published displays for the imaginary units, both flags
    const char* printed_i =
        "0 -1 0 0 0 0 0 0  1 0 0 0 0 0 0 0  0 0 0 -1 0 0 0 0  0 0 1 0 0 0 0 0 "
        "0 0 0 0 0 -1 0 0  0 0 0 0 1 0 0 0  0 0 0 0 0 0 0 1  0 0 0 0 0 0 -1 0";
    const char* printed_eps =
        "0 0 0 0 1 0 0 0  0 0 0 0 0 -1 0 0  0 0 0 0 0 0 -1 0  0 0 0 0 0 0 0 -1 "
        "1 0 0 0 0 0 0 0  0 -1 0 0 0 0 0 0  0 0 -1 0 0 0 0 0  0 0 0 -1 0 0 0 0";
    auto check_matrix = [](const DyadicMatrix& m, const char* text) {
        std::istringstream in(text);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                long long v;
                in >> v;
                REQUIRE(m.at(r, c) == Dyadic(v));
            }
    };
    check_matrix(left_mult_matrix(oi), printed_i);
    check_matrix(left_mult_matrix(Octonion::basis(1, true)), printed_i);
    check_matrix(left_mult_matrix(Octonion::basis(4, true)), printed_eps);
}

TEST_CASE("conjugation, norm and inverse") {
    Octonion x = oi + Octonion::basis(6);  // i + jl
    CHECK(oct_conj(x) == -x);
    Octonion all{{1, 1, 1, 1}, {1, 1, 1, 1}, false};
    CHECK(oct_norm(all) == Dyadic(8));
    CHECK(cd_multiply(oi, oct_inverse(oi)) == Octonion::unit());

    // split null vector: N(i + i eps) = 0
    Octonion null{{0, 1, 0, 0}, {0, 1, 0, 0}, true};
    CHECK(oct_norm(null).is_zero());
    CHECK_THROWS_AS(oct_inverse(null), std::domain_error);
}

TEST_CASE("norm multiplicativity on 1000 random pairs per flag") {
    std::mt19937_64 rng(29);
    for (bool split : {false, true}) {
        for (int t = 0; t < 1000; ++t) {
            Octonion x = random_oct(rng, split);
            Octonion y = random_oct(rng, split);
            REQUIRE(oct_norm(cd_multiply(x, y)) == oct_norm(x) * oct_norm(y));
        }
    }
}

TEST_CASE("alternativity") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 400; ++t) {
        Octonion x = random_oct(rng, false);
        Octonion y = random_oct(rng, false);
        Octonion xx = cd_multiply(x, x);
        CHECK(cd_multiply(x, cd_multiply(x, y)) == cd_multiply(xx, y));
        CHECK(cd_multiply(cd_multiply(y, x), x) == cd_multiply(y, xx));
    }
}

TEST_CASE("unit left multiplications are orthogonal") {
    std::vector<Octonion> units;
    for (int t = 0; t < 8; ++t) {
        units.push_back(Octonion::basis(t));
        units.push_back(-Octonion::basis(t));
    }
    // four slots at +-1/2 also have norm exactly one
    Dyadic h(BigInt(1), 1);
    std::mt19937_64 rng(37);
    for (int t = 0; t < 24; ++t) {
        std::array<Dyadic, 8> comp{};
        int placed = 0;
        while (placed < 4) {
            int slot = int(rng() % 8);
            if (!comp[slot].is_zero())
                continue;
            comp[slot] = (rng() & 1) ? h : -h;
            ++placed;
        }
        units.push_back(Octonion{{comp[0], comp[1], comp[2], comp[3]},
                                 {comp[4], comp[5], comp[6], comp[7]},
                                 false});
    }
    for (const Octonion& x : units) {
        REQUIRE(oct_norm(x) == Dyadic(1));
        DyadicMatrix m = left_mult_matrix(x);
        REQUIRE(m.transposed() * m == DyadicMatrix::identity(8));
    }
}

TEST_CASE("the doubling rule reproduces the lower rungs of the tower") {
    // components confined to R: complex multiplication
    std::mt19937_64 rng(41);
    auto real_pair = [&](Dyadic a, Dyadic b) {
        return Octonion{{a, 0, 0, 0}, {b, 0, 0, 0}, false};
    };
    for (int t = 0; t < 200; ++t) {
        Dyadic a(std::int64_t(rng() % 9) - 4), b(std::int64_t(rng() % 9) - 4);
        Dyadic c(std::int64_t(rng() % 9) - 4), d(std::int64_t(rng() % 9) - 4);
        Octonion prod = cd_multiply(real_pair(a, b), real_pair(c, d));
        ExactComplex z = ExactComplex{a, b} * ExactComplex{c, d};
        CHECK(prod.a.a == z.re);
        CHECK(prod.b.a == z.im);
    }
    // components confined to C (spanned by 1 and i): quaternion multiplication
    auto complex_pair = [&](const ExactQuaternion& q) {
        return Octonion{{q.a, q.b, 0, 0}, {q.c, q.d, 0, 0}, false};
    };
    for (int t = 0; t < 200; ++t) {
        auto comp = [&] { return Dyadic(std::int64_t(rng() % 9) - 4); };
        ExactQuaternion x{comp(), comp(), comp(), comp()};
        ExactQuaternion y{comp(), comp(), comp(), comp()};
        Octonion prod = cd_multiply(complex_pair(x), complex_pair(y));
        ExactQuaternion h = quat_mul(x, y);
        CHECK(prod.a.a == h.a);
        CHECK(prod.a.b == h.b);
        CHECK(prod.b.a == h.c);
        CHECK(prod.b.b == h.d);
    }
}

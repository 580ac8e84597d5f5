#include <catch_amalgamated.hpp>

#include <random>

#include "cliffgen/fixtures.hpp"
#include "cliffgen/representation.hpp"
#include "support.hpp"

using namespace cliffgen;
using namespace testsupport;

TEST_CASE("mod-8 classification") {
    auto c07 = classify(Signature(0, 7));
    CHECK(c07.ring == RingKind::RplusR);
    CHECK(c07.matrix_dim == 8);
    CHECK(c07.semisimple);

    auto c13 = classify(Signature(1, 3));
    CHECK(c13.ring == RingKind::H);
    CHECK(c13.matrix_dim == 2);
    CHECK_FALSE(c13.semisimple);

    auto c00 = classify(Signature(0, 0));
    CHECK(c00.ring == RingKind::R);
    CHECK(c00.matrix_dim == 1);

    auto c03 = classify(Signature(0, 3));
    CHECK(c03.ring == RingKind::HplusH);
    CHECK(c03.matrix_dim == 1);
    CHECK(c03.semisimple);

    CHECK(classify(Signature(3, 1)).spinor_space_name() == "R^4");
    CHECK(classify(Signature(2, 1)).spinor_space_name() == "R^2+R^2");
    CHECK(classify(Signature(0, 6)).spinor_space_name() == "R^8");
}

TEST_CASE("generator matrices for the worked examples") {
    SECTION("(0,2): 1x1 quaternion units") {
        Representation rep = generator_matrices(Signature(0, 2));
        CHECK(rep.generators[0].at(0, 0) == RingScalar(ExactQuaternion::unit_i()));
        CHECK(rep.generators[1].at(0, 0) == RingScalar(ExactQuaternion::unit_j()));
    }
    SECTION("(1,3): gamma3 = diag(i,-i), gamma1 = offdiag(1,1)") {
        Representation rep = generator_matrices(Signature(1, 3));
        const RingMatrix& g3 = rep.generators[2];
        CHECK(g3.at(0, 0) == RingScalar(ExactQuaternion::unit_i()));
        CHECK(g3.at(1, 1) == -RingScalar(ExactQuaternion::unit_i()));
        CHECK(g3.at(0, 1).is_zero());
        const RingMatrix& g1 = rep.generators[0];
        CHECK(g1.at(0, 1) == RingScalar::one(Ring::quaternion));
        CHECK(g1.at(1, 0) == RingScalar::one(Ring::quaternion));
        CHECK(g1.at(0, 0).is_zero());
    }
    SECTION("(2,3): gamma5 = diag(i,-i,-i,i)") {
        Representation rep = generator_matrices(Signature(2, 3));
        const RingMatrix& g5 = rep.generators[4];
        RingScalar i = RingScalar(ExactComplex::unit_i());
        CHECK(g5.at(0, 0) == i);
        CHECK(g5.at(1, 1) == -i);
        CHECK(g5.at(2, 2) == -i);
        CHECK(g5.at(3, 3) == i);
    }
    SECTION("(3,1): the four real 4x4 matrices") {
        Representation rep = generator_matrices(Signature(3, 1));
        auto diff = fixtures::compare_to_fixture(rep, "cl_3_1");
        CHECK(diff.exact());
    }
}

TEST_CASE("relation verification and a mutation witness") {
    Representation rep = generator_matrices(Signature(1, 3));
    RelationReport ok = verify_relations(rep, 7);
    CHECK(ok.pass);

    Representation broken = rep;
    broken.generators[0].at(0, 1) = -broken.generators[0].at(0, 1);
    RelationReport bad = verify_relations(broken, 7);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_failure.find("(1,1)") != std::string::npos);
}

TEST_CASE("semisimple halves are opposite and split on the pseudoscalar") {
    for (const Signature& sig : {Signature(1, 0), Signature(0, 3), Signature(2, 1),
                                 Signature(1, 4), Signature(0, 7)}) {
        Representation rep = generator_matrices(sig);
        REQUIRE(rep.semisimple());
        REQUIRE(rep.generators_hat.size() == rep.generators.size());
        for (std::size_t i = 0; i < rep.generators.size(); ++i)
            CHECK(rep.generators_hat[i] == -rep.generators[i]);

        Ring ring = division_ring(rep.cls.ring);
        RingMatrix omega = RingMatrix::identity(ring, rep.cls.matrix_dim);
        RingMatrix omega_hat = omega;
        for (int i = 0; i < sig.n(); ++i) {
            omega = omega * rep.generators[i];
            omega_hat = omega_hat * rep.generators_hat[i];
        }
        RingMatrix id = RingMatrix::identity(ring, rep.cls.matrix_dim);
        bool plus = omega == id, minus = omega == -id;
        REQUIRE((plus || minus));
        CHECK(omega_hat == (plus ? -id : id));
    }
}

TEST_CASE("representation is an algebra homomorphism") {
    std::mt19937_64 rng(17);
    std::vector<Signature> sigs = {Signature(0, 5), Signature(2, 3)};
    for (int n = 0; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            sigs.emplace_back(p, n - p);
    for (const Signature& sig : sigs) {
        Representation rep = generator_matrices(sig);
        SpinorBasis& sb = rep.basis;
        for (int t = 0; t < 100; ++t) {
            Multivector x = random_multivector(sig, rng, 4);
            Multivector y = random_multivector(sig, rng, 4);
            REQUIRE(matrix_of(rep, x * y) == matrix_of(rep, x) * matrix_of(rep, y));
        }
        // dimension accounting: module slots x real dimension of E = 2^{n-k}
        int d = ring_real_dim(division_ring(rep.cls.ring));
        CHECK(int(sb.module_basis.size()) * d == int(sb.real_basis.size()));
    }
}

TEST_CASE("entry alphabet and relation grid for all signatures with p+q <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            Representation rep = generator_matrices(sig);
            for (const RingMatrix& m : rep.generators)
                REQUIRE(m.in_unit_alphabet());
            REQUIRE(verify_relations(rep, 5).pass);
            CliffordClass cls = classify(sig);
            REQUIRE(rep.cls.matrix_dim == cls.matrix_dim);
            REQUIRE(rep.cls.ring == cls.ring);
        }
}

TEST_CASE("fixture comparison behaviors") {
    SECTION("(1,2): exact modulo the documented erratum cell") {
        auto diff = fixtures::compare_to_fixture(generator_matrices(Signature(1, 2)), "cl_1_2");
        CHECK(diff.exact_modulo_errata());
        CHECK(diff.generators_exact == 3);
        REQUIRE(diff.errata_applied.size() == 1);
        CHECK(diff.errata_applied[0].generator == 3);
        CHECK(diff.errata_applied[0].row == 2);
        CHECK(diff.errata_applied[0].col == 2);
    }
    SECTION("(0,2): exact") {
        auto diff = fixtures::compare_to_fixture(generator_matrices(Signature(0, 2)), "cl_0_2");
        CHECK(diff.exact());
    }
    SECTION("(4,0): per-entry report runs and flags the inconsistent cells") {
        auto diff = fixtures::compare_to_fixture(generator_matrices(Signature(4, 0)), "cl_4_0");
        CHECK(diff.generators_total == 4);
        CHECK_FALSE(diff.mismatches.empty());
        for (const auto& cell : diff.mismatches)
            CHECK(cell.generator == 4);  // the published gamma4 uses an inconsistent unit
    }
    SECTION("unknown fixture id") {
        CHECK_THROWS_AS(
            fixtures::compare_to_fixture(generator_matrices(Signature(0, 2)), "cl_9_9"),
            std::invalid_argument);
    }
}

#include <catch_amalgamated.hpp>

#include <random>

#include "cliffgen/group_theory.hpp"

using namespace cliffgen;

TEST_CASE("twisted adjoint basics") {
    Signature cl03(0, 3);
    Multivector g1 = Multivector::generator(cl03, 1);
    Multivector g2 = Multivector::generator(cl03, 2);
    Multivector g3 = Multivector::generator(cl03, 3);

    CHECK(twisted_adjoint(g1, g1) == -g1);  // reflection flips its axis
    std::mt19937_64 rng(3);
    Multivector x = Multivector::generator(cl03, 2) +
                    Multivector::from_blade(cl03, Blade::from_indices({1, 3}), Dyadic(2));
    CHECK(twisted_adjoint(Multivector::unit(cl03), x) == x);
    CHECK(twisted_adjoint(g1 * g2, g3) == g3);  // rotation in the 12-plane fixes e3
}

TEST_CASE("rho matrices") {
    Signature cl30(3, 0);
    DyadicMatrix m = rho_matrix(Multivector::generator(cl30, 1), cl30);
    CHECK(m.at(0, 0) == Dyadic(-1));
    CHECK(m.at(1, 1) == Dyadic(1));
    CHECK(m.at(2, 2) == Dyadic(1));
    CHECK(m.at(0, 1).is_zero());
    CHECK(exact_det(m) == Dyadic(-1));

    Signature cl02(0, 2);
    DyadicMatrix rot =
        rho_matrix(Multivector::generator(cl02, 1) * Multivector::generator(cl02, 2), cl02);
    CHECK(rot.at(0, 0) == Dyadic(-1));
    CHECK(rot.at(1, 1) == Dyadic(-1));
    CHECK(rot.at(0, 1).is_zero());

    CHECK(rho_matrix(Multivector::unit(cl30), cl30) == DyadicMatrix::identity(3));

    // a non Clifford-group element fails the stabilization check
    Multivector bad = Multivector::unit(cl30) + Multivector::generator(cl30, 1);
    CHECK_THROWS_AS(rho_matrix(bad, cl30), std::domain_error);
}

TEST_CASE("pin and spin membership") {
    Signature cl03(0, 3);
    Multivector g1 = Multivector::generator(cl03, 1);
    CHECK(is_pin(g1));
    CHECK_FALSE(is_spin(g1));
    Multivector g12 = g1 * Multivector::generator(cl03, 2);
    CHECK(is_spin(g12));
    CHECK_FALSE(is_pin(g1.scaled(Dyadic(2))));
}

TEST_CASE("rho is a homomorphism preserving B") {
    std::mt19937_64 rng(11);
    for (const Signature& sig : {Signature(0, 3), Signature(3, 0), Signature(2, 2)}) {
        for (int t = 0; t < 100; ++t) {
            VersorCandidate u = random_versor(sig, 1 + int(rng() % 3), rng);
            VersorCandidate v = random_versor(sig, 1 + int(rng() % 3), rng);
            CHECK(rho_matrix(u.element * v.element, sig) ==
                  rho_matrix(u.element, sig) * rho_matrix(v.element, sig));
        }
        // B(rho x, rho y) = B(x, y) on basis vectors: rho^T G rho = G is
        // asserted inside rho_matrix; exercise it on odd and even samples.
        for (int t = 0; t < 20; ++t)
            CHECK_NOTHROW(rho_matrix(random_versor(sig, 1 + int(rng() % 4), rng).element, sig));
    }
}

TEST_CASE("factor-built pin elements have unit norm") {
    std::mt19937_64 rng(13);
    for (const Signature& sig : {Signature(0, 4), Signature(4, 0), Signature(1, 2)}) {
        for (int t = 0; t < 60; ++t) {
            VersorCandidate u = random_versor(sig, 1 + int(rng() % 4), rng);
            Multivector norm = quadratic_norm(u.element);
            REQUIRE(norm.is_scalar());
            Dyadic s = norm.scalar_part();
            REQUIRE((s == Dyadic(1) || s == Dyadic(-1)));
            REQUIRE(is_pin(u.element));
        }
    }
}

TEST_CASE("double cover experiment") {
    DoubleCoverReport r = double_cover_check(Signature(0, 3), 100, 7);
    CHECK(r.samples == 100);
    CHECK(r.equal_pairs == 100);
    CHECK(r.det_plus_one == 100);
    CHECK(r.odd_det_minus_one == r.odd_samples);
    CHECK(r.pass());

    DoubleCoverReport trivial = double_cover_check(Signature(0, 0), 10, 1);
    CHECK(trivial.pass());

    DoubleCoverReport indefinite = double_cover_check(Signature(2, 1), 50, 3);
    CHECK(indefinite.equal_pairs == indefinite.samples);
}

TEST_CASE("theorem criterion for spin agrees in low dimension") {
    std::mt19937_64 rng(17);
    for (const Signature& sig : {Signature(0, 3), Signature(2, 2), Signature(0, 5)}) {
        for (int t = 0; t < 100; ++t) {
            VersorCandidate u = random_versor(sig, 2 * (1 + int(rng() % 2)), rng);
            // is_spin cross-checks the even-unit-norm criterion internally for
            // dim <= 5 and throws on disagreement
            CHECK(is_spin(u.element));
        }
    }
}

TEST_CASE("quaternion rotation") {
    ExactQuaternion qi = ExactQuaternion::unit_i();
    ExactQuaternion qj = ExactQuaternion::unit_j();
    ExactQuaternion qk = ExactQuaternion::unit_k();
    CHECK(quaternion_rotation(qi, qj) == -qj);
    CHECK(quaternion_rotation(qi, qi) == qi);
    CHECK(quaternion_rotation(qi, qk) == -qk);
    CHECK_THROWS_AS(quaternion_rotation(ExactQuaternion{2, 0, 0, 0}, qi), std::domain_error);
    CHECK_THROWS_AS(quaternion_rotation(qi, ExactQuaternion{1, 1, 0, 0}),
                    std::invalid_argument);

    // norm preserved on a dyadic unit quaternion with all components
    Dyadic h(BigInt(1), 1);
    ExactQuaternion q{h, h, h, h};
    REQUIRE(quat_norm_sq(q) == Dyadic(1));
    ExactQuaternion image = quaternion_rotation(q, qj);
    CHECK(quat_norm_sq(image) == Dyadic(1));
}

TEST_CASE("quaternion rotation matches the Clifford picture") {
    // Full-algebra dictionary: 1,i,j,k <-> 1,g1,g2,g12 in Cl(0,2); plain
    // conjugation commutes with the isomorphism.
    Signature sig(0, 2);
    auto embed = [&](const ExactQuaternion& q) {
        return Multivector::scalar(sig, q.a) + Multivector::generator(sig, 1).scaled(q.b) +
               Multivector::generator(sig, 2).scaled(q.c) +
               Multivector::from_blade(sig, Blade::from_indices({1, 2}), q.d);
    };
    Dyadic h(BigInt(1), 1);
    std::vector<ExactQuaternion> units = {ExactQuaternion{1, 0, 0, 0},
                                          ExactQuaternion::unit_i(),
                                          ExactQuaternion::unit_j(),
                                          ExactQuaternion::unit_k(),
                                          {h, h, h, h},
                                          {h, -h, h, -h}};
    for (const ExactQuaternion& q : units) {
        REQUIRE(quat_norm_sq(q) == Dyadic(1));
        for (const ExactQuaternion& v :
             {ExactQuaternion::unit_i(), ExactQuaternion::unit_j(), ExactQuaternion::unit_k()}) {
            ExactQuaternion image = quaternion_rotation(q, v);
            Multivector u = embed(q);
            Multivector conjugated = u * embed(v) * versor_inverse(u);
            CHECK(conjugated == embed(image));
        }
    }

    // Even elements a + b g12 act on the 12-plane exactly like conjugation by
    // a + b k acts on the (i,j)-plane.
    for (const ExactQuaternion& q : {ExactQuaternion{0, 0, 0, 1}, ExactQuaternion{h, 0, 0, h},
                                     ExactQuaternion{h, 0, 0, -h}}) {
        ExactQuaternion qn = q;
        if (quat_norm_sq(qn) != Dyadic(1))
            continue;
        Multivector u = embed(qn);
        REQUIRE(is_even(u));
        DyadicMatrix rho = rho_matrix(u, sig);
        ExactQuaternion ii = quaternion_rotation(qn, ExactQuaternion::unit_i());
        ExactQuaternion jj = quaternion_rotation(qn, ExactQuaternion::unit_j());
        CHECK(rho.at(0, 0) == ii.b);
        CHECK(rho.at(1, 0) == ii.c);
        CHECK(rho.at(0, 1) == jj.b);
        CHECK(rho.at(1, 1) == jj.c);
    }
}

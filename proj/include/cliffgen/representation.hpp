#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffgen/classification.hpp"
#include "cliffgen/spinor_basis.hpp"

namespace cliffgen {

/// Square matrix over one of the exact scalar rings.
struct RingMatrix {
    Ring ring = Ring::real;
    int dim = 0;
    std::vector<RingScalar> e;

    RingMatrix() = default;
    RingMatrix(Ring r, int d) : ring(r), dim(d), e(std::size_t(d) * d, RingScalar::zero(r)) {}

    RingScalar& at(int r, int c) { return e[std::size_t(r) * dim + c]; }
    const RingScalar& at(int r, int c) const { return e[std::size_t(r) * dim + c]; }

    static RingMatrix identity(Ring ring, int d) {
        RingMatrix m(ring, d);
        for (int i = 0; i < d; ++i)
            m.at(i, i) = RingScalar::one(ring);
        return m;
    }

    RingMatrix operator*(const RingMatrix& o) const {
        if (ring != o.ring || dim != o.dim)
            throw std::invalid_argument("RingMatrix: shape/ring mismatch in product");
        RingMatrix p(ring, dim);
        for (int r = 0; r < dim; ++r)
            for (int k = 0; k < dim; ++k) {
                if (at(r, k).is_zero())
                    continue;
                for (int c = 0; c < dim; ++c) {
                    if (o.at(k, c).is_zero())
                        continue;
                    p.at(r, c) = p.at(r, c) + at(r, k) * o.at(k, c);
                }
            }
        return p;
    }
    RingMatrix operator+(const RingMatrix& o) const {
        if (ring != o.ring || dim != o.dim)
            throw std::invalid_argument("RingMatrix: shape/ring mismatch in sum");
        RingMatrix s(ring, dim);
        for (std::size_t i = 0; i < e.size(); ++i)
            s.e[i] = e[i] + o.e[i];
        return s;
    }
    RingMatrix operator-() const {
        RingMatrix s(ring, dim);
        for (std::size_t i = 0; i < e.size(); ++i)
            s.e[i] = -e[i];
        return s;
    }
    RingMatrix scaled(const RingScalar& s) const {
        RingMatrix m(ring, dim);
        for (std::size_t i = 0; i < e.size(); ++i)
            m.e[i] = s * e[i];
        return m;
    }
    bool operator==(const RingMatrix& o) const {
        return ring == o.ring && dim == o.dim && e == o.e;
    }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool in_unit_alphabet() const {
        for (const auto& x : e)
            if (!x.in_unit_alphabet())
                return false;
        return true;
    }
};

/// Spinor representation of Cl_{p,q}: one left-multiplication matrix per
/// generator over the division ring E, plus the grade-involuted pair for the
/// semisimple signatures.
struct Representation {
    Signature sig;
    CliffordClass cls;
    SpinorBasis basis;
    std::vector<RingMatrix> generators;
    std::vector<RingMatrix> generators_hat;  // semisimple signatures only

    bool semisimple() const { return cls.semisimple; }
};

namespace detail {

/// Fold the orbit-basis coordinates of x (unit-major groups of size d) into
/// one ring scalar per module slot, i.e. the column of left-multiplication.
inline std::vector<RingScalar> fold_column(const SpinorBasis& sb,
                                           std::span<const Multivector> orbit,
                                           const Multivector& x, Ring ring) {
    IdealCoordinates co = SpinorBasis::reduce(x, orbit);
    const int d = sb.division_dim();
    const int m = int(orbit.size()) / d;
    std::vector<RingScalar> col;
    col.reserve(m);
    for (int a = 0; a < m; ++a) {
        const Dyadic* c = &co.coords[std::size_t(a) * d];
        switch (ring) {
            case Ring::real:
                col.push_back(RingScalar(c[0]));
                break;
            case Ring::complex:
                col.push_back(RingScalar(ExactComplex{c[0], c[1]}));
                break;
            case Ring::quaternion:
                col.push_back(RingScalar(ExactQuaternion{c[0], c[1], c[2], c[3]}));
                break;
        }
    }
    return col;
}

inline RingMatrix extract_matrix(const SpinorBasis& sb, std::span<const Multivector> module,
                                 std::span<const Multivector> orbit, const Multivector& x) {
    Ring ring = division_ring(sb.ring);
    RingMatrix m(ring, int(module.size()));
    for (int j = 0; j < int(module.size()); ++j) {
        std::vector<RingScalar> col = fold_column(sb, orbit, x * module[j], ring);
        for (int r = 0; r < m.dim; ++r)
            m.at(r, j) = col[r];
    }
    return m;
}

}  // namespace detail

/// Matrix of left multiplication by an arbitrary element, in the carried
/// basis (linear in x by construction).
inline RingMatrix matrix_of(const Representation& rep, const Multivector& x) {
    return detail::extract_matrix(rep.basis, rep.basis.module_basis, rep.basis.orbit_basis, x);
}

/// Construct the full spinor representation and post-check the defining
/// relations and the entry alphabet.
inline Representation generator_matrices(const Signature& sig) {
    Representation rep{sig, classify(sig), spinor_basis(sig)};
    const SpinorBasis& sb = rep.basis;
    for (int i = 1; i <= sig.n(); ++i) {
        RingMatrix m = detail::extract_matrix(sb, sb.module_basis, sb.orbit_basis,
                                              Multivector::generator(sig, i));
        if (!m.in_unit_alphabet())
            throw std::logic_error("generator_matrices" + sig.str() + ": generator " +
                                   std::to_string(i) + " entry outside {0,±1,±i,±j,±k}");
        rep.generators.push_back(std::move(m));
    }

    if (rep.cls.semisimple) {
        // The twin half-representation lives on the grade-involuted ideal.
        std::vector<Multivector> hat_module, hat_orbit;
        for (const Multivector& b : sb.module_basis)
            hat_module.push_back(grade_involution(b));
        for (const Multivector& b : sb.orbit_basis)
            hat_orbit.push_back(grade_involution(b));
        for (int i = 1; i <= sig.n(); ++i) {
            RingMatrix m = detail::extract_matrix(sb, hat_module, hat_orbit,
                                                  Multivector::generator(sig, i));
            if (m != -rep.generators[std::size_t(i - 1)])
                throw std::logic_error("generator_matrices" + sig.str() +
                                       ": half-representations are not opposite at generator " +
                                       std::to_string(i));
            rep.generators_hat.push_back(std::move(m));
        }
    }

    // defining relations, exact
    Ring ring = division_ring(rep.cls.ring);
    RingMatrix id = RingMatrix::identity(ring, rep.cls.matrix_dim);
    for (int i = 1; i <= sig.n(); ++i)
        for (int j = i; j <= sig.n(); ++j) {
            const RingMatrix &mi = rep.generators[i - 1], &mj = rep.generators[j - 1];
            RingMatrix anti = mi * mj + mj * mi;
            RingMatrix expect(ring, rep.cls.matrix_dim);
            if (i == j)
                expect = sig.metric(i) > 0 ? id + id : -(id + id);
            if (anti != expect)
                throw std::logic_error("generator_matrices" + sig.str() +
                                       ": defining relation failed at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
        }
    return rep;
}

/// Relation-verification report: anticommutation grid plus random-word
/// homomorphism checks; failures become report content, not exceptions.
struct RelationReport {
    bool pass = true;
    int checks = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass)
            first_failure = what;
        pass = false;
    }
};

inline RelationReport verify_relations(const Representation& rep, std::uint64_t seed = 0,
                                       int random_words = 25) {
    RelationReport report;
    const Signature& sig = rep.sig;
    Ring ring = division_ring(rep.cls.ring);
    RingMatrix id = RingMatrix::identity(ring, rep.cls.matrix_dim);

    auto check_half = [&](const std::vector<RingMatrix>& gens, const char* tag) {
        for (int i = 1; i <= sig.n(); ++i)
            for (int j = i; j <= sig.n(); ++j) {
                RingMatrix anti = gens[i - 1] * gens[j - 1] + gens[j - 1] * gens[i - 1];
                RingMatrix expect(ring, rep.cls.matrix_dim);
                if (i == j)
                    expect = sig.metric(i) > 0 ? id + id : -(id + id);
                ++report.checks;
                if (anti != expect)
                    report.fail(std::string(tag) + " anticommutation failed at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    };
    check_half(rep.generators, "");
    if (rep.semisimple())
        check_half(rep.generators_hat, "hat");

    // homomorphism on random blades: the extracted matrix of gamma_w must be
    // the ordered product of the generator matrices
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_words; ++t) {
        std::uint32_t mask = std::uint32_t(rng()) & ((1u << sig.n()) - 1);
        Blade w(mask);
        RingMatrix lhs = matrix_of(rep, Multivector::from_blade(sig, w));
        RingMatrix rhs = id;
        for (int i : w.indices())
            rhs = rhs * rep.generators[i - 1];
        ++report.checks;
        if (lhs != rhs)
            report.fail("word homomorphism failed at " + w.name());
    }
    return report;
}

}  // namespace cliffgen

#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffgen/involutions.hpp"
#include "cliffgen/linalg.hpp"
#include "cliffgen/multivector.hpp"
#include "cliffgen/scalars.hpp"

namespace cliffgen {

/// Candidate Clifford-group element, optionally remembering the unit
/// 1-vectors whose ordered product built it.
struct VersorCandidate {
    Multivector element;
    std::vector<Multivector> factors;

    static VersorCandidate from_factors(std::vector<Multivector> fs) {
        if (fs.empty())
            throw std::invalid_argument("VersorCandidate: empty factor list");
        Multivector e = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i)
            e = e * fs[i];
        return {std::move(e), std::move(fs)};
    }
};

/// Inverse via the quadratic norm: u^{-1} = conj(u)/||u|| whenever ||u|| is a
/// nonzero scalar with a dyadic inverse.
inline Multivector versor_inverse(const Multivector& u) {
    Multivector norm = quadratic_norm(u);
    if (!norm.is_scalar() || norm.is_zero())
        throw std::domain_error("versor_inverse: ||u|| is not a nonzero scalar");
    return conjugation(u).scaled(norm.scalar_part().inverse());
}

/// Twisted adjoint Ad^_u(x) = phi_t(u) x u^{-1}.
inline Multivector twisted_adjoint(const Multivector& u, const Multivector& x) {
    return grade_involution(u) * x * versor_inverse(u);
}

/// Does Ad^_u map the 1-vector subspace into itself? (Clifford-group
/// membership test.)
inline bool stabilizes_vectors(const Multivector& u) {
    const Signature sig = u.signature();
    for (int i = 1; i <= sig.n(); ++i) {
        Multivector img = twisted_adjoint(u, Multivector::generator(sig, i));
        if (img.grade_project(1) != img)
            return false;
    }
    return true;
}

/// Matrix of rho_u = Ad^_u restricted to V, column i = coordinates of the
/// image of gamma_i. Checks membership and B-orthogonality (M^T G M = G).
inline DyadicMatrix rho_matrix(const Multivector& u, const Signature& sig) {
    if (u.signature() != sig)
        throw std::invalid_argument("rho_matrix: signature mismatch");
    const int n = sig.n();
    DyadicMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        Multivector img = twisted_adjoint(u, Multivector::generator(sig, i));
        if (img.grade_project(1) != img)
            throw std::domain_error("rho_matrix: u does not stabilize V (image of g" +
                                    std::to_string(i) + " has mixed grade)");
        for (const auto& [b, c] : img.terms())
            m.at(b.indices()[0] - 1, i - 1) = c;
    }
    DyadicMatrix g(n, n);
    for (int i = 1; i <= n; ++i)
        g.at(i - 1, i - 1) = Dyadic(sig.metric(i));
    if (m.transposed() * g * m != g)
        throw std::logic_error("rho_matrix: induced map is not B-orthogonal");
    return m;
}

/// Pin membership: stabilizes V and ||u|| = +-1 exactly.
inline bool is_pin(const Multivector& u) {
    Multivector norm = quadratic_norm(u);
    if (!norm.is_scalar())
        return false;
    Dyadic s = norm.scalar_part();
    if (s != Dyadic(1) && s != Dyadic(-1))
        return false;
    return stabilizes_vectors(u);
}

/// Spin membership: Pin and even. For dim <= 5 the even-unit-norm criterion
/// (no stabilization needed) must agree, and disagreement is an internal
/// error.
inline bool is_spin(const Multivector& u) {
    bool pin_and_even = is_pin(u) && is_even(u);
    if (u.signature().n() <= 5) {
        Multivector norm = quadratic_norm(u);
        bool shortcut = is_even(u) && norm.is_scalar() &&
                        (norm.scalar_part() == Dyadic(1) || norm.scalar_part() == Dyadic(-1));
        if (shortcut != pin_and_even)
            throw std::logic_error("is_spin: even-unit-norm criterion disagrees at dim " +
                                   std::to_string(u.signature().n()));
    }
    return pin_and_even;
}

/// Deterministic supply of exact unit 1-vectors: signed basis vectors always,
/// plus cross-sign (5/4, 3/4)-type dyadic pairs for indefinite forms.
inline std::vector<Multivector> unit_vector_pool(const Signature& sig) {
    std::vector<Multivector> pool;
    for (int i = 1; i <= sig.n(); ++i) {
        pool.push_back(Multivector::generator(sig, i));
        pool.push_back(-Multivector::generator(sig, i));
    }
    if (sig.p > 0 && sig.q > 0) {
        // a^2 - b^2 = +-1 with dyadic a, b: (5/4)^2 - (3/4)^2 = 1
        Dyadic a(BigInt(5), 2), b(BigInt(3), 2);
        for (int i = 1; i <= sig.p; ++i)
            for (int j = sig.p + 1; j <= sig.n(); ++j) {
                pool.push_back(Multivector::generator(sig, i).scaled(a) +
                               Multivector::generator(sig, j).scaled(b));
                pool.push_back(Multivector::generator(sig, i).scaled(b) +
                               Multivector::generator(sig, j).scaled(a));
            }
    }
    return pool;
}

inline VersorCandidate random_versor(const Signature& sig, int factor_count,
                                     std::mt19937_64& rng) {
    std::vector<Multivector> pool = unit_vector_pool(sig);
    std::vector<Multivector> fs;
    for (int i = 0; i < factor_count; ++i)
        fs.push_back(pool[rng() % pool.size()]);
    return VersorCandidate::from_factors(std::move(fs));
}

/// Seeded double-cover experiment: rho_u = rho_{-u} for even unit-vector
/// products; determinants checked on definite forms only.
struct DoubleCoverReport {
    int samples = 0;
    int equal_pairs = 0;
    int det_plus_one = 0;       // over even samples (definite forms)
    int odd_det_minus_one = 0;  // over odd samples (definite forms)
    int odd_samples = 0;
    bool definite = false;

    bool pass() const {
        return equal_pairs == samples &&
               (!definite || (det_plus_one == samples && odd_det_minus_one == odd_samples));
    }
};

inline DoubleCoverReport double_cover_check(const Signature& sig, int samples,
                                            std::uint64_t seed) {
    DoubleCoverReport report;
    report.definite = sig.p == 0 || sig.q == 0;
    if (sig.n() == 0) {
        // Cl(0) = R: the only units are +-1 and every check is vacuous.
        report.samples = samples;
        report.equal_pairs = samples;
        report.det_plus_one = samples;
        return report;
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
        int len = 2 * (1 + int(rng() % 3));
        VersorCandidate v = random_versor(sig, len, rng);
        ++report.samples;
        DyadicMatrix m = rho_matrix(v.element, sig);
        DyadicMatrix m_neg = rho_matrix(-v.element, sig);
        if (m == m_neg)
            ++report.equal_pairs;
        if (report.definite && exact_det(m) == Dyadic(1))
            ++report.det_plus_one;
        if (report.definite) {
            VersorCandidate odd = random_versor(sig, len + 1, rng);
            ++report.odd_samples;
            if (exact_det(rho_matrix(odd.element, sig)) == Dyadic(-1))
                ++report.odd_det_minus_one;
        }
    }
    return report;
}

/// Rotation of a purely imaginary quaternion by a unit quaternion:
/// v -> q v q^{-1}.
inline ExactQuaternion quaternion_rotation(const ExactQuaternion& q, const ExactQuaternion& v) {
    if (quat_norm_sq(q) != Dyadic(1))
        throw std::domain_error("quaternion_rotation: q must have unit norm");
    if (!v.is_imaginary())
        throw std::invalid_argument("quaternion_rotation: v must be purely imaginary");
    ExactQuaternion out = quat_mul(quat_mul(q, v), quat_inverse(q));
    if (!out.is_imaginary())
        throw std::logic_error("quaternion_rotation: image not imaginary");
    return out;
}

}  // namespace cliffgen

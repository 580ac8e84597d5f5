#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffgen/classification.hpp"
#include "cliffgen/idempotent.hpp"
#include "cliffgen/involutions.hpp"
#include "cliffgen/linalg.hpp"
#include "cliffgen/multivector.hpp"

namespace cliffgen {

namespace detail {

/// One-vector indices whose sub-products, times F, span the spinor space
/// (Tables 3/4 machinery).
inline std::vector<int> spinor_index_union(const Signature& sig) {
    if (sig.p == 3 && sig.q == 1)
        return {2, 3};  // pairs with the (3,1) generating-set override

    const auto [upper, base, a, l] = table_form(sig);
    std::vector<int> u;
    for (int i = 1; i <= base; ++i)
        u.push_back(i);
    const int block0 = upper ? 2 * base : base;
    for (int i = 1; i <= l; ++i) {
        int o = block0 + 8 * (i - 1);
        u.insert(u.end(), {o + 1, o + 2, o + 3, o + 5});
    }
    if (upper) {
        const int t = 2 * base + 8 * l;
        static constexpr int extra[8] = {0, 1, 2, 2, 3, 3, 3, 3};
        for (int i = 1; i <= extra[a]; ++i)
            u.push_back(t + i);
    } else {
        const int s = base + 8 * l;
        switch (a) {
            case 0:
            case 1: break;
            case 2: u.insert(u.end(), {s + 2}); break;
            case 3: u.insert(u.end(), {s + 2, s + 3}); break;
            case 4: u.insert(u.end(), {s + 2, s + 3, s + 4}); break;
            case 5: u.insert(u.end(), {s + 1, s + 2, s + 3}); break;
            case 6:
            case 7: u.insert(u.end(), {s + 1, s + 2, s + 3, s + 5}); break;
        }
    }
    std::sort(u.begin(), u.end());
    return u;
}

/// Coordinate column of x over the 2^n blade slots (indexed by mask).
inline void write_column(const Multivector& x, DyadicMatrix& m, int col) {
    for (const auto& [b, c] : x.terms())
        m.at(int(b.mask), col) = c;
}

inline DyadicMatrix coordinate_matrix(std::span<const Multivector> elements, int n) {
    DyadicMatrix m(1 << n, int(elements.size()));
    for (int j = 0; j < int(elements.size()); ++j)
        write_column(elements[j], m, j);
    return m;
}

}  // namespace detail

/// Exact coordinates over an ordered basis of the ideal.
struct IdealCoordinates {
    std::vector<Dyadic> coords;
};

/// Ordered real basis of the spinor space S_{p,q} = Cl_{p,q} F, with the
/// division-ring identification filled in by identify_scalars.
struct SpinorBasis {
    Signature sig;
    PrimitiveIdempotent idem;
    std::vector<int> index_union;          // table-derived one-vector indices
    std::vector<Blade> real_blades;        // b with b*F the basis element, grade-lex
    std::vector<Multivector> real_basis;   // b*F, same order
    RingKind ring = RingKind::R;
    bool semisimple = false;
    bool identified = false;

    // populated by identify_scalars (module == real basis for the R cases)
    std::vector<Blade> module_blades;
    std::vector<Multivector> module_basis;
    std::vector<Multivector> scalar_units;  // {} | {i} | {i,j,k}, ideal elements
    std::vector<SignedBlade> unit_labels;   // unit = sign * (blade * F), same order
    std::vector<Multivector> orbit_basis;   // module x {1,units}, unit-major per slot
    std::vector<std::string> notes;         // audit trail (e.g. unit search fallbacks)

    int division_dim() const { return scalar_units.empty() ? 1 : int(scalar_units.size()) + 1; }

    const Multivector& f() const { return idem.f; }

    /// Exact coordinates of x over an explicit element list.
    static IdealCoordinates reduce(const Multivector& x, std::span<const Multivector> basis) {
        if (basis.empty())
            throw std::invalid_argument("reduce: empty basis");
        int n = basis.front().signature().n();
        DyadicMatrix A = detail::coordinate_matrix(basis, n);
        std::vector<Dyadic> y(std::size_t(1) << n);
        for (const auto& [b, c] : x.terms())
            y[b.mask] = c;
        auto sol = exact_solve(A, y);
        if (!sol)
            throw std::domain_error("reduce: element outside the span of the basis");
        return {std::move(*sol)};
    }

    /// Coordinates over the real basis. Errors when x is not in the left
    /// ideal (x*F != x) or outside the span.
    IdealCoordinates reduce_to_basis(const Multivector& x) const {
        if (x.signature() != sig)
            throw std::invalid_argument("reduce_to_basis: signature mismatch");
        if (x * idem.f != x)
            throw std::domain_error("reduce_to_basis" + sig.str() +
                                    ": element is not in the ideal (x*F != x)");
        return reduce(x, real_basis);
    }

    /// Reconstruct sum coords_m * real_basis_m.
    Multivector from_coordinates(const IdealCoordinates& c) const {
        if (c.coords.size() != real_basis.size())
            throw std::invalid_argument("from_coordinates: length mismatch");
        Multivector out(sig);
        for (std::size_t i = 0; i < real_basis.size(); ++i)
            if (!c.coords[i].is_zero())
                out = out + real_basis[i].scaled(c.coords[i]);
        return out;
    }
};

namespace detail {

inline bool blade_squares_minus_one(Blade b, const Signature& sig) {
    SignedBlade sq = blade_product(b, b, sig);
    return sq.blade.is_scalar() && sq.sign == -1;
}

inline bool commutes_with_all(Blade b, const std::vector<Blade>& gens) {
    for (Blade g : gens)
        if (!blades_commute(b, g))
            return false;
    return true;
}

/// Deterministic fallback: blades in grade-then-lex order that square to -1
/// and commute with the whole generating set.
inline std::vector<Blade> unit_candidates(const Signature& sig, const std::vector<Blade>& gens,
                                          int max_grade = 5) {
    std::vector<Blade> all = canonical_basis(sig);
    std::vector<Blade> out;
    for (Blade b : all) {
        int g = b.grade();
        if (g < 1 || g > max_grade)
            continue;
        if (blade_squares_minus_one(b, sig) && commutes_with_all(b, gens))
            out.push_back(b);
    }
    return out;
}

}  // namespace detail

/// Build the ordered R-basis {b*F} from the table index union. Asserts the
/// 2^{n-k} cardinality and exact linear independence.
inline SpinorBasis real_basis(const Signature& sig) {
    SpinorBasis sb{sig, primitive_idempotent(sig)};
    sb.index_union = detail::spinor_index_union(sig);
    CliffordClass cls = classify(sig);
    sb.ring = cls.ring;
    sb.semisimple = cls.semisimple;

    const int k = involution_count(sig);
    const std::size_t expected = std::size_t(1) << (sig.n() - k);
    for (std::uint32_t sub = 0; sub < (1u << sb.index_union.size()); ++sub) {
        std::vector<int> idx;
        for (std::size_t j = 0; j < sb.index_union.size(); ++j)
            if (sub & (1u << j))
                idx.push_back(sb.index_union[j]);
        sb.real_blades.push_back(Blade::from_indices(idx));
    }
    std::sort(sb.real_blades.begin(), sb.real_blades.end(),
              [](Blade a, Blade b) { return canonical_less(a, b); });
    if (sb.real_blades.size() != expected)
        throw std::logic_error("real_basis" + sig.str() + ": expected " +
                               std::to_string(expected) + " elements, built " +
                               std::to_string(sb.real_blades.size()));
    for (Blade b : sb.real_blades)
        sb.real_basis.push_back(Multivector::from_blade(sig, b) * sb.idem.f);
    DyadicMatrix m = detail::coordinate_matrix(sb.real_basis, sig.n());
    if (exact_rank(m) != int(expected))
        throw std::logic_error("real_basis" + sig.str() +
                               ": table row yields a dependent set");
    return sb;
}

/// Attach the division-ring structure: pick the scalar units (Table 5/6
/// candidates first, deterministic search as fallback), reduce the R-basis to
/// the module basis greedily, and verify every unit relation exactly.
inline SpinorBasis identify_scalars(SpinorBasis sb) {
    const Signature sig = sb.sig;
    const Ring ring = division_ring(sb.ring);
    const std::vector<Blade>& gens = sb.idem.source.members;
    const Multivector& f = sb.idem.f;

    sb.identified = true;
    sb.module_blades.clear();
    sb.module_basis.clear();
    sb.scalar_units.clear();
    sb.unit_labels.clear();
    sb.orbit_basis.clear();

    auto blade_valid = [&](std::optional<Blade> b) {
        return b && b->valid_for(sig) && detail::blade_squares_minus_one(*b, sig) &&
               detail::commutes_with_all(*b, gens);
    };

    std::vector<Blade> unit_blades;
    if (ring == Ring::complex || ring == Ring::quaternion) {
        // Table 5/6 candidates
        const auto [upper, base, a, l] = detail::table_form(sig);
        std::optional<Blade> cand_i, cand_j;
        if (ring == Ring::complex) {
            if (upper && a == 1)
                cand_i = Blade::from_indices({2 * base + 8 * l + 1});
            else if (upper && a == 5)
                cand_i = Blade::from_indices({2 * base + 8 * l + 3});
            else if (!upper && a == 3)
                cand_i = Blade::from_indices({1, base + 8 * l + 2});
            else if (!upper && a == 7)
                cand_i = Blade::from_indices({1, base + 8 * l + 5});
        } else {
            if (upper) {
                cand_i = Blade::from_indices({2 * base + 1});
                cand_j = Blade::from_indices({2 * base + 2});
            } else {
                cand_i = Blade::from_indices({base + 1, base + 2});
                cand_j = Blade::from_indices({base + 2, base + 3});
            }
        }

        if (ring == Ring::complex) {
            if (blade_valid(cand_i)) {
                unit_blades = {*cand_i};
            } else {
                auto cands = detail::unit_candidates(sig, gens);
                if (cands.empty())
                    throw std::logic_error("identify_scalars" + sig.str() +
                                           ": no complex unit exists");
                unit_blades = {cands.front()};
                sb.notes.push_back("table unit candidate failed validation; selected " +
                                   cands.front().name() + " by search");
            }
        } else {
            bool table_ok = blade_valid(cand_i) && blade_valid(cand_j) &&
                            !detail::blades_commute(*cand_i, *cand_j);
            if (table_ok) {
                unit_blades = {*cand_i, *cand_j};
            } else {
                auto cands = detail::unit_candidates(sig, gens);
                bool found = false;
                for (std::size_t x = 0; x < cands.size() && !found; ++x)
                    for (std::size_t y = x + 1; y < cands.size() && !found; ++y)
                        if (!detail::blades_commute(cands[x], cands[y])) {
                            unit_blades = {cands[x], cands[y]};
                            found = true;
                        }
                if (!found)
                    throw std::logic_error("identify_scalars" + sig.str() +
                                           ": no anticommuting quaternion unit pair exists");
                sb.notes.push_back("table unit candidates failed validation; selected " +
                                   unit_blades[0].name() + ", " + unit_blades[1].name() +
                                   " by search");
            }
        }

        for (Blade b : unit_blades) {
            sb.scalar_units.push_back(Multivector::from_blade(sig, b) * f);
            sb.unit_labels.push_back({1, b});
        }
        if (ring == Ring::quaternion) {
            sb.scalar_units.push_back(sb.scalar_units[0] * sb.scalar_units[1]);  // k := i*j
            sb.unit_labels.push_back(blade_product(unit_blades[0], unit_blades[1], sig));
        }

        // exact relation checks, with the failing product reported
        auto expect = [&](const Multivector& lhs, const Multivector& rhs, const char* what) {
            if (lhs != rhs)
                throw std::logic_error("identify_scalars" + sig.str() +
                                       ": unit relation violated (" + what + "): got " +
                                       lhs.str());
        };
        const Multivector minus_f = -f;
        for (const Multivector& u : sb.scalar_units)
            expect(u * u, minus_f, "u*u = -F");
        if (ring == Ring::quaternion) {
            const Multivector &ui = sb.scalar_units[0], &uj = sb.scalar_units[1],
                              &uk = sb.scalar_units[2];
            expect(ui * uj, uk, "ij = k");
            expect(uj * uk, ui, "jk = i");
            expect(uk * ui, uj, "ki = j");
            expect(uj * ui, -uk, "ji = -k");
            expect(ui * uk, -uj, "ik = -j");
            expect(uk * uj, -ui, "kj = -i");
        }
    }

    // Greedy module selection: take R-basis elements whose unit orbit extends
    // the exact rank, until the module has 2^{n-k}/d slots.
    const int d = sb.scalar_units.empty() ? 1 : int(sb.scalar_units.size()) + 1;
    const std::size_t target = sb.real_basis.size() / d;
    const int n = sig.n();
    std::vector<Multivector> columns;
    columns.reserve(sb.real_basis.size());
    int rank = 0;
    for (std::size_t i = 0; i < sb.real_basis.size() && sb.module_basis.size() < target; ++i) {
        const Multivector& b = sb.real_basis[i];
        std::vector<Multivector> trial = columns;
        trial.push_back(b);
        for (const Multivector& u : sb.scalar_units)
            trial.push_back(b * u);
        int new_rank = exact_rank(detail::coordinate_matrix(trial, n));
        if (new_rank == rank + d) {
            columns = std::move(trial);
            rank = new_rank;
            sb.module_blades.push_back(sb.real_blades[i]);
            sb.module_basis.push_back(b);
        } else if (new_rank > rank) {
            throw std::logic_error("identify_scalars" + sig.str() +
                                   ": unit orbit of " + sb.real_blades[i].name() +
                                   " is partially dependent");
        }
    }
    if (sb.module_basis.size() != target || rank != int(sb.real_basis.size()))
        throw std::logic_error("identify_scalars" + sig.str() +
                               ": module selection failed (got " +
                               std::to_string(sb.module_basis.size()) + " of " +
                               std::to_string(target) + " slots)");
    sb.orbit_basis = std::move(columns);

    CliffordClass cls = classify(sig);
    if (int(sb.module_basis.size()) !=
        cls.matrix_dim)
        throw std::logic_error("identify_scalars" + sig.str() +
                               ": module dimension disagrees with the mod-8 class");
    return sb;
}

/// Convenience: fully identified spinor basis.
inline SpinorBasis spinor_basis(const Signature& sig) { return identify_scalars(real_basis(sig)); }

/// Whether the quadratic norm vanishes identically on the ideal. For any
/// blade b, ||bF|| = conj(F) conj(b) b F = (+-1) conj(F) F, and conj(F) F is
/// zero exactly when conjugation flips some generating involution, i.e. some
/// member has grade 1 or 2 mod 4. Generating sets made purely of grade-3 and
/// grade-4 monomials (for example (0,q) with q >= 3) have conj(F) = F, and
/// there the norm of every basis element is +-F instead.
inline bool norm_vanishes_on_ideal(const SpinorBasis& sb) {
    return (conjugation(sb.idem.f) * sb.idem.f).is_zero();
}

}  // namespace cliffgen

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffgen/blade.hpp"
#include "cliffgen/multivector.hpp"
#include "cliffgen/signature.hpp"

namespace cliffgen {

/// Radon-Hurwitz numbers r_i: r_0..r_7 = 0,1,2,2,3,3,3,3; r_{i+8} = r_i + 4;
/// r_{-1} = -1 and r_{-i} = 1 - i + r_{i-2} for i >= 2.
inline int radon_hurwitz(int i) {
    if (i > 64 || i < -64)
        throw std::out_of_range("radon_hurwitz: |i| <= 64 required");
    static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    if (i >= 0)
        return base[i % 8] + 4 * (i / 8);
    if (i == -1)
        return -1;
    return 1 + i + radon_hurwitz(-i - 2);
}

namespace detail {

/// Writes (p,q) as (p, p+a+8l) when q >= p, else (q+a+8l, q).
struct TableForm {
    bool upper;  // true: q >= p (Table 1 side)
    int base;    // p on the upper side, q on the lower
    int a;       // 0..7
    int l;       // >= 0
};

inline TableForm table_form(const Signature& sig) {
    int d = sig.q - sig.p;
    if (d >= 0)
        return {true, sig.p, d % 8, d / 8};
    return {false, sig.q, (-d) % 8, (-d) / 8};
}

}  // namespace detail

/// The two published k formulas, evaluated independently: the Radon-Hurwitz
/// route k = q - r_{q-p} and the mod-8 floor rule. Takes raw (p,q) so the
/// agreement can be checked beyond the algebra's dimension cap.
struct InvolutionCountPair {
    int by_radon_hurwitz;
    int by_mod8;
};

inline InvolutionCountPair involution_count_formulas(int p, int q) {
    int by_rh = q - radon_hurwitz(q - p);
    int res = ((q - p) % 8 + 8) % 8;
    int by_mod = (p + q) / 2;
    if (res == 2 || res == 4)
        by_mod -= 1;
    else if (res == 7)
        by_mod += 1;
    return {by_rh, by_mod};
}

/// Number of commuting involutions k; asserts that both formulas agree.
inline int involution_count(const Signature& sig) {
    auto [by_rh, by_mod] = involution_count_formulas(sig.p, sig.q);
    if (by_rh != by_mod)
        throw std::logic_error("involution_count: formulas disagree at " + sig.str() + ": " +
                               std::to_string(by_rh) + " vs " + std::to_string(by_mod));
    return by_rh;
}

/// The k commuting, independent, square-+1 monomials whose idempotent factors
/// build F.
struct GeneratingSet {
    Signature sig;
    std::vector<Blade> members;
};

namespace detail {

inline std::vector<Blade> table_generators(const Signature& sig) {
    const auto [upper, base, a, l] = table_form(sig);
    std::vector<Blade> out;
    if (upper) {
        const int p = base;
        for (int i = 1; i <= p; ++i)
            out.push_back(Blade::from_indices({i, p + i}));
        for (int i = 1; i <= l; ++i) {
            int o = 2 * p + 8 * (i - 1);
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 3, o + 4}));
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 5, o + 6}));
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 7, o + 8}));
            out.push_back(Blade::from_indices({o + 1, o + 3, o + 5, o + 7}));
        }
        const int t = 2 * p + 8 * l;
        switch (a) {
            case 0:
            case 1:
            case 2:
                break;
            case 3:
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 3}));
                break;
            case 4:
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 3, t + 4}));
                break;
            case 5:
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 3, t + 4}));
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 5}));
                break;
            case 6:
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 4}));
                out.push_back(Blade::from_indices({t + 2, t + 3, t + 5}));
                out.push_back(Blade::from_indices({t + 3, t + 4, t + 6}));
                break;
            case 7:
                out.push_back(Blade::from_indices({t + 1, t + 2, t + 4}));
                out.push_back(Blade::from_indices({t + 2, t + 3, t + 5}));
                out.push_back(Blade::from_indices({t + 3, t + 4, t + 6}));
                out.push_back(Blade::from_indices({t + 4, t + 5, t + 7}));
                break;
        }
    } else {
        const int q = base;
        for (int i = 1; i <= q; ++i)
            out.push_back(Blade::from_indices({i, q + 8 * l + a + i}));
        for (int i = 1; i <= l; ++i) {
            int o = q + 8 * (i - 1);
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 3, o + 4}));
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 5, o + 6}));
            out.push_back(Blade::from_indices({o + 1, o + 2, o + 7, o + 8}));
            out.push_back(Blade::from_indices({o + 1, o + 3, o + 5, o + 7}));
        }
        const int s = q + 8 * l;
        switch (a) {
            case 0:
                break;
            case 1:
            case 2:
            case 3:
            case 4:
                out.push_back(Blade::from_indices({s + 1}));
                break;
            case 5:
                out.push_back(Blade::from_indices({s + 1, s + 2, s + 3, s + 4}));
                out.push_back(Blade::from_indices({s + 5}));
                break;
            case 6:
                out.push_back(Blade::from_indices({s + 1, s + 2, s + 3, s + 4}));
                out.push_back(Blade::from_indices({s + 1, s + 2, s + 5, s + 6}));
                break;
            case 7:
                out.push_back(Blade::from_indices({s + 1, s + 2, s + 3, s + 4}));
                out.push_back(Blade::from_indices({s + 1, s + 2, s + 5, s + 6}));
                out.push_back(Blade::from_indices({s + 7}));
                break;
        }
    }
    return out;
}

inline bool blades_commute(Blade a, Blade b) {
    // gamma_a gamma_b = (-1)^{|a||b| - |a&b|} gamma_b gamma_a
    int e = a.grade() * b.grade() - std::popcount(a.mask & b.mask);
    return (e & 1) == 0;
}

}  // namespace detail

/// Table-driven generating set construction. Validates every invariant
/// (square +1, pairwise commutation, independence, |members| = k) before
/// returning; a violated invariant means a transcription or interpretation
/// bug and fails loudly.
inline GeneratingSet generating_set(const Signature& sig) {
    std::vector<Blade> members;
    if (sig.p == 3 && sig.q == 1) {
        // (3,1) keeps the classic Majorana construction {g1, g24}; the generic
        // table route would pick the equivalent but differently-based {g14, g2}.
        members = {Blade::from_indices({1}), Blade::from_indices({2, 4})};
    } else {
        members = detail::table_generators(sig);
    }

    const int k = involution_count(sig);
    auto fail = [&](const std::string& why) {
        throw std::logic_error("generating_set" + sig.str() + ": " + why);
    };
    if (int(members.size()) != k)
        fail("expected " + std::to_string(k) + " members, built " +
             std::to_string(members.size()));
    for (Blade m : members) {
        if (!m.valid_for(sig))
            fail("member " + m.name() + " outside the algebra");
        SignedBlade sq = blade_product(m, m, sig);
        if (!sq.blade.is_scalar() || sq.sign != 1)
            fail("member " + m.name() + " does not square to +1");
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!detail::blades_commute(members[i], members[j]))
                fail("members " + members[i].name() + " and " + members[j].name() +
                     " do not commute");
    // independence: no member is (up to sign) the product of others
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<Blade> others;
        for (std::size_t j = 0; j < members.size(); ++j)
            if (j != i)
                others.push_back(members[j]);
        for (std::uint32_t sub = 1; sub < (1u << others.size()); ++sub) {
            std::uint32_t prod = 0;
            for (std::size_t j = 0; j < others.size(); ++j)
                if (sub & (1u << j))
                    prod ^= others[j].mask;
            if (prod == members[i].mask)
                fail("member " + members[i].name() + " is a product of other members");
        }
    }
    return {sig, std::move(members)};
}

/// F = prod (1+g)/2 over the generating set, expanded exactly. F^2 = F is
/// asserted; k = 0 yields F = 1.
struct PrimitiveIdempotent {
    Multivector f;
    GeneratingSet source;
};

inline PrimitiveIdempotent primitive_idempotent(const Signature& sig) {
    GeneratingSet gens = generating_set(sig);
    Multivector f = Multivector::unit(sig);
    Dyadic half = Dyadic::half_pow(1);
    for (Blade g : gens.members) {
        Multivector factor =
            (Multivector::unit(sig) + Multivector::from_blade(sig, g)).scaled(half);
        f = f * factor;
    }
    if (f * f != f)
        throw std::logic_error("primitive_idempotent" + sig.str() + ": F^2 != F");
    return {std::move(f), std::move(gens)};
}

}  // namespace cliffgen

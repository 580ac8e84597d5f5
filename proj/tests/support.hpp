#pragma once

// Shared test helpers: seeded random elements and a naive rewriting
// multiplier kept deliberately independent of the bitmask product path.

#include <map>
#include <random>
#include <vector>

#include "cliffgen/multivector.hpp"

namespace testsupport {

using namespace cliffgen;

inline Dyadic random_coeff(std::mt19937_64& rng) {
    static const Dyadic pool[] = {Dyadic(1),           Dyadic(-1), Dyadic(2),
                                  Dyadic(-3),          Dyadic(5),  Dyadic(BigInt(1), 1),
                                  Dyadic(BigInt(-3), 2)};
    return pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
}

inline Multivector random_multivector(const Signature& sig, std::mt19937_64& rng,
                                      int max_terms = 6) {
    Multivector m(sig);
    int terms = 1 + int(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Blade b(std::uint32_t(rng()) & ((1u << sig.n()) - 1));
        m = m + Multivector::from_blade(sig, b, random_coeff(rng));
    }
    return m;
}

/// Naive product oracle: multiplies monomials by concatenating generator
/// index lists and rewriting one adjacent pair at a time with only the two
/// rules "swap with sign" and "contract a repeated generator with its
/// metric". No bitmasks anywhere.
using NaiveTerms = std::map<std::vector<int>, Dyadic>;

inline NaiveTerms naive_terms(const Multivector& m) {
    NaiveTerms out;
    for (const auto& [b, c] : m.terms())
        out[b.indices()] = c;
    return out;
}

inline void naive_accumulate(NaiveTerms& acc, std::vector<int> word, Dyadic coeff,
                             const Signature& sig) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == word[i + 1]) {
                if (sig.metric(word[i]) < 0)
                    coeff = -coeff;
                word.erase(word.begin() + i, word.begin() + i + 2);
                changed = true;
                break;
            }
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                coeff = -coeff;
                changed = true;
                break;
            }
        }
    }
    auto [it, fresh] = acc.emplace(std::move(word), coeff);
    if (!fresh)
        it->second += coeff;
}

inline NaiveTerms naive_product(const Multivector& a, const Multivector& b) {
    NaiveTerms acc;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            std::vector<int> word = ba.indices();
            std::vector<int> tail = bb.indices();
            word.insert(word.end(), tail.begin(), tail.end());
            naive_accumulate(acc, std::move(word), ca * cb, a.signature());
        }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

inline bool naive_equal(const Multivector& product, const NaiveTerms& expected) {
    NaiveTerms got = naive_terms(product);
    return got == expected;
}

}  // namespace testsupport

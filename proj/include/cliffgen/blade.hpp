#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffgen/signature.hpp"

namespace cliffgen {

/// Canonical basis monomial gamma_{i1...ik}, i1 < ... < ik, encoded as an
/// n-bit mask (bit t set <=> index t+1 present). The empty mask is the scalar
/// unit.
struct Blade {
    std::uint32_t mask = 0;

    Blade() = default;
    explicit Blade(std::uint32_t m) : mask(m) {}

    static Blade from_indices(std::initializer_list<int> idx) {
        return from_indices(std::vector<int>(idx));
    }
    static Blade from_indices(const std::vector<int>& idx) {
        std::uint32_t m = 0;
        for (int i : idx) {
            if (i < 1 || i > 32)
                throw std::out_of_range("Blade: index " + std::to_string(i));
            std::uint32_t bit = 1u << (i - 1);
            if (m & bit)
                throw std::invalid_argument("Blade: repeated index " + std::to_string(i));
            m |= bit;
        }
        return Blade(m);
    }

    int grade() const { return std::popcount(mask); }
    bool is_scalar() const { return mask == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint32_t m = mask; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    bool valid_for(const Signature& sig) const {
        return sig.n() >= 32 || (mask >> sig.n()) == 0;
    }

    bool operator==(const Blade& o) const { return mask == o.mask; }
    bool operator!=(const Blade& o) const { return mask != o.mask; }

    /// "1" for the scalar, otherwise "g" + index characters (1-9, then a-g
    /// for indices 10..16 so that names stay unambiguous).
    std::string name() const {
        if (mask == 0)
            return "1";
        std::string s = "g";
        for (int i : indices())
            s += index_char(i);
        return s;
    }

    static char index_char(int i) { return i <= 9 ? char('0' + i) : char('a' + i - 10); }
    static int char_index(char c) {
        if (c >= '1' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'g')
            return c - 'a' + 10;
        return 0;
    }
};

/// Grade-then-lexicographic order on ascending index tuples; this is the
/// canonical basis order used everywhere (emission, basis listings).
inline bool canonical_less(Blade a, Blade b) {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb)
        return ga < gb;
    std::uint32_t x = a.mask, y = b.mask;
    while (x && y) {
        int ix = std::countr_zero(x), iy = std::countr_zero(y);
        if (ix != iy)
            return ix < iy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

struct SignedBlade {
    int sign = 1;  // +1 or -1
    Blade blade;
};

/// Product of two canonical monomials: the result blade is the symmetric
/// difference of the index sets; the sign collects one transposition for each
/// pair (i in a, j in b) with i > j, and a metric factor for every repeated
/// index.
inline SignedBlade blade_product(Blade a, Blade b, const Signature& sig) {
    if (!a.valid_for(sig) || !b.valid_for(sig))
        throw std::out_of_range("blade_product: blade index outside 1.." +
                                std::to_string(sig.n()));
    int swaps = 0;
    for (std::uint32_t m = b.mask; m; m &= m - 1) {
        int j = std::countr_zero(m);  // 0-based position of an index of b
        swaps += std::popcount(a.mask >> (j + 1));
    }
    int sign = (swaps & 1) ? -1 : 1;
    std::uint32_t common = a.mask & b.mask;
    if (sig.q > 0) {
        // only indices > p contribute -1 squares
        std::uint32_t neg = common >> sig.p;
        if (std::popcount(neg) & 1)
            sign = -sign;
    }
    return {sign, Blade(a.mask ^ b.mask)};
}

/// All 2^n subsets of {1..n} in the canonical grade-then-lex order.
inline std::vector<Blade> canonical_basis(const Signature& sig) {
    std::vector<Blade> out;
    out.reserve(std::size_t(1) << sig.n());
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << sig.n()); ++m)
        out.emplace_back(static_cast<std::uint32_t>(m));
    std::sort(out.begin(), out.end(), [](Blade x, Blade y) { return canonical_less(x, y); });
    return out;
}

}  // namespace cliffgen

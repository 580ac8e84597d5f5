#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "cliffgen/linalg.hpp"
#include "cliffgen/scalars.hpp"

namespace cliffgen {

/// Octonion or split octonion as a doubled pair of exact quaternions:
/// value = a + b*eps with eps^2 = -1 (octonions) or +1 (split).
struct Octonion {
    ExactQuaternion a, b;
    bool split = false;

    Octonion() = default;
    Octonion(ExactQuaternion a_, ExactQuaternion b_, bool split_ = false)
        : a(std::move(a_)), b(std::move(b_)), split(split_) {}

    static Octonion unit(bool split = false) { return {{1, 0, 0, 0}, {}, split}; }
    /// Basis element 0..7 in the fixed order (1, i, j, k, eps, i eps, j eps, k eps).
    static Octonion basis(int index, bool split = false) {
        if (index < 0 || index > 7)
            throw std::out_of_range("Octonion::basis: index 0..7");
        ExactQuaternion lo, hi;
        ExactQuaternion* half = index < 4 ? &lo : &hi;
        switch (index % 4) {
            case 0: half->a = Dyadic(1); break;
            case 1: half->b = Dyadic(1); break;
            case 2: half->c = Dyadic(1); break;
            case 3: half->d = Dyadic(1); break;
        }
        return {lo, hi, split};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    std::array<Dyadic, 8> components() const {
        return {a.a, a.b, a.c, a.d, b.a, b.b, b.c, b.d};
    }

    Octonion operator+(const Octonion& o) const {
        check(o);
        return {a + o.a, b + o.b, split};
    }
    Octonion operator-(const Octonion& o) const {
        check(o);
        return {a - o.a, b - o.b, split};
    }
    Octonion operator-() const { return {-a, -b, split}; }
    Octonion scaled(const Dyadic& s) const { return {a.scaled(s), b.scaled(s), split}; }

    bool operator==(const Octonion& o) const { return split == o.split && a == o.a && b == o.b; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    std::string str() const {
        static constexpr const char* names[8] = {"", "i", "j", "k", "l", "il", "jl", "kl"};
        static constexpr const char* split_names[8] = {"",   "i",   "j",   "k",
                                                       "e",  "ie",  "je",  "ke"};
        auto comps = components();
        std::string out;
        for (int t = 0; t < 8; ++t) {
            if (comps[t].is_zero())
                continue;
            std::string c = comps[t].str();
            if (!out.empty() && c[0] != '-')
                out += "+";
            const char* sym = split ? split_names[t] : names[t];
            if (sym[0] != '\0' && (c == "1" || c == "-1"))
                c = c == "1" ? "" : "-";
            out += c + sym;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const Octonion& o) const {
        if (split != o.split)
            throw std::invalid_argument("Octonion: mixing split and non-split values");
    }
};

/// Cayley-Dickson doubled product:
/// (x + y eps)(z + w eps) = (xz - conj(w) y) + (wx + y conj(z)) eps for the
/// octonions, with + instead of - in the first component for the split form.
inline Octonion cd_multiply(const Octonion& x, const Octonion& y) {
    if (x.split != y.split)
        throw std::invalid_argument("cd_multiply: mixing split and non-split values");
    ExactQuaternion first = quat_mul(x.a, y.a);
    ExactQuaternion twist = quat_mul(quat_conj(y.b), x.b);
    first = x.split ? first + twist : first - twist;
    ExactQuaternion second = quat_mul(y.b, x.a) + quat_mul(x.b, quat_conj(y.a));
    return {first, second, x.split};
}

inline Octonion oct_conj(const Octonion& x) { return {quat_conj(x.a), -x.b, x.split}; }

/// Norm form: ||a + b eps|| = ||a|| + ||b|| (octonions), ||a|| - ||b|| (split).
inline Dyadic oct_norm(const Octonion& x) {
    Dyadic n = quat_norm_sq(x.a);
    return x.split ? n - quat_norm_sq(x.b) : n + quat_norm_sq(x.b);
}

/// x^{-1} = conj(x)/N(x); split octonions have null vectors, which (like any
/// non-dyadic-unit norm) are rejected.
inline Octonion oct_inverse(const Octonion& x) {
    Dyadic n = oct_norm(x);
    if (n.is_zero())
        throw std::domain_error("oct_inverse: null norm");
    return oct_conj(x).scaled(n.inverse());
}

/// Entry of the 7x7 imaginary-unit multiplication table: +-1 scalar or a
/// signed basis unit.
struct CayleyEntry {
    int sign = 1;
    int unit = 0;  // 0 = scalar 1, else basis index 1..7

    bool operator==(const CayleyEntry& o) const { return sign == o.sign && unit == o.unit; }
    std::string str(bool split) const {
        std::string body = unit == 0 ? "1" : Octonion::basis(unit, split).str();
        return (sign < 0 ? "-" : "") + body;
    }
};

/// Products of the seven imaginary units, regenerated from cd_multiply —
/// never hand-coded.
inline std::array<std::array<CayleyEntry, 7>, 7> cayley_table(bool split) {
    std::array<std::array<CayleyEntry, 7>, 7> table{};
    for (int r = 1; r <= 7; ++r)
        for (int c = 1; c <= 7; ++c) {
            Octonion prod = cd_multiply(Octonion::basis(r, split), Octonion::basis(c, split));
            auto comps = prod.components();
            CayleyEntry entry;
            int nonzero = 0;
            for (int t = 0; t < 8; ++t) {
                if (comps[t].is_zero())
                    continue;
                ++nonzero;
                entry.unit = t;
                if (comps[t] == Dyadic(1))
                    entry.sign = 1;
                else if (comps[t] == Dyadic(-1))
                    entry.sign = -1;
                else
                    throw std::logic_error("cayley_table: non-unit product component");
            }
            if (nonzero != 1)
                throw std::logic_error("cayley_table: unit product is not a signed unit");
            table[r - 1][c - 1] = entry;
        }
    return table;
}

/// 8x8 matrix of y -> x*y in the ordered basis (1,i,j,k,eps,i eps,j eps,k eps).
inline DyadicMatrix left_mult_matrix(const Octonion& x) {
    DyadicMatrix m(8, 8);
    for (int c = 0; c < 8; ++c) {
        Octonion col = cd_multiply(x, Octonion::basis(c, x.split));
        auto comps = col.components();
        for (int r = 0; r < 8; ++r)
            m.at(r, c) = comps[r];
    }
    return m;
}

}  // namespace cliffgen

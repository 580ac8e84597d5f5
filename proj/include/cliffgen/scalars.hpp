#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <variant>

#include "cliffgen/dyadic.hpp"

namespace cliffgen {

/// re + im*i with exact dyadic components.
struct ExactComplex {
    Dyadic re, im;

    ExactComplex() = default;
    ExactComplex(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

    static ExactComplex unit_i() { return {Dyadic(0), Dyadic(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
    ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
    ExactComplex operator-() const { return {-re, -im}; }
    ExactComplex operator*(const ExactComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }

    ExactComplex conj() const { return {re, -im}; }
    Dyadic norm_sq() const { return re * re + im * im; }
};

/// a + b*i + c*j + d*k with exact dyadic components and the Hamilton product.
struct ExactQuaternion {
    Dyadic a, b, c, d;

    ExactQuaternion() = default;
    ExactQuaternion(Dyadic a_, Dyadic b_, Dyadic c_, Dyadic d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static ExactQuaternion unit_i() { return {0, 1, 0, 0}; }
    static ExactQuaternion unit_j() { return {0, 0, 1, 0}; }
    static ExactQuaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_real() const { return b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_imaginary() const { return a.is_zero(); }

    ExactQuaternion operator+(const ExactQuaternion& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    ExactQuaternion operator-(const ExactQuaternion& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }
    ExactQuaternion operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const ExactQuaternion& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    ExactQuaternion scaled(const Dyadic& s) const { return {a * s, b * s, c * s, d * s}; }
};

/// Hamilton product: ij=k, jk=i, ki=j and squares -1.
inline ExactQuaternion quat_mul(const ExactQuaternion& x, const ExactQuaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

inline ExactQuaternion quat_conj(const ExactQuaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

inline Dyadic quat_norm_sq(const ExactQuaternion& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

/// q^{-1} = conj(q)/||q||^2. Only unit-like quaternions (norm a power of two)
/// stay inside Z[1/2]; anything else is rejected.
inline ExactQuaternion quat_inverse(const ExactQuaternion& q) {
    if (q.is_zero())
        throw std::domain_error("quat_inverse: zero quaternion");
    Dyadic n = quat_norm_sq(q);
    Dyadic inv = n.inverse();  // throws when the norm is not a power of two
    return quat_conj(q).scaled(inv);
}

/// Main involution q^ = -jqj: fixes 1 and j, negates i and k.
inline ExactQuaternion quat_main_involution(const ExactQuaternion& q) {
    return {q.a, -q.b, q.c, -q.d};
}

/// Reversion = conjugation of the main involution: fixes 1, i, k; negates j.
inline ExactQuaternion quat_reversion(const ExactQuaternion& q) {
    return {q.a, q.b, -q.c, q.d};
}

/// The three scalar rings matrix entries live in.
enum class Ring { real, complex, quaternion };

inline const char* ring_name(Ring r) {
    switch (r) {
        case Ring::real: return "R";
        case Ring::complex: return "C";
        case Ring::quaternion: return "H";
    }
    return "?";
}

/// Tagged exact scalar. Arithmetic never mixes tags.
class RingScalar {
public:
    RingScalar() : v_(Dyadic()) {}
    explicit RingScalar(Dyadic d) : v_(std::move(d)) {}
    explicit RingScalar(ExactComplex z) : v_(std::move(z)) {}
    explicit RingScalar(ExactQuaternion q) : v_(std::move(q)) {}

    static RingScalar zero(Ring r) {
        switch (r) {
            case Ring::real: return RingScalar(Dyadic(0));
            case Ring::complex: return RingScalar(ExactComplex{});
            case Ring::quaternion: return RingScalar(ExactQuaternion{});
        }
        throw std::logic_error("RingScalar::zero");
    }
    static RingScalar one(Ring r) {
        switch (r) {
            case Ring::real: return RingScalar(Dyadic(1));
            case Ring::complex: return RingScalar(ExactComplex{Dyadic(1), Dyadic(0)});
            case Ring::quaternion: return RingScalar(ExactQuaternion{1, 0, 0, 0});
        }
        throw std::logic_error("RingScalar::one");
    }

    Ring ring() const { return static_cast<Ring>(v_.index()); }
    const Dyadic& real() const { return std::get<Dyadic>(v_); }
    const ExactComplex& complex() const { return std::get<ExactComplex>(v_); }
    const ExactQuaternion& quaternion() const { return std::get<ExactQuaternion>(v_); }

    bool is_zero() const {
        switch (ring()) {
            case Ring::real: return real().is_zero();
            case Ring::complex: return complex().is_zero();
            case Ring::quaternion: return quaternion().is_zero();
        }
        return false;
    }

    RingScalar operator+(const RingScalar& o) const {
        check(o);
        switch (ring()) {
            case Ring::real: return RingScalar(real() + o.real());
            case Ring::complex: return RingScalar(complex() + o.complex());
            case Ring::quaternion: return RingScalar(quaternion() + o.quaternion());
        }
        throw std::logic_error("RingScalar::+");
    }
    RingScalar operator-() const {
        switch (ring()) {
            case Ring::real: return RingScalar(-real());
            case Ring::complex: return RingScalar(-complex());
            case Ring::quaternion: return RingScalar(-quaternion());
        }
        throw std::logic_error("RingScalar::-");
    }
    RingScalar operator-(const RingScalar& o) const { return *this + (-o); }
    RingScalar operator*(const RingScalar& o) const {
        check(o);
        switch (ring()) {
            case Ring::real: return RingScalar(real() * o.real());
            case Ring::complex: return RingScalar(complex() * o.complex());
            case Ring::quaternion: return RingScalar(quat_mul(quaternion(), o.quaternion()));
        }
        throw std::logic_error("RingScalar::*");
    }
    bool operator==(const RingScalar& o) const {
        if (ring() != o.ring())
            return false;
        switch (ring()) {
            case Ring::real: return real() == o.real();
            case Ring::complex: return complex() == o.complex();
            case Ring::quaternion: return quaternion() == o.quaternion();
        }
        return false;
    }
    bool operator!=(const RingScalar& o) const { return !(*this == o); }

    /// Spinor-representation entries only ever land in {0, +-1, +-i, +-j, +-k}.
    bool in_unit_alphabet() const {
        auto unit_component = [](const Dyadic& x) { return x.is_zero() || x == Dyadic(1) || x == Dyadic(-1); };
        switch (ring()) {
            case Ring::real: return unit_component(real());
            case Ring::complex: {
                const auto& z = complex();
                int nz = !z.re.is_zero() + !z.im.is_zero();
                return nz <= 1 && unit_component(z.re) && unit_component(z.im);
            }
            case Ring::quaternion: {
                const auto& q = quaternion();
                int nz = !q.a.is_zero() + !q.b.is_zero() + !q.c.is_zero() + !q.d.is_zero();
                return nz <= 1 && unit_component(q.a) && unit_component(q.b) &&
                       unit_component(q.c) && unit_component(q.d);
            }
        }
        return false;
    }

    /// Compact human form, e.g. "0", "-1", "i", "-k", "1+2i".
    std::string str() const {
        switch (ring()) {
            case Ring::real: return real().str();
            case Ring::complex: {
                const auto& z = complex();
                return basis_text({{z.re, ""}, {z.im, "i"}});
            }
            case Ring::quaternion: {
                const auto& q = quaternion();
                return basis_text({{q.a, ""}, {q.b, "i"}, {q.c, "j"}, {q.d, "k"}});
            }
        }
        return "?";
    }

private:
    void check(const RingScalar& o) const {
        if (ring() != o.ring())
            throw std::invalid_argument("RingScalar: mixed ring arithmetic (" +
                                        std::string(ring_name(ring())) + " vs " +
                                        std::string(ring_name(o.ring())) + ")");
    }

    static std::string basis_text(std::initializer_list<std::pair<Dyadic, const char*>> parts) {
        std::string out;
        for (const auto& [coeff, sym] : parts) {
            if (coeff.is_zero())
                continue;
            std::string c = coeff.str();
            if (!out.empty() && c[0] != '-')
                out += "+";
            if (sym[0] != '\0' && (c == "1" || c == "-1"))
                c = c == "1" ? "" : "-";
            out += c + sym;
        }
        return out.empty() ? "0" : out;
    }

    std::variant<Dyadic, ExactComplex, ExactQuaternion> v_;
};

}  // namespace cliffgen

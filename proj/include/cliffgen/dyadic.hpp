#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffgen {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[1/2], stored reduced: numerator odd (or zero) whenever
/// the denominator exponent is positive. Every coefficient in the library is
/// one of these; there is no floating point anywhere.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : num_(n) {}
    Dyadic(BigInt n) : num_(std::move(n)) {}
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

    // 1/2^e
    static Dyadic half_pow(unsigned e) { return Dyadic(BigInt(1), e); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Dyadic operator-() const { return Dyadic(-num_, exp_, NoNormalize{}); }

    Dyadic operator+(const Dyadic& o) const {
        unsigned e = std::max(exp_, o.exp_);
        BigInt a = num_ << (e - exp_);
        BigInt b = o.num_ << (e - o.exp_);
        return Dyadic(a + b, e);
    }
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    /// Multiplicative inverse. Exists in Z[1/2] only when |numerator| is a
    /// power of two; anything else throws.
    Dyadic inverse() const {
        if (num_ == 0)
            throw std::domain_error("Dyadic::inverse: zero");
        BigInt a = num_ < 0 ? BigInt(-num_) : num_;
        if ((a & (a - 1)) != 0)
            throw std::domain_error("Dyadic::inverse: " + str() + " is not a unit of Z[1/2]");
        unsigned j = lsb_index(a);
        // value = sign * 2^(j - exp_); inverse = sign * 2^(exp_ - j)
        long long net = static_cast<long long>(exp_) - static_cast<long long>(j);
        int s = num_ < 0 ? -1 : 1;
        if (net >= 0)
            return Dyadic(BigInt(s) << static_cast<unsigned>(net));
        return Dyadic(BigInt(s), static_cast<unsigned>(-net));
    }

    /// Exact division, defined only when the quotient stays in Z[1/2].
    std::optional<Dyadic> divide_exact(const Dyadic& d) const {
        if (d.num_ == 0)
            return std::nullopt;
        if (num_ == 0)
            return Dyadic();
        BigInt n = num_;
        BigInt m = d.num_;
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(n),
                                              boost::multiprecision::abs(m));
        n /= g;
        m /= g;
        if (m < 0) {
            n = -n;
            m = -m;
        }
        if ((m & (m - 1)) != 0)
            return std::nullopt;  // residual odd factor in the denominator
        unsigned j = lsb_index(m);
        long long net = static_cast<long long>(exp_) + static_cast<long long>(j) -
                        static_cast<long long>(d.exp_);
        if (net >= 0)
            return Dyadic(std::move(n), static_cast<unsigned>(net));
        return Dyadic(n << static_cast<unsigned>(-net));
    }

    /// "3/4" for non-integers, plain integer text otherwise.
    std::string str() const {
        if (exp_ == 0)
            return num_.str();
        return num_.str() + "/" + (BigInt(1) << exp_).str();
    }

    static std::optional<Dyadic> parse(std::string_view s) {
        if (s.empty())
            return std::nullopt;
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        BigInt num = 0, den = 0;
        bool any = false, in_den = false;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == '/') {
                if (in_den || !any)
                    return std::nullopt;
                in_den = true;
                any = false;
                continue;
            }
            if (c < '0' || c > '9')
                return std::nullopt;
            any = true;
            (in_den ? den : num) = (in_den ? den : num) * 10 + (c - '0');
        }
        if (!any)
            return std::nullopt;
        if (!in_den)
            den = 1;
        if (den <= 0 || (den & (den - 1)) != 0)
            return std::nullopt;
        return Dyadic(neg ? -num : num, lsb_index(den));
    }

private:
    struct NoNormalize {};
    Dyadic(BigInt n, unsigned e, NoNormalize) : num_(std::move(n)), exp_(e) {}

    static unsigned lsb_index(const BigInt& v) {
        unsigned j = 0;
        BigInt t = v;
        while ((t & 1) == 0) {
            t >>= 1;
            ++j;
        }
        return j;
    }

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

}  // namespace cliffgen

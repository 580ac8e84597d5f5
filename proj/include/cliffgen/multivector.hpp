#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffgen/blade.hpp"
#include "cliffgen/dyadic.hpp"
#include "cliffgen/signature.hpp"

namespace cliffgen {

/// Exact sparse element of Cl_{p,q}: a dyadic linear combination of canonical
/// blades. Immutable in spirit — every operation returns a fresh value.
class Multivector {
public:
    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector zero(Signature sig) { return Multivector(sig); }
    static Multivector scalar(Signature sig, Dyadic c) {
        Multivector m(sig);
        if (!c.is_zero())
            m.terms_.emplace_back(Blade(), std::move(c));
        return m;
    }
    static Multivector unit(Signature sig) { return scalar(sig, Dyadic(1)); }
    static Multivector from_blade(Signature sig, Blade b, Dyadic c = Dyadic(1)) {
        if (!b.valid_for(sig))
            throw std::out_of_range("Multivector: blade " + b.name() + " not valid for " +
                                    sig.str());
        Multivector m(sig);
        if (!c.is_zero())
            m.terms_.emplace_back(b, std::move(c));
        return m;
    }
    static Multivector generator(Signature sig, int i) {
        return from_blade(sig, Blade::from_indices({i}));
    }

    const Signature& signature() const { return sig_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Terms in canonical (grade-then-lex) order.
    const std::vector<std::pair<Blade, Dyadic>>& terms() const { return terms_; }

    Dyadic coefficient(Blade b) const {
        for (const auto& [bl, c] : terms_)
            if (bl == b)
                return c;
        return Dyadic(0);
    }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_scalar());
    }
    Dyadic scalar_part() const { return coefficient(Blade()); }

    Multivector operator-() const {
        Multivector r(sig_);
        r.terms_.reserve(terms_.size());
        for (const auto& [b, c] : terms_)
            r.terms_.emplace_back(b, -c);
        return r;
    }

    Multivector operator+(const Multivector& o) const {
        check_signature(o);
        Multivector r(sig_);
        std::map<std::uint32_t, Dyadic> acc;
        for (const auto& [b, c] : terms_)
            acc[b.mask] = c;
        for (const auto& [b, c] : o.terms_) {
            auto [it, fresh] = acc.emplace(b.mask, c);
            if (!fresh)
                it->second += c;
        }
        r.assign(acc);
        return r;
    }
    Multivector operator-(const Multivector& o) const { return *this + (-o); }

    Multivector scaled(const Dyadic& s) const {
        Multivector r(sig_);
        if (s.is_zero())
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [b, c] : terms_)
            r.terms_.emplace_back(b, c * s);
        return r;
    }

    /// Geometric product: bilinear extension of blade_product.
    Multivector operator*(const Multivector& o) const {
        check_signature(o);
        std::map<std::uint32_t, Dyadic> acc;
        for (const auto& [ba, ca] : terms_) {
            for (const auto& [bb, cb] : o.terms_) {
                SignedBlade sb = blade_product(ba, bb, sig_);
                Dyadic c = ca * cb;
                if (sb.sign < 0)
                    c = -c;
                auto [it, fresh] = acc.emplace(sb.blade.mask, c);
                if (!fresh)
                    it->second += c;
            }
        }
        Multivector r(sig_);
        r.assign(acc);
        return r;
    }

    bool operator==(const Multivector& o) const {
        return sig_ == o.sig_ && terms_ == o.terms_;
    }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    /// Keep only the grade-k terms; out-of-range k yields zero.
    Multivector grade_project(int k) const {
        Multivector r(sig_);
        for (const auto& [b, c] : terms_)
            if (b.grade() == k)
                r.terms_.emplace_back(b, c);
        return r;
    }

    /// Scale each grade-r term by f(r); kept exact (f returns +-1).
    Multivector grade_map(int (*f)(int)) const {
        Multivector r(sig_);
        r.terms_.reserve(terms_.size());
        for (const auto& [b, c] : terms_) {
            int s = f(b.grade());
            r.terms_.emplace_back(b, s < 0 ? -c : c);
        }
        return r;
    }

    /// Textual form, e.g. "1/2 + 1/2 g124", "g1 - g2", "0".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [b, c] : terms_) {
            bool neg = c.sign() < 0;
            Dyadic mag = neg ? -c : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (b.is_scalar())
                out += mag.str();
            else if (mag.is_one())
                out += b.name();
            else
                out += mag.str() + " " + b.name();
        }
        return out;
    }

    /// Parse the textual form back; inverse of str() and tolerant of spacing.
    static Multivector parse(Signature sig, std::string_view text) {
        std::map<std::uint32_t, Dyadic> acc;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
                ++i;
        };
        skip_ws();
        if (i == text.size())
            throw std::invalid_argument("Multivector::parse: empty input");
        bool first = true;
        while (i < text.size()) {
            skip_ws();
            if (i == text.size())
                break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("Multivector::parse: expected '+' or '-'");
            }
            first = false;
            // optional coefficient
            std::size_t start = i;
            while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/'))
                ++i;
            Dyadic coeff(1);
            bool have_coeff = i > start;
            if (have_coeff) {
                auto parsed = Dyadic::parse(text.substr(start, i - start));
                if (!parsed)
                    throw std::invalid_argument("Multivector::parse: bad coefficient '" +
                                                std::string(text.substr(start, i - start)) + "'");
                coeff = *parsed;
            }
            skip_ws();
            Blade blade;
            if (i < text.size() && text[i] == 'g') {
                ++i;
                std::vector<int> idx;
                while (i < text.size()) {
                    int v = Blade::char_index(text[i]);
                    if (v == 0)
                        break;
                    idx.push_back(v);
                    ++i;
                }
                if (idx.empty())
                    throw std::invalid_argument("Multivector::parse: dangling 'g'");
                blade = Blade::from_indices(idx);
                if (!blade.valid_for(sig))
                    throw std::out_of_range("Multivector::parse: blade " + blade.name() +
                                            " not valid for " + sig.str());
            } else if (!have_coeff) {
                // allow a literal scalar "1" handled above; "1" parses as coefficient
                throw std::invalid_argument("Multivector::parse: expected term");
            }
            if (sign < 0)
                coeff = -coeff;
            auto [it, fresh] = acc.emplace(blade.mask, coeff);
            if (!fresh)
                it->second += coeff;
            skip_ws();
        }
        Multivector r(sig);
        r.assign(acc);
        return r;
    }

private:
    void check_signature(const Multivector& o) const {
        if (sig_ != o.sig_)
            throw std::invalid_argument("Multivector: signature mismatch " + sig_.str() +
                                        " vs " + o.sig_.str());
    }

    void assign(const std::map<std::uint32_t, Dyadic>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (const auto& [mask, c] : acc)
            if (!c.is_zero())
                terms_.emplace_back(Blade(mask), c);
        std::sort(terms_.begin(), terms_.end(),
                  [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    }

    Signature sig_;
    std::vector<std::pair<Blade, Dyadic>> terms_;  // canonical order, no zero coefficients
};

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
    return a * b;
}

inline Multivector grade_project(const Multivector& a, int k) { return a.grade_project(k); }

}  // namespace cliffgen

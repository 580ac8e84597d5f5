#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cliffgen {

/// Hard cap on p+q. 2^n terms bound the memory of dense operations; the
/// default of 16 can be lowered or raised through CLIFFGEN_MAX_N.
inline int max_dimension() {
    static const int cap = [] {
        if (const char* env = std::getenv("CLIFFGEN_MAX_N")) {
            int v = std::atoi(env);
            if (v > 0 && v <= 24)
                return v;
        }
        return 16;
    }();
    return cap;
}

/// Quadratic-space signature (p,q): the first p generators square to +1, the
/// remaining q to -1, under the diagonal bilinear form B.
struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0)
            throw std::invalid_argument("Signature: p and q must be non-negative");
        if (p + q > max_dimension())
            throw std::invalid_argument("Signature: p+q=" + std::to_string(p + q) +
                                        " exceeds the dimension cap " +
                                        std::to_string(max_dimension()));
    }

    int n() const { return p + q; }

    /// B(e_i, e_i) for 1-based index i.
    int metric(int i) const {
        if (i < 1 || i > n())
            throw std::out_of_range("Signature::metric: index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n()));
        return i <= p ? 1 : -1;
    }

    bool operator==(const Signature& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

}  // namespace cliffgen

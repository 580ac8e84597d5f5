#pragma once

#include <stdexcept>
#include <string>

#include "cliffgen/scalars.hpp"
#include "cliffgen/signature.hpp"

namespace cliffgen {

/// Matrix-algebra shape of Cl_{p,q}: a (possibly doubled) matrix ring over
/// R, C or H, fixed by q-p mod 8.
enum class RingKind { R, C, H, RplusR, HplusH };

inline const char* ring_kind_name(RingKind k) {
    switch (k) {
        case RingKind::R: return "R";
        case RingKind::C: return "C";
        case RingKind::H: return "H";
        case RingKind::RplusR: return "R+R";
        case RingKind::HplusH: return "H+H";
    }
    return "?";
}

/// Division ring E = F Cl F the spinor space is a right module over.
inline Ring division_ring(RingKind k) {
    switch (k) {
        case RingKind::R:
        case RingKind::RplusR: return Ring::real;
        case RingKind::C: return Ring::complex;
        case RingKind::H:
        case RingKind::HplusH: return Ring::quaternion;
    }
    throw std::logic_error("division_ring");
}

inline int ring_real_dim(Ring r) {
    switch (r) {
        case Ring::real: return 1;
        case Ring::complex: return 2;
        case Ring::quaternion: return 4;
    }
    return 0;
}

struct CliffordClass {
    RingKind ring = RingKind::R;
    int matrix_dim = 1;
    bool semisimple = false;
    int residue = 0;  // (q-p) mod 8

    std::string spinor_space_name() const {
        Ring d = division_ring(ring);
        std::string one = std::string(ring_name(d)) +
                          (matrix_dim > 1 ? "^" + std::to_string(matrix_dim) : "");
        return semisimple ? one + "+" + one : one;
    }
};

/// Mod-8 classification of Cl_{p,q}.
inline CliffordClass classify(const Signature& sig) {
    const int n = sig.n();
    const int res = ((sig.q - sig.p) % 8 + 8) % 8;
    CliffordClass c;
    c.residue = res;
    switch (res) {
        case 0:
        case 6:
            c.ring = RingKind::R;
            c.matrix_dim = 1 << (n / 2);
            break;
        case 1:
        case 5:
            c.ring = RingKind::C;
            c.matrix_dim = 1 << ((n - 1) / 2);
            break;
        case 2:
        case 4:
            c.ring = RingKind::H;
            c.matrix_dim = 1 << ((n - 2) / 2);
            break;
        case 3:
            c.ring = RingKind::HplusH;
            c.matrix_dim = 1 << ((n - 3) / 2);
            c.semisimple = true;
            break;
        case 7:
            c.ring = RingKind::RplusR;
            c.matrix_dim = 1 << ((n - 1) / 2);
            c.semisimple = true;
            break;
    }
    // real-dimension accounting must come out at 2^n exactly
    long long total = 1LL * ring_real_dim(division_ring(c.ring)) * c.matrix_dim * c.matrix_dim *
                      (c.semisimple ? 2 : 1);
    if (total != (1LL << n))
        throw std::logic_error("classify" + sig.str() + ": dimension accounting failed");
    return c;
}

}  // namespace cliffgen

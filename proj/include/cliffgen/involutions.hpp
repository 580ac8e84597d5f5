#pragma once

#include "cliffgen/multivector.hpp"

namespace cliffgen {

/// Principal (grade) involution: grade-r terms pick up (-1)^r. Algebra
/// automorphism; fixes the even part.
inline Multivector grade_involution(const Multivector& a) {
    return a.grade_map([](int r) { return (r & 1) ? -1 : 1; });
}

/// Reversion: grade-r terms pick up (-1)^{r(r-1)/2}. Anti-automorphism.
inline Multivector reversion(const Multivector& a) {
    return a.grade_map([](int r) { return (r * (r - 1) / 2) & 1 ? -1 : 1; });
}

/// Conjugation = grade_involution o reversion: (-1)^{r(r+1)/2} per grade.
inline Multivector conjugation(const Multivector& a) {
    return a.grade_map([](int r) { return (r * (r + 1) / 2) & 1 ? -1 : 1; });
}

/// Quadratic norm ||a|| = conj(a) * a. Returned as a multivector: for general
/// elements it need not be scalar; callers that need scalarity enforce it.
inline Multivector quadratic_norm(const Multivector& a) { return conjugation(a) * a; }

inline bool is_even(const Multivector& a) { return grade_involution(a) == a; }

}  // namespace cliffgen

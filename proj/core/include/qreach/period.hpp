#pragma once

#include <vector>

#include "qreach/poly.hpp"
#include "qreach/subspace.hpp"

namespace qreach {

struct PeriodResult {
    // lcm of the witness orders; any subspace fixed by some power of the
    // unitary is fixed by its p-th power.
    unsigned long p;
    // orders n whose cyclotomic polynomial divides the quotient polynomial
    std::vector<unsigned> witnesses;
};

// Period of the unitary N/sqrt(s). Roots of charPoly(N ⊗ N†) are
// s·(λ/μ) over eigenvalue pairs of the unitary, so the substitution
// g(y) = h(s·y) recovers the quotients without leaving Q(i). Candidates
// are all n ≤ 2·d^4 with φ(n) ≤ d².
PeriodResult period(const ScaledOperator& t);

}  // namespace qreach

#include "qreach/period.hpp"

#include <numeric>

namespace qreach {

PeriodResult period(const ScaledOperator& t) {
    const std::size_t d = t.ambientDim();
    // Eigenvalues of N ⊗ N† are s·(λ/μ) over eigenvalue pairs λ, μ of the
    // unitary N/sqrt(s); substituting x -> s·y recovers the quotients.
    Poly h = charPoly(t.matrix().kron(t.matrix().conjTranspose()));
    Poly g = h.substituteScaledArg(t.scale());

    // A quotient of order n is a primitive nth root of unity, so Φ_n | g
    // and φ(n) ≤ deg g = d². The totient bound φ(n) ≥ sqrt(n/2) caps the
    // candidate range at 2·d^4.
    const unsigned degreeCap = static_cast<unsigned>(d * d);
    const unsigned maxN = 2 * degreeCap * degreeCap;
    std::vector<unsigned> phi = totientSieve(maxN);

    PeriodResult result{1, {}};
    for (unsigned n = 1; n <= maxN; ++n) {
        if (phi[n] > degreeCap) continue;
        if (!dividesExactly(cyclotomic(n), g)) continue;
        result.witnesses.push_back(n);
        result.p = std::lcm(result.p, static_cast<unsigned long>(n));
    }
    return result;
}

}  // namespace qreach

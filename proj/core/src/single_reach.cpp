#include "qreach/single_reach.hpp"

#include <stdexcept>

namespace qreach {

Subspace invariantCoreWithPeriod(const ScaledOperator& t, const Subspace& v, unsigned long p) {
    if (t.ambientDim() != v.ambientDim())
        throw std::invalid_argument("invariant core: dimension mismatch");
    const ScaledOperator tp = t.pow(p);
    Subspace k = v;
    for (;;) {
        Subspace next = intersect(k, tp.image(k));
        if (next == k) return k;
        k = std::move(next);
    }
}

InvariantCore invariantCore(const ScaledOperator& t, const Subspace& v) {
    unsigned long p = period(t).p;
    return {invariantCoreWithPeriod(t, v, p), p};
}

UnionSpace ySingle(const ScaledOperator& t, const Subspace& v) {
    auto [k, p] = invariantCore(t, v);
    std::vector<Subspace> members;
    Subspace current = k;
    for (unsigned long r = 0; r < p; ++r) {
        members.push_back(current);
        current = t.image(current);
    }
    return UnionSpace::prune(t.ambientDim(), std::move(members));
}

ZeroSetClass classifyZeroSet(const CVector& u, const ScaledOperator& m, const CVector& v,
                             unsigned long emptinessBound) {
    if (isZero(u) || isZero(v))
        throw std::invalid_argument("classifyZeroSet: u and v must be nonzero");
    if (u.size() != m.ambientDim() || v.size() != m.ambientDim())
        throw std::invalid_argument("classifyZeroSet: dimension mismatch");
    const std::size_t d = m.ambientDim();

    // b_n = u^T N^n v vanishes iff a_n does (the sqrt(s) scale is a
    // nonzero factor). The sequence obeys a recurrence of order ≤ d, so
    // Z = N iff the first d terms vanish; and M is invertible, so a zero
    // tail propagates backward, collapsing "cofinite" into "all".
    {
        CVector x = v;
        bool allZero = true;
        for (std::size_t n = 0; n < d && allZero; ++n) {
            if (!dotUnconjugated(u, x).isZero()) allZero = false;
            x = m.apply(x);
        }
        if (allZero) return {ZeroSetClass::Kind::All};
    }

    if (ySingle(m, kernelOfRowFunctional(u)).containsVector(v))
        return {ZeroSetClass::Kind::Infinite};

    // Z is finite; emptiness in general is open, so only a bounded sweep.
    CVector x = v;
    for (unsigned long n = 0; n <= emptinessBound; ++n) {
        if (dotUnconjugated(u, x).isZero())
            return {ZeroSetClass::Kind::FiniteNonemptyWitnessed, n, emptinessBound};
        x = m.apply(x);
    }
    return {ZeroSetClass::Kind::FiniteEmptyUpTo, 0, emptinessBound};
}

}  // namespace qreach

#pragma once

#include <optional>

#include "qreach/period.hpp"
#include "qreach/union_space.hpp"

namespace qreach {

struct InvariantCore {
    // maximal subspace K ⊆ V with T^p K = K
    Subspace k;
    unsigned long p;
};

InvariantCore invariantCore(const ScaledOperator& t, const Subspace& v);

// Same fixpoint with a precomputed period (used by the general algorithm
// to avoid recomputing periods of composite operators).
Subspace invariantCoreWithPeriod(const ScaledOperator& t, const Subspace& v, unsigned long p);

// Y(A,I,V) for the single-operator automaton: ψ ∈ Y iff {n : T^n ψ ∈ V}
// is infinite. Equals ∪_{r<p} T^r K.
UnionSpace ySingle(const ScaledOperator& t, const Subspace& v);

struct ZeroSetClass {
    enum class Kind { All, Infinite, FiniteNonemptyWitnessed, FiniteEmptyUpTo };
    Kind kind;
    unsigned long witness = 0;  // first zero index, for FiniteNonemptyWitnessed
    unsigned long bound = 0;    // sweep bound, for FiniteEmptyUpTo
};

// Classify Z = {n : u^T M^n v = 0} for a scaled-unitary M. Z = N and
// Z cofinite coincide here (M is invertible, so a zero tail propagates
// backward); Z infinite reduces to v ∈ Y(M, ker u^T); emptiness of a
// finite Z is open, so only a bounded sweep is reported.
ZeroSetClass classifyZeroSet(const CVector& u, const ScaledOperator& m, const CVector& v,
                             unsigned long emptinessBound = 10000);

}  // namespace qreach

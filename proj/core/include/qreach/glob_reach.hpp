#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qreach/automaton.hpp"

namespace qreach {

struct ShrinkStep {
    std::string action;
    UnionSpace before;
    UnionSpace after;
};

struct GFixpoint {
    UnionSpace y;
    std::size_t iterations;
    std::vector<ShrinkStep> shrinkTrace;
};

// Maximal union Y ⊆ ||f|| with U_α Y = Y for every action. Starts at
// denote(f) and repeatedly intersects with the preimage under the
// lowest-indexed non-invariant action. Requires f positive.
GFixpoint gFixpoint(const QuantumAutomaton& a, const Formula& f);

struct Verdict {
    char property;  // 'G', 'U' or 'I'
    bool holds;
    std::optional<Subspace> certificate;           // member containing H_ini
    std::vector<std::string> counterexampleWord;   // G/U failure only
    std::optional<CVector> counterexampleStart;
    std::size_t iterations = 0;
};

Verdict decideG(const QuantumAutomaton& a, const Formula& f);
// Y(A,U,f) = Y(A,G,f); only the report differs.
Verdict decideU(const QuantumAutomaton& a, const Formula& f);

}  // namespace qreach

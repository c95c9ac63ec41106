#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qreach/glob_reach.hpp"

namespace qreach {

// For each (member, action), the member index of its exact image.
// Only available when condition 1 holds.
struct TransitionTable {
    std::vector<std::vector<std::size_t>> next;  // next[member][action]
};

struct Condition1Violation {
    std::size_t member;  // maximal dimension, then lowest member index
    std::size_t action;  // lowest action index for that member
};

std::variant<TransitionTable, Condition1Violation>
checkCondition1(const UnionSpace& x, const QuantumAutomaton& a);

// Replace the violating member Y_i by {Y_i ∩ U_α^{-1} Y_j : Y_j ∈ X}.
// Every replacement is a proper subspace of Y_i and the union shrinks
// strictly; both are asserted.
UnionSpace refineCase1(const UnionSpace& x, const QuantumAutomaton& a,
                       const Condition1Violation& violation);

// Simple loop violating condition 2: members[i] -- actions[i] --> members[i+1],
// last edge closing back to members[0]; no node included in any ||f|| member.
struct ViolatingLoop {
    std::vector<std::size_t> members;
    std::vector<std::size_t> actions;
};

// Condition 2 via node removal: drop members included in some ||f||
// member; the condition holds iff the residual table graph is acyclic.
std::optional<ViolatingLoop> checkCondition2(const UnionSpace& x, const TransitionTable& table,
                                             const UnionSpace& denotedF);

// Replace the loop head Y_{r0} by its intersections with the sets
// R_{i,t,n} = prefix_i^{-1} T_i^n K(T_i, V_t); every intersection is a
// proper subspace of Y_{r0} (asserted) and the union shrinks strictly.
UnionSpace refineCase2(const UnionSpace& x, const ViolatingLoop& loop,
                       const QuantumAutomaton& a, const UnionSpace& denotedF);

struct IResult {
    UnionSpace y;
    Verdict verdict;
    std::size_t iterations;
    std::vector<UnionSpace> trace;  // X after each refinement, when requested
};

// Algorithm for Y(A,I,f): start at {H} and refine until the candidate set
// satisfies conditions 1 and 2. Requires f positive.
IResult decideI(const QuantumAutomaton& a, const Formula& f, bool wantTrace = false);

}  // namespace qreach

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qreach/union_space.hpp"

namespace qreach {

// Boolean subspace-formula AST. Atoms are subspaces; satisfaction is
// vector membership.
class Formula {
  public:
    enum class Kind { Atom, Not, And, Or };
    using Ptr = std::shared_ptr<const Formula>;

    static Ptr atom(Subspace s);
    static Ptr negation(Ptr f);
    static Ptr conjunction(std::vector<Ptr> fs);
    static Ptr disjunction(std::vector<Ptr> fs);

    Kind kind() const { return kind_; }
    const Subspace& atomSubspace() const { return *atom_; }
    const std::vector<Ptr>& children() const { return children_; }

    bool isPositive() const;
    std::size_t ambientDim() const;

  private:
    Formula(Kind k) : kind_(k) {}
    Kind kind_;
    std::shared_ptr<const Subspace> atom_;
    std::vector<Ptr> children_;
};

// Throws on a zero state: the zero vector has no satisfaction semantics.
bool satisfies(const CVector& state, const Formula& f);

// ||f|| as a pruned union of subspaces, via DNF expansion.
// Requires f positive; throws otherwise.
UnionSpace denote(const Formula& f);

struct QuantumAutomaton {
    std::size_t dim;
    // Ordered action list; the order fixes all "lowest action index"
    // tie-breaks in the decision procedures.
    std::vector<std::pair<std::string, ScaledOperator>> actions;
    Subspace initial;

    QuantumAutomaton(std::size_t dim,
                     std::vector<std::pair<std::string, ScaledOperator>> actions,
                     Subspace initial);

    const ScaledOperator& action(const std::string& name) const;
    bool hasAction(const std::string& name) const;
};

struct Path {
    CVector start;
    std::vector<std::string> word;
    // states[0] = start, states[n+1] = N_{word[n]} · states[n]; the scale
    // is tracked only implicitly since membership tests are scale-invariant.
    std::vector<CVector> states;
};

Path run(const QuantumAutomaton& a, const CVector& start,
         const std::vector<std::string>& word, bool allowOutsideInitial = false);

// A extended with the identity action "τ".
QuantumAutomaton addSilentAction(const QuantumAutomaton& a);

inline const std::string kSilentAction = "\xcf\x84";  // "τ"

}  // namespace qreach

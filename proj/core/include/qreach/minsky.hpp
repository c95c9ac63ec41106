#pragma once

#include <map>
#include <string>
#include <vector>

#include "qreach/automaton.hpp"

namespace qreach {
namespace minsky {

enum class Counter { A, B };

struct Instruction {
    enum class Kind { Inc, TestDec, Halt };
    Kind kind;
    Counter counter = Counter::A;
    std::string next;          // Inc target
    std::string zeroTarget;    // TestDec: taken when the counter is 0
    std::string nonzeroTarget; // TestDec: taken (after decrement) otherwise
};

struct MinskyProgram {
    std::vector<std::pair<std::string, Instruction>> instructions;  // ordered, labelled
    mpz_class initialA = 0;
    mpz_class initialB = 0;
};

// Grammar (one instruction per line, '#' comments):
//   label ':' 'inc' ('a'|'b') 'goto' label
//   label ':' 'tdz' ('a'|'b') 'goto' label 'else' label
//   label ':' 'halt'
// plus optional 'init a <nat>' / 'init b <nat>' header lines.
MinskyProgram parse(const std::string& text);

// Label class after normalization.
enum class LabelClass { Inc1a, Inc1b, Test2a, Test2b, Zero2a, Zero2b, Dec2a, Dec2b, Halt };

struct NormalizedInstruction {
    LabelClass cls;
    // Inc1*/Zero2*/Dec2*/Halt: single goto target. Test2*: the primed and
    // double-primed successors.
    std::string next;
    std::string zeroNext;
    std::string nonzeroNext;
};

struct NormalizedProgram {
    // Ordered label table; initial counters folded to 0 by prepended
    // increments, every test expanded into l, l', l'', halt a self-loop.
    std::vector<std::pair<std::string, NormalizedInstruction>> labels;
    std::string startLabel;
    std::string haltLabel;

    std::size_t labelIndex(const std::string& label) const;
    std::size_t size() const { return labels.size(); }
};

NormalizedProgram normalize(const MinskyProgram& p);

struct ClassicalState {
    mpz_class a;
    mpz_class b;
    std::string label;
};

struct ClassicalRun {
    std::vector<ClassicalState> trace;
    bool halted;
    std::size_t haltStep;  // first index at the halt label
};

ClassicalRun runClassical(const NormalizedProgram& p, std::size_t maxSteps);

// Compiled automaton on H_a ⊗ H_b ⊗ H_2L (dimension 8·|L|), with the V/W
// target subspaces and the bookkeeping to drive the matched path σ0.
struct Encoding {
    QuantumAutomaton automaton;
    Subspace v;
    Subspace w;
    Subspace v0;
    NormalizedProgram program;
    // basis position of |l> is labelIndex(l); |l̂> sits at |L| + labelIndex(l)
    std::size_t labelCount;

    std::size_t stateIndex(std::size_t ia, std::size_t ib, std::size_t il) const;
    // matched action name for a classical state
    std::string matchedAction(const ClassicalState& s) const;
};

Encoding encode(const NormalizedProgram& p);

struct Sigma0Run {
    std::vector<CVector> states;
    std::vector<std::string> actions;  // actions[i] maps states[i] to states[i+1]
};

// Lockstep quantum image of the classical run under matched actions.
Sigma0Run runSigma0(const Encoding& e, std::size_t maxSteps);

// First index with state ∈ V and state ∉ W, or nullopt.
std::optional<std::size_t> checkFVnotW(const Encoding& e, const std::vector<CVector>& states);

}  // namespace minsky
}  // namespace qreach

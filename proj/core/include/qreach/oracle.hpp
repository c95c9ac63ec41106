#pragma once

#include <string>
#include <vector>

#include "qreach/automaton.hpp"

namespace qreach {
namespace oracle {

struct SweepReport {
    std::string property;
    std::size_t bound;
    enum class Verdict { Confirmed, Refuted, Inconclusive } verdict;
    std::vector<std::string> witness;  // replayable word, Refuted only
    std::size_t exploredWords = 0;
    // boundedIU evidence: per sampled word, hit count in the tail window
    std::vector<std::size_t> tailHits;
};

// Word-tree size guard: bounds with |Act|^bound beyond this are refused
// unless forced.
inline constexpr std::size_t kMaxTreeSize = 10'000'000;

// Breadth-first semi-decision of "every path eventually satisfies f":
// a branch closes when f holds; Confirmed iff all branches close within
// the bound, Inconclusive otherwise (never Refuted).
SweepReport boundedF(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                     std::size_t bound, bool force = false);

// Refuted with a witness word if any word of length ≤ bound leaves ||f||;
// Confirmed (up to the bound) otherwise.
SweepReport boundedG(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                     std::size_t bound, bool force = false);

// Evidence only: samples random words and reports tail-window hit counts.
// I/U are tail properties no finite sweep decides, so the verdict is
// always Inconclusive.
SweepReport boundedIU(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                      std::size_t bound, std::size_t window, std::size_t samples = 50,
                      unsigned seed = 0);

}  // namespace oracle
}  // namespace qreach

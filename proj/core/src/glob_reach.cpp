#include "qreach/glob_reach.hpp"

#include <deque>
#include <stdexcept>

namespace qreach {

GFixpoint gFixpoint(const QuantumAutomaton& a, const Formula& f) {
    if (!f.isPositive())
        throw std::invalid_argument("G/U decision requires a negation-free formula");
    UnionSpace y = denote(f);
    GFixpoint result{y, 0, {}};
    for (;;) {
        bool changed = false;
        for (const auto& [name, op] : a.actions) {
            if (unionImage(op, y) == y) continue;
            UnionSpace next = unionIntersect(unionPreimage(op, y), y);
            result.shrinkTrace.push_back({name, y, next});
            y = std::move(next);
            ++result.iterations;
            changed = true;
            break;  // restart from the lowest-indexed action
        }
        if (!changed) break;
    }
    result.y = y;
    return result;
}

namespace {
// Shortest word whose endpoint violates f, found breadth-first. One exists
// with length ≤ depthBound: each fixpoint iteration peels exactly the
// states refuted by one more step.
std::vector<std::string> counterexampleWord(const QuantumAutomaton& a, const Formula& f,
                                            const CVector& start, std::size_t depthBound) {
    struct Node {
        CVector state;
        std::vector<std::string> word;
    };
    std::deque<Node> queue{{start, {}}};
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        if (!satisfies(n.state, f)) return n.word;
        if (n.word.size() >= depthBound) continue;
        for (const auto& [name, op] : a.actions) {
            Node child{op.apply(n.state), n.word};
            child.word.push_back(name);
            queue.push_back(std::move(child));
        }
    }
    throw std::logic_error("decideG: no counterexample within the guaranteed depth");
}

Verdict decideViaGFixpoint(char property, const QuantumAutomaton& a, const Formula& f) {
    GFixpoint fix = gFixpoint(a, f);
    Verdict v{property, false, {}, {}, {}, fix.iterations};
    for (const auto& m : fix.y.members()) {
        if (m.includes(a.initial)) {
            v.holds = true;
            v.certificate = m;
            return v;
        }
    }
    CVector start = vectorOutsideUnion(a.initial, fix.y);
    v.counterexampleStart = start;
    v.counterexampleWord = counterexampleWord(a, f, start, fix.iterations);
    return v;
}
}  // namespace

Verdict decideG(const QuantumAutomaton& a, const Formula& f) {
    return decideViaGFixpoint('G', a, f);
}

Verdict decideU(const QuantumAutomaton& a, const Formula& f) {
    return decideViaGFixpoint('U', a, f);
}

}  // namespace qreach

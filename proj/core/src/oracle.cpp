#include "qreach/oracle.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace qreach {
namespace oracle {

namespace {
void guardTreeSize(std::size_t fanout, std::size_t bound, bool force) {
    if (force) return;
    double words = 1.0;
    double total = 1.0;
    for (std::size_t i = 0; i < bound; ++i) {
        words *= static_cast<double>(fanout);
        total += words;
        if (total > static_cast<double>(kMaxTreeSize))
            throw std::invalid_argument("oracle: word tree too large; pass force to override");
    }
}

struct Node {
    CVector state;
    std::vector<std::string> word;
};
}  // namespace

SweepReport boundedF(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                     std::size_t bound, bool force) {
    if (isZero(start)) throw std::invalid_argument("oracle: zero start state");
    guardTreeSize(a.actions.size(), bound, force);
    SweepReport report{"F", bound, SweepReport::Verdict::Confirmed, {}, 0, {}};
    std::deque<Node> queue{{start, {}}};
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        ++report.exploredWords;
        if (satisfies(n.state, f)) continue;  // branch closes
        if (n.word.size() >= bound) {
            // open branch at the horizon: not a refutation
            report.verdict = SweepReport::Verdict::Inconclusive;
            return report;
        }
        for (const auto& [name, op] : a.actions) {
            Node child{op.apply(n.state), n.word};
            child.word.push_back(name);
            queue.push_back(std::move(child));
        }
    }
    return report;
}

SweepReport boundedG(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                     std::size_t bound, bool force) {
    if (isZero(start)) throw std::invalid_argument("oracle: zero start state");
    guardTreeSize(a.actions.size(), bound, force);
    SweepReport report{"G", bound, SweepReport::Verdict::Confirmed, {}, 0, {}};
    std::deque<Node> queue{{start, {}}};
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        ++report.exploredWords;
        if (!satisfies(n.state, f)) {
            report.verdict = SweepReport::Verdict::Refuted;
            report.witness = n.word;
            return report;
        }
        if (n.word.size() >= bound) continue;
        for (const auto& [name, op] : a.actions) {
            Node child{op.apply(n.state), n.word};
            child.word.push_back(name);
            queue.push_back(std::move(child));
        }
    }
    return report;
}

SweepReport boundedIU(const QuantumAutomaton& a, const Formula& f, const CVector& start,
                      std::size_t bound, std::size_t window, std::size_t samples,
                      unsigned seed) {
    if (isZero(start)) throw std::invalid_argument("oracle: zero start state");
    if (window > bound) throw std::invalid_argument("oracle: window larger than bound");
    SweepReport report{"IU", bound, SweepReport::Verdict::Inconclusive, {}, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, a.actions.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        CVector state = start;
        std::size_t hits = 0;
        for (std::size_t i = 1; i <= bound; ++i) {
            state = a.actions[pick(rng)].second.apply(state);
            if (i > bound - window && satisfies(state, f)) ++hits;
        }
        ++report.exploredWords;
        report.tailHits.push_back(hits);
    }
    return report;
}

}  // namespace oracle
}  // namespace qreach

#include "qreach/inf_reach.hpp"

#include <stdexcept>

#include "qreach/single_reach.hpp"

namespace qreach {

std::variant<TransitionTable, Condition1Violation>
checkCondition1(const UnionSpace& x, const QuantumAutomaton& a) {
    const auto& members = x.members();
    TransitionTable table;
    table.next.assign(members.size(), std::vector<std::size_t>(a.actions.size()));
    std::vector<Condition1Violation> violations;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t act = 0; act < a.actions.size(); ++act) {
            Subspace img = a.actions[act].second.image(members[i]);
            bool found = false;
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (members[j] == img) {
                    table.next[i][act] = j;
                    found = true;
                    break;
                }
            }
            if (!found) {
                violations.push_back({i, act});
                break;  // lowest action index for this member is enough
            }
        }
    }
    if (violations.empty()) return table;
    // choose the violator of maximal dimension, then lowest member index;
    // the action index is already minimal per member
    Condition1Violation best = violations.front();
    for (const auto& v : violations)
        if (members[v.member].dimension() > members[best.member].dimension()) best = v;
    return best;
}

UnionSpace refineCase1(const UnionSpace& x, const QuantumAutomaton& a,
                       const Condition1Violation& violation) {
    const auto& members = x.members();
    const Subspace& yi = members[violation.member];
    const ScaledOperator& op = a.actions[violation.action].second;
    std::vector<Subspace> next;
    for (std::size_t j = 0; j < members.size(); ++j)
        if (j != violation.member) next.push_back(members[j]);
    for (const auto& yj : members) {
        Subspace w = intersect(yi, op.preimage(yj));
        if (w == yi)
            throw std::logic_error("refineCase1: replacement is not a proper subspace");
        next.push_back(std::move(w));
    }
    UnionSpace refined = UnionSpace::prune(x.ambientDim(), std::move(next));
    if (!properlyIncluded(refined, x))
        throw std::logic_error("refineCase1: union did not shrink strictly");
    return refined;
}

std::optional<ViolatingLoop> checkCondition2(const UnionSpace& x, const TransitionTable& table,
                                             const UnionSpace& denotedF) {
    const auto& members = x.members();
    const std::size_t n = members.size();
    // survivors: members not inside any ||f|| member; any cycle among them
    // is a violating simple loop, and conversely
    std::vector<bool> survives(n, false);
    for (std::size_t i = 0; i < n; ++i)
        survives[i] = !denotedF.containsSubspace(members[i]);

    // iterative DFS cycle extraction, deterministic order
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::size_t> stackMembers;
    std::vector<std::size_t> stackActions;  // action leading *into* stack node k (k>0)

    struct Frame {
        std::size_t node;
        std::size_t nextAction;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (!survives[root] || color[root] != 0) continue;
        std::vector<Frame> frames{{root, 0}};
        color[root] = 1;
        stackMembers = {root};
        stackActions.clear();
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.nextAction == table.next[f.node].size()) {
                color[f.node] = 2;
                frames.pop_back();
                stackMembers.pop_back();
                if (!stackActions.empty()) stackActions.pop_back();
                continue;
            }
            std::size_t act = f.nextAction++;
            std::size_t target = table.next[f.node][act];
            if (!survives[target]) continue;
            if (color[target] == 1) {
                // cycle: suffix of the stack from target's position
                ViolatingLoop loop;
                std::size_t pos = 0;
                while (stackMembers[pos] != target) ++pos;
                for (std::size_t k = pos; k < stackMembers.size(); ++k) {
                    loop.members.push_back(stackMembers[k]);
                    if (k > pos) loop.actions.push_back(stackActions[k - 1]);
                }
                loop.actions.push_back(act);  // closing edge back to target
                return loop;
            }
            if (color[target] == 0) {
                color[target] = 1;
                frames.push_back({target, 0});
                stackMembers.push_back(target);
                stackActions.push_back(act);
            }
        }
    }
    return std::nullopt;
}

namespace {
ScaledOperator composeWord(const QuantumAutomaton& a, const ViolatingLoop& loop,
                           std::size_t from, std::size_t count) {
    // product of loop edges actions[from], actions[from+1], ... applied in
    // that order (earlier edge acts first)
    ScaledOperator t = ScaledOperator::identity(a.dim);
    for (std::size_t k = 0; k < count; ++k) {
        const auto& op = a.actions[loop.actions[(from + k) % loop.actions.size()]].second;
        t = op * t;
    }
    return t;
}
}  // namespace

UnionSpace refineCase2(const UnionSpace& x, const ViolatingLoop& loop,
                       const QuantumAutomaton& a, const UnionSpace& denotedF) {
    const auto& members = x.members();
    const Subspace& head = members[loop.members.front()];
    const std::size_t k = loop.actions.size();

    std::vector<Subspace> replacements;
    for (std::size_t i = 0; i < k; ++i) {
        // T_i walks the loop once starting at node i; prefix_i covers the
        // first i edges from the head.
        ScaledOperator prefix = composeWord(a, loop, 0, i);
        ScaledOperator ti = composeWord(a, loop, i, k);
        unsigned long p = period(ti).p;
        for (const auto& vt : denotedF.members()) {
            Subspace core = invariantCoreWithPeriod(ti, vt, p);
            Subspace shifted = core;
            for (unsigned long n = 0; n < p; ++n) {
                Subspace r = prefix.preimage(shifted);
                Subspace w = intersect(head, r);
                if (w == head)
                    throw std::logic_error(
                        "refineCase2: R-intersection equals the loop head");
                replacements.push_back(std::move(w));
                shifted = ti.image(shifted);
            }
        }
    }

    std::vector<Subspace> next;
    for (std::size_t j = 0; j < members.size(); ++j)
        if (j != loop.members.front()) next.push_back(members[j]);
    for (auto& w : replacements) next.push_back(std::move(w));
    UnionSpace refined = UnionSpace::prune(x.ambientDim(), std::move(next));
    if (!properlyIncluded(refined, x))
        throw std::logic_error("refineCase2: union did not shrink strictly");
    return refined;
}

IResult decideI(const QuantumAutomaton& a, const Formula& f, bool wantTrace) {
    if (!f.isPositive())
        throw std::invalid_argument("I decision requires a negation-free formula");
    const UnionSpace denotedF = denote(f);
    UnionSpace x = UnionSpace::prune(a.dim, {Subspace::full(a.dim)});
    std::size_t iterations = 0;
    std::vector<UnionSpace> trace;
    for (;;) {
        auto cond1 = checkCondition1(x, a);
        if (auto* violation = std::get_if<Condition1Violation>(&cond1)) {
            x = refineCase1(x, a, *violation);
        } else {
            auto loop = checkCondition2(x, std::get<TransitionTable>(cond1), denotedF);
            if (!loop) break;
            x = refineCase2(x, *loop, a, denotedF);
        }
        ++iterations;
        if (wantTrace) trace.push_back(x);
    }

    Verdict verdict{'I', false, {}, {}, {}, iterations};
    for (const auto& m : x.members()) {
        if (m.includes(a.initial)) {
            verdict.holds = true;
            verdict.certificate = m;
            break;
        }
    }
    return {x, std::move(verdict), iterations, std::move(trace)};
}

}  // namespace qreach

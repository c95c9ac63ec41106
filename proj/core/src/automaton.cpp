#include "qreach/automaton.hpp"

#include <stdexcept>

namespace qreach {

Formula::Ptr Formula::atom(Subspace s) {
    auto f = std::shared_ptr<Formula>(new Formula(Kind::Atom));
    f->atom_ = std::make_shared<const Subspace>(std::move(s));
    return f;
}

Formula::Ptr Formula::negation(Ptr inner) {
    if (!inner) throw std::invalid_argument("formula: null child");
    auto f = std::shared_ptr<Formula>(new Formula(Kind::Not));
    f->children_ = {std::move(inner)};
    return f;
}

Formula::Ptr Formula::conjunction(std::vector<Ptr> fs) {
    if (fs.empty()) throw std::invalid_argument("formula: empty conjunction");
    auto f = std::shared_ptr<Formula>(new Formula(Kind::And));
    f->children_ = std::move(fs);
    return f;
}

Formula::Ptr Formula::disjunction(std::vector<Ptr> fs) {
    if (fs.empty()) throw std::invalid_argument("formula: empty disjunction");
    auto f = std::shared_ptr<Formula>(new Formula(Kind::Or));
    f->children_ = std::move(fs);
    return f;
}

bool Formula::isPositive() const {
    if (kind_ == Kind::Not) return false;
    for (const auto& c : children_)
        if (!c->isPositive()) return false;
    return true;
}

std::size_t Formula::ambientDim() const {
    if (kind_ == Kind::Atom) return atom_->ambientDim();
    return children_.front()->ambientDim();
}

bool satisfies(const CVector& state, const Formula& f) {
    if (isZero(state)) throw std::invalid_argument("zero vector has no satisfaction semantics");
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return f.atomSubspace().contains(state);
        case Formula::Kind::Not:
            return !satisfies(state, *f.children()[0]);
        case Formula::Kind::And:
            for (const auto& c : f.children())
                if (!satisfies(state, *c)) return false;
            return true;
        case Formula::Kind::Or:
            for (const auto& c : f.children())
                if (satisfies(state, *c)) return true;
            return false;
    }
    throw std::logic_error("formula: unknown node kind");
}

namespace {
// DNF clauses as intersected subspaces; no minimization, prune handles it.
std::vector<Subspace> dnfClauses(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return {f.atomSubspace()};
        case Formula::Kind::Or: {
            std::vector<Subspace> all;
            for (const auto& c : f.children())
                for (auto& s : dnfClauses(*c)) all.push_back(std::move(s));
            return all;
        }
        case Formula::Kind::And: {
            std::vector<Subspace> acc = {Subspace::full(f.ambientDim())};
            for (const auto& c : f.children()) {
                std::vector<Subspace> next;
                for (const auto& clause : dnfClauses(*c))
                    for (const auto& a : acc) next.push_back(intersect(a, clause));
                acc = std::move(next);
            }
            return acc;
        }
        case Formula::Kind::Not:
            break;
    }
    throw std::invalid_argument("denotation requires negation-free formula");
}
}  // namespace

UnionSpace denote(const Formula& f) {
    if (!f.isPositive()) throw std::invalid_argument("denotation requires negation-free formula");
    return UnionSpace::prune(f.ambientDim(), dnfClauses(f));
}

QuantumAutomaton::QuantumAutomaton(std::size_t dim,
                                   std::vector<std::pair<std::string, ScaledOperator>> acts,
                                   Subspace ini)
    : dim(dim), actions(std::move(acts)), initial(std::move(ini)) {
    if (actions.empty()) throw std::invalid_argument("automaton: empty action set");
    for (const auto& [name, op] : actions)
        if (op.ambientDim() != dim)
            throw std::invalid_argument("automaton: operator dimension mismatch for '" + name + "'");
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = i + 1; j < actions.size(); ++j)
            if (actions[i].first == actions[j].first)
                throw std::invalid_argument("automaton: duplicate action '" + actions[i].first + "'");
    if (initial.ambientDim() != dim)
        throw std::invalid_argument("automaton: initial subspace dimension mismatch");
    if (initial.isZero()) throw std::invalid_argument("automaton: initial subspace must be nonzero");
}

const ScaledOperator& QuantumAutomaton::action(const std::string& name) const {
    for (const auto& [n, op] : actions)
        if (n == name) return op;
    throw std::invalid_argument("automaton: unknown action '" + name + "'");
}

bool QuantumAutomaton::hasAction(const std::string& name) const {
    for (const auto& [n, op] : actions)
        if (n == name) return true;
    return false;
}

Path run(const QuantumAutomaton& a, const CVector& start,
         const std::vector<std::string>& word, bool allowOutsideInitial) {
    if (start.size() != a.dim) throw std::invalid_argument("run: start dimension mismatch");
    if (!allowOutsideInitial && !a.initial.contains(start))
        throw std::invalid_argument("run: start state outside the initial subspace");
    Path p{start, word, {start}};
    for (const auto& act : word)
        p.states.push_back(a.action(act).apply(p.states.back()));
    return p;
}

QuantumAutomaton addSilentAction(const QuantumAutomaton& a) {
    if (a.hasAction(kSilentAction))
        throw std::invalid_argument("automaton: silent action name already in use");
    auto actions = a.actions;
    actions.emplace_back(kSilentAction, ScaledOperator::identity(a.dim));
    return QuantumAutomaton(a.dim, std::move(actions), a.initial);
}

}  // namespace qreach

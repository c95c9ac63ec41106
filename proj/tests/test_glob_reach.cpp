#define DOCTEST_CONFIG_DOUBLE_STRINGIFY
#include <doctest.h>

#include "qreach/glob_reach.hpp"
#include "support.hpp"

using namespace ts;

namespace {
QuantumAutomaton swapAutomaton() {
    return QuantumAutomaton(2, {{"s", swapOp()}}, spanOf(2, {e(2, 0)}));
}

Formula::Ptr e1OrE2() {
    return Formula::disjunction({Formula::atom(spanOf(2, {e(2, 0)})),
                                 Formula::atom(spanOf(2, {e(2, 1)}))});
}
}  // namespace

TEST_CASE("fixpoint fixtures") {
    QuantumAutomaton a = swapAutomaton();

    GFixpoint full = gFixpoint(a, *Formula::atom(Subspace::full(2)));
    CHECK(full.y == UnionSpace::prune(2, {Subspace::full(2)}));
    CHECK(full.iterations == 0);

    GFixpoint dead = gFixpoint(a, *Formula::atom(spanOf(2, {e(2, 0)})));
    CHECK(dead.y.isEmpty());

    GFixpoint cycle = gFixpoint(a, *e1OrE2());
    CHECK(cycle.iterations == 0);
    CHECK(cycle.y.members().size() == 2);
}

TEST_CASE("fixpoint invariance and containment") {
    Rng rng(61);
    for (int k = 0; k < 12; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        QuantumAutomaton a = rng.automaton(d, 1 + static_cast<std::size_t>(rng.intIn(0, 1)));
        auto f = rng.positiveFormula(d);
        GFixpoint fix = gFixpoint(a, *f);
        for (const auto& [name, op] : a.actions) CHECK(unionImage(op, fix.y) == fix.y);
        CHECK(denote(*f).includes(fix.y));
        // shrink trace descends properly
        for (const auto& step : fix.shrinkTrace)
            CHECK(properlyIncluded(step.after, step.before));
    }
}

TEST_CASE("fixpoint value is independent of action order") {
    Rng rng(63);
    for (int k = 0; k < 8; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        QuantumAutomaton a = rng.automaton(d, 2);
        auto f = rng.positiveFormula(d);
        QuantumAutomaton flipped(a.dim, {a.actions[1], a.actions[0]}, a.initial);
        CHECK(gFixpoint(a, *f).y == gFixpoint(flipped, *f).y);
    }
}

TEST_CASE("decideG fixtures") {
    QuantumAutomaton a = swapAutomaton();

    Verdict holds = decideG(a, *e1OrE2());
    CHECK(holds.holds);
    REQUIRE(holds.certificate.has_value());
    CHECK(holds.certificate->includes(a.initial));

    Verdict fails = decideG(a, *Formula::atom(spanOf(2, {e(2, 0)})));
    CHECK_FALSE(fails.holds);
    CHECK(fails.counterexampleWord == std::vector<std::string>{"s"});

    CHECK(decideG(a, *Formula::atom(Subspace::full(2))).holds);
    CHECK(decideU(a, *Formula::atom(Subspace::full(2))).holds);
}

TEST_CASE("counterexamples replay to genuine violations") {
    Rng rng(65);
    for (int k = 0; k < 12; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        QuantumAutomaton a = rng.automaton(d, 2);
        auto f = rng.positiveFormula(d);
        Verdict v = decideG(a, *f);
        if (v.holds) continue;
        REQUIRE(v.counterexampleStart.has_value());
        CHECK(v.counterexampleWord.size() <= v.iterations);
        Path p = run(a, *v.counterexampleStart, v.counterexampleWord, true);
        CHECK_FALSE(satisfies(p.states.back(), *f));
    }
}

TEST_CASE("U agrees with G") {
    Rng rng(67);
    for (int k = 0; k < 10; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        QuantumAutomaton a = rng.automaton(d, 2);
        auto f = rng.positiveFormula(d);
        CHECK(decideG(a, *f).holds == decideU(a, *f).holds);
    }
}

TEST_CASE("negation is rejected") {
    QuantumAutomaton a = swapAutomaton();
    auto neg = Formula::negation(Formula::atom(spanOf(2, {e(2, 0)})));
    CHECK_THROWS_AS(decideG(a, *neg), std::invalid_argument);
    CHECK_THROWS_AS(decideU(a, *neg), std::invalid_argument);
    CHECK_THROWS_AS(gFixpoint(a, *neg), std::invalid_argument);
}

TEST_CASE("walk automaton termination query") {
    // G over the diverging-state union: the initial state |0> lies in both
    // PD subspaces, and the fixpoint decides whether it can stay there
    QuantumAutomaton a = walkAutomaton();
    auto f = Formula::disjunction({Formula::atom(pd1()), Formula::atom(pd2())});
    Verdict v = decideG(a, *f);
    GFixpoint fix = gFixpoint(a, *f);
    for (const auto& [name, op] : a.actions) CHECK(unionImage(op, fix.y) == fix.y);
    CHECK(v.holds == fix.y.containsSubspace(a.initial));
}

#define DOCTEST_CONFIG_DOUBLE_STRINGIFY
#include <doctest.h>

#include "support.hpp"

using namespace ts;

TEST_CASE("satisfaction semantics") {
    CHECK(satisfies(e(4, 0), *Formula::atom(pd1())));
    Subspace e1 = spanOf(2, {e(2, 0)});
    CHECK_FALSE(satisfies(e(2, 0), *Formula::negation(Formula::atom(e1))));
    auto f = Formula::disjunction(
        {Formula::atom(e1), Formula::atom(Subspace::full(2))});
    CHECK(satisfies(vec({1, 1}), *f));
    CHECK_THROWS_AS(satisfies(CVector(2, gr(0)), *Formula::atom(e1)),
                    std::invalid_argument);
}

TEST_CASE("denotation of positive formulas") {
    Subspace v = spanOf(3, {e(3, 0)});
    CHECK(denote(*Formula::atom(v)) == UnionSpace::prune(3, {v}));

    auto conj = Formula::conjunction({Formula::atom(spanOf(3, {e(3, 0), e(3, 1)})),
                                      Formula::atom(spanOf(3, {e(3, 1), e(3, 2)}))});
    CHECK(denote(*conj) == UnionSpace::prune(3, {spanOf(3, {e(3, 1)})}));

    auto disj = Formula::disjunction(
        {Formula::atom(spanOf(2, {e(2, 0)})), Formula::atom(spanOf(2, {e(2, 1)}))});
    CHECK(denote(*disj).members().size() == 2);

    CHECK_THROWS_AS(denote(*Formula::negation(Formula::atom(v))), std::invalid_argument);
}

TEST_CASE("satisfies agrees with denotation membership") {
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 2));
        auto f = rng.positiveFormula(d);
        UnionSpace den = denote(*f);
        CVector psi = rng.nonzeroVector(d);
        CHECK(satisfies(psi, *f) == den.containsVector(psi));
        // scale invariance
        GaussianRational c = rng.nonzeroGaussian();
        CHECK(satisfies(psi, *f) == satisfies(scaled(psi, c), *f));
    }
}

TEST_CASE("De Morgan duality at the satisfaction level") {
    Rng rng(33);
    for (int k = 0; k < 20; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        auto f = rng.positiveFormula(d, 1);
        auto g = rng.positiveFormula(d, 1);
        CVector psi = rng.nonzeroVector(d);
        auto lhs = Formula::negation(Formula::conjunction({f, g}));
        auto rhs = Formula::disjunction(
            {Formula::negation(f), Formula::negation(g)});
        CHECK(satisfies(psi, *lhs) == satisfies(psi, *rhs));
    }
}

TEST_CASE("path simulation") {
    QuantumAutomaton a(2, {{"s", swapOp()}}, spanOf(2, {e(2, 0)}));
    Path empty = run(a, e(2, 0), {});
    CHECK(empty.states.size() == 1);
    Path p = run(a, e(2, 0), {"s", "s"});
    CHECK(p.states[0] == e(2, 0));
    CHECK(p.states[1] == e(2, 1));
    CHECK(p.states[2] == e(2, 0));
    CHECK_THROWS_AS(run(a, e(2, 0), {"x"}), std::invalid_argument);
    CHECK_THROWS_AS(run(a, e(2, 1), {"s"}), std::invalid_argument);
    CHECK_NOTHROW(run(a, e(2, 1), {"s"}, true));
}

TEST_CASE("walk step from the initial state") {
    QuantumAutomaton a = walkAutomaton();
    Path p = run(a, e(4, 0), {"+"});
    // column 0 of the integer matrix of W+
    CHECK(p.states[1] == vec({1, 1, 0, 1}));
    CHECK(satisfies(e(4, 0), *Formula::atom(pd1())));
    CHECK(satisfies(e(4, 0), *Formula::atom(pd2())));
}

TEST_CASE("silent action") {
    QuantumAutomaton a(2, {{"s", swapOp()}}, spanOf(2, {e(2, 0)}));
    QuantumAutomaton b = addSilentAction(a);
    CHECK(b.actions.size() == a.actions.size() + 1);
    Path p = run(b, e(2, 0), {kSilentAction, kSilentAction, kSilentAction});
    for (const auto& st : p.states) CHECK(st == e(2, 0));
    CHECK_THROWS_AS(addSilentAction(b), std::invalid_argument);
}

TEST_CASE("automaton validation") {
    CHECK_THROWS_AS(QuantumAutomaton(2, {{"s", swapOp()}}, Subspace::zero(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(QuantumAutomaton(2, {}, spanOf(2, {e(2, 0)})), std::invalid_argument);
    CHECK_THROWS_AS(QuantumAutomaton(3, {{"s", swapOp()}}, spanOf(3, {e(3, 0)})),
                    std::invalid_argument);
}

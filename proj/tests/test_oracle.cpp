#define DOCTEST_CONFIG_DOUBLE_STRINGIFY
#include <doctest.h>

#include "qreach/glob_reach.hpp"
#include "qreach/oracle.hpp"
#include "support.hpp"

using namespace ts;
using qreach::oracle::SweepReport;

namespace {
QuantumAutomaton swapAutomaton() {
    return QuantumAutomaton(2, {{"s", swapOp()}}, spanOf(2, {e(2, 0)}));
}
}  // namespace

TEST_CASE("bounded F sweeps") {
    QuantumAutomaton a = swapAutomaton();

    SweepReport full = qreach::oracle::boundedF(a, *Formula::atom(Subspace::full(2)),
                                                e(2, 0), 3);
    CHECK(full.verdict == SweepReport::Verdict::Confirmed);
    CHECK(full.exploredWords == 1);  // the root closes immediately

    SweepReport hop = qreach::oracle::boundedF(a, *Formula::atom(spanOf(2, {e(2, 1)})),
                                               e(2, 0), 3);
    CHECK(hop.verdict == SweepReport::Verdict::Confirmed);

    SweepReport open = qreach::oracle::boundedF(a, *Formula::atom(spanOf(2, {vec({1, 1})})),
                                                e(2, 0), 3);
    CHECK(open.verdict == SweepReport::Verdict::Inconclusive);
}

TEST_CASE("bounded G sweeps") {
    QuantumAutomaton a = swapAutomaton();
    auto both = Formula::disjunction({Formula::atom(spanOf(2, {e(2, 0)})),
                                      Formula::atom(spanOf(2, {e(2, 1)}))});
    CHECK(qreach::oracle::boundedG(a, *both, e(2, 0), 10).verdict ==
          SweepReport::Verdict::Confirmed);

    SweepReport refuted =
        qreach::oracle::boundedG(a, *Formula::atom(spanOf(2, {e(2, 0)})), e(2, 0), 10);
    CHECK(refuted.verdict == SweepReport::Verdict::Refuted);
    CHECK(refuted.witness == std::vector<std::string>{"s"});

    QuantumAutomaton idOnly(2, {{"i", ScaledOperator::identity(2)}}, spanOf(2, {e(2, 0)}));
    SweepReport atRoot =
        qreach::oracle::boundedG(idOnly, *Formula::atom(spanOf(2, {e(2, 1)})), e(2, 0), 5);
    CHECK(atRoot.verdict == SweepReport::Verdict::Refuted);
    CHECK(atRoot.witness.empty());  // refuted at the empty word
}

TEST_CASE("tree-size guard") {
    QuantumAutomaton a = swapAutomaton();
    QuantumAutomaton big(2, {{"a", swapOp()}, {"b", ScaledOperator::identity(2)},
                             {"c", swapOp()}}, spanOf(2, {e(2, 0)}));
    auto f = Formula::atom(spanOf(2, {vec({1, 1})}));
    CHECK_THROWS_AS(qreach::oracle::boundedF(big, *f, e(2, 0), 50), std::invalid_argument);
    CHECK_NOTHROW(qreach::oracle::boundedG(a, *f, e(2, 0), 10));
}

TEST_CASE("sweeps agree with the exact G decision") {
    Rng rng(81);
    for (int k = 0; k < 12; ++k) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.intIn(0, 1));
        QuantumAutomaton a = rng.automaton(d, 2);
        auto f = rng.positiveFormula(d, 1);
        Verdict v = decideG(a, *f);
        CVector start = a.initial.basis().row(0);
        if (v.holds) {
            SweepReport r =
                qreach::oracle::boundedG(a, *f, start, std::min<std::size_t>(v.iterations + 2, 8));
            CHECK(r.verdict == SweepReport::Verdict::Confirmed);
        } else if (v.iterations <= 8) {
            // a refuting word of length ≤ iterations exists from any initial
            // vector outside the fixpoint
            SweepReport r = qreach::oracle::boundedG(a, *f, start, v.iterations);
            CHECK(r.verdict == SweepReport::Verdict::Refuted);
        }
    }
}

TEST_CASE("IU sampling is evidence only") {
    QuantumAutomaton a = swapAutomaton();
    auto both = Formula::disjunction({Formula::atom(spanOf(2, {e(2, 0)})),
                                      Formula::atom(spanOf(2, {e(2, 1)}))});
    SweepReport r = qreach::oracle::boundedIU(a, *both, e(2, 0), 20, 10, 25, 1);
    CHECK(r.verdict == SweepReport::Verdict::Inconclusive);
    CHECK(r.tailHits.size() == 25);
    for (std::size_t hits : r.tailHits) CHECK(hits == 10);  // every state is in the union
    CHECK_THROWS_AS(qreach::oracle::boundedIU(a, *both, e(2, 0), 5, 10), std::invalid_argument);
}

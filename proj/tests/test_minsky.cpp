#define DOCTEST_CONFIG_DOUBLE_STRINGIFY
#include <doctest.h>

#include <map>

#include "qreach/minsky.hpp"
#include "support.hpp"

using namespace ts;
using namespace qreach::minsky;

namespace {
const char* kP1 =
    "l0: inc a goto l1\n"
    "l1: tdz a goto l2 else l1\n"
    "l2: halt\n";

const char* kP2 =
    "l0: inc a goto l0\n"
    "l1: halt\n";
}  // namespace

TEST_CASE("parsing and normalization") {
    CHECK(normalize(parse("l0: halt\n")).size() == 1);

    NormalizedProgram p1 = normalize(parse(kP1));
    CHECK(p1.size() == 5);  // l1 expands to l1, l1', l1''
    CHECK(p1.haltLabel == "l2");

    NormalizedProgram seeded = normalize(parse(std::string("init a 2\n") + kP1));
    CHECK(seeded.size() == 7);  // two prepended increments

    CHECK_THROWS_AS(parse("l0: inc a goto nowhere\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("l0: inc a goto l0\n"), std::invalid_argument);  // no halt
    CHECK_THROWS_AS(parse("l0: halt\nl0: halt\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("l0: inc c goto l1\nl1: halt\n"), std::invalid_argument);
}

TEST_CASE("classical interpreter") {
    ClassicalRun r1 = runClassical(normalize(parse(kP1)), 100);
    CHECK(r1.halted);
    CHECK(r1.haltStep == 5);
    CHECK(r1.trace[0].label == "l0");
    CHECK(r1.trace[0].a == 0);
    CHECK(r1.trace[1].a == 1);

    ClassicalRun r2 = runClassical(normalize(parse(kP2)), 100);
    CHECK_FALSE(r2.halted);

    ClassicalRun r3 = runClassical(normalize(parse("l0: halt\n")), 10);
    CHECK(r3.halted);
    CHECK(r3.haltStep == 0);
}

TEST_CASE("encoder well-formedness") {
    Encoding enc = encode(normalize(parse(kP1)));
    CHECK(enc.labelCount == 5);
    CHECK(enc.automaton.dim == 40);
    CHECK(enc.automaton.actions.size() == 6);

    for (const auto& [name, op] : enc.automaton.actions) {
        CHECK(op.scale() == makeRational(1));  // validated scaled-unitary with s = 1

        // source label of the action: the name, minus a 0/1 suffix for the
        // branching test actions
        std::string source = name;
        if (!enc.program.labels.empty() &&
            (source.back() == '0' || source.back() == '1')) {
            std::string stem = source.substr(0, source.size() - 1);
            for (const auto& [label, ins] : enc.program.labels)
                if (label == stem &&
                    (ins.cls == LabelClass::Test2a || ins.cls == LabelClass::Test2b))
                    source = stem;
        }
        std::size_t x = enc.program.labelIndex(source);

        // every other plain label must land entirely in the hatted half
        for (std::size_t z = 0; z < enc.labelCount; ++z) {
            if (z == x) continue;
            CVector out = op.apply(kron(kron(e(2, 0), e(2, 0)), e(2 * enc.labelCount, z)));
            for (std::size_t ia = 0; ia < 2; ++ia)
                for (std::size_t ib = 0; ib < 2; ++ib)
                    for (std::size_t il = 0; il < enc.labelCount; ++il)
                        CHECK(out[enc.stateIndex(ia, ib, il)].isZero());
        }
    }
}

TEST_CASE("label operators permute the label basis") {
    Encoding enc = encode(normalize(parse(kP1)));
    std::size_t twoL = 2 * enc.labelCount;
    for (const auto& [name, op] : enc.automaton.actions) {
        // the label factor of each operator maps basis labels to basis
        // labels up to a phase: check columns of the full operator on
        // |0>|0>|l> have a single nonzero label block
        for (std::size_t il = 0; il < twoL; ++il) {
            CVector out = op.apply(kron(kron(e(2, 0), e(2, 0)), e(twoL, il)));
            std::size_t nonzeroLabels = 0;
            for (std::size_t jl = 0; jl < twoL; ++jl) {
                bool any = false;
                for (std::size_t ia = 0; ia < 2; ++ia)
                    for (std::size_t ib = 0; ib < 2; ++ib)
                        any = any || !out[enc.stateIndex(ia, ib, jl)].isZero();
                if (any) ++nonzeroLabels;
            }
            CHECK(nonzeroLabels == 1);
        }
    }
}

TEST_CASE("lockstep simulation decodes to the classical trace") {
    NormalizedProgram prog = normalize(parse(kP1));
    Encoding enc = encode(prog);
    ClassicalRun classical = runClassical(prog, 100);
    Sigma0Run q = runSigma0(enc, 100);
    REQUIRE(q.states.size() >= classical.haltStep + 1);

    for (std::size_t i = 0; i <= classical.haltStep; ++i) {
        const ClassicalState& cs = classical.trace[i];
        // the label component must be concentrated on |x_i>
        std::size_t li = enc.program.labelIndex(cs.label);
        for (std::size_t jl = 0; jl < 2 * enc.labelCount; ++jl) {
            bool any = false;
            for (std::size_t ia = 0; ia < 2; ++ia)
                for (std::size_t ib = 0; ib < 2; ++ib)
                    any = any || !q.states[i][enc.stateIndex(ia, ib, jl)].isZero();
            CHECK(any == (jl == li));
        }
    }

    CHECK(q.states[0] == kron(kron(e(2, 0), e(2, 0)),
                              e(2 * enc.labelCount, enc.program.labelIndex("l0"))));
}

TEST_CASE("counter encoding is injective along the trace") {
    // G^m|0> = G^n|0> forces m = n for the counter values that occur
    NormalizedProgram prog = normalize(parse(std::string("init a 3\n") + kP1));
    Encoding enc = encode(prog);
    ClassicalRun classical = runClassical(prog, 100);
    Sigma0Run q = runSigma0(enc, 100);
    std::map<std::string, CVector> byValue;
    for (std::size_t i = 0; i < q.states.size(); ++i) {
        std::string key = classical.trace[i].a.get_str();
        // extract the H_a component against |0>_b |label>
        std::size_t li = enc.program.labelIndex(classical.trace[i].label);
        CVector aComp(2);
        bool bIsZeroState = classical.trace[i].b == 0;
        if (!bIsZeroState) continue;
        for (std::size_t ia = 0; ia < 2; ++ia) aComp[ia] = q.states[i][enc.stateIndex(ia, 0, li)];
        auto [it, inserted] = byValue.emplace(key, aComp);
        if (!inserted) CHECK(Subspace::span(2, {it->second}) == Subspace::span(2, {aComp}));
    }
    // distinct counter values give distinct rays
    for (auto it = byValue.begin(); it != byValue.end(); ++it)
        for (auto jt = std::next(it); jt != byValue.end(); ++jt)
            CHECK(Subspace::span(2, {it->second}) != Subspace::span(2, {jt->second}));
}

TEST_CASE("halting shows up exactly at the halt step") {
    NormalizedProgram prog = normalize(parse(kP1));
    Encoding enc = encode(prog);
    ClassicalRun classical = runClassical(prog, 100);
    Sigma0Run q = runSigma0(enc, 100);

    auto hit = checkFVnotW(enc, q.states);
    REQUIRE(hit.has_value());
    CHECK(*hit == classical.haltStep);

    // first V0 hit coincides
    std::size_t firstV0 = q.states.size();
    for (std::size_t i = 0; i < q.states.size(); ++i)
        if (enc.v0.contains(q.states[i])) {
            firstV0 = i;
            break;
        }
    CHECK(firstV0 == classical.haltStep);

    // strictly before the halt step, V∧¬W never holds
    for (std::size_t i = 0; i < classical.haltStep; ++i)
        CHECK((!enc.v.contains(q.states[i]) || enc.w.contains(q.states[i])));
}

TEST_CASE("non-halting program never hits the target") {
    Encoding enc = encode(normalize(parse(kP2)));
    Sigma0Run q = runSigma0(enc, 500);
    CHECK_FALSE(checkFVnotW(enc, q.states).has_value());
}

TEST_CASE("every first deviation hits the target immediately") {
    NormalizedProgram prog = normalize(parse(kP1));
    Encoding enc = encode(prog);
    ClassicalRun classical = runClassical(prog, 100);
    Sigma0Run q = runSigma0(enc, 100);

    for (std::size_t k = 0; k < classical.haltStep; ++k) {
        std::string matched = enc.matchedAction(classical.trace[k]);
        for (const auto& [name, op] : enc.automaton.actions) {
            if (name == matched) continue;
            CVector next = op.apply(q.states[k]);
            CHECK(enc.v.contains(next));
            CHECK_FALSE(enc.w.contains(next));
        }
    }
}

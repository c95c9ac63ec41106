#include "qreach/minsky.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qreach {
namespace minsky {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::vector<std::string> tokens;
    std::istringstream in(clean);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

Counter parseCounter(const std::string& name) {
    if (name == "a") return Counter::A;
    if (name == "b") return Counter::B;
    throw std::invalid_argument("minsky: counter name must be 'a' or 'b', got '" + name + "'");
}

}  // namespace

MinskyProgram parse(const std::string& text) {
    MinskyProgram program;
    std::istringstream in(text);
    std::string line;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "init") {
            if (tokens.size() != 3)
                throw std::invalid_argument("minsky: malformed init line: " + line);
            mpz_class value(tokens[2]);
            if (value < 0) throw std::invalid_argument("minsky: negative initial counter");
            (parseCounter(tokens[1]) == Counter::A ? program.initialA : program.initialB) = value;
            continue;
        }
        // "label:" or "label :"
        std::string label = tokens[0];
        std::size_t rest = 1;
        if (label.back() == ':') {
            label.pop_back();
        } else if (tokens.size() > 1 && tokens[1] == ":") {
            rest = 2;
        } else {
            throw std::invalid_argument("minsky: missing ':' after label: " + line);
        }
        if (label.empty()) throw std::invalid_argument("minsky: empty label: " + line);
        if (!seen.insert(label).second)
            throw std::invalid_argument("minsky: duplicate label '" + label + "'");
        if (rest >= tokens.size())
            throw std::invalid_argument("minsky: missing instruction: " + line);

        Instruction ins;
        const std::string& op = tokens[rest];
        if (op == "inc") {
            if (tokens.size() != rest + 4 || tokens[rest + 2] != "goto")
                throw std::invalid_argument("minsky: malformed inc: " + line);
            ins.kind = Instruction::Kind::Inc;
            ins.counter = parseCounter(tokens[rest + 1]);
            ins.next = tokens[rest + 3];
        } else if (op == "tdz") {
            if (tokens.size() != rest + 6 || tokens[rest + 2] != "goto" || tokens[rest + 4] != "else")
                throw std::invalid_argument("minsky: malformed tdz: " + line);
            ins.kind = Instruction::Kind::TestDec;
            ins.counter = parseCounter(tokens[rest + 1]);
            ins.zeroTarget = tokens[rest + 3];
            ins.nonzeroTarget = tokens[rest + 5];
        } else if (op == "halt") {
            if (tokens.size() != rest + 1)
                throw std::invalid_argument("minsky: malformed halt: " + line);
            ins.kind = Instruction::Kind::Halt;
        } else {
            throw std::invalid_argument("minsky: unknown instruction '" + op + "'");
        }
        program.instructions.emplace_back(label, ins);
    }

    if (program.instructions.empty()) throw std::invalid_argument("minsky: empty program");
    std::size_t halts = 0;
    for (const auto& [label, ins] : program.instructions)
        if (ins.kind == Instruction::Kind::Halt) ++halts;
    if (halts != 1) throw std::invalid_argument("minsky: program must have exactly one halt");
    if (program.instructions.back().second.kind != Instruction::Kind::Halt)
        throw std::invalid_argument("minsky: halt must be the last instruction");
    auto resolves = [&](const std::string& target) {
        for (const auto& [label, ins] : program.instructions)
            if (label == target) return true;
        return false;
    };
    for (const auto& [label, ins] : program.instructions) {
        if (ins.kind == Instruction::Kind::Inc && !resolves(ins.next))
            throw std::invalid_argument("minsky: unknown label '" + ins.next + "'");
        if (ins.kind == Instruction::Kind::TestDec) {
            if (!resolves(ins.zeroTarget))
                throw std::invalid_argument("minsky: unknown label '" + ins.zeroTarget + "'");
            if (!resolves(ins.nonzeroTarget))
                throw std::invalid_argument("minsky: unknown label '" + ins.nonzeroTarget + "'");
        }
    }
    return program;
}

std::size_t NormalizedProgram::labelIndex(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].first == label) return i;
    throw std::invalid_argument("minsky: unknown normalized label '" + label + "'");
}

NormalizedProgram normalize(const MinskyProgram& p) {
    NormalizedProgram out;
    const std::string firstUserLabel = p.instructions.front().first;

    // fold initial counters to zero with prepended increments
    auto prepend = [&](Counter c, const mpz_class& count, const std::string& prefix,
                       const std::string& follow) {
        if (count > 100000) throw std::invalid_argument("minsky: initial counter too large");
        unsigned long n = count.get_ui();
        for (unsigned long i = 0; i < n; ++i) {
            NormalizedInstruction ins;
            ins.cls = (c == Counter::A) ? LabelClass::Inc1a : LabelClass::Inc1b;
            ins.next = (i + 1 < n) ? prefix + std::to_string(i + 1) : follow;
            out.labels.emplace_back(prefix + std::to_string(i), ins);
        }
    };
    const std::string bPrefix = "__init_b_";
    const std::string aFollow = (p.initialB > 0) ? bPrefix + "0" : firstUserLabel;
    prepend(Counter::A, p.initialA, "__init_a_", aFollow);
    prepend(Counter::B, p.initialB, bPrefix, firstUserLabel);
    out.startLabel = out.labels.empty() ? firstUserLabel : out.labels.front().first;

    for (const auto& [label, ins] : p.instructions) {
        switch (ins.kind) {
            case Instruction::Kind::Inc: {
                NormalizedInstruction n;
                n.cls = (ins.counter == Counter::A) ? LabelClass::Inc1a : LabelClass::Inc1b;
                n.next = ins.next;
                out.labels.emplace_back(label, n);
                break;
            }
            case Instruction::Kind::TestDec: {
                const bool isA = ins.counter == Counter::A;
                NormalizedInstruction test;
                test.cls = isA ? LabelClass::Test2a : LabelClass::Test2b;
                test.zeroNext = label + "'";
                test.nonzeroNext = label + "''";
                out.labels.emplace_back(label, test);
                NormalizedInstruction zero;
                zero.cls = isA ? LabelClass::Zero2a : LabelClass::Zero2b;
                zero.next = ins.zeroTarget;
                out.labels.emplace_back(label + "'", zero);
                NormalizedInstruction dec;
                dec.cls = isA ? LabelClass::Dec2a : LabelClass::Dec2b;
                dec.next = ins.nonzeroTarget;
                out.labels.emplace_back(label + "''", dec);
                break;
            }
            case Instruction::Kind::Halt: {
                NormalizedInstruction halt;
                halt.cls = LabelClass::Halt;
                halt.next = label;  // l_m: goto l_m
                out.labels.emplace_back(label, halt);
                out.haltLabel = label;
                break;
            }
        }
    }
    return out;
}

ClassicalRun runClassical(const NormalizedProgram& p, std::size_t maxSteps) {
    ClassicalRun run{{}, false, 0};
    ClassicalState state{0, 0, p.startLabel};
    for (std::size_t step = 0; step <= maxSteps; ++step) {
        run.trace.push_back(state);
        if (state.label == p.haltLabel) {
            run.halted = true;
            run.haltStep = step;
            break;
        }
        const auto& ins = p.labels[p.labelIndex(state.label)].second;
        switch (ins.cls) {
            case LabelClass::Inc1a: ++state.a; state.label = ins.next; break;
            case LabelClass::Inc1b: ++state.b; state.label = ins.next; break;
            case LabelClass::Test2a:
                state.label = (state.a == 0) ? ins.zeroNext : ins.nonzeroNext;
                break;
            case LabelClass::Test2b:
                state.label = (state.b == 0) ? ins.zeroNext : ins.nonzeroNext;
                break;
            case LabelClass::Zero2a:
            case LabelClass::Zero2b: state.label = ins.next; break;
            case LabelClass::Dec2a: --state.a; state.label = ins.next; break;
            case LabelClass::Dec2b: --state.b; state.label = ins.next; break;
            case LabelClass::Halt: break;
        }
    }
    return run;
}

namespace {

// G = |+><+| + e^{iθ}|-><-| with e^{iθ} = (3+4i)/5, in the computational
// basis. Fixed once so every encoding is bit-identical.
Matrix gMatrix() {
    Matrix g(2, 2);
    g.at(0, 0) = g.at(1, 1) = GaussianRational(makeRational(4, 5), makeRational(2, 5));
    g.at(0, 1) = g.at(1, 0) = GaussianRational(makeRational(1, 5), makeRational(-2, 5));
    return g;
}

// Label-space permutation per the O_xy transition rules; |x> -> |y>, every
// other plain label to its hatted twin, |ŷ> -> |x̂>, every other hatted
// label back to plain.
Matrix labelPermutation(std::size_t labelCount, std::size_t x, std::size_t y) {
    const std::size_t n = 2 * labelCount;
    auto hat = [&](std::size_t l) { return labelCount + l; };
    Matrix o(n, n);
    o.at(y, x) = GaussianRational(1);
    for (std::size_t l = 0; l < labelCount; ++l)
        if (l != x) o.at(hat(l), l) = GaussianRational(1);
    o.at(hat(x), hat(y)) = GaussianRational(1);
    for (std::size_t l = 0; l < labelCount; ++l)
        if (l != y) o.at(l, hat(l)) = GaussianRational(1);
    // mismatched plain labels must land in the hatted half
    for (std::size_t z = 0; z < labelCount; ++z) {
        if (z == x) continue;
        for (std::size_t r = 0; r < labelCount; ++r)
            if (!o.at(r, z).isZero())
                throw std::logic_error("minsky: label permutation violates the hat-image rule");
    }
    return o;
}

}  // namespace

std::size_t Encoding::stateIndex(std::size_t ia, std::size_t ib, std::size_t il) const {
    return (ia * 2 + ib) * (2 * labelCount) + il;
}

std::string Encoding::matchedAction(const ClassicalState& s) const {
    const auto& ins = program.labels[program.labelIndex(s.label)].second;
    if (ins.cls == LabelClass::Test2a) return s.label + (s.a == 0 ? "0" : "1");
    if (ins.cls == LabelClass::Test2b) return s.label + (s.b == 0 ? "0" : "1");
    return s.label;
}

Encoding encode(const NormalizedProgram& p) {
    const std::size_t labelCount = p.size();
    const std::size_t dim = 8 * labelCount;
    const Matrix g = gMatrix();
    const Matrix gInv = g.conjTranspose();
    const Matrix i2 = Matrix::identity(2);
    const Matrix i4 = Matrix::identity(4);

    auto counterOp = [&](LabelClass cls) -> Matrix {
        switch (cls) {
            case LabelClass::Inc1a: return g.kron(i2);
            case LabelClass::Inc1b: return i2.kron(g);
            case LabelClass::Dec2a: return gInv.kron(i2);
            case LabelClass::Dec2b: return i2.kron(gInv);
            default: return i4;
        }
    };

    std::vector<std::pair<std::string, ScaledOperator>> actions;
    for (const auto& [label, ins] : p.labels) {
        const std::size_t x = p.labelIndex(label);
        if (ins.cls == LabelClass::Test2a || ins.cls == LabelClass::Test2b) {
            Matrix oZero = labelPermutation(labelCount, x, p.labelIndex(ins.zeroNext));
            Matrix oNonzero = labelPermutation(labelCount, x, p.labelIndex(ins.nonzeroNext));
            actions.emplace_back(label + "0",
                                 ScaledOperator::validate(i4.kron(oZero), Rational(1)));
            actions.emplace_back(label + "1",
                                 ScaledOperator::validate(i4.kron(oNonzero), Rational(1)));
        } else {
            Matrix o = labelPermutation(labelCount, x, p.labelIndex(ins.next));
            actions.emplace_back(label,
                                 ScaledOperator::validate(counterOp(ins.cls).kron(o), Rational(1)));
        }
    }

    // unit-vector spans for the V/W building blocks; label slots are
    // plain (il) or hatted (labelCount + il)
    auto block = [&](const std::vector<std::size_t>& aIdx, const std::vector<std::size_t>& bIdx,
                     const std::vector<std::size_t>& labelSlots) {
        std::vector<CVector> vecs;
        for (std::size_t ia : aIdx)
            for (std::size_t ib : bIdx)
                for (std::size_t il : labelSlots) {
                    CVector v(dim);
                    v[(ia * 2 + ib) * (2 * labelCount) + il] = GaussianRational(1);
                    vecs.push_back(std::move(v));
                }
        return Subspace::span(dim, vecs);
    };

    auto labelsOf = [&](LabelClass cls) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < p.labels.size(); ++i)
            if (p.labels[i].second.cls == cls) out.push_back(i);
        return out;
    };
    std::vector<std::size_t> hatted;
    for (std::size_t i = 0; i < labelCount; ++i) hatted.push_back(labelCount + i);
    const std::vector<std::size_t> both{0, 1}, zeroOnly{0};

    Subspace v0 = block(both, both, {p.labelIndex(p.haltLabel)});
    Subspace vHat = block(both, both, hatted);
    Subspace v1a = block(both, both, labelsOf(LabelClass::Zero2a));
    Subspace v1b = block(both, both, labelsOf(LabelClass::Zero2b));
    Subspace v2a = block(zeroOnly, both, labelsOf(LabelClass::Dec2a));
    Subspace v2b = block(both, zeroOnly, labelsOf(LabelClass::Dec2b));
    Subspace wa = block(zeroOnly, both, labelsOf(LabelClass::Zero2a));
    Subspace wb = block(both, zeroOnly, labelsOf(LabelClass::Zero2b));

    Subspace v = sum(sum(sum(v0, vHat), sum(v1a, v1b)), sum(v2a, v2b));
    Subspace w = sum(wa, wb);

    CVector start(dim);
    start[p.labelIndex(p.startLabel)] = GaussianRational(1);  // |0>|0>|l0>
    QuantumAutomaton automaton(dim, std::move(actions), Subspace::span(dim, {start}));

    return Encoding{std::move(automaton), std::move(v), std::move(w), std::move(v0),
                    p, labelCount};
}

Sigma0Run runSigma0(const Encoding& e, std::size_t maxSteps) {
    ClassicalRun classical = runClassical(e.program, maxSteps);
    Sigma0Run run;
    CVector state(e.automaton.dim);
    state[e.stateIndex(0, 0, e.program.labelIndex(e.program.startLabel))] = GaussianRational(1);
    run.states.push_back(state);
    for (std::size_t i = 0; i + 1 < classical.trace.size(); ++i) {
        std::string action = e.matchedAction(classical.trace[i]);
        run.actions.push_back(action);
        state = e.automaton.action(action).apply(state);
        run.states.push_back(state);
    }
    return run;
}

std::optional<std::size_t> checkFVnotW(const Encoding& e, const std::vector<CVector>& states) {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (e.v.contains(states[i]) && !e.w.contains(states[i])) return i;
    return std::nullopt;
}

}  // namespace minsky
}  // namespace qreach

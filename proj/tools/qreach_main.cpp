#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qreach/glob_reach.hpp"
#include "qreach/inf_reach.hpp"
#include "qreach/json_io.hpp"
#include "qreach/minsky.hpp"
#include "qreach/oracle.hpp"
#include "qreach/period.hpp"
#include "qreach/single_reach.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUnknown = 2;
constexpr int kUnsupported = 3;
constexpr int kInputError = 4;

qreach::Json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    qreach::Json j;
    in >> j;
    return j;
}

std::string loadText(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void emit(const qreach::Json& j, bool asJson, const std::string& plain) {
    if (asJson)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

std::string joinWord(const std::vector<std::string>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i];
    }
    return out;
}

qreach::CVector startState(const qreach::QuantumAutomaton& a, const std::string& statePath) {
    if (!statePath.empty()) return qreach::vectorFromJson(loadJson(statePath));
    if (a.initial.dimension() == 0)
        throw std::invalid_argument("initial subspace is zero; pass an explicit state");
    return a.initial.basis().row(0);
}

int reportVerdict(const qreach::Verdict& v, bool asJson) {
    qreach::Json j{{"property", std::string(1, v.property)},
                   {"holds", v.holds},
                   {"iterations", v.iterations}};
    std::ostringstream plain;
    plain << v.property << (v.holds ? " holds" : " fails") << " (iterations: " << v.iterations
          << ")\n";
    if (v.certificate) {
        j["certificate"] = qreach::toJson(*v.certificate);
        plain << "certificate: invariant member of dimension " << v.certificate->dimension()
              << " containing the initial subspace\n";
    }
    if (v.counterexampleStart) {
        j["counterexampleStart"] = qreach::toJson(*v.counterexampleStart);
        j["counterexampleWord"] = v.counterexampleWord;
        plain << "counterexample word: "
              << (v.counterexampleWord.empty() ? "(empty)" : joinWord(v.counterexampleWord))
              << "\n";
    }
    emit(j, asJson, plain.str());
    return v.holds ? kHolds : kFails;
}

int reportSweep(const qreach::oracle::SweepReport& r, bool asJson) {
    qreach::Json j{{"property", r.property}, {"bound", r.bound}};
    std::ostringstream plain;
    switch (r.verdict) {
        case qreach::oracle::SweepReport::Verdict::Confirmed:
            j["verdict"] = "confirmed";
            plain << r.property << " confirmed up to bound " << r.bound << " ("
                  << r.exploredWords << " words)\n";
            break;
        case qreach::oracle::SweepReport::Verdict::Refuted:
            j["verdict"] = "refuted";
            j["witness"] = r.witness;
            plain << r.property << " refuted; witness word: "
                  << (r.witness.empty() ? "(empty)" : joinWord(r.witness)) << "\n";
            break;
        case qreach::oracle::SweepReport::Verdict::Inconclusive:
            j["verdict"] = "inconclusive";
            plain << r.property << " inconclusive at bound " << r.bound << "\n";
            break;
    }
    j["exploredWords"] = r.exploredWords;
    if (!r.tailHits.empty()) {
        j["tailHits"] = r.tailHits;
        plain << "tail hits per sampled word: ";
        for (std::size_t i = 0; i < r.tailHits.size(); ++i)
            plain << (i ? " " : "") << r.tailHits[i];
        plain << "\n";
    }
    emit(j, asJson, plain.str());
    switch (r.verdict) {
        case qreach::oracle::SweepReport::Verdict::Confirmed: return kHolds;
        case qreach::oracle::SweepReport::Verdict::Refuted: return kFails;
        default: return kUnknown;
    }
}

int runCheck(const std::string& prop, const std::string& automatonPath,
             const std::string& formulaPath, const std::string& statePath, std::size_t bound,
             bool exact, bool force, bool trace, bool asJson) {
    qreach::QuantumAutomaton a = qreach::automatonFromJson(loadJson(automatonPath));
    qreach::Formula::Ptr f = qreach::formulaFromJson(loadJson(formulaPath), a.dim);

    if (prop == "F") {
        if (exact) {
            std::cerr << "exact F decision is not supported; only the bounded semi-decision "
                         "(drop --exact) is available\n";
            return kUnsupported;
        }
        auto report = qreach::oracle::boundedF(a, *f, startState(a, statePath), bound, force);
        return reportSweep(report, asJson);
    }

    if (!f->isPositive()) {
        std::cerr << "property " << prop
                  << " is only decidable for negation-free formulas; with negation the "
                     "problem is undecidable\n";
        return kUnsupported;
    }

    if (prop == "G") return reportVerdict(qreach::decideG(a, *f), asJson);
    if (prop == "U") return reportVerdict(qreach::decideU(a, *f), asJson);

    qreach::IResult result = qreach::decideI(a, *f, trace);
    if (trace && !asJson) {
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            std::cout << "iteration " << i + 1 << ": " << qreach::toJson(result.trace[i]).dump()
                      << "\n";
    }
    if (trace && asJson) {
        qreach::Json steps = qreach::Json::array();
        for (const auto& x : result.trace) steps.push_back(qreach::toJson(x));
        std::cout << qreach::Json{{"trace", steps}}.dump(2) << "\n";
    }
    return reportVerdict(result.verdict, asJson);
}

int runPeriod(const std::string& operatorPath, bool asJson) {
    qreach::ScaledOperator op = qreach::operatorFromJson(loadJson(operatorPath));
    qreach::PeriodResult r = qreach::period(op);
    qreach::Json j{{"p", r.p}, {"witnesses", r.witnesses}};
    std::ostringstream plain;
    plain << "p = " << r.p << "\nwitness orders:";
    for (unsigned n : r.witnesses) plain << " " << n;
    plain << "\n";
    emit(j, asJson, plain.str());
    return kHolds;
}

int runSkolem(const std::string& uPath, const std::string& mPath, const std::string& vPath,
              unsigned long bound, bool asJson) {
    qreach::CVector u = qreach::vectorFromJson(loadJson(uPath));
    qreach::ScaledOperator m = qreach::operatorFromJson(loadJson(mPath));
    qreach::CVector v = qreach::vectorFromJson(loadJson(vPath));
    qreach::ZeroSetClass c = qreach::classifyZeroSet(u, m, v, bound);
    qreach::Json j;
    std::ostringstream plain;
    int code = kHolds;
    switch (c.kind) {
        case qreach::ZeroSetClass::Kind::All:
            j = {{"class", "all"}};
            plain << "zero set: all of N\n";
            break;
        case qreach::ZeroSetClass::Kind::Infinite:
            j = {{"class", "infinite"}};
            plain << "zero set: infinite (and not cofinite)\n";
            break;
        case qreach::ZeroSetClass::Kind::FiniteNonemptyWitnessed:
            j = {{"class", "finite"}, {"witness", c.witness}};
            plain << "zero set: finite, nonempty; first zero at n = " << c.witness << "\n";
            break;
        case qreach::ZeroSetClass::Kind::FiniteEmptyUpTo:
            j = {{"class", "finiteEmptyUpTo"}, {"bound", c.bound}};
            plain << "zero set: finite; no zero found for n <= " << c.bound
                  << " (emptiness beyond the bound is open)\n";
            code = kUnknown;
            break;
    }
    emit(j, asJson, plain.str());
    return code;
}

int runMinskyEncode(const std::string& progPath, const std::string& outPath,
                    const std::string& vPath, const std::string& wPath) {
    auto enc = qreach::minsky::encode(qreach::minsky::normalize(qreach::minsky::parse(
        loadText(progPath))));
    auto writeTo = [](const std::string& path, const qreach::Json& j) {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write '" + path + "'");
        out << j.dump(2) << "\n";
    };
    writeTo(outPath, qreach::toJson(enc.automaton));
    if (!vPath.empty()) writeTo(vPath, qreach::toJson(enc.v));
    if (!wPath.empty()) writeTo(wPath, qreach::toJson(enc.w));
    std::cout << "encoded " << enc.program.size() << " labels into dimension "
              << enc.automaton.dim << " (" << enc.automaton.actions.size() << " actions)\n";
    return kHolds;
}

int runMinskyRun(const std::string& progPath, std::size_t maxSteps, bool asJson) {
    auto prog = qreach::minsky::normalize(qreach::minsky::parse(loadText(progPath)));
    auto run = qreach::minsky::runClassical(prog, maxSteps);
    qreach::Json steps = qreach::Json::array();
    std::ostringstream plain;
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
        const auto& s = run.trace[i];
        steps.push_back({{"step", i},
                         {"label", s.label},
                         {"a", s.a.get_str()},
                         {"b", s.b.get_str()}});
        plain << i << ": " << s.label << "  a=" << s.a.get_str() << " b=" << s.b.get_str()
              << "\n";
    }
    if (run.halted)
        plain << "halted at step " << run.haltStep << "\n";
    else
        plain << "did not halt within " << maxSteps << " steps\n";
    qreach::Json j{{"halted", run.halted}, {"trace", steps}};
    if (run.halted) j["haltStep"] = run.haltStep;
    emit(j, asJson, plain.str());
    return run.halted ? kHolds : kUnknown;
}

int runMinskyDemo(const std::string& progPath, std::size_t bound, bool asJson) {
    auto prog = qreach::minsky::normalize(qreach::minsky::parse(loadText(progPath)));
    auto enc = qreach::minsky::encode(prog);
    auto classical = qreach::minsky::runClassical(prog, bound);
    auto sigma0 = qreach::minsky::runSigma0(enc, bound);
    auto hit = qreach::minsky::checkFVnotW(enc, sigma0.states);

    qreach::Json rows = qreach::Json::array();
    std::ostringstream plain;
    plain << "step  label        a      b      action   V  W\n";
    for (std::size_t i = 0; i < sigma0.states.size(); ++i) {
        const auto& cs = classical.trace[i];
        bool inV = enc.v.contains(sigma0.states[i]);
        bool inW = enc.w.contains(sigma0.states[i]);
        std::string action = i < sigma0.actions.size() ? sigma0.actions[i] : "-";
        rows.push_back({{"step", i},
                        {"label", cs.label},
                        {"a", cs.a.get_str()},
                        {"b", cs.b.get_str()},
                        {"action", action},
                        {"inV", inV},
                        {"inW", inW}});
        plain << i << "  " << cs.label << "  a=" << cs.a.get_str() << " b=" << cs.b.get_str()
              << "  " << action << "  " << (inV ? "V" : ".") << " " << (inW ? "W" : ".")
              << "\n";
    }
    qreach::Json j{{"bound", bound}, {"halted", classical.halted}, {"table", rows}};
    if (classical.halted) {
        j["haltStep"] = classical.haltStep;
        plain << "classical halt step: " << classical.haltStep << "\n";
    } else {
        plain << "classical run did not halt within " << bound << " steps\n";
    }
    if (hit) {
        j["firstVnotW"] = *hit;
        plain << "first index with V and not W along the matched path: " << *hit << "\n";
    } else {
        plain << "no index <= " << bound << " satisfies V and not W along the matched path\n";
    }
    emit(j, asJson, plain.str());
    if (classical.halted && hit && *hit == classical.haltStep) return kHolds;
    if (!classical.halted && !hit) return kUnknown;
    return kFails;
}

int runOracle(const std::string& prop, const std::string& automatonPath,
              const std::string& formulaPath, const std::string& statePath, std::size_t bound,
              std::size_t window, std::size_t samples, unsigned seed, bool force, bool asJson) {
    qreach::QuantumAutomaton a = qreach::automatonFromJson(loadJson(automatonPath));
    qreach::Formula::Ptr f = qreach::formulaFromJson(loadJson(formulaPath), a.dim);
    qreach::CVector start = startState(a, statePath);
    if (prop == "F") return reportSweep(qreach::oracle::boundedF(a, *f, start, bound, force), asJson);
    if (prop == "G") return reportSweep(qreach::oracle::boundedG(a, *f, start, bound, force), asJson);
    return reportSweep(qreach::oracle::boundedIU(a, *f, start, bound, window, samples, seed),
                       asJson);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for reachability in quantum automata"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "machine-readable JSON output");

    // check
    auto* check = app.add_subcommand("check", "decide a reachability property");
    std::string prop, automatonPath, formulaPath, statePath;
    std::size_t bound = 20;
    bool exact = false, force = false, trace = false;
    check->add_option("--prop", prop, "property: G, U, I or F")
        ->required()
        ->check(CLI::IsMember({"G", "U", "I", "F"}));
    check->add_option("--automaton", automatonPath, "automaton JSON file")->required();
    check->add_option("--formula", formulaPath, "formula JSON file")->required();
    check->add_option("--state", statePath, "start state JSON (F only; default: initial basis)");
    check->add_option("--bound", bound, "word-length bound for the F semi-decision");
    check->add_flag("--exact", exact, "request an exact F decision (not supported)");
    check->add_flag("--force", force, "skip the word-tree size guard");
    check->add_flag("--trace", trace, "dump each refinement iteration (I only)");

    // period
    auto* periodCmd = app.add_subcommand("period", "period of a scaled-unitary operator");
    std::string operatorPath;
    periodCmd->add_option("--operator", operatorPath, "operator JSON file")->required();

    // skolem
    auto* skolem = app.add_subcommand("skolem", "classify the zero set of u^T M^n v");
    std::string uPath, mPath, vPath;
    unsigned long skolemBound = 10000;
    skolem->add_option("--u", uPath, "row functional u as a vector JSON file")->required();
    skolem->add_option("--m", mPath, "scaled-unitary M JSON file")->required();
    skolem->add_option("--v", vPath, "vector v JSON file")->required();
    skolem->add_option("--bound", skolemBound, "sweep bound for the finite case");

    // minsky
    auto* minskyCmd = app.add_subcommand("minsky", "two-counter machine reduction");
    minskyCmd->require_subcommand(1);
    std::string progPath, outPath, encVPath, encWPath;
    std::size_t maxSteps = 1000, demoBound = 200;
    auto* encodeCmd = minskyCmd->add_subcommand("encode", "compile a program to an automaton");
    encodeCmd->add_option("program", progPath, "program file")->required();
    encodeCmd->add_option("--out", outPath, "automaton output JSON")->required();
    encodeCmd->add_option("--v", encVPath, "V subspace output JSON");
    encodeCmd->add_option("--w", encWPath, "W subspace output JSON");
    auto* runCmd = minskyCmd->add_subcommand("run", "run the classical interpreter");
    runCmd->add_option("program", progPath, "program file")->required();
    runCmd->add_option("--max-steps", maxSteps, "step limit");
    auto* demoCmd = minskyCmd->add_subcommand("demo", "lockstep classical/quantum evidence table");
    demoCmd->add_option("program", progPath, "program file")->required();
    demoCmd->add_option("--bound", demoBound, "step limit");

    // oracle
    auto* oracleCmd = app.add_subcommand("oracle", "bounded sweeps over the word tree");
    std::string oProp, oAutomaton, oFormula, oState;
    std::size_t oBound = 10, oWindow = 5, oSamples = 50;
    unsigned oSeed = 0;
    bool oForce = false;
    oracleCmd->add_option("--prop", oProp, "property: F, G or IU")
        ->required()
        ->check(CLI::IsMember({"F", "G", "IU"}));
    oracleCmd->add_option("--automaton", oAutomaton, "automaton JSON file")->required();
    oracleCmd->add_option("--formula", oFormula, "formula JSON file")->required();
    oracleCmd->add_option("--state", oState, "start state JSON (default: initial basis)");
    oracleCmd->add_option("--bound", oBound, "word-length bound");
    oracleCmd->add_option("--window", oWindow, "tail window for IU sampling");
    oracleCmd->add_option("--samples", oSamples, "sampled words for IU");
    oracleCmd->add_option("--seed", oSeed, "sampling seed");
    oracleCmd->add_flag("--force", oForce, "skip the word-tree size guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check)
            return runCheck(prop, automatonPath, formulaPath, statePath, bound, exact, force,
                            trace, asJson);
        if (*periodCmd) return runPeriod(operatorPath, asJson);
        if (*skolem) return runSkolem(uPath, mPath, vPath, skolemBound, asJson);
        if (*minskyCmd) {
            if (*encodeCmd) return runMinskyEncode(progPath, outPath, encVPath, encWPath);
            if (*runCmd) return runMinskyRun(progPath, maxSteps, asJson);
            return runMinskyDemo(progPath, demoBound, asJson);
        }
        if (*oracleCmd)
            return runOracle(oProp, oAutomaton, oFormula, oState, oBound, oWindow, oSamples,
                             oSeed, oForce, asJson);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

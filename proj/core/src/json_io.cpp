#include "qreach/json_io.hpp"

#include <stdexcept>

namespace qreach {

Json toJson(const GaussianRational& z) {
    return Json::array({toString(z.re), toString(z.im)});
}

Json toJson(const CVector& v) {
    Json j = Json::array();
    for (const auto& z : v) j.push_back(toJson(z));
    return j;
}

Json toJson(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m.at(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

Json toJson(const Subspace& s) {
    return Json{{"dim", s.ambientDim()}, {"basis", toJson(s.basis())}};
}

Json toJson(const UnionSpace& x) {
    Json members = Json::array();
    for (const auto& m : x.members()) members.push_back(toJson(m));
    return Json{{"dim", x.ambientDim()}, {"members", std::move(members)}};
}

Json toJson(const ScaledOperator& t) {
    return Json{{"scale", toString(t.scale())}, {"matrix", toJson(t.matrix())}};
}

Json toJson(const QuantumAutomaton& a) {
    Json ops = Json::object();
    for (const auto& [name, op] : a.actions) ops[name] = toJson(op);
    return Json{{"dim", a.dim}, {"operators", std::move(ops)}, {"initial", toJson(a.initial)}};
}

Json toJson(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return Json{{"atom", toJson(f.atomSubspace())}};
        case Formula::Kind::Not:
            return Json{{"not", toJson(*f.children()[0])}};
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Json children = Json::array();
            for (const auto& c : f.children()) children.push_back(toJson(*c));
            return Json{{f.kind() == Formula::Kind::And ? "and" : "or", std::move(children)}};
        }
    }
    throw std::logic_error("formula: unknown node kind");
}

GaussianRational gaussianFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("json: gaussian rational must be a 2-element array");
    return {parseRational(j[0].get<std::string>()), parseRational(j[1].get<std::string>())};
}

CVector vectorFromJson(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: vector must be an array");
    CVector v;
    for (const auto& e : j) v.push_back(gaussianFromJson(e));
    return v;
}

namespace {
Matrix matrixFromJson(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: matrix must be an array of rows");
    std::vector<CVector> rows;
    for (const auto& r : j) rows.push_back(vectorFromJson(r));
    return Matrix::fromRows(rows);
}
}  // namespace

Subspace subspaceFromJson(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<CVector> rows;
    for (const auto& r : j.at("basis")) rows.push_back(vectorFromJson(r));
    return Subspace::span(dim, rows);
}

UnionSpace unionFromJson(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Subspace> members;
    for (const auto& m : j.at("members")) members.push_back(subspaceFromJson(m));
    return UnionSpace::prune(dim, std::move(members));
}

ScaledOperator operatorFromJson(const Json& j, std::size_t expectDim) {
    Rational scale = parseRational(j.at("scale").get<std::string>());
    Matrix m = matrixFromJson(j.at("matrix"));
    if (expectDim != 0 && m.rows() != expectDim)
        throw std::invalid_argument("json: operator dimension mismatch");
    return ScaledOperator::validate(std::move(m), std::move(scale));
}

QuantumAutomaton automatonFromJson(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::pair<std::string, ScaledOperator>> actions;
    for (const auto& [name, op] : j.at("operators").items())
        actions.emplace_back(name, operatorFromJson(op, dim));
    return QuantumAutomaton(dim, std::move(actions), subspaceFromJson(j.at("initial")));
}

namespace {
Formula::Ptr formulaFromJsonImpl(const Json& j, std::size_t dim,
                                 const std::map<std::string, Subspace>& defs) {
    if (j.contains("atom")) {
        const Json& atom = j.at("atom");
        if (atom.is_string()) {
            auto it = defs.find(atom.get<std::string>());
            if (it == defs.end())
                throw std::invalid_argument("json: undefined subspace name '" +
                                            atom.get<std::string>() + "'");
            return Formula::atom(it->second);
        }
        Subspace s = subspaceFromJson(atom);
        if (s.ambientDim() != dim) throw std::invalid_argument("json: atom dimension mismatch");
        return Formula::atom(std::move(s));
    }
    if (j.contains("not")) return Formula::negation(formulaFromJsonImpl(j.at("not"), dim, defs));
    for (const char* key : {"and", "or"}) {
        if (!j.contains(key)) continue;
        std::vector<Formula::Ptr> children;
        for (const auto& c : j.at(key)) children.push_back(formulaFromJsonImpl(c, dim, defs));
        return key[0] == 'a' ? Formula::conjunction(std::move(children))
                             : Formula::disjunction(std::move(children));
    }
    throw std::invalid_argument("json: formula node must have atom/not/and/or");
}
}  // namespace

Formula::Ptr formulaFromJson(const Json& j, std::size_t dim) {
    std::map<std::string, Subspace> defs;
    const Json* body = &j;
    if (j.contains("defs")) {
        for (const auto& [name, s] : j.at("defs").items()) defs.emplace(name, subspaceFromJson(s));
        body = &j.at("formula");
    }
    return formulaFromJsonImpl(*body, dim, defs);
}

}  // namespace qreach

#pragma once

#include <nlohmann/json.hpp>

#include "qreach/automaton.hpp"
#include "qreach/union_space.hpp"

namespace qreach {

// All emitted JSON uses ordered_json and string-encoded rationals so that
// identical inputs produce byte-identical output and round-trips are
// lossless.
using Json = nlohmann::ordered_json;

Json toJson(const GaussianRational& z);  // ["re","im"]
Json toJson(const CVector& v);
Json toJson(const Matrix& m);
Json toJson(const Subspace& s);          // {"dim": d, "basis": [...]}
Json toJson(const UnionSpace& x);        // {"dim": d, "members": [...]}
Json toJson(const ScaledOperator& t);    // {"scale": "s", "matrix": [...]}
Json toJson(const QuantumAutomaton& a);  // {"dim", "operators", "initial"}
Json toJson(const Formula& f);

GaussianRational gaussianFromJson(const Json& j);
CVector vectorFromJson(const Json& j);
// Rows need not be in echelon form; canonicalized on load.
Subspace subspaceFromJson(const Json& j);
UnionSpace unionFromJson(const Json& j);
ScaledOperator operatorFromJson(const Json& j, std::size_t expectDim = 0);
QuantumAutomaton automatonFromJson(const Json& j);
// {"atom": Subspace|name} | {"not": F} | {"and": [F...]} | {"or": [F...]};
// an optional wrapper {"defs": {name: Subspace}, "formula": F} lets atoms
// reference named subspaces.
Formula::Ptr formulaFromJson(const Json& j, std::size_t dim);

}  // namespace qreach

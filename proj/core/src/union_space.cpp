#include "qreach/union_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace qreach {

UnionSpace UnionSpace::empty(std::size_t ambientDim) {
    return UnionSpace(ambientDim, {});
}

UnionSpace UnionSpace::prune(std::size_t ambientDim, std::vector<Subspace> members) {
    for (const auto& s : members)
        if (s.ambientDim() != ambientDim)
            throw std::invalid_argument("union: ambient dimension mismatch");
    std::vector<Subspace> kept;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Subspace& s = members[i];
        if (s.isZero()) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < members.size() && !dominated; ++j) {
            if (i == j) continue;
            // drop s when strictly included, or when equal and j comes first
            if (members[j].includes(s) && (s != members[j] || j < i)) dominated = true;
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Subspace& a, const Subspace& b) { return compare(a, b) < 0; });
    return UnionSpace(ambientDim, std::move(kept));
}

bool UnionSpace::containsSubspace(const Subspace& s) const {
    if (s.ambientDim() != ambientDim_)
        throw std::invalid_argument("union: ambient dimension mismatch");
    if (s.isZero()) return true;
    for (const auto& m : members_)
        if (m.includes(s)) return true;
    return false;
}

bool UnionSpace::containsVector(const CVector& v) const {
    if (isZero(v)) return true;
    for (const auto& m : members_)
        if (m.contains(v)) return true;
    return false;
}

bool UnionSpace::includes(const UnionSpace& other) const {
    for (const auto& m : other.members_)
        if (!containsSubspace(m)) return false;
    return true;
}

UnionSpace unionIntersect(const UnionSpace& x, const UnionSpace& y) {
    if (x.ambientDim_ != y.ambientDim_)
        throw std::invalid_argument("union: ambient dimension mismatch");
    std::vector<Subspace> members;
    for (const auto& a : x.members_)
        for (const auto& b : y.members_) members.push_back(intersect(a, b));
    return UnionSpace::prune(x.ambientDim_, std::move(members));
}

UnionSpace unionImage(const ScaledOperator& t, const UnionSpace& x) {
    std::vector<Subspace> members;
    for (const auto& m : x.members_) members.push_back(t.image(m));
    return UnionSpace::prune(x.ambientDim_, std::move(members));
}

UnionSpace unionPreimage(const ScaledOperator& t, const UnionSpace& x) {
    std::vector<Subspace> members;
    for (const auto& m : x.members_) members.push_back(t.preimage(m));
    return UnionSpace::prune(x.ambientDim_, std::move(members));
}

bool properlyIncluded(const UnionSpace& a, const UnionSpace& b) {
    return b.includes(a) && !a.includes(b);
}

CVector vectorOutsideUnion(const Subspace& s, const UnionSpace& x) {
    if (x.containsSubspace(s))
        throw std::invalid_argument("vectorOutsideUnion: subspace lies inside the union");
    const auto& basis = s.basis();
    const std::size_t r = basis.rows();
    // ψ(t) = Σ_k t^k u_k misses each member for all but finitely many t,
    // so a short sweep over integer t always finds a witness.
    const std::size_t tries = (x.members().size() + 1) * (r + 1) * static_cast<std::size_t>(s.ambientDim() + 1) + 2;
    for (std::size_t t = 0; t < tries; ++t) {
        CVector v(s.ambientDim());
        GaussianRational power(1);
        const GaussianRational tv(static_cast<long>(t));
        for (std::size_t k = 0; k < r; ++k) {
            v = add(v, scaled(basis.row(k), power));
            power = power * tv;
        }
        if (isZero(v)) continue;
        bool inside = false;
        for (const auto& m : x.members())
            if (m.contains(v)) { inside = true; break; }
        if (!inside) return v;
    }
    throw std::logic_error("vectorOutsideUnion: sweep failed to find a witness");
}

}  // namespace qreach

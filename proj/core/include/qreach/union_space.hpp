#pragma once

#include <vector>

#include "qreach/subspace.hpp"

namespace qreach {

// Pruned finite union of subspaces: the value domain of the I/G/U
// fixpoints. Members form an antichain under inclusion, zero subspaces are
// dropped (the empty union denotes {0}), and members are kept in canonical
// order so equality is structural.
class UnionSpace {
  public:
    static UnionSpace empty(std::size_t ambientDim);
    static UnionSpace prune(std::size_t ambientDim, std::vector<Subspace> members);

    std::size_t ambientDim() const { return ambientDim_; }
    const std::vector<Subspace>& members() const { return members_; }
    bool isEmpty() const { return members_.empty(); }

    // S ⊆ some single member. Over an infinite field a subspace inside a
    // finite union of subspaces lies inside one of them, so this is the
    // exact union-inclusion test for subspaces.
    bool containsSubspace(const Subspace& s) const;

    bool containsVector(const CVector& v) const;

    // Member-wise union inclusion: every member of other inside this union.
    bool includes(const UnionSpace& other) const;

    friend UnionSpace unionIntersect(const UnionSpace& x, const UnionSpace& y);
    friend UnionSpace unionImage(const ScaledOperator& t, const UnionSpace& x);
    friend UnionSpace unionPreimage(const ScaledOperator& t, const UnionSpace& x);

    friend bool operator==(const UnionSpace& a, const UnionSpace& b) {
        return a.ambientDim_ == b.ambientDim_ && a.members_ == b.members_;
    }
    friend bool operator!=(const UnionSpace& a, const UnionSpace& b) { return !(a == b); }

  private:
    UnionSpace(std::size_t ambientDim, std::vector<Subspace> members)
        : ambientDim_(ambientDim), members_(std::move(members)) {}
    std::size_t ambientDim_;
    std::vector<Subspace> members_;
};

// ∪a ⊂ ∪b strictly: the Algorithm-2 progress test.
bool properlyIncluded(const UnionSpace& a, const UnionSpace& b);

// A vector of s lying outside every member of x. Requires
// !x.containsSubspace(s); a finite set of proper subspaces cannot cover s,
// so a polynomial sweep over combinations of basis vectors always hits.
CVector vectorOutsideUnion(const Subspace& s, const UnionSpace& x);

}  // namespace qreach

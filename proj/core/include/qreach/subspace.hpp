#pragma once

#include <optional>
#include <vector>

#include "qreach/matrix.hpp"

namespace qreach {

// Canonical linear subspace of C^d over Q(i). The basis matrix is in
// reduced row echelon form (pivots 1, eliminated above and below, no zero
// rows), so two Subspace values are equal iff their bases are identical.
class Subspace {
  public:
    static Subspace zero(std::size_t ambientDim);
    static Subspace full(std::size_t ambientDim);
    static Subspace span(std::size_t ambientDim, const std::vector<CVector>& vectors);

    std::size_t ambientDim() const { return ambientDim_; }
    std::size_t dimension() const { return basis_.rows(); }
    bool isZero() const { return basis_.rows() == 0; }
    bool isFull() const { return basis_.rows() == ambientDim_; }
    const Matrix& basis() const { return basis_; }

    bool contains(const CVector& v) const;
    bool includes(const Subspace& other) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambientDim_ == b.ambientDim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // Canonical total order (dimension, then basis entries lexicographically);
    // used for UnionSpace member ordering.
    friend int compare(const Subspace& a, const Subspace& b);

  private:
    Subspace(std::size_t ambientDim, Matrix rrefBasis)
        : ambientDim_(ambientDim), basis_(std::move(rrefBasis)) {}
    std::size_t ambientDim_;
    Matrix basis_;
};

// In-place reduced row echelon form; returns the rank.
std::size_t rref(Matrix& m);

// Basis of {x : M x = 0}.
std::vector<CVector> nullspace(const Matrix& m);

// {x : u^T x = 0}, the Skolem target subspace.
Subspace kernelOfRowFunctional(const CVector& u);

// Matrix N with N†N = s·I for a positive rational s, representing the
// unitary N/sqrt(s) while keeping every entry in Q(i).
class ScaledOperator {
  public:
    // Validates N†N = s·I exactly; throws std::invalid_argument otherwise,
    // naming the offending entry of N†N - s·I.
    static ScaledOperator validate(Matrix n, Rational s);
    static ScaledOperator identity(std::size_t dim);

    std::size_t ambientDim() const { return n_.rows(); }
    const Matrix& matrix() const { return n_; }
    const Rational& scale() const { return scale_; }

    // Composition: (N1,s1)∘(N2,s2) = (N1·N2, s1·s2); applies rhs first.
    friend ScaledOperator operator*(const ScaledOperator& a, const ScaledOperator& b);
    ScaledOperator pow(unsigned long e) const;

    CVector apply(const CVector& v) const { return n_.apply(v); }

    Subspace image(const Subspace& s) const;
    // Image under N†; spans are scale-invariant and U^-1 = U†.
    Subspace preimage(const Subspace& s) const;

    friend bool operator==(const ScaledOperator& a, const ScaledOperator& b) {
        return a.scale_ == b.scale_ && a.n_ == b.n_;
    }

  private:
    ScaledOperator(Matrix n, Rational s) : n_(std::move(n)), scale_(std::move(s)) {}
    Matrix n_;
    Rational scale_;
};

}  // namespace qreach

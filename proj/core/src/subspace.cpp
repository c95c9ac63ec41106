#include "qreach/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace qreach {

std::size_t rref(Matrix& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).isZero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const GaussianRational inv = m.at(rank, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(rank, c) = m.at(rank, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col).isZero()) continue;
            const GaussianRational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

namespace {
Matrix rrefBasisOf(std::size_t ambientDim, const std::vector<CVector>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambientDim)
            throw std::invalid_argument("subspace: vector dimension mismatch");
    Matrix m = Matrix::fromRows(vectors);
    if (m.rows() == 0) return Matrix(0, ambientDim);
    std::size_t rank = rref(m);
    Matrix basis(rank, ambientDim);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < ambientDim; ++c) basis.at(r, c) = m.at(r, c);
    return basis;
}
}  // namespace

Subspace Subspace::zero(std::size_t ambientDim) {
    return Subspace(ambientDim, Matrix(0, ambientDim));
}

Subspace Subspace::full(std::size_t ambientDim) {
    return Subspace(ambientDim, Matrix::identity(ambientDim));
}

Subspace Subspace::span(std::size_t ambientDim, const std::vector<CVector>& vectors) {
    return Subspace(ambientDim, rrefBasisOf(ambientDim, vectors));
}

bool Subspace::contains(const CVector& v) const {
    if (v.size() != ambientDim_)
        throw std::invalid_argument("subspace: vector dimension mismatch");
    // reduce v against the RREF basis; membership iff the residual is zero
    CVector residual = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t pivotCol = 0;
        while (basis_.at(r, pivotCol).isZero()) ++pivotCol;
        if (residual[pivotCol].isZero()) continue;
        const GaussianRational factor = residual[pivotCol];
        for (std::size_t c = pivotCol; c < ambientDim_; ++c)
            residual[c] -= factor * basis_.at(r, c);
    }
    return qreach::isZero(residual);
}

bool Subspace::includes(const Subspace& other) const {
    if (other.ambientDim_ != ambientDim_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambientDim_ != b.ambientDim_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    std::vector<CVector> rows;
    for (std::size_t r = 0; r < a.basis_.rows(); ++r) rows.push_back(a.basis_.row(r));
    for (std::size_t r = 0; r < b.basis_.rows(); ++r) rows.push_back(b.basis_.row(r));
    return Subspace::span(a.ambientDim_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambientDim_ != b.ambientDim_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    const std::size_t d = a.ambientDim_;
    const std::size_t ka = a.basis_.rows(), kb = b.basis_.rows();
    if (ka == 0 || kb == 0) return Subspace::zero(d);
    // Zassenhaus: RREF of [[A|A],[B|0]]; rows with zero left half carry an
    // intersection basis in their right half.
    Matrix block(ka + kb, 2 * d);
    for (std::size_t r = 0; r < ka; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            block.at(r, c) = a.basis_.at(r, c);
            block.at(r, d + c) = a.basis_.at(r, c);
        }
    for (std::size_t r = 0; r < kb; ++r)
        for (std::size_t c = 0; c < d; ++c) block.at(ka + r, c) = b.basis_.at(r, c);
    std::size_t rank = rref(block);
    std::vector<CVector> rows;
    for (std::size_t r = 0; r < rank; ++r) {
        bool leftZero = true;
        for (std::size_t c = 0; c < d && leftZero; ++c)
            if (!block.at(r, c).isZero()) leftZero = false;
        if (!leftZero) continue;
        CVector v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = block.at(r, d + c);
        rows.push_back(std::move(v));
    }
    return Subspace::span(d, rows);
}

int compare(const Subspace& a, const Subspace& b) {
    if (a.ambientDim_ != b.ambientDim_)
        return a.ambientDim_ < b.ambientDim_ ? -1 : 1;
    if (a.basis_.rows() != b.basis_.rows())
        return a.basis_.rows() < b.basis_.rows() ? -1 : 1;
    for (std::size_t r = 0; r < a.basis_.rows(); ++r)
        for (std::size_t c = 0; c < a.ambientDim_; ++c) {
            int cmp = compare(a.basis_.at(r, c), b.basis_.at(r, c));
            if (cmp != 0) return cmp;
        }
    return 0;
}

std::vector<CVector> nullspace(const Matrix& m) {
    Matrix r = m;
    std::size_t rank = rref(r);
    const std::size_t d = m.cols();
    std::vector<std::size_t> pivotCol(rank);
    std::vector<bool> isPivot(d, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t c = 0;
        while (r.at(i, c).isZero()) ++c;
        pivotCol[i] = c;
        isPivot[c] = true;
    }
    std::vector<CVector> basis;
    for (std::size_t free = 0; free < d; ++free) {
        if (isPivot[free]) continue;
        CVector v(d);
        v[free] = GaussianRational(1);
        for (std::size_t i = 0; i < rank; ++i) v[pivotCol[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace kernelOfRowFunctional(const CVector& u) {
    Matrix m(1, u.size());
    for (std::size_t c = 0; c < u.size(); ++c) m.at(0, c) = u[c];
    return Subspace::span(u.size(), nullspace(m));
}

ScaledOperator ScaledOperator::validate(Matrix n, Rational s) {
    if (n.rows() != n.cols()) throw std::invalid_argument("scaled operator: matrix not square");
    if (s <= 0) throw std::invalid_argument("scaled operator: scale must be positive");
    Matrix gram = n.conjTranspose() * n;
    for (std::size_t r = 0; r < gram.rows(); ++r)
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            GaussianRational expect = (r == c) ? GaussianRational(s) : GaussianRational();
            if (gram.at(r, c) != expect) {
                std::ostringstream msg;
                msg << "not scaled-unitary: (N\xe2\x80\xa0N - sI)[" << r << "][" << c
                    << "] = " << toString(gram.at(r, c) - expect);
                throw std::invalid_argument(msg.str());
            }
        }
    return ScaledOperator(std::move(n), std::move(s));
}

ScaledOperator ScaledOperator::identity(std::size_t dim) {
    return ScaledOperator(Matrix::identity(dim), Rational(1));
}

ScaledOperator operator*(const ScaledOperator& a, const ScaledOperator& b) {
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("scaled operator: dimension mismatch in composition");
    return ScaledOperator(a.n_ * b.n_, a.scale_ * b.scale_);
}

ScaledOperator ScaledOperator::pow(unsigned long e) const {
    ScaledOperator result = identity(ambientDim());
    ScaledOperator base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Subspace ScaledOperator::image(const Subspace& s) const {
    if (s.ambientDim() != ambientDim())
        throw std::invalid_argument("scaled operator: dimension mismatch in image");
    std::vector<CVector> rows;
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
        rows.push_back(n_.apply(s.basis().row(r)));
    return Subspace::span(ambientDim(), rows);
}

Subspace ScaledOperator::preimage(const Subspace& s) const {
    if (s.ambientDim() != ambientDim())
        throw std::invalid_argument("scaled operator: dimension mismatch in preimage");
    Matrix adj = n_.conjTranspose();
    std::vector<CVector> rows;
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
        rows.push_back(adj.apply(s.basis().row(r)));
    return Subspace::span(ambientDim(), rows);
}

}  // namespace qreach

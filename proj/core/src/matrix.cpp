#include "qreach/matrix.hpp"

#include <stdexcept>

namespace qreach {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::fromRows(const std::vector<CVector>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

CVector Matrix::row(std::size_t r) const {
    CVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Matrix Matrix::conjTranspose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix m(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c).isZero()) continue;
            for (std::size_t r2 = 0; r2 < o.rows_; ++r2)
                for (std::size_t c2 = 0; c2 < o.cols_; ++c2)
                    m.at(r * o.rows_ + r2, c * o.cols_ + c2) = at(r, c) * o.at(r2, c2);
        }
    return m;
}

GaussianRational Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: trace of non-square matrix");
    GaussianRational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: dimension mismatch in product");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).isZero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                m.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix: dimension mismatch in sum");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix: dimension mismatch in difference");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

CVector Matrix::apply(const CVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: dimension mismatch in apply");
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).isZero()) out[r] += at(r, c) * v[c];
    return out;
}

bool isZero(const CVector& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

CVector scaled(const CVector& v, const GaussianRational& c) {
    CVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

CVector add(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: dimension mismatch");
    CVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

CVector unitVector(std::size_t dim, std::size_t index) {
    CVector v(dim);
    v.at(index) = GaussianRational(1);
    return v;
}

GaussianRational dotUnconjugated(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: dimension mismatch");
    GaussianRational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

}  // namespace qreach

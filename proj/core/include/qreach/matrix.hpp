#pragma once

#include <cstddef>
#include <vector>

#include "qreach/gaussian.hpp"

namespace qreach {

using CVector = std::vector<GaussianRational>;

// Dense matrix over Q(i), row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix fromRows(const std::vector<CVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CVector row(std::size_t r) const;

    Matrix conjTranspose() const;
    Matrix kron(const Matrix& other) const;
    GaussianRational trace() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix scaled(const GaussianRational& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // M * v for a column vector v.
    CVector apply(const CVector& v) const;

  private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

bool isZero(const CVector& v);
CVector scaled(const CVector& v, const GaussianRational& c);
CVector add(const CVector& a, const CVector& b);
CVector unitVector(std::size_t dim, std::size_t index);
GaussianRational dotUnconjugated(const CVector& a, const CVector& b);  // u^T v

// Tensor product, row-major index order (left factor is the slow index).
CVector kron(const CVector& a, const CVector& b);

}  // namespace qreach

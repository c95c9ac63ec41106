#pragma once

#include <utility>
#include <vector>

#include "qreach/matrix.hpp"

namespace qreach {

// Univariate polynomial over Q(i). coeffs()[k] is the x^k coefficient;
// the leading coefficient of a nonzero polynomial is nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(GaussianRational c) { return Poly({std::move(c)}); }
    // x^n with coefficient c.
    static Poly monomial(std::size_t n, GaussianRational c = GaussianRational(1));

    bool isZero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& leading() const { return c_.back(); }
    bool isMonic() const { return !c_.empty() && c_.back() == GaussianRational(1); }

    GaussianRational eval(const GaussianRational& x) const;

    // p(M) for a square matrix, for Cayley-Hamilton style checks.
    Matrix evalAt(const Matrix& m) const;

    // Substitute x -> s*x.
    Poly substituteScaledArg(const Rational& s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: f = q*g + r with deg r < deg g. Throws on g = 0.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

  private:
    void normalize();
    std::vector<GaussianRational> c_;
};

// True iff g divides f exactly over Q(i). Throws on g = 0.
bool dividesExactly(const Poly& g, const Poly& f);

// Quotient of an exact division; throws if the division leaves a remainder.
Poly divExact(const Poly& f, const Poly& g);

// nth cyclotomic polynomial, n >= 1. Memoized; integer coefficients.
Poly cyclotomic(unsigned n);

// Monic det(xI - M) via Faddeev-LeVerrier. Throws on non-square input.
Poly charPoly(const Matrix& m);

// Euler totients of 0..n.
std::vector<unsigned> totientSieve(unsigned n);

}  // namespace qreach

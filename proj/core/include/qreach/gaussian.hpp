#pragma once

#include <string>

#include "qreach/rational.hpp"

namespace qreach {

// Element of Q(i): the scalar field of the whole engine.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i = 0) : re(r), im(i) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool isZero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2 = z * conj(z), a nonnegative rational.
    Rational normSq() const { return re * re + im * im; }

    GaussianRational inverse() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Total order used only for canonical sorting (re, then im).
int compare(const GaussianRational& a, const GaussianRational& b);

std::string toString(const GaussianRational& z);

}  // namespace qreach

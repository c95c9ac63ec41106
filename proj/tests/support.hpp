#pragma once

// Shared fixtures and randomized generators for the test suites.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "qreach/automaton.hpp"
#include "qreach/json_io.hpp"
#include "qreach/subspace.hpp"
#include "qreach/union_space.hpp"

namespace ts {

using namespace qreach;

inline GaussianRational gr(long re, long im = 0) { return GaussianRational(re, im); }

inline GaussianRational grq(long rn, long rd, long in = 0, long id = 1) {
    return GaussianRational(makeRational(rn, rd), makeRational(in, id));
}

inline CVector e(std::size_t d, std::size_t k) { return unitVector(d, k); }

inline CVector vec(std::initializer_list<long> entries) {
    CVector v;
    for (long x : entries) v.push_back(gr(x));
    return v;
}

inline Subspace spanOf(std::size_t d, std::initializer_list<CVector> rows) {
    return Subspace::span(d, std::vector<CVector>(rows));
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<CVector> r;
    for (const auto& row : rows) r.push_back(vec(row));
    return Matrix::fromRows(r);
}

inline ScaledOperator swapOp() {
    return ScaledOperator::validate(mat({{0, 1}, {1, 0}}), 1);
}

// diag(1, (3+4i)/5): unit-modulus phase of infinite multiplicative order.
inline ScaledOperator phaseOp() {
    Matrix m(2, 2);
    m.at(0, 0) = gr(1);
    m.at(1, 1) = grq(3, 5, 4, 5);
    return ScaledOperator::validate(m, 1);
}

inline ScaledOperator diagOp(std::vector<GaussianRational> diag, Rational s = 1) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m.at(k, k) = diag[k];
    return ScaledOperator::validate(std::move(m), std::move(s));
}

// Quadrilateral walk step operators: integer matrices with N†N = 3I.
inline ScaledOperator wPlus() {
    return ScaledOperator::validate(
        mat({{1, 1, 0, -1}, {1, -1, 1, 0}, {0, 1, 1, 1}, {1, 0, -1, 1}}), 3);
}

inline ScaledOperator wMinus() {
    return ScaledOperator::validate(
        mat({{1, 1, 0, 1}, {-1, 1, -1, 0}, {0, 1, 1, -1}, {1, 0, -1, -1}}), 3);
}

inline Subspace pd1() { return spanOf(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, -1})}); }
inline Subspace pd2() { return spanOf(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 1})}); }

inline QuantumAutomaton walkAutomaton() {
    return QuantumAutomaton(4, {{"+", wPlus()}, {"-", wMinus()}}, spanOf(4, {e(4, 0)}));
}

struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned seed) : g(seed) {}

    long intIn(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }

    Rational rational() { return makeRational(intIn(-4, 4), intIn(1, 4)); }

    GaussianRational gaussian() { return {rational(), rational()}; }

    GaussianRational nonzeroGaussian() {
        for (;;) {
            GaussianRational z = gaussian();
            if (!z.isZero()) return z;
        }
    }

    CVector vector(std::size_t d) {
        CVector v(d);
        for (auto& z : v) z = gaussian();
        return v;
    }

    CVector nonzeroVector(std::size_t d) {
        for (;;) {
            CVector v = vector(d);
            if (!isZero(v)) return v;
        }
    }

    Matrix matrix(std::size_t d) {
        Matrix m(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) m.at(r, c) = gaussian();
        return m;
    }

    Subspace subspace(std::size_t d, std::size_t maxVectors = 0) {
        std::size_t k = static_cast<std::size_t>(intIn(0, static_cast<long>(
            maxVectors ? maxVectors : d)));
        std::vector<CVector> rows;
        for (std::size_t j = 0; j < k; ++j) rows.push_back(vector(d));
        return Subspace::span(d, rows);
    }

    GaussianRational unitPhase() {
        switch (intIn(0, 4)) {
            case 0: return gr(1);
            case 1: return gr(-1);
            case 2: return gr(0, 1);
            case 3: return gr(0, -1);
            default: return grq(3, 5, 4, 5);
        }
    }

    // Random scaled unitary: permutation × diagonal phases, optionally with
    // integer rotation blocks [[3,4],[-4,3]] (each contributing scale 25,
    // lone positions padded by 5 to keep the scale uniform).
    ScaledOperator scaledUnitary(std::size_t d) {
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), g);
        Matrix p(d, d);
        for (std::size_t k = 0; k < d; ++k) p.at(perm[k], k) = unitPhase();

        if (intIn(0, 1) == 0 || d < 2) return ScaledOperator::validate(std::move(p), 1);

        Matrix b(d, d);
        std::size_t k = 0;
        for (; k + 1 < d; k += 2) {
            if (intIn(0, 1) == 0) {
                b.at(k, k) = gr(3);
                b.at(k, k + 1) = gr(4);
                b.at(k + 1, k) = gr(-4);
                b.at(k + 1, k + 1) = gr(3);
            } else {
                b.at(k, k) = gr(5);
                b.at(k + 1, k + 1) = gr(5);
            }
        }
        if (k < d) b.at(k, k) = gr(5);
        return ScaledOperator::validate(p * b, 25);
    }

    QuantumAutomaton automaton(std::size_t d, std::size_t numActions) {
        std::vector<std::pair<std::string, ScaledOperator>> actions;
        for (std::size_t k = 0; k < numActions; ++k)
            actions.emplace_back(std::string(1, static_cast<char>('a' + k)), scaledUnitary(d));
        Subspace initial = Subspace::zero(d);
        while (initial.isZero()) initial = Subspace::span(d, {nonzeroVector(d)});
        return QuantumAutomaton(d, std::move(actions), std::move(initial));
    }

    // Random positive formula over small random subspace atoms.
    Formula::Ptr positiveFormula(std::size_t d, int depth = 2) {
        if (depth == 0 || intIn(0, 2) == 0) {
            Subspace s = Subspace::zero(d);
            while (s.isZero()) s = subspace(d);
            return Formula::atom(std::move(s));
        }
        std::vector<Formula::Ptr> children;
        std::size_t n = static_cast<std::size_t>(intIn(2, 3));
        for (std::size_t k = 0; k < n; ++k) children.push_back(positiveFormula(d, depth - 1));
        return intIn(0, 1) ? Formula::disjunction(std::move(children))
                           : Formula::conjunction(std::move(children));
    }
};

}  // namespace ts

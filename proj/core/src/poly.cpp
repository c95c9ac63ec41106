#include "qreach/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qreach {

void Poly::normalize() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Poly Poly::monomial(std::size_t n, GaussianRational c) {
    std::vector<GaussianRational> v(n + 1);
    v[n] = std::move(c);
    return Poly(std::move(v));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Poly::evalAt(const Matrix& m) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly: eval at non-square matrix");
    Matrix acc(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * m + Matrix::identity(m.rows()).scaled(*it);
    return acc;
}

Poly Poly::substituteScaledArg(const Rational& s) const {
    std::vector<GaussianRational> out(c_.size());
    Rational power(1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        out[k] = c_[k] * GaussianRational(power);
        power *= s;
    }
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& g) {
    if (g.isZero()) throw std::domain_error("division by zero polynomial");
    if (f.degree() < g.degree()) return {Poly(), f};
    std::vector<GaussianRational> rem = f.c_;
    std::vector<GaussianRational> quot(f.c_.size() - g.c_.size() + 1);
    const GaussianRational leadInv = g.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        GaussianRational q = rem[k + g.c_.size() - 1] * leadInv;
        if (q.isZero()) continue;
        quot[k] = q;
        for (std::size_t j = 0; j < g.c_.size(); ++j) rem[k + j] -= q * g.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool dividesExactly(const Poly& g, const Poly& f) {
    auto [q, r] = Poly::divmod(f, g);
    (void)q;
    return r.isZero();
}

Poly divExact(const Poly& f, const Poly& g) {
    auto [q, r] = Poly::divmod(f, g);
    if (!r.isZero()) throw std::domain_error("poly: division is not exact");
    return q;
}

namespace {
std::mutex cycloMutex;
std::map<unsigned, Poly> cycloCache;
}  // namespace

Poly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cycloMutex);
        auto it = cycloCache.find(n);
        if (it != cycloCache.end()) return it->second;
    }
    // Φ_n = (x^n - 1) / ∏_{d|n, d<n} Φ_d
    Poly num = Poly::monomial(n) - Poly::constant(GaussianRational(1));
    Poly den = Poly::constant(GaussianRational(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) den = den * cyclotomic(d);
    Poly result = divExact(num, den);
    std::lock_guard<std::mutex> lock(cycloMutex);
    cycloCache.emplace(n, result);
    return result;
}

Poly charPoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charPoly: non-square matrix");
    const std::size_t d = m.rows();
    // Faddeev-LeVerrier: M_k = M (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
    std::vector<GaussianRational> coeffs(d + 1);
    coeffs[d] = GaussianRational(1);
    Matrix mk = m;
    GaussianRational ck;
    for (std::size_t k = 1; k <= d; ++k) {
        if (k > 1) mk = m * (mk + Matrix::identity(d).scaled(ck));
        ck = -(mk.trace() * GaussianRational(makeRational(1, static_cast<long>(k))));
        coeffs[d - k] = ck;
    }
    return Poly(std::move(coeffs));
}

std::vector<unsigned> totientSieve(unsigned n) {
    std::vector<unsigned> phi(n + 1);
    for (unsigned i = 0; i <= n; ++i) phi[i] = i;
    for (unsigned i = 2; i <= n; ++i) {
        if (phi[i] != i) continue;  // i prime
        for (unsigned j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    }
    return phi;
}

}  // namespace qreach

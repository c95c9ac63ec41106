#include "qreach/gaussian.hpp"

#include <stdexcept>

namespace qreach {

GaussianRational GaussianRational::inverse() const {
    Rational n = normSq();
    if (n == 0) throw std::domain_error("gaussian rational: division by zero");
    return {re / n, -im / n};
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c;
    return cmp(a.im, b.im);
}

std::string toString(const GaussianRational& z) {
    return toString(z.re) + (sgn(z.im) < 0 ? "" : "+") + toString(z.im) + "i";
}

}  // namespace qreach

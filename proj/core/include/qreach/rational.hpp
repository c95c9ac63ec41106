#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qreach {

// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
// denominator) after every arithmetic operation; construction from raw
// num/den goes through makeRational so equality stays structural.
using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q", p optionally negative, q positive.
Rational parseRational(const std::string& text);

// "p/q", or just "p" when q = 1.
std::string toString(const Rational& q);

}  // namespace qreach

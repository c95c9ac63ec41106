#include "qreach/rational.hpp"

namespace qreach {

Rational parseRational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(n);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string toString(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qreach

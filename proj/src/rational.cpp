#include "wedderkit/rational.hpp"

#include "wedderkit/errors.hpp"

namespace wedderkit {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ValidationError("cannot parse rational: " + s);
    if (q.get_den() == 0) throw ValidationError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Integer lcm_with_denominator(const Integer& acc, const Rational& q) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

} // namespace wedderkit

#pragma once

#include <gmpxx.h>
#include <string>

namespace wedderkit {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on (num, den) construction; these helpers do.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p/q" or "p"; denominator must be positive after reduction.
Rational parse_rational(const std::string& s);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_str(const Rational& q);

bool is_integer(const Rational& q);

// lcm(acc, den(q)); used for scaling factors such as t_j.
Integer lcm_with_denominator(const Integer& acc, const Rational& q);

} // namespace wedderkit

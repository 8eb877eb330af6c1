#pragma once

#include <utility>
#include <vector>

#include "wedderkit/rational.hpp"

namespace wedderkit {

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_norm(long a, long n);            // representative of a mod n in [0, n)
long mod_pow(long base, long exp, long n);
long mod_inverse(long a, long n);         // gcd(a, n) = 1
long multiplicative_order(long k, long n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic,
// length phi(n) + 1. Cached per order.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Exact element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}
// reduced modulo the n-th cyclotomic polynomial. The reduced form is a normal
// form, so equality is coordinate comparison (after aligning ambient orders).
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(from_rational(Rational(0))) {}
    Cyclotomic(long order, std::vector<Rational> coords);

    static Cyclotomic zero(long order = 1);
    static Cyclotomic one(long order = 1);
    static Cyclotomic from_rational(const Rational& q, long order = 1);
    static Cyclotomic zeta(long order);
    static Cyclotomic root_power(long order, long e); // zeta_order^e

    long order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()
    bool is_integral() const;        // all coordinates in Z

    // Re-express in Q(zeta_m) for order | m.
    Cyclotomic embedded(long m) const;

    // zeta -> zeta^r extended linearly; r must be coprime to order.
    Cyclotomic galois(long r) const;

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Smallest d > 0 with this^d == 1, or 0 if this is not a root of unity.
    long root_of_unity_order() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend Cyclotomic operator*(const Rational& c, const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

private:
    long order_;
    std::vector<Rational> coords_; // length phi(order_)
};

// Align two elements to the lcm of their ambient orders.
std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b);

} // namespace wedderkit

#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "wedderkit/cyclotomic.hpp"

namespace wedderkit {

// Minimal RAII wrapper over mpfr_t; precision fixed per value.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long precision() const;
    double to_double() const;

    static BigFloat from_rational(const Rational& q, long precision_bits);
    static BigFloat from_long(long v, long precision_bits);
    static BigFloat pi(long precision_bits);

    BigFloat operator+(const BigFloat& b) const;
    BigFloat operator-(const BigFloat& b) const;
    BigFloat operator*(const BigFloat& b) const;
    BigFloat operator/(const BigFloat& b) const;
    BigFloat neg() const;
    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat log() const;
    BigFloat cos() const;
    BigFloat sin() const;
    int compare(const BigFloat& b) const;
    bool is_zero() const;

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

private:
    mpfr_t value_;
};

struct ComplexApprox {
    BigFloat re, im;
    BigFloat abs() const;
};

// Evaluate a under zeta_n -> exp(2*pi*i*r/n) at the requested precision.
ComplexApprox complex_embed(const Cyclotomic& a, long r, long precision_bits);

// log|sigma_r(a)|; a must not embed to zero.
BigFloat log_abs_embed(const Cyclotomic& a, long r, long precision_bits);

// Eigenvalues of a symmetric matrix (row-major, n x n) by cyclic Jacobi
// rotations, ascending. Used on tiny Gram matrices.
std::vector<BigFloat> symmetric_eigenvalues(std::vector<BigFloat> m, int n);

} // namespace wedderkit

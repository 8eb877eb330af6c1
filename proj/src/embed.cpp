#include "wedderkit/embed.hpp"

#include <algorithm>

#include "wedderkit/errors.hpp"

namespace wedderkit {

BigFloat::BigFloat(long precision_bits) {
    if (precision_bits < 53) throw ValidationError("precision_bits must be >= 53");
    mpfr_init2(value_, precision_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

long BigFloat::precision() const { return mpfr_get_prec(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

BigFloat BigFloat::from_rational(const Rational& q, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.value_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& b) const {
    BigFloat r(std::max(precision(), b.precision()));
    mpfr_add(r.value_, value_, b.value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::operator-(const BigFloat& b) const {
    BigFloat r(std::max(precision(), b.precision()));
    mpfr_sub(r.value_, value_, b.value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::operator*(const BigFloat& b) const {
    BigFloat r(std::max(precision(), b.precision()));
    mpfr_mul(r.value_, value_, b.value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::operator/(const BigFloat& b) const {
    BigFloat r(std::max(precision(), b.precision()));
    mpfr_div(r.value_, value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::neg() const {
    BigFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.value_, value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.value_, value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::log() const {
    BigFloat r(precision());
    mpfr_log(r.value_, value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::cos() const {
    BigFloat r(precision());
    mpfr_cos(r.value_, value_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sin() const {
    BigFloat r(precision());
    mpfr_sin(r.value_, value_, MPFR_RNDN);
    return r;
}

int BigFloat::compare(const BigFloat& b) const { return mpfr_cmp(value_, b.value_); }

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

BigFloat ComplexApprox::abs() const {
    return (re * re + im * im).sqrt();
}

ComplexApprox complex_embed(const Cyclotomic& a, long r, long precision_bits) {
    if (precision_bits < 53) throw ValidationError("precision_bits must be >= 53");
    // Guard bits absorb the phi(n)-term accumulation error.
    long work = precision_bits + 32;
    long n = a.order();
    BigFloat two_pi = BigFloat::pi(work) + BigFloat::pi(work);
    ComplexApprox acc{BigFloat(work), BigFloat(work)};
    const auto& coords = a.coords();
    for (size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        long e = mod_norm(static_cast<long>(j) * mod_norm(r, n), n);
        BigFloat angle = two_pi * BigFloat::from_long(e, work) / BigFloat::from_long(n, work);
        BigFloat c = BigFloat::from_rational(coords[j], work);
        acc.re = acc.re + c * angle.cos();
        acc.im = acc.im + c * angle.sin();
    }
    return acc;
}

BigFloat log_abs_embed(const Cyclotomic& a, long r, long precision_bits) {
    ComplexApprox z = complex_embed(a, r, precision_bits);
    BigFloat m = z.abs();
    if (m.is_zero()) throw ValidationError("log of zero embedding");
    return m.log();
}

std::vector<BigFloat> symmetric_eigenvalues(std::vector<BigFloat> m, int n) {
    if (n == 0) return {};
    long prec = m.empty() ? 128 : m[0].precision();
    auto at = [&](int i, int j) -> BigFloat& { return m[i * n + j]; };
    BigFloat eps = BigFloat::from_long(1, prec);
    for (long i = 0; i < prec - 8; ++i) eps = eps / BigFloat::from_long(2, prec);

    for (int sweep = 0; sweep < 100; ++sweep) {
        BigFloat off(prec);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = off + at(i, j).abs();
        if (off.compare(eps) < 0) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (at(p, q).is_zero()) continue;
                // Jacobi rotation annihilating (p, q).
                BigFloat theta = (at(q, q) - at(p, p)) /
                                 (BigFloat::from_long(2, prec) * at(p, q));
                BigFloat t = BigFloat::from_long(1, prec) /
                             (theta.abs() + (theta * theta + BigFloat::from_long(1, prec)).sqrt());
                if (theta.compare(BigFloat(prec)) < 0) t = t.neg();
                BigFloat c = BigFloat::from_long(1, prec) /
                             (t * t + BigFloat::from_long(1, prec)).sqrt();
                BigFloat s = t * c;
                for (int k = 0; k < n; ++k) {
                    BigFloat akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    BigFloat apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<BigFloat> eig;
    eig.reserve(n);
    for (int i = 0; i < n; ++i) eig.push_back(at(i, i));
    std::sort(eig.begin(), eig.end(),
              [](const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; });
    return eig;
}

} // namespace wedderkit

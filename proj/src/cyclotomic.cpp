#include "wedderkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "wedderkit/errors.hpp"

namespace wedderkit {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_norm(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long euler_phi(long n) {
    if (n <= 0) throw ValidationError("euler_phi needs n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long mod_pow(long base, long exp, long n) {
    if (n <= 0) throw ValidationError("mod_pow needs modulus >= 1");
    base = mod_norm(base, n);
    long acc = 1 % n;
    while (exp > 0) {
        if (exp & 1) acc = (acc * base) % n;
        base = (base * base) % n;
        exp >>= 1;
    }
    return acc;
}

long mod_inverse(long a, long n) {
    a = mod_norm(a, n);
    long t = 0, new_t = 1, r = n, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw ValidationError("mod_inverse: arguments not coprime");
    return mod_norm(t, n);
}

long multiplicative_order(long k, long n) {
    if (n == 1) return 1;
    if (gcd_long(mod_norm(k, n), n) != 1)
        throw ValidationError("multiplicative_order: arguments not coprime");
    long x = mod_norm(k, n);
    long acc = x, ord = 1;
    while (acc != 1) {
        acc = (acc * x) % n;
        ++ord;
    }
    return ord;
}

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    long dn = static_cast<long>(rem.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, Integer(0));
    for (long i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Integer c = rem[i] / den[dd];
        quot[i - dd] = c;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw ConsistencyError("cyclotomic polynomial division not exact");
    return quot;
}

struct CycloTable {
    long n = 1;
    long phi = 1;
    std::vector<Integer> poly;                 // Phi_n
    std::vector<std::vector<Integer>> powers;  // x^e mod Phi_n, e in [0, n)
};

using CycloCache = std::map<long, std::unique_ptr<CycloTable>>;

const CycloTable& cyclo_table_locked(long n, CycloCache& cache);

CycloTable build_table(long n, CycloCache& cache) {
    CycloTable t;
    t.n = n;
    t.phi = euler_phi(n);
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(num, cyclo_table_locked(d, cache).poly);
    }
    t.poly = std::move(num);
    if (static_cast<long>(t.poly.size()) != t.phi + 1)
        throw ConsistencyError("cyclotomic polynomial degree mismatch");

    // x^{phi} == -(poly[0] + poly[1] x + ... + poly[phi-1] x^{phi-1});
    // iterate multiplication by x to cover all exponents below n.
    t.powers.reserve(n);
    std::vector<Integer> cur(t.phi, Integer(0));
    cur[0] = 1;
    t.powers.push_back(cur);
    for (long e = 1; e < n; ++e) {
        std::vector<Integer> next(t.phi, Integer(0));
        Integer lead = cur[t.phi - 1];
        for (long j = t.phi - 1; j >= 1; --j) next[j] = cur[j - 1];
        next[0] = 0;
        if (lead != 0)
            for (long j = 0; j < t.phi; ++j) next[j] -= lead * t.poly[j];
        cur = std::move(next);
        t.powers.push_back(cur);
    }
    return t;
}

const CycloTable& cyclo_table_locked(long n, CycloCache& cache) {
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<CycloTable>(build_table(n, cache))).first;
    return *it->second;
}

const CycloTable& cyclo_table(long n) {
    if (n < 1) throw ValidationError("cyclotomic order must be >= 1");
    static std::mutex mu;
    static CycloCache cache;
    std::lock_guard<std::mutex> lock(mu);
    return cyclo_table_locked(n, cache);
}

std::vector<Rational> reduce_poly(long n, const std::vector<Rational>& raw) {
    const CycloTable& t = cyclo_table(n);
    std::vector<Rational> out(t.phi, Rational(0));
    for (size_t e = 0; e < raw.size(); ++e) {
        if (raw[e] == 0) continue;
        const auto& row = t.powers[e % n];
        for (long j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += raw[e] * Rational(row[j]);
    }
    return out;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    return cyclo_table(n).poly;
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coords) : order_(order) {
    const CycloTable& t = cyclo_table(order);
    if (static_cast<long>(coords.size()) != t.phi)
        throw ValidationError("cyclotomic coordinate vector has wrong length");
    coords_ = std::move(coords);
}

Cyclotomic Cyclotomic::zero(long order) {
    return Cyclotomic(order, std::vector<Rational>(euler_phi(order), Rational(0)));
}

Cyclotomic Cyclotomic::one(long order) {
    return from_rational(Rational(1), order);
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, long order) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = q;
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::zeta(long order) {
    return root_power(order, 1);
}

Cyclotomic Cyclotomic::root_power(long order, long e) {
    const CycloTable& t = cyclo_table(order);
    const auto& row = t.powers[mod_norm(e, order)];
    std::vector<Rational> c(t.phi);
    for (long j = 0; j < t.phi; ++j) c[j] = Rational(row[j]);
    return Cyclotomic(order, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw ValidationError("cyclotomic value is not rational");
    return coords_[0];
}

bool Cyclotomic::is_integral() const {
    for (const auto& c : coords_)
        if (!is_integer(c)) return false;
    return true;
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw ValidationError("embedding target order not a multiple");
    long step = m / order_;
    const CycloTable& t = cyclo_table(m);
    std::vector<Rational> raw; // exponents j*step for j < phi(order_)
    raw.assign(static_cast<size_t>(m), Rational(0));
    for (size_t j = 0; j < coords_.size(); ++j)
        if (coords_[j] != 0) raw[(j * step) % m] += coords_[j];
    (void)t;
    return Cyclotomic(m, reduce_poly(m, raw));
}

Cyclotomic Cyclotomic::galois(long r) const {
    if (gcd_long(mod_norm(r, order_), order_) != 1)
        throw ValidationError("galois exponent not coprime to the order");
    long rr = mod_norm(r, order_);
    std::vector<Rational> raw(static_cast<size_t>(order_), Rational(0));
    for (size_t j = 0; j < coords_.size(); ++j)
        if (coords_[j] != 0) raw[(j * rr) % order_] += coords_[j];
    return Cyclotomic(order_, reduce_poly(order_, raw));
}

namespace {

// Polynomial helpers over Q for the extended Euclid inverse.
using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly q_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    q_trim(a);
    return a;
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    q_trim(a);
    QPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        if (static_cast<size_t>(i) >= a.size() || a[i] == 0) continue;
        Rational c = a[i] / b.back();
        q[i - (b.size() - 1)] = c;
        for (size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    }
    q_trim(a);
    return {q, a};
}

} // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ValidationError("division by zero in Q(zeta_n)");
    if (is_rational()) {
        std::vector<Rational> c(coords_.size(), Rational(0));
        c[0] = Rational(1) / coords_[0];
        return Cyclotomic(order_, std::move(c));
    }
    const CycloTable& t = cyclo_table(order_);
    QPoly phi(t.poly.size());
    for (size_t i = 0; i < t.poly.size(); ++i) phi[i] = Rational(t.poly[i]);
    QPoly a = coords_;
    q_trim(a);

    // Extended Euclid: s*a + t*phi = gcd; Phi_n irreducible so gcd is a unit.
    QPoly r0 = phi, r1 = a;
    QPoly s0 = {}, s1 = {Rational(1)};
    while (true) {
        q_trim(r1);
        auto [q, r2] = q_divmod(r0, r1);
        if (r2.empty()) break;
        QPoly s2 = q_sub(s0, q_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is the (nonzero constant-multiple) gcd; s1*a == r1 mod phi.
    if (r1.size() != 1)
        throw ConsistencyError("cyclotomic inverse: gcd with Phi_n not constant");
    Rational scale = Rational(1) / r1[0];
    QPoly inv = s1;
    for (auto& c : inv) c *= scale;
    inv.resize(static_cast<size_t>(t.phi), Rational(0));
    Cyclotomic result(order_, std::move(inv));
    return result;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc = Cyclotomic::one(order_);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

long Cyclotomic::root_of_unity_order() const {
    long bound = lcm_long(2, order_);
    if (!(pow(bound).is_one())) return 0;
    for (long d = 1; d <= bound; ++d)
        if (bound % d == 0 && pow(d).is_one()) return d;
    return 0;
}

std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm_long(a.order(), b.order());
    return {a.embedded(m), b.embedded(m)};
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        auto [x, y] = to_common_order(a, b);
        return x + y;
    }
    std::vector<Rational> c(a.coords_);
    for (size_t j = 0; j < c.size(); ++j) c[j] += b.coords_[j];
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
}

Cyclotomic operator-(const Cyclotomic& a) {
    std::vector<Rational> c(a.coords_);
    for (auto& x : c) x = -x;
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator*(const Rational& c, const Cyclotomic& a) {
    std::vector<Rational> v(a.coords_);
    for (auto& x : v) x *= c;
    return Cyclotomic(a.order_, std::move(v));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        auto [x, y] = to_common_order(a, b);
        return x * y;
    }
    size_t d = a.coords_.size();
    std::vector<Rational> raw(2 * d, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            if (b.coords_[j] != 0) raw[i + j] += a.coords_[i] * b.coords_[j];
    }
    return Cyclotomic(a.order_, reduce_poly(a.order_, raw));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        auto [x, y] = to_common_order(a, b);
        return x == y;
    }
    return a.coords_ == b.coords_;
}

} // namespace wedderkit

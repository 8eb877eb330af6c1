#include "wedderkit/algebra.hpp"

#include <algorithm>
#include <map>

#include "wedderkit/errors.hpp"

namespace wedderkit {

void QGElement::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    terms_ = std::move(out);
}

QGElement QGElement::of(const FiniteGroup& g, int elem, Rational coeff) {
    QGElement x(g);
    if (elem < 0 || elem >= g.size()) throw ValidationError("element index out of range");
    if (coeff != 0) x.terms_.emplace_back(elem, std::move(coeff));
    return x;
}

Rational QGElement::coeff(int elem) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), elem,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == elem) return it->second;
    return Rational(0);
}

void QGElement::set_term(int elem, const Rational& c) {
    terms_.emplace_back(elem, c);
    normalize();
}

QGElement QGElement::conjugate_by(int g) const {
    QGElement r(*group_);
    int gi = group_->inv(g);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_back(group_->mul(group_->mul(gi, e), g), c);
    r.normalize();
    return r;
}

namespace {
void check_same_group(const QGElement& a, const QGElement& b) {
    if (&a.group() != &b.group())
        throw ValidationError("group algebra elements with different parent groups");
}
} // namespace

QGElement operator+(const QGElement& a, const QGElement& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    check_same_group(a, b);
    QGElement r(a.group());
    r.terms_ = a.terms_;
    for (const auto& t : b.terms_) r.terms_.push_back(t);
    r.normalize();
    return r;
}

QGElement operator-(const QGElement& a, const QGElement& b) { return a + (-b); }

QGElement operator-(const QGElement& a) {
    QGElement r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

QGElement operator*(const Rational& c, const QGElement& a) {
    if (c == 0) return a.group_ ? QGElement::zero(*a.group_) : QGElement();
    QGElement r = a;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

QGElement operator*(const QGElement& a, const QGElement& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    check_same_group(a, b);
    const FiniteGroup& g = a.group();
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[g.mul(ea, eb)] += ca * cb;
    QGElement r(g);
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

bool operator==(const QGElement& a, const QGElement& b) {
    if (a.is_zero() && b.is_zero()) return true;
    check_same_group(a, b);
    return a.terms_ == b.terms_;
}

QGElement QGElement::pow(long e) const {
    if (e < 0) throw ValidationError("QGElement::pow needs a nonnegative exponent");
    QGElement acc = QGElement::one(*group_);
    QGElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QGElement hat(const FiniteGroup& g, const std::vector<int>& subset) {
    if (subset.empty()) throw ValidationError("hat of an empty set");
    QGElement r(g);
    Rational c = make_rational(1, static_cast<long>(subset.size()));
    for (int e : subset) r.set_term(e, c);
    return r;
}

QGElement hat(const Subgroup& s) { return hat(*s.parent, s.elements); }

QGElement epsilon(const Subgroup& h, const Subgroup& k) {
    return epsilon(h, k, all_subgroups_within(h));
}

QGElement epsilon(const Subgroup& h, const Subgroup& k,
                  const std::vector<Subgroup>& subgroups_of_h) {
    if (!is_subgroup_of(k, h)) throw ValidationError("epsilon: K must sit inside H");
    if (!is_normal_in(k, h)) throw ValidationError("epsilon: K must be normal in H");
    const FiniteGroup& g = *h.parent;
    if (k.size() == h.size()) return hat(h);

    // Minimal normal subgroups of H containing K properly.
    std::vector<const Subgroup*> over;
    for (const auto& m : subgroups_of_h) {
        if (m.size() <= k.size() || !is_subgroup_of(k, m) || !is_subgroup_of(m, h)) continue;
        if (m.size() == k.size()) continue;
        if (!is_normal_in(m, h)) continue;
        over.push_back(&m);
    }
    QGElement eps = hat(k);
    for (const Subgroup* m : over) {
        bool minimal = true;
        for (const Subgroup* m2 : over)
            if (m2 != m && m2->size() < m->size() && is_subgroup_of(*m2, *m)) {
                minimal = false;
                break;
            }
        if (minimal) eps = eps * (QGElement::one(g) - hat(*m));
    }
    return eps;
}

QGElement sum_of_distinct_conjugates(const QGElement& x) {
    const FiniteGroup& g = x.group();
    std::vector<QGElement> seen;
    QGElement sum = QGElement::zero(g);
    for (int t = 0; t < g.size(); ++t) {
        QGElement c = x.conjugate_by(t);
        bool fresh = true;
        for (const auto& s : seen)
            if (s == c) {
                fresh = false;
                break;
            }
        if (fresh) {
            seen.push_back(c);
            sum += c;
        }
    }
    return sum;
}

QGElement e_idempotent(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    return sum_of_distinct_conjugates(epsilon(h, k));
}

Cyclotomic rho_linear(const Subgroup& h, const Subgroup& l, const QGElement& x,
                      int generator) {
    if (!is_subgroup_of(l, h)) throw ValidationError("rho_linear: L must sit inside H");
    const FiniteGroup& g = *h.parent;
    long k = h.size() / l.size();
    int y = generator >= 0 ? generator : quotient_cyclic_generator(h, l);
    if (coset_order(l, y) != k)
        throw ValidationError("rho_linear: chosen coset does not generate H/L");
    // Discrete log of each H-coset with respect to yL.
    std::vector<long> dlog(g.size(), -1);
    int cur = g.identity();
    for (long i = 0; i < k; ++i) {
        for (int u : l.elements) dlog[g.mul(cur, u)] = i;
        cur = g.mul(cur, y);
    }
    Cyclotomic acc = Cyclotomic::zero(k);
    for (const auto& [e, c] : x.terms()) {
        if (dlog[e] < 0) throw ValidationError("rho_linear: element outside H");
        acc += c * Cyclotomic::root_power(k, dlog[e]);
    }
    return acc;
}

bool is_central(const QGElement& x) {
    if (x.is_zero()) return true;
    const FiniteGroup& g = x.group();
    for (int s : g.generators())
        if (!(x.conjugate_by(s) == x)) return false;
    return true;
}

bool is_idempotent(const QGElement& x) { return x * x == x; }

bool is_integral(const QGElement& x) {
    for (const auto& [e, c] : x.terms())
        if (!is_integer(c)) return false;
    return true;
}

bool is_unit_with_inverse(const QGElement& x, const QGElement& y) {
    const QGElement one = QGElement::one(x.group());
    return x * y == one && y * x == one;
}

} // namespace wedderkit

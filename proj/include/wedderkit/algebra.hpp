#pragma once

#include <vector>

#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/group.hpp"

namespace wedderkit {

// Sparse exact element of QG: sorted (element index, coefficient) pairs,
// zero coefficients purged on every operation.
class QGElement {
public:
    QGElement() = default;
    explicit QGElement(const FiniteGroup& g) : group_(&g) {}

    static QGElement zero(const FiniteGroup& g) { return QGElement(g); }
    static QGElement one(const FiniteGroup& g) { return of(g, g.identity()); }
    static QGElement of(const FiniteGroup& g, int elem, Rational coeff = Rational(1));

    const FiniteGroup& group() const { return *group_; }
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int elem) const;
    int support_size() const { return static_cast<int>(terms_.size()); }

    QGElement conjugate_by(int g) const; // h -> g^{-1} h g on the support

    friend QGElement operator+(const QGElement& a, const QGElement& b);
    friend QGElement operator-(const QGElement& a, const QGElement& b);
    friend QGElement operator*(const QGElement& a, const QGElement& b);
    friend QGElement operator*(const Rational& c, const QGElement& a);
    friend QGElement operator-(const QGElement& a);
    friend bool operator==(const QGElement& a, const QGElement& b);
    friend bool operator!=(const QGElement& a, const QGElement& b) { return !(a == b); }
    QGElement& operator+=(const QGElement& b) { return *this = *this + b; }
    QGElement& operator*=(const QGElement& b) { return *this = *this * b; }

    QGElement pow(long e) const; // e >= 0

    void set_term(int elem, const Rational& c); // builder utility

private:
    const FiniteGroup* group_ = nullptr;
    std::vector<std::pair<int, Rational>> terms_;
    void normalize();
};

// (1/|S|) sum of the elements of S.
QGElement hat(const FiniteGroup& g, const std::vector<int>& subset);
QGElement hat(const Subgroup& s);

// epsilon(H, K) = K-hat * prod (1 - M-hat) over the minimal normal subgroups
// M of H containing K properly; epsilon(H, H) = H-hat.
QGElement epsilon(const Subgroup& h, const Subgroup& k);
QGElement epsilon(const Subgroup& h, const Subgroup& k,
                  const std::vector<Subgroup>& subgroups_of_h);

// Sum of the distinct G-conjugates of epsilon(H, K).
QGElement e_idempotent(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
QGElement sum_of_distinct_conjugates(const QGElement& x);

// Linear character of H with kernel L applied to an element of QH; the
// generator coset may be pinned (deterministic minimal-index choice if not).
Cyclotomic rho_linear(const Subgroup& h, const Subgroup& l, const QGElement& x,
                      int generator = -1);

bool is_central(const QGElement& x);
bool is_idempotent(const QGElement& x);
bool is_integral(const QGElement& x);
bool is_unit_with_inverse(const QGElement& x, const QGElement& y);

} // namespace wedderkit

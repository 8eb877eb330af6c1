#include "wedderkit/idem.hpp"

#include <algorithm>

#include "wedderkit/errors.hpp"

namespace wedderkit {

std::pair<FieldMatrix, FieldMatrix> build_P_A(int n, long order) {
    if (n < 1) throw ValidationError("build_P_A needs n >= 1");
    FieldMatrix p(n, n, order), a(n, n, order);
    Cyclotomic one = Cyclotomic::one(order);
    if (n == 1) {
        p.at(0, 0) = one;
        a.at(0, 0) = one;
        return {p, a};
    }
    for (int j = 0; j < n; ++j) p.at(0, j) = one;
    for (int i = 1; i < n; ++i) {
        p.at(i, 0) = one;
        p.at(i, i) = -one;
    }
    a.at(0, n - 1) = one;
    for (int i = 1; i < n; ++i) a.at(i, i - 1) = one;
    return {p, a};
}

PsiMap::PsiMap(const FiniteGroup& g, const SimpleComponent& comp)
    : g_(&g), comp_(comp), k_(comp.cyclotomic_order),
      degree_(static_cast<int>(comp.nh_transversal.size())) {
    if (!comp_.twist_trivial)
        throw UnsupportedClassError(
            "crossed-product twisting is not trivial for this section; the matrix "
            "realization does not apply (the C19xC9 pair (<a,b^3>,1) is the canonical "
            "obstruction)");
    eps_ = epsilon(comp_.pair.h, comp_.pair.k);

    // Discrete log of H mod K with respect to the stored generator.
    dlog_.assign(g.size(), -1);
    int cur = g.identity();
    for (long i = 0; i < k_; ++i) {
        for (int u : comp_.pair.k.elements) dlog_[g.mul(cur, u)] = i;
        cur = g.mul(cur, comp_.pair.quotient_generator);
    }

    // Basis order: powers of the psi-action of a generating coset. The psi
    // action of the representative t is conjugation by t^{-1} (so that
    // (t eps) x = sigma_t(x) (t eps) holds in QN eps).
    int y = comp_.pair.quotient_generator;
    auto psi_exponent = [&](int rep) {
        int image = g.conjugate(y, g.inv(rep));
        return mod_norm(dlog_[image], k_);
    };
    int n = degree_;
    // Find a coset representative whose action generates the image group;
    // fall back to the plain transversal order for non-cyclic N/H.
    int gen_pos = -1;
    for (int i = 1; i < n; ++i) {
        long e = psi_exponent(comp_.nh_transversal[i]);
        if (multiplicative_order(e, k_) == static_cast<long>(n)) {
            gen_pos = i;
            break;
        }
    }
    reps_.clear();
    sigma_exp_.clear();
    if (gen_pos >= 0 || n == 1) {
        // Order cosets as powers of the generator coset.
        std::vector<long> exp_of_rep(n);
        for (int i = 0; i < n; ++i) exp_of_rep[i] = psi_exponent(comp_.nh_transversal[i]);
        long r = n == 1 ? 1 % k_ : exp_of_rep[gen_pos];
        long e = 1 % k_;
        for (int j = 0; j < n; ++j) {
            int pos = -1;
            for (int i = 0; i < n; ++i)
                if (exp_of_rep[i] == e) {
                    pos = i;
                    break;
                }
            if (pos < 0) throw ConsistencyError("psi basis ordering failed");
            reps_.push_back(comp_.nh_transversal[pos]);
            sigma_exp_.push_back(e);
            e = (e * r) % k_;
        }
    } else {
        reps_ = comp_.nh_transversal;
        for (int i = 0; i < n; ++i) sigma_exp_.push_back(psi_exponent(reps_[i]));
    }
    choose_normal_element();
}

void PsiMap::choose_normal_element() {
    long phi = euler_phi(k_);
    int n = degree_;
    long fdeg = phi / n;
    const auto& periods = comp_.center.periods;
    if (static_cast<long>(periods.size()) != fdeg)
        throw ConsistencyError("center degree mismatch");

    auto try_candidate = [&](const Cyclotomic& w) -> bool {
        // Columns: period_l * sigma_i(w) in power-basis coordinates.
        RatMatrix m(static_cast<int>(phi), static_cast<int>(phi));
        int col = 0;
        for (int i = 0; i < n; ++i) {
            Cyclotomic wi = w.galois(sigma_exp_[i]);
            for (long l = 0; l < fdeg; ++l, ++col) {
                Cyclotomic v = periods[l] * wi;
                for (long row = 0; row < phi; ++row)
                    m.at(static_cast<int>(row), col) = v.coords()[row];
            }
        }
        if (!m.is_invertible()) return false;
        expand_inv_ = m.inverse();
        basis_.w = w;
        basis_.basis_exponents = sigma_exp_;
        return true;
    };

    if (try_candidate(Cyclotomic::zeta(k_))) return;
    if (try_candidate(Cyclotomic::one(k_) + Cyclotomic::zeta(k_))) return;
    // Elements with coordinates in {0, 1, -1}, lexicographic order.
    const long cap = 20000;
    std::vector<int> digits(phi, 0);
    for (long count = 0; count < cap; ++count) {
        int pos = 0;
        while (pos < phi && digits[pos] == 2) digits[pos++] = 0;
        if (pos == phi) break;
        ++digits[pos];
        std::vector<Rational> coords(phi);
        for (long i = 0; i < phi; ++i)
            coords[i] = digits[i] == 2 ? Rational(-1) : Rational(digits[i]);
        if (try_candidate(Cyclotomic(k_, coords))) return;
    }
    throw CapacityError("normal element search exhausted");
}

std::vector<Cyclotomic> PsiMap::expand_over_basis(const Cyclotomic& v) const {
    long phi = euler_phi(k_);
    int n = degree_;
    long fdeg = phi / n;
    Cyclotomic vv = v.order() == k_ ? v : v.embedded(k_);
    std::vector<Rational> rhs(vv.coords());
    std::vector<Rational> d = expand_inv_.apply(rhs);
    std::vector<Cyclotomic> out;
    out.reserve(n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        Cyclotomic c = Cyclotomic::zero(k_);
        for (long l = 0; l < fdeg; ++l, ++idx)
            if (d[idx] != 0) c += d[idx] * comp_.center.periods[l];
        out.push_back(c);
    }
    return out;
}

Cyclotomic PsiMap::h_to_field(const QGElement& x) const {
    Cyclotomic acc = Cyclotomic::zero(k_);
    for (const auto& [e, c] : x.terms()) {
        if (dlog_[e] < 0) throw ValidationError("element not supported on H");
        acc += c * Cyclotomic::root_power(k_, dlog_[e]);
    }
    return acc;
}

QGElement PsiMap::field_to_h(const Cyclotomic& v) const {
    Cyclotomic vv = v.order() == k_ ? v : v.embedded(k_);
    QGElement acc = QGElement::zero(*g_);
    int y = comp_.pair.quotient_generator;
    int cur = g_->identity();
    for (size_t j = 0; j < vv.coords().size(); ++j) {
        if (vv.coords()[j] != 0) acc += QGElement::of(*g_, cur, vv.coords()[j]);
        cur = g_->mul(cur, y);
    }
    return acc * eps_;
}

FieldMatrix PsiMap::apply(const QGElement& x) const {
    int n = degree_;
    // Split x over the right cosets H t_sigma and map the H-parts into L.
    std::vector<Cyclotomic> coords(n, Cyclotomic::zero(k_));
    for (const auto& [e, c] : x.terms()) {
        int pos = -1;
        for (int i = 0; i < n; ++i) {
            int h = g_->mul(e, g_->inv(reps_[i]));
            if (comp_.pair.h.contains(h)) {
                pos = i;
                coords[i] += c * Cyclotomic::root_power(k_, dlog_[h]);
                break;
            }
        }
        if (pos < 0) throw ValidationError("psi: element not supported on N");
    }
    FieldMatrix m(n, n, k_);
    for (int s = 0; s < n; ++s) {
        if (coords[s].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            // x_s * sigma_s(b_j), expanded over the normal basis.
            Cyclotomic bj = basis_.w.galois(basis_.basis_exponents[j]);
            Cyclotomic v = coords[s] * bj.galois(sigma_exp_[s]);
            std::vector<Cyclotomic> col = expand_over_basis(v);
            for (int i = 0; i < n; ++i)
                if (!col[i].is_zero()) m.at(i, j) += col[i];
        }
    }
    return m;
}

QGElement PsiMap::invert(const FieldMatrix& m) const {
    int n = degree_;
    if (m.rows() != n || m.cols() != n)
        throw ValidationError("psi invert: wrong matrix shape");
    // Solve sum_s x_s * sigma_s(b_j) = sum_i m[i][j] b_i over L; this is the
    // same linear system as solving for the group-ring coefficients directly
    // (n * phi(k) rational unknowns).
    std::vector<Cyclotomic> b;
    b.reserve(n);
    for (int j = 0; j < n; ++j) b.push_back(basis_.w.galois(basis_.basis_exponents[j]));
    FieldMatrix c(n, n, k_);
    std::vector<Cyclotomic> rhs;
    rhs.reserve(n);
    for (int j = 0; j < n; ++j) {
        for (int s = 0; s < n; ++s) c.at(j, s) = b[j].galois(sigma_exp_[s]);
        Cyclotomic acc = Cyclotomic::zero(k_);
        for (int i = 0; i < n; ++i) acc += m.at(i, j) * b[i];
        rhs.push_back(acc);
    }
    std::vector<Cyclotomic> xs = matrix_solve(c, rhs);
    QGElement out = QGElement::zero(*g_);
    for (int s = 0; s < n; ++s) {
        if (xs[s].is_zero()) continue;
        out += field_to_h(xs[s]) * QGElement::of(*g_, reps_[s]);
    }
    return out;
}

QGElement PsiMap::t1_hat_eps() const {
    return hat(*g_, reps_) * eps_;
}

QGElement PsiMap::x_e_by_trace(const FieldMatrix& target) const {
    // x_e = (1/|H|) sum_{g in N} tr_{F/Q}(T(target * psi(g^{-1} eps))) g
    QGElement acc = QGElement::zero(*g_);
    for (int e : comp_.pair.n.elements) {
        FieldMatrix pg = apply(QGElement::of(*g_, g_->inv(e)) * eps_);
        Cyclotomic tr = Cyclotomic::zero(k_);
        for (int i = 0; i < degree_; ++i)
            for (int j = 0; j < degree_; ++j) tr += target.at(i, j) * pg.at(j, i);
        Rational q = trace_to_rationals(tr, comp_.center);
        if (q != 0) acc += QGElement::of(*g_, e, q);
    }
    return make_rational(1, comp_.pair.h.size()) * acc;
}

const QGElement& PsiMap::x_e() const {
    if (!xe_ready_) {
        auto [p, a] = build_P_A(degree_, k_);
        FieldMatrix p_inv = p.inverse();
        FieldMatrix target = p * a * p_inv;
        psi_inv_p_ = invert(p);
        psi_inv_p_inv_ = invert(p_inv);
        QGElement xa = psi_inv_p_ * invert(a) * psi_inv_p_inv_;
        QGElement xb = x_e_by_trace(target);
        if (!(xa == xb))
            throw ConsistencyError("x_e: linear-solve route and trace formula disagree");
        xe_ = xa;
        xe_ready_ = true;
    }
    return xe_;
}

const QGElement& PsiMap::psi_inv_P() const {
    x_e();
    return psi_inv_p_;
}

const QGElement& PsiMap::psi_inv_P_inv() const {
    x_e();
    return psi_inv_p_inv_;
}

IdempotentSet primitive_idempotents(const FiniteGroup& g, const SimpleComponent& comp) {
    PsiMap psi(g, comp);
    int n = psi.degree();
    IdempotentSet out;
    out.pair = comp.pair;
    out.e = e_idempotent(g, comp.pair.h, comp.pair.k);
    out.x_e = psi.x_e();

    QGElement f0 = psi.t1_hat_eps();
    std::vector<QGElement> level_n{f0};
    QGElement xp = QGElement::one(g);
    std::vector<QGElement> xe_pow{psi.eps()};
    for (int i = 1; i <= n; ++i) xe_pow.push_back(xe_pow.back() * out.x_e);
    if (!(xe_pow[n] == psi.eps()))
        throw ConsistencyError("x_e^n is not the component identity");
    for (int i = 1; i < n; ++i) level_n.push_back(xe_pow[i] * f0 * xe_pow[n - i]);

    std::vector<int> t2 = right_transversal(comp.pair.n, whole_group(g));
    for (int t : t2)
        for (const QGElement& f : level_n) out.idempotents.push_back(f.conjugate_by(t));

    // Exact verification: idempotent, pairwise orthogonal, summing to e.
    QGElement sum = QGElement::zero(g);
    for (const auto& f : out.idempotents) {
        if (!is_idempotent(f)) throw ConsistencyError("constructed element is not idempotent");
        sum += f;
    }
    for (size_t i = 0; i < out.idempotents.size(); ++i)
        for (size_t j = i + 1; j < out.idempotents.size(); ++j)
            if (!(out.idempotents[i] * out.idempotents[j]).is_zero())
                throw ConsistencyError("idempotents are not orthogonal");
    if (!(sum == out.e)) throw ConsistencyError("idempotents do not sum to e(G,H,K)");
    long expected = g.size() / comp.pair.h.size();
    if (static_cast<long>(out.idempotents.size()) != expected)
        throw ConsistencyError("idempotent count differs from [G:H]");
    return out;
}

std::vector<std::vector<QGElement>> matrix_units(const FiniteGroup& g,
                                                 const SimpleComponent& comp) {
    PsiMap psi(g, comp);
    int n = psi.degree();
    QGElement f0 = psi.t1_hat_eps();
    const QGElement& xe = psi.x_e();
    std::vector<QGElement> xe_pow{psi.eps()};
    for (int i = 1; i <= n; ++i) xe_pow.push_back(xe_pow.back() * xe);

    std::vector<int> t2 = right_transversal(comp.pair.n, whole_group(g));
    int total = static_cast<int>(t2.size()) * n;
    std::vector<std::vector<QGElement>> e(total, std::vector<QGElement>(total));
    for (size_t ti = 0; ti < t2.size(); ++ti)
        for (int i = 0; i < n; ++i)
            for (size_t tj = 0; tj < t2.size(); ++tj)
                for (int j = 0; j < n; ++j) {
                    QGElement mid = xe_pow[i] * f0 * xe_pow[j == 0 ? 0 : n - j];
                    e[static_cast<int>(ti) * n + i][static_cast<int>(tj) * n + j] =
                        QGElement::of(g, g.inv(t2[ti])) * mid * QGElement::of(g, t2[tj]);
                }
    return e;
}

} // namespace wedderkit

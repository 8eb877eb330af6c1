#include "wedderkit/unitgens.hpp"

#include <algorithm>
#include <set>

#include "wedderkit/errors.hpp"

namespace wedderkit {

std::vector<OrbitSum> orbit_sums(const Subgroup& x, const Subgroup& y) {
    const FiniteGroup& g = *x.parent;
    if (x.parent != y.parent) throw ValidationError("orbit_sums: different parents");
    std::vector<char> seen(g.size(), 0);
    std::vector<OrbitSum> out;
    for (int e : x.elements) {
        if (seen[e]) continue;
        std::set<int> orbit;
        for (int t : y.elements) {
            int c = g.conjugate(e, t);
            if (!x.contains(c))
                throw ValidationError("orbit_sums: Y does not act on X by conjugation");
            orbit.insert(c);
        }
        OrbitSum os;
        os.base = e;
        os.sum = QGElement::zero(g);
        for (int c : orbit) {
            seen[c] = 1;
            os.sum += QGElement::of(g, c);
        }
        out.push_back(std::move(os));
    }
    return out;
}

Integer t_scale(const QGElement& x, long bound) {
    Integer t(1);
    QGElement p = QGElement::one(x.group());
    for (long i = 1; i <= bound; ++i) {
        p = p * x;
        for (const auto& [e, c] : p.terms()) t = lcm_with_denominator(t, c);
    }
    return t;
}

MetacyclicComponentUnits metacyclic_component_units(const FiniteGroup& g, long q, long m,
                                                    long p, long n, long r, long j) {
    long qm = 1, pn = 1;
    for (long i = 0; i < m; ++i) qm *= q;
    for (long i = 0; i < n; ++i) pn *= p;
    if (j < 1 || j > m) throw ValidationError("component index j out of range");
    const auto& pres = g.presentation();
    if (!pres || pres->m != qm || pres->n != pn || pres->t != 0)
        throw ValidationError("group does not match the metacyclic parameters");
    int a = 1, b = static_cast<int>(qm);
    Subgroup ha = generated_subgroup(g, {a});
    long qj = 1;
    for (long i = 0; i < j; ++i) qj *= q;
    Subgroup kj = generated_subgroup(g, {g.power(a, qj)});

    MetacyclicComponentUnits cu;
    cu.j = j;
    StrongShodaPair pair = make_strong_shoda_pair(g, ha, kj);
    cu.comp = component_descriptor(g, pair);
    PsiMap psi(g, cu.comp);
    // x_j = psi^{-1}(P) b eps psi^{-1}(P)^{-1}; equal to psi^{-1}(P A P^{-1}).
    QGElement b_eps = QGElement::of(g, b) * psi.eps();
    QGElement xj = psi.psi_inv_P() * b_eps * psi.psi_inv_P_inv();
    if (!(xj == psi.x_e()))
        throw ConsistencyError("x_j via psi^{-1}(P) differs from psi^{-1}(PAP^{-1})");
    cu.x_j = xj;
    cu.t_j = t_scale(cu.x_j, pn);
    (void)r;
    return cu;
}

std::vector<VGenerator> v_generators(const FiniteGroup& g,
                                     const MetacyclicComponentUnits& cu, VSign sign,
                                     long p, long n, bool allow_exceptional) {
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    int a = 1;
    long qm = g.presentation()->m;
    if (p == 2 && n == 1 && qm % 3 == 0 && g.element_order(a) % 3 == 0) {
        // q = 3: the M_2(Q) component makes the elementary-matrix argument
        // fail; callers must opt into the bicyclic supplement.
        long q = 3, probe = qm;
        while (probe % 3 == 0) probe /= 3;
        if (probe == 1 && q == 3 && !allow_exceptional)
            throw UnsupportedClassError(
                "q = 3, p = 2, n = 1 is the exceptional D_{2*3^m} case; request the "
                "bicyclic supplement");
    }
    int b = static_cast<int>(qm);
    Subgroup ha = generated_subgroup(g, {a});
    Subgroup hb = generated_subgroup(g, {b});
    std::vector<OrbitSum> sums = orbit_sums(ha, hb);
    QGElement bhat = hat(hb);

    // Powers of x_j; x_j^{p^n} is the component identity eps.
    std::vector<QGElement> pow{QGElement::zero(g)};
    QGElement acc = cu.x_j;
    pow[0] = acc;
    for (long i = 1; i < pn; ++i) {
        acc = acc * cu.x_j;
        pow.push_back(acc);
    }
    // pow[i] = x_j^{i+1}; x_j^{-k} = x_j^{p^n - k} for k < p^n, eps for k = p^n.
    auto x_power = [&](long e) -> const QGElement& {
        return pow[static_cast<size_t>(e - 1)];
    };
    const QGElement eps = pow[pn - 1]; // x_j^{p^n} = eps

    Rational scale = Rational(pn) * Rational(cu.t_j) * Rational(cu.t_j);
    std::vector<VGenerator> out;
    for (const auto& os : sums) {
        for (long h = 1; h <= pn; ++h)
            for (long k = 1; k <= pn; ++k) {
                if (h == k) continue;
                if (sign == VSign::Plus && !(h < k)) continue;
                if (sign == VSign::Minus && !(h > k)) continue;
                QGElement xk_inv = (k == pn) ? eps : x_power(pn - k);
                QGElement z = scale * (os.sum * x_power(h) * bhat * xk_inv);
                VGenerator gen;
                gen.orbit_base = os.base;
                gen.h = h;
                gen.k = k;
                gen.unit.u = QGElement::one(g) + z;
                gen.unit.u_inv = QGElement::one(g) - z;
                if (!is_integral(gen.unit.u))
                    throw ConsistencyError("V generator is not integral");
                if (!(z * z).is_zero())
                    throw ConsistencyError("V generator is not unipotent");
                if (!is_unit_with_inverse(gen.unit.u, gen.unit.u_inv))
                    throw ConsistencyError("V generator inverse failed");
                out.push_back(std::move(gen));
            }
    }
    return out;
}

namespace {

std::vector<UnitWithInverse> bicyclic_supplement(const FiniteGroup& g) {
    // 1-(1-b)a(1+b), (1-(1-b)a(1+b))^{ba}, 1+(1-ba)a(1+ba) for the
    // exceptional M_2(Q) component of D_{2*3^m}.
    const auto& pres = g.presentation();
    int a = 1, b = static_cast<int>(pres->m);
    QGElement one = QGElement::one(g);
    QGElement ea = QGElement::of(g, a);
    QGElement eb = QGElement::of(g, b);
    auto unit_from_nilpotent = [&](const QGElement& z, bool plus) {
        UnitWithInverse u;
        if (!(z * z).is_zero())
            throw ConsistencyError("bicyclic supplement: square does not vanish");
        u.u = plus ? one + z : one - z;
        u.u_inv = plus ? one - z : one + z;
        if (!is_unit_with_inverse(u.u, u.u_inv))
            throw ConsistencyError("bicyclic supplement inverse failed");
        return u;
    };
    QGElement z1 = (one - eb) * ea * (one + eb);
    UnitWithInverse u1 = unit_from_nilpotent(z1, false);
    int ba = g.mul(b, a);
    UnitWithInverse u2;
    u2.u = u1.u.conjugate_by(ba);
    u2.u_inv = u1.u_inv.conjugate_by(ba);
    QGElement eba = QGElement::of(g, ba);
    QGElement z3 = (one - eba) * ea * (one + eba);
    UnitWithInverse u3 = unit_from_nilpotent(z3, true);
    return {u1, u2, u3};
}

} // namespace

GeneratorCertificate full_generator_set(const FiniteGroup& g, long q, long m, long p,
                                        long n, long r, bool include_bicyclic) {
    long qm = 1, pn = 1;
    for (long i = 0; i < m; ++i) qm *= q;
    for (long i = 0; i < n; ++i) pn *= p;
    if (multiplicative_order(r, qm) != pn)
        throw ValidationError("unit generators require a faithful metacyclic action");
    bool exceptional = (q == 3 && p == 2 && n == 1);
    if (exceptional && !include_bicyclic)
        throw UnsupportedClassError(
            "q = 3, p = 2, n = 1 has the exceptional M_2(Q) component; rerun with the "
            "bicyclic supplement enabled");

    GeneratorCertificate cert;
    cert.q = q;
    cert.m = m;
    cert.p = p;
    cert.n = n;
    cert.r = r;

    auto push = [&](const std::string& role, const std::string& note,
                    const UnitWithInverse& u, bool central) {
        GeneratorCertificateEntry e;
        e.role = role;
        e.note = note;
        e.element = u.u;
        e.inverse = u.u_inv;
        e.check_integral = is_integral(u.u) && is_integral(u.u_inv);
        e.check_unit = is_unit_with_inverse(u.u, u.u_inv);
        e.check_central = central ? is_central(u.u) : false;
        if (!e.check_integral || !e.check_unit || (central && !e.check_central))
            throw ConsistencyError("generator failed verification: " + note);
        cert.entries.push_back(std::move(e));
    };

    for (const auto& cu : metacyclic_central_basis(g, q, m, p, n, r))
        push("central", cu.note + " k=" + std::to_string(cu.k), cu.unit, true);

    for (long j = 1; j <= m; ++j) {
        MetacyclicComponentUnits cu = metacyclic_component_units(g, q, m, p, n, r, j);
        for (const auto& v : v_generators(g, cu, VSign::Plus, p, n, include_bicyclic))
            push("v_plus",
                 "j=" + std::to_string(j) + " y=" + std::to_string(v.orbit_base) + " (" +
                     std::to_string(v.h) + "," + std::to_string(v.k) + ")",
                 v.unit, false);
        for (const auto& v : v_generators(g, cu, VSign::Minus, p, n, include_bicyclic))
            push("v_minus",
                 "j=" + std::to_string(j) + " y=" + std::to_string(v.orbit_base) + " (" +
                     std::to_string(v.h) + "," + std::to_string(v.k) + ")",
                 v.unit, false);
    }

    if (exceptional && include_bicyclic) {
        int idx = 0;
        for (const auto& u : bicyclic_supplement(g))
            push("bicyclic", "supplement " + std::to_string(idx++), u, false);
    }
    return cert;
}

} // namespace wedderkit

#include "wedderkit/units.hpp"

#include <algorithm>
#include <set>

#include "wedderkit/embed.hpp"
#include "wedderkit/errors.hpp"

namespace wedderkit {

namespace {

// (1 + g + ... + g^{c-1}) as a group algebra element.
QGElement geometric_sum(const FiniteGroup& grp, int g, long c) {
    QGElement s = QGElement::zero(grp);
    int cur = grp.identity();
    for (long i = 0; i < c; ++i) {
        s += QGElement::of(grp, cur);
        cur = grp.mul(cur, g);
    }
    return s;
}

// Bass unit on a cyclic group of declared order d (the order of the torsion
// unit the caller has in mind): (1+g+...+g^{k-1})^m + ((1-k^m)/d) * sum_{i<d} g^i.
QGElement bass_formula(const FiniteGroup& grp, int g, long d, long k, long m) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    Integer num = 1 - km;
    if (num % d != 0) throw ValidationError("bass unit: k^m is not 1 modulo the order");
    Rational scale(num / d);
    return geometric_sum(grp, g, k).pow(m) + scale * geometric_sum(grp, g, d);
}

} // namespace

UnitWithInverse bass_unit(const FiniteGroup& grp, const BassUnitSpec& spec) {
    long n = grp.element_order(spec.g);
    if (spec.k < 1 || spec.k >= n)
        throw ValidationError("bass unit: k must satisfy 1 <= k < |g|");
    if (spec.m < 1) throw ValidationError("bass unit: m must be positive");
    if (mod_pow(spec.k, spec.m, n) != 1 % n)
        throw ValidationError("bass unit: k^m must be 1 mod |g|");
    UnitWithInverse r;
    r.u = bass_formula(grp, spec.g, n, spec.k, spec.m);
    long kinv = mod_inverse(spec.k, n);
    r.u_inv = bass_formula(grp, grp.power(spec.g, spec.k), n, kinv, spec.m);
    if (!is_unit_with_inverse(r.u, r.u_inv))
        throw ConsistencyError("bass unit: closed-form inverse failed verification");
    return r;
}

UnitWithInverse generalized_bass_on_coset(const Subgroup& k_sub, int g, long k, long m) {
    const FiniteGroup& grp = *k_sub.parent;
    long d = coset_order(k_sub, g);
    QGElement kh = hat(k_sub);
    QGElement one = QGElement::one(grp);
    if (d == 1) return {one, one};
    if (mod_pow(k, m, d) != 1)
        throw ValidationError("generalized bass unit: k^m must be 1 mod the coset order");
    QGElement beta = bass_formula(grp, g, d, k, m);
    long kinv = mod_inverse(k, d);
    QGElement beta_inv = bass_formula(grp, grp.power(g, k), d, kinv, m);
    UnitWithInverse r;
    r.u = one - kh + beta * kh;
    r.u_inv = one - kh + beta_inv * kh;
    return r;
}

long n_GM(const Subgroup& h, const Subgroup& m, long iteration_cap) {
    const FiniteGroup& grp = *h.parent;
    if (!is_subgroup_of(m, h)) throw ValidationError("n_GM: M must sit inside the group");
    if (!is_normal_in(m, h)) throw ValidationError("n_GM: M must be normal");
    long mod = m.size();
    if (mod == 1) return 1;
    Quotient q = quotient(h, m);
    int qn = q.group.size();

    // Multiply in (Z/|M|)[H/M]; b^n is integral over ZG exactly when the image
    // of the Bass factor there is 1.
    auto mulvec = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(qn, 0);
        for (int i = 0; i < qn; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < qn; ++j)
                if (b[j] != 0) {
                    int t = q.group.mul(i, j);
                    r[t] = (r[t] + a[i] * b[j]) % mod;
                }
        }
        return r;
    };
    auto is_one = [&](const std::vector<long>& a) {
        if (a[0] != 1 % mod) return false;
        for (int i = 1; i < qn; ++i)
            if (a[i] != 0) return false;
        return true;
    };

    long total = 1;
    for (int g : h.elements) {
        long d = coset_order(m, g);
        if (d <= 1) continue;
        for (long k = 2; k < d; ++k) {
            if (gcd_long(k, d) != 1) continue;
            long ord = multiplicative_order(k, d);
            QGElement beta = bass_formula(grp, g, d, k, ord);
            std::vector<long> img(qn, 0);
            for (const auto& [e, c] : beta.terms()) {
                Integer num = c.get_num(); // beta is integral
                Integer rem = num % mod;
                long v = rem.get_si();
                img[q.coset_of[e]] = mod_norm(img[q.coset_of[e]] + v, mod);
            }
            std::vector<long> acc = img;
            long steps = 1;
            while (!is_one(acc)) {
                acc = mulvec(acc, img);
                if (++steps > iteration_cap)
                    throw CapacityError("n_GM iteration cap exceeded");
            }
            total = lcm_long(total, steps);
        }
    }
    return total;
}

UnitWithInverse generalized_bass_unit(const FiniteGroup& grp, int g, const Subgroup& m,
                                      long k, long mm, long power) {
    long n = grp.element_order(g);
    if (gcd_long(mod_norm(k, n), n) != 1 && n > 1)
        throw ValidationError("generalized bass unit: gcd(k, |g|) must be 1");
    if (mod_pow(k, mm, n) != 1 % n)
        throw ValidationError("generalized bass unit: k^m must be 1 mod |g|");
    if (power == 0) power = n_GM(whole_group(grp), m);
    BassUnitSpec spec{g, mod_norm(k, n) == 0 ? 1 : mod_norm(k, n), mm};
    QGElement mh = hat(m);
    QGElement one = QGElement::one(grp);
    UnitWithInverse base;
    if (spec.k == 1) {
        base = {one, one};
    } else {
        UnitWithInverse b = bass_unit(grp, spec);
        base.u = one - mh + b.u * mh;
        base.u_inv = one - mh + b.u_inv * mh;
    }
    UnitWithInverse r;
    r.u = base.u.pow(power);
    r.u_inv = base.u_inv.pow(power);
    if (!is_integral(r.u) || !is_integral(r.u_inv))
        throw ConsistencyError("generalized bass unit: power is not integral");
    if (!is_unit_with_inverse(r.u, r.u_inv))
        throw ConsistencyError("generalized bass unit: inverse failed verification");
    return r;
}

Cyclotomic cyclotomic_unit(long k, const Cyclotomic& z) {
    if (z.is_one()) return Cyclotomic::one(z.order());
    long d = z.root_of_unity_order();
    if (d == 0) throw ValidationError("cyclotomic unit: argument is not a root of unity");
    if (gcd_long(mod_norm(k, d), d) != 1)
        throw ValidationError("cyclotomic unit: k not coprime to the order of the root");
    // 1 + z + ... + z^{k-1}; full cycles of length d sum to zero, so reduce k.
    Cyclotomic acc = Cyclotomic::zero(z.order());
    Cyclotomic cur = Cyclotomic::one(z.order());
    for (long i = 0; i < mod_norm(k, d); ++i) {
        acc += cur;
        cur = cur * z;
    }
    return acc;
}

Cyclotomic cyclotomic_unit_eta(long n, long j, long k) {
    return cyclotomic_unit(k, Cyclotomic::root_power(n, j));
}

Cyclotomic pi_norm(const std::vector<long>& a_exponents, const Cyclotomic& u) {
    if (!is_unit_subgroup(u.order(), a_exponents))
        throw ValidationError("pi_norm: exponents are not a subgroup of U(Z/nZ)");
    Cyclotomic acc = Cyclotomic::one(u.order());
    for (long a : a_exponents) acc = acc * u.galois(a);
    return acc;
}

std::vector<Cyclotomic> norm_basis(long p, long n, const std::vector<long>& a_exponents) {
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    std::vector<long> a = unit_subgroup_closure(pn, a_exponents);
    std::vector<long> a_neg = unit_subgroup_closure(pn, [&] {
        std::vector<long> g = a;
        g.push_back(pn - 1);
        return g;
    }());
    std::vector<long> reps = unit_coset_representatives(pn, a_neg);
    std::vector<Cyclotomic> out;
    for (long k : reps) {
        if (k == 1) continue;
        Cyclotomic u = pi_norm(a, cyclotomic_unit_eta(pn, 1, k));
        // Fixed-field membership and unit-ness of the cyclotomic integer.
        for (long s : a)
            if (!(u.galois(s) == u))
                throw ConsistencyError("norm_basis element escaped the fixed field");
        Cyclotomic v = pi_norm(a, cyclotomic_unit_eta(pn, mod_norm(k, pn), mod_inverse(k, pn)));
        if (!(u * v == Cyclotomic::one(pn)))
            throw ConsistencyError("norm_basis element is not a unit");
        if (!u.is_integral() || !v.is_integral())
            throw ConsistencyError("norm_basis element is not integral");
        out.push_back(u);
    }
    if (!out.empty()) {
        // Log-embedding rank certificate over the archimedean places of the
        // fixed field (one place dropped).
        FixedFieldBasis field = fixed_field(pn, a);
        std::vector<long> places = archimedean_place_representatives(field);
        int m = static_cast<int>(out.size());
        std::vector<std::vector<BigFloat>> rows(m);
        for (size_t c = 1; c < places.size(); ++c)
            for (int i = 0; i < m; ++i)
                rows[i].push_back(log_abs_embed(out[i], places[c], 128));
        std::vector<BigFloat> gram;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                BigFloat s(128);
                for (size_t c = 0; c < rows[i].size(); ++c) s = s + rows[i][c] * rows[j][c];
                gram.push_back(s);
            }
        auto eig = symmetric_eigenvalues(gram, m);
        if (eig.front().to_double() < 1e-12)
            throw ConsistencyError("norm_basis failed the log-embedding rank certificate");
    }
    return out;
}

ChainProducts::ChainProducts(const Subgroup& h, const Subgroup& k, long kk, long r,
                             long n_hk_hint)
    : g_(h.parent), h_(h), k_(k), kk_(kk), r_(r) {
    if (!is_subgroup_of(k_, h_)) throw ValidationError("chain: K must sit inside H");
    if (!is_normal_in(k_, h_)) throw ValidationError("chain: K must be normal in H");
    long index = h_.size() / k_.size();
    if (index == 1) throw ValidationError("chain: [H:K] must exceed 1");
    long p = 2;
    while (index % p != 0) ++p;
    long n = 0, rest = index;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) throw ValidationError("chain: [H:K] must be a prime power");
    p_ = p;
    n_ = n;
    if (gcd_long(mod_norm(kk_, p_), p_) != 1)
        throw ValidationError("chain: k must be coprime to p");
    gen_ = quotient_cyclic_generator(h_, k_);
    long pn = index;
    ord_kk_ = multiplicative_order(kk_, pn);
    n_hk_ = n_hk_hint > 0 ? n_hk_hint : n_GM(h_, k_);
    chain_.reserve(n_ + 1);
    long pw = pn;
    for (long j = 0; j <= n_; ++j) {
        // H_j = <g^{p^{n-j}}, K>
        std::vector<int> gens = k_.elements;
        gens.push_back(g_->power(gen_, pw));
        chain_.push_back(generated_subgroup(*g_, gens));
        pw /= p_;
    }
}

const UnitWithInverse& ChainProducts::get(long j, long s) {
    if (!(0 <= j && j <= s && s <= n_))
        throw ValidationError("chain indices must satisfy 0 <= j <= s <= n");
    auto key = std::make_pair(j, s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    UnitWithInverse result;
    const QGElement one = QGElement::one(*g_);
    if (j == s) {
        result = {one, one};
    } else {
        // Product over H_j of generalized Bass units based at g^{r p^{n-s}} h.
        long m = ord_kk_ * n_hk_;
        long shift = 1;
        for (long i = 0; i < n_ - s; ++i) shift *= p_;
        int base = g_->power(gen_, r_ * shift);
        UnitWithInverse big{one, one};
        for (int hElem : chain_[j].elements) {
            UnitWithInverse f = generalized_bass_on_coset(k_, g_->mul(base, hElem), kk_, m);
            big.u = big.u * f.u;
            big.u_inv = f.u_inv * big.u_inv;
        }
        long e = 1;
        for (long i = 0; i < s - j - 1; ++i) e *= p_;
        result.u = big.u.pow(e);
        result.u_inv = big.u_inv.pow(e);
        for (long l = j + 1; l <= s - 1; ++l) {
            const UnitWithInverse& c = get(l, s);
            result.u = result.u * c.u_inv;
            result.u_inv = c.u * result.u_inv;
        }
        for (long l = 0; l <= j - 1; ++l) {
            const UnitWithInverse& c = get(l, s + l - j);
            result.u = result.u * c.u_inv;
            result.u_inv = c.u * result.u_inv;
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

UnitWithInverse chain_product(const Subgroup& h, const Subgroup& k, long kk, long r,
                              long j, long s) {
    ChainProducts chain(h, k, kk, r);
    return chain.get(j, s);
}

RankReport rank_report(const FiniteGroup& g, const std::vector<StrongShodaPair>& pairs) {
    RankReport rep;
    for (const auto& p : pairs) {
        RankReport::Row row;
        row.phi = euler_phi(p.index_k);
        row.nh_index = p.n.size() / p.h.size();
        // k = 1 iff complex conjugation lies in the action image, i.e.
        // y y^n in K for some n in N_G(K).
        row.k_flag = 2;
        for (int t : p.n.elements) {
            int yy = g.mul(p.quotient_generator, g.conjugate(p.quotient_generator, t));
            if (p.k.contains(yy)) {
                row.k_flag = 1;
                break;
            }
        }
        row.contribution = row.phi / (row.k_flag * row.nh_index) - 1;
        rep.rows.push_back(row);
        rep.total += row.contribution;
    }
    long real = static_cast<long>(conjugacy_classes(g, ClassKind::Real).size());
    long rational = static_cast<long>(conjugacy_classes(g, ClassKind::Rational).size());
    rep.oracle_total = real - rational;
    if (rep.total != rep.oracle_total)
        throw ConsistencyError("rank formula disagrees with the class-count oracle");
    return rep;
}

namespace {

void verify_central_unit(const FiniteGroup& g, const CentralUnit& cu) {
    if (!is_central(cu.unit.u))
        throw ConsistencyError("central basis element is not central");
    if (!is_integral(cu.unit.u) || !is_integral(cu.unit.u_inv))
        throw ConsistencyError("central basis element is not integral");
    if (!is_unit_with_inverse(cu.unit.u, cu.unit.u_inv))
        throw ConsistencyError("central basis element inverse failed");
    (void)g;
}

} // namespace

std::vector<CentralUnit> central_virtual_basis(const FiniteGroup& g,
                                               const std::vector<StrongShodaPair>& pairs) {
    for (const auto& p : pairs) {
        long idx = p.index_k, q = idx;
        if (idx > 1) {
            long c = 2;
            while (q % c != 0) ++c;
            while (q % c == 0) q /= c;
        } else {
            q = 1;
        }
        if (q != 1)
            throw UnsupportedClassError(
                "central basis needs prime-power [H:K]; offending index " +
                std::to_string(idx));
    }
    RankReport rep = rank_report(g, pairs);
    std::vector<CentralUnit> out;
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& p = pairs[pi];
        if (rep.rows[pi].contribution <= 0) continue;
        SimpleComponent comp = component_descriptor(g, p);
        std::vector<long> image(comp.action.begin(), comp.action.end());
        std::vector<long> a = unit_subgroup_closure(p.index_k, image);
        std::vector<long> a_neg = unit_subgroup_closure(p.index_k, [&] {
            std::vector<long> v = a;
            v.push_back(p.index_k - 1);
            return v;
        }());
        std::vector<long> reps = unit_coset_representatives(p.index_k, a_neg);
        std::vector<int> tk = right_transversal(p.n, whole_group(g));
        long pn_exp = 0;
        for (long idx = p.index_k; idx > 1;) {
            long q = 2;
            while (idx % q != 0) ++q;
            while (idx % q == 0) {
                idx /= q;
                ++pn_exp;
            }
        }
        long n_hk = n_GM(p.h, p.k);
        for (long k : reps) {
            if (k == 1) continue;
            UnitWithInverse prod{QGElement::one(g), QGElement::one(g)};
            for (long x : a) {
                ChainProducts cx(p.h, p.k, k, x, n_hk);
                const UnitWithInverse& c = cx.get(0, pn_exp);
                prod.u = prod.u * c.u;
                prod.u_inv = c.u_inv * prod.u_inv;
            }
            UnitWithInverse total{QGElement::one(g), QGElement::one(g)};
            for (int t : tk) {
                total.u = total.u * prod.u.conjugate_by(t);
                total.u_inv = prod.u_inv.conjugate_by(t) * total.u_inv;
            }
            CentralUnit cu;
            cu.unit = total;
            cu.pair_index = pi;
            cu.k = k;
            cu.note = "chain c_0^" + std::to_string(pn_exp);
            verify_central_unit(g, cu);
            out.push_back(std::move(cu));
        }
    }
    if (static_cast<long>(out.size()) != rep.total)
        throw ConsistencyError("central basis size differs from the rank");
    return out;
}

std::vector<CentralUnit> central_virtual_basis(const FiniteGroup& g) {
    return central_virtual_basis(g, enumerate_ssp(g));
}

std::vector<CentralUnit> metacyclic_central_basis(const FiniteGroup& g, long q, long m,
                                                  long p, long n, long r) {
    long qm = 1, pn = 1;
    for (long i = 0; i < m; ++i) qm *= q;
    for (long i = 0; i < n; ++i) pn *= p;
    const auto& pres = g.presentation();
    if (!pres || pres->m != qm || pres->n != pn || pres->t != 0 ||
        mod_norm(pres->r - r, qm) != 0)
        throw ValidationError("group does not match the metacyclic parameters");
    if (multiplicative_order(r, qm) != pn)
        throw ValidationError("metacyclic central basis requires a faithful action");

    int a = 1;
    int b = static_cast<int>(qm);
    Subgroup ha = generated_subgroup(g, {a});
    Subgroup whole = whole_group(g);
    std::vector<CentralUnit> out;

    // Type (i): chains on (G, L_i) with parameter r = 1;
    // p odd: 1 < k < p^i/2 with p not dividing k; p = 2: odd 1 < k < 2^{i-1}.
    long pi_pow = p;
    for (long i = 1; i <= n; ++i) {
        Subgroup li = generated_subgroup(g, {a, g.power(b, pi_pow)});
        long limit = pi_pow / 2; // 2^{i-1} when p = 2
        long n_hk = 0;
        for (long k = 2; k < pi_pow; ++k) {
            if (p == 2 && k >= limit) break;
            if (p != 2 && 2 * k >= pi_pow) break;
            if (k % p == 0) continue;
            if (n_hk == 0) n_hk = n_GM(whole, li);
            ChainProducts chain(whole, li, k, 1, n_hk);
            const UnitWithInverse& c = chain.get(0, i);
            CentralUnit cu;
            cu.unit = c;
            cu.pair_index = static_cast<size_t>(i);
            cu.k = k;
            cu.note = "type (i) chain on (G, L_" + std::to_string(i) + ")";
            verify_central_unit(g, cu);
            out.push_back(std::move(cu));
        }
        pi_pow *= p;
    }

    // Type (ii): products of ordinary Bass units on <a>.
    long qj = q;
    for (long j = 1; j <= m; ++j) {
        std::vector<long> gens{mod_norm(r, qj)};
        std::vector<long> rneg = unit_subgroup_closure(qj, {mod_norm(r, qj), qj - 1});
        std::vector<long> reps = unit_coset_representatives(qj, rneg);
        for (long k : reps) {
            if (k == 1) continue;
            UnitWithInverse prod{QGElement::one(g), QGElement::one(g)};
            long rx = 1;
            for (long x = 0; x < pn; ++x) {
                ChainProducts cx(ha, trivial_subgroup(g), k, rx);
                const UnitWithInverse& c = cx.get(m - j, m);
                prod.u = prod.u * c.u;
                prod.u_inv = c.u_inv * prod.u_inv;
                rx = mod_norm(rx * r, qm);
            }
            CentralUnit cu;
            cu.unit = prod;
            cu.pair_index = static_cast<size_t>(n + j);
            cu.k = k;
            cu.note = "type (ii) Bass product on (<a>, K_" + std::to_string(j) + ")";
            verify_central_unit(g, cu);
            out.push_back(std::move(cu));
        }
        qj *= q;
    }

    long expected = (p == 2) ? (pn / 2 + (qm - 1) / pn - n - m)
                             : ((pn - 1) / 2 + (qm - 1) / (2 * pn) - n - m);
    if (static_cast<long>(out.size()) != expected)
        throw ConsistencyError("metacyclic central basis count mismatch");
    return out;
}

Cyclotomic component_projection(const FiniteGroup& g, const StrongShodaPair& pair,
                                const QGElement& x) {
    // Central character of the component: omega(x) = sum c_g chi(g) / chi(1)
    // with chi the character induced from the linear character of H with
    // kernel K.
    long k = pair.index_k;
    // Discrete log over H mod K.
    std::vector<long> dlog(g.size(), -1);
    int cur = g.identity();
    for (long i = 0; i < k; ++i) {
        for (int u : pair.k.elements) dlog[g.mul(cur, u)] = i;
        cur = g.mul(cur, pair.quotient_generator);
    }
    Cyclotomic acc = Cyclotomic::zero(k);
    for (const auto& [e, c] : x.terms()) {
        // chi(e) = (1/|H|) sum over x in G with e^x in H of zeta^dlog(e^x)
        Cyclotomic chi = Cyclotomic::zero(k);
        for (int t = 0; t < g.size(); ++t) {
            int conj = g.conjugate(e, t);
            if (pair.h.contains(conj)) chi += Cyclotomic::root_power(k, dlog[conj]);
        }
        acc += (c * make_rational(1, pair.h.size())) * chi;
    }
    // Divide by chi(1) = [G:H].
    return make_rational(pair.h.size(), g.size()) * acc;
}

IndependenceCertificate independence_check(const std::vector<QGElement>& units,
                                           const FiniteGroup& g,
                                           const std::vector<StrongShodaPair>& pairs,
                                           long precision_bits) {
    IndependenceCertificate cert;
    cert.units = static_cast<int>(units.size());
    if (units.empty()) {
        cert.numeric_rank = 0;
        cert.pass = true;
        cert.smallest_singular_value = 0.0;
        return cert;
    }
    // Columns: archimedean places of every component center, dropping one
    // place per center.
    std::vector<std::vector<BigFloat>> rows(units.size());
    for (const auto& p : pairs) {
        SimpleComponent comp = component_descriptor(g, p);
        std::vector<long> places = archimedean_place_representatives(comp.center);
        if (places.size() <= 1) continue;
        std::vector<Cyclotomic> projections;
        projections.reserve(units.size());
        for (const auto& u : units) projections.push_back(component_projection(g, p, u));
        for (size_t c = 1; c < places.size(); ++c)
            for (size_t i = 0; i < units.size(); ++i)
                rows[i].push_back(log_abs_embed(projections[i], places[c], precision_bits));
    }
    int cols = rows[0].empty() ? 0 : static_cast<int>(rows[0].size());
    int n = cert.units;
    if (cols == 0) {
        cert.numeric_rank = 0;
        cert.pass = false;
        return cert;
    }
    // Gram matrix and its smallest eigenvalue at working precision.
    std::vector<BigFloat> gram;
    gram.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigFloat s(precision_bits);
            for (int c = 0; c < cols; ++c) s = s + rows[i][c] * rows[j][c];
            gram.push_back(s);
        }
    std::vector<BigFloat> eig = symmetric_eigenvalues(gram, n);
    BigFloat smallest = eig.front();
    BigFloat sigma = smallest.compare(BigFloat(precision_bits)) < 0
                         ? BigFloat(precision_bits)
                         : smallest.sqrt();
    cert.smallest_singular_value = sigma.to_double();
    double tol = 1e-6;
    int rank = 0;
    for (const auto& lambda : eig) {
        BigFloat s = lambda.compare(BigFloat(precision_bits)) < 0 ? BigFloat(precision_bits)
                                                                  : lambda.sqrt();
        if (s.to_double() > tol) ++rank;
    }
    cert.numeric_rank = rank;
    cert.pass = rank == n && cert.smallest_singular_value > tol;
    return cert;
}

} // namespace wedderkit

#include "wedderkit/shoda.hpp"

#include <algorithm>
#include <set>

#include "wedderkit/errors.hpp"

namespace wedderkit {

namespace {

std::vector<QGElement> distinct_conjugates(const QGElement& x) {
    const FiniteGroup& g = x.group();
    std::vector<QGElement> out;
    for (int t = 0; t < g.size(); ++t) {
        QGElement c = x.conjugate_by(t);
        bool fresh = true;
        for (const auto& s : out)
            if (s == c) {
                fresh = false;
                break;
            }
        if (fresh) out.push_back(std::move(c));
    }
    return out;
}

} // namespace

SspDiagnostic is_strong_shoda_pair(const FiniteGroup& g, const Subgroup& h,
                                   const Subgroup& k) {
    SspDiagnostic d;
    if (!is_subgroup_of(k, h)) {
        d.reason = "K is not contained in H";
        return d;
    }
    Subgroup n = normalizer(k);
    if (!is_subgroup_of(h, n)) {
        d.reason = "H is not contained in N_G(K)";
        return d;
    }
    if (!is_normal_in(h, n)) {
        d.reason = "H is not normal in N_G(K)";
        return d;
    }
    if (!quotient_is_cyclic(h, k)) {
        d.reason = "H/K is not cyclic";
        return d;
    }
    // Maximal abelian in N/K is self-centralizing.
    Quotient nk = quotient(n, k);
    std::vector<int> h_cosets;
    for (int e : h.elements) h_cosets.push_back(nk.coset_of[e]);
    std::sort(h_cosets.begin(), h_cosets.end());
    h_cosets.erase(std::unique(h_cosets.begin(), h_cosets.end()), h_cosets.end());
    Subgroup cent = centralizer(nk.group, h_cosets);
    if (cent.size() != static_cast<int>(h_cosets.size())) {
        d.reason = "H/K is not a maximal abelian subgroup of N_G(K)/K";
        return d;
    }
    // Distinct G-conjugates of epsilon must be orthogonal.
    QGElement eps = epsilon(h, k);
    std::vector<QGElement> conj = distinct_conjugates(eps);
    QGElement zero = QGElement::zero(g);
    for (size_t i = 0; i < conj.size(); ++i)
        for (size_t j = i + 1; j < conj.size(); ++j)
            if (!(conj[i] * conj[j] == zero)) {
                d.reason = "distinct conjugates of epsilon(H,K) are not orthogonal";
                return d;
            }
    // The definition then forces C_G(eps) = N_G(K); keep it as a checked fact.
    std::vector<int> stab;
    for (int t = 0; t < g.size(); ++t)
        if (eps.conjugate_by(t) == eps) stab.push_back(t);
    Subgroup cg = make_subgroup(g, stab);
    if (!(cg == n))
        throw ConsistencyError("C_G(epsilon(H,K)) differs from N_G(K) on a strong Shoda pair");
    d.ok = true;
    return d;
}

StrongShodaPair make_strong_shoda_pair(const FiniteGroup& g, const Subgroup& h,
                                       const Subgroup& k) {
    SspDiagnostic d = is_strong_shoda_pair(g, h, k);
    if (!d.ok) throw ValidationError("not a strong Shoda pair: " + d.reason);
    StrongShodaPair p;
    p.h = h;
    p.k = k;
    p.n = normalizer(k);
    p.quotient_generator = quotient_cyclic_generator(h, k);
    p.index_k = h.size() / k.size();
    p.degree_n = g.size() / p.n.size();
    return p;
}

bool ssp_equivalent(const FiniteGroup& g, const StrongShodaPair& a,
                    const StrongShodaPair& b) {
    bool algebraic = e_idempotent(g, a.h, a.k) == e_idempotent(g, b.h, b.k);
    bool geometric = false;
    for (int t = 0; t < g.size() && !geometric; ++t) {
        Subgroup h1g = conjugate_subgroup(a.h, t);
        Subgroup k1g = conjugate_subgroup(a.k, t);
        if (intersection(h1g, b.k) == intersection(k1g, b.h)) geometric = true;
    }
    if (algebraic != geometric)
        throw ConsistencyError(
            "SSP equivalence criteria disagree (e-equality vs conjugate intersection)");
    return algebraic;
}

namespace {

std::vector<StrongShodaPair> dedup_and_verify(const FiniteGroup& g,
                                              std::vector<StrongShodaPair> pool) {
    // Dedup by pci equality (cross-checked against the conjugate criterion).
    std::vector<StrongShodaPair> kept;
    std::vector<QGElement> kept_e;
    for (auto& p : pool) {
        QGElement e = e_idempotent(g, p.h, p.k);
        bool fresh = true;
        for (size_t i = 0; i < kept.size(); ++i) {
            bool algebraic = kept_e[i] == e;
            bool geometric = false;
            for (int t = 0; t < g.size() && !geometric; ++t) {
                if (intersection(conjugate_subgroup(p.h, t), kept[i].k) ==
                    intersection(conjugate_subgroup(p.k, t), kept[i].h))
                    geometric = true;
            }
            if (algebraic != geometric)
                throw ConsistencyError("SSP equivalence criteria disagree during dedup");
            if (algebraic) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            kept.push_back(std::move(p));
            kept_e.push_back(std::move(e));
        }
    }
    // Partition of unity, orthogonality, and the rational class count.
    QGElement total = QGElement::zero(g);
    for (const auto& e : kept_e) total += e;
    if (!(total == QGElement::one(g)))
        throw ConsistencyError("SSP set does not give a partition of unity");
    for (size_t i = 0; i < kept_e.size(); ++i)
        for (size_t j = i + 1; j < kept_e.size(); ++j)
            if (!((kept_e[i] * kept_e[j]).is_zero()))
                throw ConsistencyError("primitive central idempotents are not orthogonal");
    size_t rational = conjugacy_classes(g, ClassKind::Rational).size();
    if (kept.size() != rational)
        throw ConsistencyError("SSP class count differs from rational class count");

    std::sort(kept.begin(), kept.end(), [](const StrongShodaPair& x, const StrongShodaPair& y) {
        if (x.h.size() != y.h.size()) return x.h.size() > y.h.size();
        if (x.k.size() != y.k.size()) return x.k.size() > y.k.size();
        if (x.h.elements != y.h.elements) return x.h.elements < y.h.elements;
        return x.k.elements < y.k.elements;
    });
    return kept;
}

} // namespace

std::vector<StrongShodaPair> enumerate_ssp(const FiniteGroup& g, int bound) {
    std::vector<Subgroup> lattice = all_subgroups(g, bound);
    Subgroup whole = whole_group(g);
    Subgroup derived = derived_subgroup(whole);
    std::vector<StrongShodaPair> pool;

    if (is_abelian(derived)) {
        // Metabelian route: fix a maximal abelian subgroup A containing G'.
        std::vector<const Subgroup*> abelian_over;
        for (const auto& s : lattice)
            if (is_subgroup_of(derived, s) && is_abelian(s)) abelian_over.push_back(&s);
        const Subgroup* a = nullptr;
        for (const Subgroup* cand : abelian_over) {
            bool maximal = true;
            for (const Subgroup* other : abelian_over)
                if (other != cand && other->size() > cand->size() &&
                    is_subgroup_of(*cand, *other))
                    maximal = false;
            if (!maximal) continue;
            if (!a || cand->size() > a->size() ||
                (cand->size() == a->size() && cand->elements < a->elements))
                a = cand;
        }
        if (!a) throw ConsistencyError("no maximal abelian subgroup over G'");

        std::vector<Subgroup> derived_of(lattice.size(), derived);
        for (size_t i = 0; i < lattice.size(); ++i) derived_of[i] = derived_subgroup(lattice[i]);

        for (const auto& k : lattice) {
            std::vector<size_t> cands;
            for (size_t i = 0; i < lattice.size(); ++i) {
                const Subgroup& b = lattice[i];
                if (!is_subgroup_of(*a, b)) continue;
                if (!is_subgroup_of(k, b)) continue;
                if (!is_subgroup_of(derived_of[i], k)) continue;
                cands.push_back(i);
            }
            for (size_t i : cands) {
                bool maximal = true;
                for (size_t j : cands)
                    if (j != i && lattice[j].size() > lattice[i].size() &&
                        is_subgroup_of(lattice[i], lattice[j]))
                        maximal = false;
                if (!maximal) continue;
                const Subgroup& h = lattice[i];
                if (!quotient_is_cyclic(h, k)) continue;
                SspDiagnostic d = is_strong_shoda_pair(g, h, k);
                if (!d.ok)
                    throw ConsistencyError("metabelian candidate fails the SSP check: " +
                                           d.reason);
                pool.push_back(make_strong_shoda_pair(g, h, k));
            }
        }
    } else {
        // Generic brute-force search over all pairs K <= H.
        for (const auto& h : lattice)
            for (const auto& k : lattice) {
                if (!is_subgroup_of(k, h)) continue;
                if (!is_subgroup_of(h, normalizer(k))) continue;
                if (is_strong_shoda_pair(g, h, k).ok)
                    pool.push_back(make_strong_shoda_pair(g, h, k));
            }
    }
    return dedup_and_verify(g, pool);
}

std::vector<StrongShodaPair> metacyclic_ssp_catalog(const FiniteGroup& g, long q, long m,
                                                    long p, long n, long r) {
    long qm = 1, pn = 1;
    for (long i = 0; i < m; ++i) qm *= q;
    for (long i = 0; i < n; ++i) pn *= p;
    const auto& pres = g.presentation();
    if (!pres || pres->m != qm || pres->n != pn || pres->t != 0 ||
        mod_norm(pres->r - r, qm) != 0)
        throw ValidationError("group does not match the metacyclic catalog parameters");
    if (multiplicative_order(r, qm) != pn)
        throw UnsupportedClassError(
            "catalog requires a faithful action (order of r mod q^m must be p^n); "
            "use enumerate_ssp instead");

    int a = 1;                          // a^1 b^0
    int b = static_cast<int>(qm);       // a^0 b^1
    std::vector<StrongShodaPair> pairs;
    long pi = 1;
    for (long i = 0; i <= n; ++i) {
        Subgroup li = generated_subgroup(g, {a, g.power(b, pi)});
        pairs.push_back(make_strong_shoda_pair(g, whole_group(g), li));
        pi *= p;
    }
    Subgroup ha = generated_subgroup(g, {a});
    long qj = q;
    for (long j = 1; j <= m; ++j) {
        Subgroup kj = generated_subgroup(g, {g.power(a, qj)});
        pairs.push_back(make_strong_shoda_pair(g, ha, kj));
        qj *= q;
    }
    return pairs;
}

namespace {

std::vector<std::vector<long>> compute_twisting(const FiniteGroup& g, const Quotient& nh,
                                                const std::vector<int>& reps,
                                                const std::vector<long>& dlog, long k) {
    int cnt = static_cast<int>(reps.size());
    std::vector<std::vector<long>> tau(cnt, std::vector<long>(cnt, 0));
    for (int i = 0; i < cnt; ++i)
        for (int j = 0; j < cnt; ++j) {
            int l = nh.group.mul(i, j);
            int d = g.mul(g.mul(g.inv(reps[l]), reps[i]), reps[j]);
            if (dlog[d] < 0)
                throw ConsistencyError("twisting element escaped H");
            tau[i][j] = mod_norm(dlog[d], k);
        }
    return tau;
}

bool all_trivial(const std::vector<std::vector<long>>& tau) {
    for (const auto& row : tau)
        for (long v : row)
            if (v != 0) return false;
    return true;
}

} // namespace

SimpleComponent component_descriptor(const FiniteGroup& g, const StrongShodaPair& pair,
                                     bool search_section) {
    SimpleComponent c;
    c.pair = pair;
    c.matrix_degree = pair.degree_n;
    c.cyclotomic_order = pair.index_k;
    long k = pair.index_k;

    Quotient nh = quotient(pair.n, pair.h);
    c.nh_transversal = nh.reps;

    // Discrete log of H modulo K with respect to the stored generator coset.
    std::vector<long> dlog(g.size(), -1);
    int cur = g.identity();
    for (long i = 0; i < k; ++i) {
        for (int u : pair.k.elements) dlog[g.mul(cur, u)] = i;
        cur = g.mul(cur, pair.quotient_generator);
    }

    int cnt = static_cast<int>(nh.reps.size());
    c.action.resize(cnt);
    for (int i = 0; i < cnt; ++i) {
        int image = g.conjugate(pair.quotient_generator, nh.reps[i]);
        if (dlog[image] < 0) throw ConsistencyError("action image escaped H");
        c.action[i] = mod_norm(dlog[image], k);
    }
    // The action N/H -> U(Z/kZ) is faithful.
    {
        std::set<long> img(c.action.begin(), c.action.end());
        if (static_cast<int>(img.size()) != cnt)
            throw ConsistencyError("action of N/H on H/K is not faithful");
    }

    c.twisting = compute_twisting(g, nh, c.nh_transversal, dlog, k);
    c.twist_trivial = all_trivial(c.twisting);

    if (!c.twist_trivial && search_section) {
        // Bounded search over left-inverse sections (one K-coset inside each
        // H-coset); the identity coset keeps its representative.
        std::vector<std::vector<int>> choices(cnt);
        choices[0] = {c.nh_transversal[0]};
        for (int i = 1; i < cnt; ++i) {
            // K-coset representatives inside the H-coset of reps[i].
            std::vector<char> covered(g.size(), 0);
            for (int x : pair.h.elements) {
                int e = g.mul(x, c.nh_transversal[i]);
                if (covered[e]) continue;
                choices[i].push_back(e);
                for (int u : pair.k.elements) covered[g.mul(u, e)] = 1;
            }
        }
        long combos = 1;
        bool overflow = false;
        for (int i = 1; i < cnt; ++i) {
            combos *= static_cast<long>(choices[i].size());
            if (combos > 100000) {
                overflow = true;
                break;
            }
        }
        if (!overflow) {
            std::vector<size_t> pick(cnt, 0);
            while (true) {
                std::vector<int> reps(cnt);
                for (int i = 0; i < cnt; ++i) reps[i] = choices[i][pick[i]];
                auto tau = compute_twisting(g, nh, reps, dlog, k);
                if (all_trivial(tau)) {
                    c.nh_transversal = reps;
                    c.twisting = tau;
                    c.twist_trivial = true;
                    break;
                }
                int pos = 1;
                while (pos < cnt && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
                if (pos >= cnt) break;
            }
        }
    }

    std::vector<long> image(c.action.begin(), c.action.end());
    c.center = fixed_field(k, unit_subgroup_closure(k, image));
    return c;
}

void check_wedderburn_dimensions(const FiniteGroup& g,
                                 const std::vector<StrongShodaPair>& pairs) {
    long total = 0;
    for (const auto& p : pairs) {
        long nh = p.h.size() == 0 ? 1 : p.n.size() / p.h.size();
        total += p.degree_n * p.degree_n * euler_phi(p.index_k) * nh;
    }
    if (total != g.size())
        throw ConsistencyError("Wedderburn component dimensions do not sum to |G|");
}

} // namespace wedderkit

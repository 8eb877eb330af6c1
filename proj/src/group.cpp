#include "wedderkit/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "wedderkit/cyclotomic.hpp" // mod_norm, gcd_long
#include "wedderkit/errors.hpp"

namespace wedderkit {

void FiniteGroup::finalize() {
    size_ = static_cast<int>(labels_.size());
    // Identity must be index 0.
    for (int x = 0; x < size_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            throw ValidationError("identity law fails at index 0");
    inverse_.assign(size_, -1);
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) throw ValidationError("element without inverse");
    }
    // Associativity: exhaustive for small groups, sampled above.
    if (size_ <= 64) {
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                for (int c = 0; c < size_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw ValidationError("multiplication table is not associative");
    } else {
        std::mt19937_64 rng(0x5eda11u);
        std::uniform_int_distribution<int> pick(0, size_ - 1);
        for (int i = 0; i < 100000; ++i) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw ValidationError("multiplication table is not associative");
        }
    }
    order_.assign(size_, 0);
    for (int g = 0; g < size_; ++g) {
        long d = 1;
        int x = g;
        while (x != 0) {
            x = mul(x, g);
            ++d;
        }
        order_[g] = d;
    }
    // Greedy generating set: grow by any element outside the current closure.
    auto closure_size = [this](const std::vector<int>& gens, std::vector<char>& seen) {
        seen.assign(size_, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        size_t head = 0;
        while (head < queue.size()) {
            int x = queue[head++];
            for (int s : gens) {
                int y = mul(x, s);
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        return static_cast<int>(queue.size());
    };
    std::vector<char> seen;
    int covered = closure_size(generators_, seen);
    for (int g = 1; g < size_ && covered < size_; ++g) {
        if (seen[g]) continue;
        generators_.push_back(g);
        covered = closure_size(generators_, seen);
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
    FiniteGroup g;
    int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError("empty multiplication table");
    g.table_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw ValidationError("multiplication table is not square");
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n) throw ValidationError("table entry out of range");
            g.table_[static_cast<size_t>(i) * n + j] = v;
        }
    }
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("label list does not match the table size");
    g.labels_ = std::move(labels);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::metacyclic(long m, long n, long t, long r) {
    if (m < 1 || n < 1) throw ValidationError("metacyclic orders must be positive");
    if (mod_pow(r, n, m) != 1 % m)
        throw ValidationError("metacyclic condition r^n = 1 mod m fails");
    t = mod_norm(t, m);
    if (mod_norm(t * (r - 1), m) != 0)
        throw ValidationError("metacyclic condition m | t(r-1) fails");
    if (gcd_long(mod_norm(r, m), m) != 1)
        throw ValidationError("metacyclic twist exponent r must be invertible mod m");

    // Element a^i b^j at index j*m + i; b^j a = a^{r^{-j}} b^j.
    long size = m * n;
    FiniteGroup g;
    std::vector<long> rinv_pow(n);
    long rinv = mod_inverse(r, m);
    rinv_pow[0] = 1 % m;
    for (long j = 1; j < n; ++j) rinv_pow[j] = (rinv_pow[j - 1] * rinv) % m;

    g.table_.assign(static_cast<size_t>(size) * size, 0);
    auto idx = [m](long i, long j) { return static_cast<int>(j * m + i); };
    for (long j1 = 0; j1 < n; ++j1)
        for (long i1 = 0; i1 < m; ++i1)
            for (long j2 = 0; j2 < n; ++j2)
                for (long i2 = 0; i2 < m; ++i2) {
                    long i = (i1 + i2 * rinv_pow[j1]) % m;
                    long j = j1 + j2;
                    if (j >= n) {
                        j -= n;
                        i = (i + t) % m;
                    }
                    g.table_[static_cast<size_t>(idx(i1, j1)) * size + idx(i2, j2)] =
                        idx(i, j);
                }
    g.labels_.reserve(size);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i) {
            std::string s;
            if (i == 0 && j == 0) s = "1";
            if (i == 1) s += "a";
            if (i > 1) s += "a^" + std::to_string(i);
            if (j == 1) s += (s.empty() ? "b" : "*b");
            if (j > 1) s += (s.empty() ? "b^" : "*b^") + std::to_string(j);
            g.labels_.push_back(s);
        }
    g.pres_ = MetacyclicPresentation{m, n, t, r};
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::cyclic(long n) {
    FiniteGroup g = metacyclic(n, 1, 0, 1);
    for (long i = 0; i < n; ++i)
        g.labels_[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<long>& dims) {
    if (dims.empty()) throw ValidationError("abelian group needs at least one factor");
    long size = 1;
    for (long d : dims) {
        if (d < 1) throw ValidationError("abelian factor must be positive");
        size *= d;
    }
    auto decode = [&](long x) {
        std::vector<long> v(dims.size());
        for (size_t i = 0; i < dims.size(); ++i) {
            v[i] = x % dims[i];
            x /= dims[i];
        }
        return v;
    };
    auto encode = [&](const std::vector<long>& v) {
        long x = 0;
        for (size_t i = dims.size(); i-- > 0;) x = x * dims[i] + v[i];
        return x;
    };
    std::vector<std::vector<int>> table(size, std::vector<int>(size));
    for (long x = 0; x < size; ++x)
        for (long y = 0; y < size; ++y) {
            auto a = decode(x), b = decode(y);
            for (size_t i = 0; i < dims.size(); ++i) a[i] = (a[i] + b[i]) % dims[i];
            table[x][y] = static_cast<int>(encode(a));
        }
    std::vector<std::string> labels(size);
    for (long x = 0; x < size; ++x) {
        auto v = decode(x);
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "g" + std::to_string(i + 1);
            if (v[i] > 1) s += "^" + std::to_string(v[i]);
        }
        labels[x] = s.empty() ? "1" : s;
    }
    return from_table(std::move(table), std::move(labels));
}

int FiniteGroup::power(int g, long e) const {
    long o = order_[g];
    e = mod_norm(e, o);
    int acc = 0, base = g;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) t[i][j] = mul(i, j);
    return t;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup s;
    s.parent = &g;
    s.mask.assign(g.size(), 0);
    for (int e : elements) {
        if (e < 0 || e >= g.size()) throw ValidationError("subgroup element out of range");
        s.mask[e] = 1;
    }
    s.elements = std::move(elements);
    if (s.elements.empty() || s.elements[0] != 0)
        throw ValidationError("subgroup must contain the identity");
    for (int a : s.elements) {
        if (!s.mask[g.inv(a)]) throw ValidationError("subgroup not closed under inverse");
        for (int b : s.elements)
            if (!s.mask[g.mul(a, b)]) throw ValidationError("subgroup not closed under product");
    }
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {0}); }

Subgroup whole_group(const FiniteGroup& g) {
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    // Right-multiplication orbit of the identity; in a finite group the
    // generated sub-semigroup is already a subgroup.
    std::vector<char> seen(g.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int x = queue[head++];
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return make_subgroup(g, std::move(queue));
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent) throw ValidationError("subgroups of different parents");
    for (int e : a.elements)
        if (!b.contains(e)) return false;
    return true;
}

bool is_normal_in(const Subgroup& h, const Subgroup& n) {
    const FiniteGroup& g = *h.parent;
    for (int x : n.elements)
        for (int e : h.elements)
            if (!h.contains(g.conjugate(e, x))) return false;
    return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent) throw ValidationError("subgroups of different parents");
    std::vector<int> e;
    for (int x : a.elements)
        if (b.contains(x)) e.push_back(x);
    return make_subgroup(*a.parent, std::move(e));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const FiniteGroup& grp = *h.parent;
    std::vector<int> e;
    e.reserve(h.elements.size());
    for (int x : h.elements) e.push_back(grp.conjugate(x, g));
    return make_subgroup(grp, std::move(e));
}

Subgroup normalizer(const Subgroup& k) {
    const FiniteGroup& g = *k.parent;
    std::vector<int> e;
    for (int x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (int h : k.elements)
            if (!k.contains(g.conjugate(h, x))) {
                ok = false;
                break;
            }
        if (ok) e.push_back(x);
    }
    return make_subgroup(g, std::move(e));
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<int> e;
    for (int x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (int y : s)
            if (g.mul(x, y) != g.mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) e.push_back(x);
    }
    return make_subgroup(g, std::move(e));
}

Subgroup derived_subgroup(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<int> comms;
    for (int a : h.elements)
        for (int b : h.elements)
            comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(g, comms);
}

bool is_abelian(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (int a : h.elements)
        for (int b : h.elements)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

std::vector<int> right_transversal(const Subgroup& h, const Subgroup& n) {
    if (!is_subgroup_of(h, n)) throw ValidationError("transversal: H must sit inside N");
    const FiniteGroup& g = *h.parent;
    std::vector<char> covered(g.size(), 0);
    std::vector<int> reps;
    for (int t : n.elements) {
        if (covered[t]) continue;
        reps.push_back(t);
        for (int x : h.elements) covered[g.mul(x, t)] = 1;
    }
    return reps;
}

long coset_order(const Subgroup& k, int g) {
    const FiniteGroup& grp = *k.parent;
    int x = g;
    long d = 1;
    while (!k.contains(x)) {
        x = grp.mul(x, g);
        ++d;
    }
    return d;
}

bool quotient_is_cyclic(const Subgroup& h, const Subgroup& k) {
    long index = h.size() / k.size();
    for (int y : h.elements)
        if (coset_order(k, y) == index) return true;
    return false;
}

int quotient_cyclic_generator(const Subgroup& h, const Subgroup& k) {
    if (!is_subgroup_of(k, h)) throw ValidationError("quotient: K must sit inside H");
    if (!is_normal_in(k, h)) throw ValidationError("quotient: K must be normal in H");
    long index = h.size() / k.size();
    for (int y : h.elements)
        if (coset_order(k, y) == index) return y;
    throw ValidationError("quotient H/K is not cyclic");
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g, ClassKind kind) {
    // Ordinary classes by orbit enumeration.
    std::vector<int> cls(g.size(), -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.size(); ++x) {
        if (cls[x] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> orbit;
        std::set<int> seen;
        for (int t = 0; t < g.size(); ++t) seen.insert(g.conjugate(x, t));
        for (int y : seen) {
            cls[y] = id;
            orbit.push_back(y);
        }
        classes.push_back(std::move(orbit));
    }
    if (kind == ClassKind::Ordinary) return classes;

    // Merge classes joined by the declared equivalence.
    std::vector<int> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int x = 0; x < g.size(); ++x) {
        long n = g.element_order(x);
        if (kind == ClassKind::Real) {
            unite(cls[x], cls[g.inv(x)]);
        } else {
            for (long r = 1; r < n; ++r)
                if (gcd_long(r, n) == 1) unite(cls[x], cls[g.power(x, r)]);
            if (n == 1) unite(cls[x], cls[x]);
        }
    }
    std::vector<std::vector<int>> merged(classes.size());
    for (int x = 0; x < g.size(); ++x) merged[find(cls[x])].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& m : merged)
        if (!m.empty()) out.push_back(std::move(m));
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound) {
    return all_subgroups_within(whole_group(g), bound);
}

std::vector<Subgroup> all_subgroups_within(const Subgroup& h, int bound) {
    const FiniteGroup& g = *h.parent;
    if (h.size() > bound)
        throw CapacityError("subgroup enumeration bound exceeded: " +
                            std::to_string(h.size()) + " > " + std::to_string(bound));
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> pool;
    std::vector<std::vector<int>> gens_of;
    auto add = [&](Subgroup s, std::vector<int> gens) {
        if (seen.insert(s.elements).second) {
            pool.push_back(std::move(s));
            gens_of.push_back(std::move(gens));
        }
    };
    add(trivial_subgroup(g), {});
    for (int x : h.elements)
        if (x != 0) add(generated_subgroup(g, {x}), {x});

    // Pairwise joins to a fixpoint; every subgroup is a join of cyclic ones.
    // Joins work on the stored generator sets, not full element lists.
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = pool.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j) {
                if (is_subgroup_of(pool[i], pool[j]) || is_subgroup_of(pool[j], pool[i]))
                    continue;
                std::vector<int> gens = gens_of[i];
                gens.insert(gens.end(), gens_of[j].begin(), gens_of[j].end());
                Subgroup join = generated_subgroup(g, gens);
                if (join.size() > h.size()) continue;
                bool inside = true;
                for (int e : join.elements)
                    if (!h.contains(e)) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                if (seen.count(join.elements)) continue;
                add(std::move(join), std::move(gens));
                grew = true;
            }
    }
    std::sort(pool.begin(), pool.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return pool;
}

Quotient quotient(const Subgroup& n, const Subgroup& k) {
    if (!is_subgroup_of(k, n)) throw ValidationError("quotient: K must sit inside N");
    if (!is_normal_in(k, n)) throw ValidationError("quotient: K must be normal in N");
    const FiniteGroup& g = *n.parent;
    Quotient q;
    q.coset_of.assign(g.size(), -1);
    for (int t : n.elements) {
        if (q.coset_of[t] >= 0) continue;
        int id = static_cast<int>(q.reps.size());
        q.reps.push_back(t);
        for (int x : k.elements) q.coset_of[g.mul(x, t)] = id;
    }
    int m = static_cast<int>(q.reps.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[i][j] = q.coset_of[g.mul(q.reps[i], q.reps[j])];
    std::vector<std::string> labels;
    labels.reserve(m);
    for (int i = 0; i < m; ++i) labels.push_back(g.label(q.reps[i]) + "K");
    q.group = FiniteGroup::from_table(std::move(table), std::move(labels));
    return q;
}

} // namespace wedderkit

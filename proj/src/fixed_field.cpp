#include "wedderkit/fixed_field.hpp"

#include <algorithm>
#include <set>

#include "wedderkit/errors.hpp"
#include "wedderkit/matrix.hpp"

namespace wedderkit {

bool is_unit_subgroup(long n, const std::vector<long>& exps) {
    std::set<long> s;
    for (long e : exps) {
        long r = mod_norm(e, n);
        if (gcd_long(r, n) != 1) return false;
        s.insert(r);
    }
    if (!s.count(1 % n)) return false;
    for (long a : s)
        for (long b : s)
            if (!s.count((a * b) % n)) return false;
    return true;
}

std::vector<long> unit_subgroup_closure(long n, const std::vector<long>& gens) {
    std::set<long> s{1 % n};
    std::vector<long> work{1 % n};
    for (long g : gens) {
        long r = mod_norm(g, n);
        if (gcd_long(r, n) != 1)
            throw ValidationError("unit subgroup generator not coprime to the order");
        if (s.insert(r).second) work.push_back(r);
    }
    while (!work.empty()) {
        long x = work.back();
        work.pop_back();
        std::vector<long> base(s.begin(), s.end());
        for (long y : base) {
            long z = (x * y) % n;
            if (s.insert(z).second) work.push_back(z);
        }
    }
    return {s.begin(), s.end()};
}

FixedFieldBasis fixed_field(long n, const std::vector<long>& subgroup_exps) {
    if (!is_unit_subgroup(n, subgroup_exps))
        throw ValidationError("fixed_field: exponent set is not a subgroup of U(Z/nZ)");
    FixedFieldBasis f;
    f.order = n;
    for (long e : subgroup_exps) f.subgroup.push_back(mod_norm(e, n));
    std::sort(f.subgroup.begin(), f.subgroup.end());
    f.subgroup.erase(std::unique(f.subgroup.begin(), f.subgroup.end()), f.subgroup.end());

    long phi = euler_phi(n);
    long target = phi / static_cast<long>(f.subgroup.size());
    if (n == 1) {
        f.periods.push_back(Cyclotomic::one(1));
        return f;
    }

    // Orbits of A on nonzero exponents; their sums span the fixed field.
    std::vector<char> seen(n, 0);
    std::vector<Cyclotomic> candidates;
    for (long e = 1; e < n; ++e) {
        if (seen[e]) continue;
        Cyclotomic sum = Cyclotomic::zero(n);
        std::set<long> orbit;
        for (long a : f.subgroup) orbit.insert((e * a) % n);
        for (long x : orbit) {
            seen[x] = 1;
            sum += Cyclotomic::root_power(n, x);
        }
        candidates.push_back(sum);
    }

    // Greedy selection of a maximal independent subset, deterministic order.
    RatMatrix rows(static_cast<int>(target), static_cast<int>(phi));
    int have = 0;
    for (const auto& cand : candidates) {
        if (have == target) break;
        if (cand.is_zero()) continue;
        // Append and test rank by elimination on the partial matrix.
        RatMatrix trial(have + 1, static_cast<int>(phi));
        for (int i = 0; i < have; ++i)
            for (long j = 0; j < phi; ++j) trial.at(i, static_cast<int>(j)) = rows.at(i, static_cast<int>(j));
        for (long j = 0; j < phi; ++j) trial.at(have, static_cast<int>(j)) = cand.coords()[j];
        // Rank test: row-reduce a copy.
        RatMatrix a = trial;
        int rank = 0;
        int r = 0;
        for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
            int piv = -1;
            for (int i = r; i < a.rows(); ++i)
                if (a.at(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
            Rational inv = Rational(1) / a.at(r, col);
            for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
            for (int i = 0; i < a.rows(); ++i) {
                if (i == r || a.at(i, col) == 0) continue;
                Rational fct = a.at(i, col);
                for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= fct * a.at(r, j);
            }
            ++r;
        }
        rank = r;
        if (rank == have + 1) {
            for (long j = 0; j < phi; ++j) rows.at(have, static_cast<int>(j)) = cand.coords()[j];
            f.periods.push_back(cand);
            ++have;
        }
    }
    if (have != target)
        throw ConsistencyError("fixed_field: period selection did not reach full rank");
    return f;
}

std::vector<long> unit_coset_representatives(long n, const std::vector<long>& subgroup) {
    std::vector<long> reps;
    std::vector<char> covered(n, 0);
    for (long k = 1; k < n; ++k) {
        if (gcd_long(k, n) != 1 || covered[k]) continue;
        reps.push_back(k);
        for (long a : subgroup) covered[(k * a) % n] = 1;
    }
    if (n == 1) reps.push_back(1);
    return reps;
}

Rational trace_to_rationals(const Cyclotomic& u, const FixedFieldBasis& field) {
    Cyclotomic v = u.order() == field.order ? u : u.embedded(field.order);
    Cyclotomic acc = Cyclotomic::zero(field.order);
    for (long c : unit_coset_representatives(field.order, field.subgroup))
        acc += v.galois(c);
    return acc.rational_value();
}

std::vector<long> archimedean_place_representatives(const FixedFieldBasis& field) {
    long n = field.order;
    std::vector<long> reps = unit_coset_representatives(n, field.subgroup);
    // Merge complex-conjugate cosets c and -c.
    std::vector<long> places;
    std::set<long> used;
    std::set<long> sub(field.subgroup.begin(), field.subgroup.end());
    for (long c : reps) {
        if (used.count(c)) continue;
        places.push_back(c);
        used.insert(c);
        // Find the representative of the coset (-c)*A among reps.
        for (long r : reps) {
            bool same = false;
            for (long a : sub)
                if (mod_norm(-c * a, n) == r) same = true;
            if (same) used.insert(r);
        }
    }
    return places;
}

} // namespace wedderkit

#pragma once

#include <map>
#include <vector>

#include "wedderkit/algebra.hpp"
#include "wedderkit/shoda.hpp"

namespace wedderkit {

struct UnitWithInverse {
    QGElement u, u_inv;
};

struct BassUnitSpec {
    int g = 0;   // group element
    long k = 1;  // 1 <= k < |g|
    long m = 1;  // k^m = 1 mod |g|
};

// (1 + g + ... + g^{k-1})^m + ((1-k^m)/n)(1 + g + ... + g^{n-1}), n = |g|,
// with the closed-form inverse b(k^{-1} mod n, m, g^k).
UnitWithInverse bass_unit(const FiniteGroup& grp, const BassUnitSpec& spec);

// Bass unit of the torsion unit g*K-hat + 1 - K-hat; its order is the coset
// order d of gK, so only k^m = 1 mod d is required.
UnitWithInverse generalized_bass_on_coset(const Subgroup& k_sub, int g, long k, long m);

// Smallest n >= 1 such that b(k,m, 1-M-hat+gM-hat)^n and its inverse land in
// the integral group ring for every g in H and admissible (k, m). Valid
// exponents for a fixed (g,k,m) are exactly the multiples of the order of the
// image of the Bass unit in (Z/|M|)[H/M], so the lcm of the per-parameter
// orders is the minimum; the order itself is found by power iteration.
long n_GM(const Subgroup& h, const Subgroup& m, long iteration_cap = 1000000);

// 1 - M-hat + b(k,m,g) M-hat raised to `power` (defaults to n_GM(H,M) when
// power == 0), with verified integral inverse.
UnitWithInverse generalized_bass_unit(const FiniteGroup& grp, int g, const Subgroup& m,
                                      long k, long mm, long power = 0);

// eta_k(z) = (1 - z^k)/(1 - z) = 1 + z + ... + z^{k-1}; eta_k(1) = 1.
Cyclotomic cyclotomic_unit(long k, const Cyclotomic& z);
Cyclotomic cyclotomic_unit_eta(long n, long j, long k); // eta_k(zeta_n^j)

// prod_{sigma in A} sigma(u) for a subgroup A of U(Z/nZ).
Cyclotomic pi_norm(const std::vector<long>& a_exponents, const Cyclotomic& u);

// {pi_A(eta_k(zeta_{p^n})) : k in I minus {1}} with I the smallest-positive
// coset representatives of U(Z/p^n) modulo <A, -1> containing 1.
std::vector<Cyclotomic> norm_basis(long p, long n, const std::vector<long>& a_exponents);

// Recursive chain products c_j^s(H,K,k,r) of generalized Bass units, with
// memoized inverses; [H:K] must be a prime power p^n.
class ChainProducts {
public:
    ChainProducts(const Subgroup& h, const Subgroup& k, long kk, long r,
                  long n_hk_hint = 0);
    const UnitWithInverse& get(long j, long s);
    long prime() const { return p_; }
    long exponent() const { return n_; }
    long n_hk() const { return n_hk_; }
    int generator() const { return gen_; }

private:
    const FiniteGroup* g_;
    Subgroup h_, k_;
    long kk_, r_, p_, n_, n_hk_, ord_kk_;
    int gen_;
    std::vector<Subgroup> chain_; // H_j = <g^{p^{n-j}}, K>
    std::map<std::pair<long, long>, UnitWithInverse> memo_;
};

UnitWithInverse chain_product(const Subgroup& h, const Subgroup& k, long kk, long r,
                              long j, long s);

struct RankReport {
    struct Row {
        long phi = 0;        // phi([H:K])
        long k_flag = 2;     // 1 iff -1 lies in the action image
        long nh_index = 1;   // [N:H]
        long contribution = 0;
    };
    std::vector<Row> rows;
    long total = 0;
    long oracle_total = 0; // #real - #rational conjugacy classes
};

RankReport rank_report(const FiniteGroup& g, const std::vector<StrongShodaPair>& pairs);

struct CentralUnit {
    UnitWithInverse unit;
    size_t pair_index = 0; // which SSP the construction lives on
    long k = 0;            // the eta parameter
    std::string note;
};

// Virtual basis of Z(U(ZG)) per the chain-product construction; every SSP
// index [H:K] must be a prime power.
std::vector<CentralUnit> central_virtual_basis(const FiniteGroup& g,
                                               const std::vector<StrongShodaPair>& pairs);
std::vector<CentralUnit> central_virtual_basis(const FiniteGroup& g);

// The metacyclic specialization: type (i) chains on (G, L_i) and type (ii)
// products of ordinary Bass units on <a>.
std::vector<CentralUnit> metacyclic_central_basis(const FiniteGroup& g, long q, long m,
                                                  long p, long n, long r);

// Central character of the component at the given SSP applied to x.
Cyclotomic component_projection(const FiniteGroup& g, const StrongShodaPair& pair,
                                const QGElement& x);

struct IndependenceCertificate {
    int units = 0;
    int numeric_rank = 0;
    double smallest_singular_value = 0.0;
    bool pass = false;
};

IndependenceCertificate independence_check(const std::vector<QGElement>& units,
                                           const FiniteGroup& g,
                                           const std::vector<StrongShodaPair>& pairs,
                                           long precision_bits = 128);

} // namespace wedderkit

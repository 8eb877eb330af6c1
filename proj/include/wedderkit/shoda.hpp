#pragma once

#include <string>
#include <vector>

#include "wedderkit/algebra.hpp"
#include "wedderkit/fixed_field.hpp"
#include "wedderkit/group.hpp"

namespace wedderkit {

struct StrongShodaPair {
    Subgroup h, k, n;        // K <= H normal in N = N_G(K)
    int quotient_generator;  // y with H/K = <yK>, minimal index
    long index_k;            // [H:K]
    long degree_n;           // [G:N]
};

struct SspDiagnostic {
    bool ok = false;
    std::string reason; // first failed condition when !ok
};

SspDiagnostic is_strong_shoda_pair(const FiniteGroup& g, const Subgroup& h,
                                   const Subgroup& k);

StrongShodaPair make_strong_shoda_pair(const FiniteGroup& g, const Subgroup& h,
                                       const Subgroup& k);

// e(G,H1,K1) = e(G,H2,K2) iff some g satisfies H1^g ∩ K2 = K1^g ∩ H2; both
// criteria are evaluated and must agree.
bool ssp_equivalent(const FiniteGroup& g, const StrongShodaPair& a,
                    const StrongShodaPair& b);

// Complete non-redundant SSP set. Metabelian groups go through the
// maximal-element characterization; other groups fall back to a brute-force
// search over all pairs. Partition of unity and the rational-class count are
// verified before returning.
std::vector<StrongShodaPair> enumerate_ssp(const FiniteGroup& g, int bound = 512);

// The two-family catalog for G = C_{q^m} x| C_{p^n} with faithful action:
// (G, <a, b^{p^i}>) for i = 0..n and (<a>, <a^{q^j}>) for j = 1..m.
std::vector<StrongShodaPair> metacyclic_ssp_catalog(const FiniteGroup& g, long q,
                                                    long m, long p, long n, long r);

struct SimpleComponent {
    StrongShodaPair pair;
    long matrix_degree = 1;              // [G:N]
    long cyclotomic_order = 1;           // k = [H:K]
    std::vector<int> nh_transversal;     // coset reps of H in N, minimal index
    std::vector<long> action;            // alpha exponent per transversal position
    std::vector<std::vector<long>> twisting; // tau exponents (zeta_k powers)
    bool twist_trivial = true;
    FixedFieldBasis center;              // Q(zeta_k)^{N/H}
};

// Action and twisting per the stored left-inverse section (minimal-index coset
// representatives). With search_section, bounded search for a section making
// the twisting trivial before reporting a nontrivial one.
SimpleComponent component_descriptor(const FiniteGroup& g, const StrongShodaPair& pair,
                                     bool search_section = false);

// Sum over components of degree^2 * phi(k) * [N:H] must give |G|.
void check_wedderburn_dimensions(const FiniteGroup& g,
                                 const std::vector<StrongShodaPair>& pairs);

} // namespace wedderkit

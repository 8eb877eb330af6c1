#pragma once

#include <map>
#include <vector>

#include "wedderkit/matrix.hpp"
#include "wedderkit/shoda.hpp"

namespace wedderkit {

// The bordered +-1 matrix P and the cyclic permutation matrix A, as exact
// matrices over Q(zeta_order).
std::pair<FieldMatrix, FieldMatrix> build_P_A(int n, long order);

struct NormalBasisData {
    Cyclotomic w;                       // normal element of Q(zeta_k)/F
    std::vector<long> basis_exponents;  // Galois exponents fixing the column order
};

// The isomorphism QN(K)eps -> M_n(F) of the trivial-twist crossed product,
// built from a normal basis {sigma(w)}. Elements are decomposed over the
// stored transversal u_sigma = t_sigma * eps with coefficients in
// L = Q H eps identified with Q(zeta_k) via y*eps -> zeta_k.
class PsiMap {
public:
    PsiMap(const FiniteGroup& g, const SimpleComponent& comp);

    const FiniteGroup& group() const { return *g_; }
    const SimpleComponent& component() const { return comp_; }
    int degree() const { return degree_; }
    long field_order() const { return k_; }
    const QGElement& eps() const { return eps_; }
    const NormalBasisData& normal_basis() const { return basis_; }
    const std::vector<int>& transversal() const { return reps_; }

    // Identification QHeps <-> Q(zeta_k).
    Cyclotomic h_to_field(const QGElement& h_supported) const;
    QGElement field_to_h(const Cyclotomic& v) const; // times eps

    FieldMatrix apply(const QGElement& x) const;   // x in QN*eps
    QGElement invert(const FieldMatrix& m) const;

    QGElement t1_hat_eps() const;

    // x_e = psi^{-1}(P A P^{-1}) computed along two routes (linear solve and
    // the trace formula) with exact agreement enforced.
    const QGElement& x_e() const;
    const QGElement& psi_inv_P() const;
    const QGElement& psi_inv_P_inv() const;

private:
    void choose_normal_element();
    std::vector<Cyclotomic> expand_over_basis(const Cyclotomic& v) const;
    QGElement x_e_by_trace(const FieldMatrix& target) const;

    const FiniteGroup* g_;
    SimpleComponent comp_;
    long k_;
    int degree_;
    QGElement eps_;
    std::vector<long> dlog_;      // H -> exponent of y mod K
    std::vector<int> reps_;       // transversal in basis order
    std::vector<long> sigma_exp_; // psi-action exponent per basis position
    NormalBasisData basis_;
    RatMatrix expand_inv_;        // inverse of the period*conjugate matrix
    mutable bool xe_ready_ = false;
    mutable QGElement xe_, psi_inv_p_, psi_inv_p_inv_;
};

struct IdempotentSet {
    StrongShodaPair pair;
    QGElement e;                        // e(G,H,K)
    QGElement x_e;
    std::vector<QGElement> idempotents; // [G:H] of them
};

IdempotentSet primitive_idempotents(const FiniteGroup& g, const SimpleComponent& comp);

// Complete set of matrix units E[(row)(col)] with E[i][j]E[l][m] =
// delta_{jl} E[i][m]; diagonal equals the idempotent set.
std::vector<std::vector<QGElement>> matrix_units(const FiniteGroup& g,
                                                 const SimpleComponent& comp);

} // namespace wedderkit

#pragma once

#include <vector>

#include "wedderkit/cyclotomic.hpp"

namespace wedderkit {

// Q-basis of the fixed field Q(zeta_n)^A for a subgroup A of U(Z/nZ),
// realized by Gaussian periods (orbit sums of powers of zeta_n under A).
struct FixedFieldBasis {
    long order = 1;
    std::vector<long> subgroup;        // sorted exponents, multiplicatively closed
    std::vector<Cyclotomic> periods;   // linearly independent, phi(n)/|A| of them
    long degree() const { return static_cast<long>(periods.size()); }
};

bool is_unit_subgroup(long n, const std::vector<long>& exps);

// Multiplicative closure of the given exponents in U(Z/nZ).
std::vector<long> unit_subgroup_closure(long n, const std::vector<long>& gens);

FixedFieldBasis fixed_field(long n, const std::vector<long>& subgroup_exps);

// Coset representatives of U(Z/nZ) modulo the given subgroup, smallest
// positive residues, 1 first.
std::vector<long> unit_coset_representatives(long n, const std::vector<long>& subgroup);

// Trace from Q(zeta_n)^A down to Q: sum of u over coset representatives.
Rational trace_to_rationals(const Cyclotomic& u, const FixedFieldBasis& field);

// Archimedean places of the fixed field, one Galois exponent representative
// per place (pairs {c, -c} merged).
std::vector<long> archimedean_place_representatives(const FixedFieldBasis& field);

} // namespace wedderkit

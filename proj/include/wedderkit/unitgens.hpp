#pragma once

#include <string>
#include <vector>

#include "wedderkit/idem.hpp"
#include "wedderkit/units.hpp"

namespace wedderkit {

struct OrbitSum {
    int base = 0;    // orbit representative
    QGElement sum;   // sum over the distinct conjugates under Y
};

// One sum per Y-orbit of X (conjugation action inside the parent group).
std::vector<OrbitSum> orbit_sums(const Subgroup& x, const Subgroup& y);

// Least positive t with t * x^i integral for all 1 <= i <= bound (the lcm of
// the coefficient denominators across the powers).
Integer t_scale(const QGElement& x, long bound);

struct VGenerator {
    UnitWithInverse unit;
    int orbit_base = 0;
    long h = 0, k = 0; // matrix-unit position (h < k for V+, h > k for V-)
};

enum class VSign { Plus, Minus };

struct MetacyclicComponentUnits {
    long j = 0;              // which (<a>, K_j)
    SimpleComponent comp;
    QGElement x_j;           // psi^{-1}(P) b eps psi^{-1}(P)^{-1}
    Integer t_j;
    std::vector<VGenerator> v_plus, v_minus;
};

// Generators 1 + p^n t_j^2 y x_j^h b-hat x_j^{-k} for one component; the
// (q,p,n) = (3,2,1) family needs the bicyclic supplement (see
// full_generator_set) and is rejected here unless allow_exceptional is set.
std::vector<VGenerator> v_generators(const FiniteGroup& g,
                                     const MetacyclicComponentUnits& cu, VSign sign,
                                     long p, long n, bool allow_exceptional = false);

struct GeneratorCertificateEntry {
    std::string role; // central | v_plus | v_minus | bicyclic
    std::string note;
    QGElement element, inverse;
    bool check_central = false;
    bool check_integral = false;
    bool check_unit = false;
};

struct GeneratorCertificate {
    long q = 0, m = 0, p = 0, n = 0, r = 0;
    std::vector<GeneratorCertificateEntry> entries;
};

// U (central basis) together with V+ and V- for every noncommutative
// component; appends the three bicyclic units in the exceptional
// D_{2*3^m} case when include_bicyclic is set (and rejects it otherwise).
GeneratorCertificate full_generator_set(const FiniteGroup& g, long q, long m, long p,
                                        long n, long r, bool include_bicyclic);

// Per-component machinery exposed for tests.
MetacyclicComponentUnits metacyclic_component_units(const FiniteGroup& g, long q, long m,
                                                    long p, long n, long r, long j);

} // namespace wedderkit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wedderkit/errors.hpp"
#include "wedderkit/idem.hpp"
#include "wedderkit/testgroups.hpp"

using namespace wedderkit;

namespace {

PsiMap psi_for(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    StrongShodaPair p = make_strong_shoda_pair(g, h, k);
    return PsiMap(g, component_descriptor(g, p));
}

} // namespace

TEST_CASE("P and A matrices") {
    auto [p1, a1] = build_P_A(1, 1);
    CHECK(p1.at(0, 0) == Cyclotomic::one(1));
    CHECK(a1.at(0, 0) == Cyclotomic::one(1));

    auto [p2, a2] = build_P_A(2, 1);
    CHECK(p2.at(0, 0) == Cyclotomic::one(1));
    CHECK(p2.at(1, 1) == -Cyclotomic::one(1));
    CHECK(a2.at(0, 1) == Cyclotomic::one(1));
    CHECK(a2.at(1, 0) == Cyclotomic::one(1));

    auto [p3, a3] = build_P_A(3, 7);
    // rows (1,1,1), (1,-1,0), (1,0,-1)
    CHECK(p3.at(0, 2) == Cyclotomic::one(7));
    CHECK(p3.at(1, 1) == -Cyclotomic::one(7));
    CHECK(p3.at(2, 2) == -Cyclotomic::one(7));
    CHECK(p3.at(1, 2).is_zero());
    // P invertible, A cyclic of order 3
    CHECK((a3 * a3 * a3) == FieldMatrix::identity(3, 7));
    CHECK(p3.inverse() * p3 == FieldMatrix::identity(3, 7));
}

TEST_CASE("psi is a unital algebra homomorphism") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    PsiMap psi = psi_for(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    CHECK(psi.apply(psi.eps()) == FieldMatrix::identity(3, 7));

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    for (int i = 0; i < 40; ++i) {
        QGElement x = (QGElement::of(g, pick(rng)) + QGElement::of(g, pick(rng))) * psi.eps();
        QGElement y =
            (QGElement::of(g, pick(rng)) - make_rational(1, 2) * QGElement::of(g, pick(rng))) *
            psi.eps();
        CHECK(psi.apply(x * y) == psi.apply(x) * psi.apply(y));
        CHECK(psi.apply(x + y) == psi.apply(x) + psi.apply(y));
        // round-trip
        CHECK(psi.invert(psi.apply(x)) == x);
    }
}

TEST_CASE("psi of the b-transversal is the permutation matrix A") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    PsiMap psi = psi_for(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    auto [p, a] = build_P_A(3, 7);
    CHECK(psi.apply(QGElement::of(g, 7) * psi.eps()) == a);
    // multiplication-by-zeta matrix for a*eps: entries must realize zeta_7
    FieldMatrix ma = psi.apply(QGElement::of(g, 1) * psi.eps());
    CHECK(ma * ma.inverse() == FieldMatrix::identity(3, 7));
    // T1-hat eps maps to the all-ones/n matrix
    FieldMatrix t1 = psi.apply(psi.t1_hat_eps());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t1.at(i, j) == Cyclotomic::from_rational(make_rational(1, 3), 7));
    // and equals P E11 P^{-1}
    FieldMatrix e11(3, 3, 7);
    e11.at(0, 0) = Cyclotomic::one(7);
    CHECK(t1 == p * e11 * p.inverse());
}

TEST_CASE("x_e dual route and golden coefficients for C7xC3") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    PsiMap psi = psi_for(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    // the normal element search accepts w = zeta_7 (= a*eps)
    CHECK(psi.normal_basis().w == Cyclotomic::zeta(7));

    auto [p, a] = build_P_A(3, 7);
    const QGElement& xe = psi.x_e(); // internally asserts trace-route agreement
    CHECK(psi.apply(xe) == p * a * p.inverse());

    // The paper's 18 coefficients: identity block literal; the two
    // nonidentity blocks attach to b^2 and b (u_sigma coordinates).
    QGElement e = psi.eps();
    auto blk = [&](std::vector<std::string> cs, int bpow) {
        QGElement acc = QGElement::zero(g);
        for (int i = 0; i < 6; ++i) acc += QGElement::of(g, i, parse_rational(cs[i]));
        return acc * QGElement::of(g, g.power(7, bpow)) * e;
    };
    QGElement expected =
        blk({"-4/7", "-1/14", "-1/2", "-5/14", "-1/7", "-5/14"}, 0) +
        blk({"2/7", "-11/14", "-3/14", "-1/2", "-1/7", "-9/14"}, 2) +
        blk({"2/7", "-9/14", "-11/14", "-9/14", "2/7", "-1/2"}, 1);
    CHECK(psi.psi_inv_P() == expected);
}

TEST_CASE("degree-1 components have x_e = eps") {
    FiniteGroup c12 = FiniteGroup::cyclic(12);
    Subgroup k = generated_subgroup(c12, {c12.power(1, 4)});
    PsiMap psi = psi_for(c12, whole_group(c12), k);
    CHECK(psi.degree() == 1);
    CHECK(psi.x_e() == psi.eps());
}

TEST_CASE("nontrivial twisting is rejected with a structured error") {
    FiniteGroup g = FiniteGroup::metacyclic(19, 9, 0, 7);
    Subgroup h = generated_subgroup(g, {1, g.power(19, 3)});
    StrongShodaPair p = make_strong_shoda_pair(g, h, trivial_subgroup(g));
    SimpleComponent c = component_descriptor(g, p);
    CHECK_THROWS_AS(PsiMap(g, c), UnsupportedClassError);
    CHECK_THROWS_AS(primitive_idempotents(g, c), UnsupportedClassError);
}

TEST_CASE("primitive idempotents for C7xC3") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    StrongShodaPair p =
        make_strong_shoda_pair(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    SimpleComponent c = component_descriptor(g, p);
    IdempotentSet s = primitive_idempotents(g, c); // verifies internally
    CHECK(s.idempotents.size() == 3);
    CHECK(s.e == QGElement::one(g) - hat(generated_subgroup(g, {1})));
}

TEST_CASE("primitive idempotents for C13xC4") {
    FiniteGroup g = FiniteGroup::metacyclic(13, 4, 0, 5);
    StrongShodaPair p =
        make_strong_shoda_pair(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    IdempotentSet s = primitive_idempotents(g, component_descriptor(g, p));
    CHECK(s.idempotents.size() == 4);
}

TEST_CASE("idempotents distribute over conjugates when K is not normal") {
    // D8 pair (<a^2, b>, <b>): N = H has index 2, so T2 conjugation kicks in.
    FiniteGroup d8 = FiniteGroup::metacyclic(4, 2, 0, 3);
    int a = 1, b = 4;
    Subgroup h = generated_subgroup(d8, {d8.power(a, 2), b});
    Subgroup k = generated_subgroup(d8, {b});
    CHECK_FALSE(is_normal_in(k, whole_group(d8)));
    StrongShodaPair p = make_strong_shoda_pair(d8, h, k);
    CHECK(p.degree_n == 2);
    IdempotentSet s = primitive_idempotents(d8, component_descriptor(d8, p));
    CHECK(s.idempotents.size() == 2);

    // A4 pair (V4, C2): three conjugates
    FiniteGroup a4 = testgroups::alternating4();
    auto lattice = all_subgroups(a4);
    Subgroup v4 = lattice[0], c2 = lattice[0];
    for (const auto& sgrp : lattice) {
        if (sgrp.size() == 4) v4 = sgrp;
    }
    for (const auto& sgrp : lattice)
        if (sgrp.size() == 2 && is_subgroup_of(sgrp, v4)) {
            c2 = sgrp;
            break;
        }
    StrongShodaPair pa = make_strong_shoda_pair(a4, v4, c2);
    IdempotentSet sa = primitive_idempotents(a4, component_descriptor(a4, pa));
    CHECK(sa.idempotents.size() == 3);
}

TEST_CASE("matrix units for C7xC3 satisfy all relations") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    StrongShodaPair p =
        make_strong_shoda_pair(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    SimpleComponent c = component_descriptor(g, p);
    auto e = matrix_units(g, c);
    REQUIRE(e.size() == 3);
    QGElement big_e = e_idempotent(g, p.h, p.k);
    QGElement diag = QGElement::zero(g);
    for (int i = 0; i < 3; ++i) diag += e[i][i];
    CHECK(diag == big_e);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                for (int m = 0; m < 3; ++m) {
                    QGElement prod = e[i][j] * e[l][m];
                    if (j == l)
                        CHECK(prod == e[i][m]);
                    else
                        CHECK(prod.is_zero());
                }
}

TEST_CASE("matrix units sampled on C13xC4") {
    FiniteGroup g = FiniteGroup::metacyclic(13, 4, 0, 5);
    StrongShodaPair p =
        make_strong_shoda_pair(g, generated_subgroup(g, {1}), trivial_subgroup(g));
    auto e = matrix_units(g, component_descriptor(g, p));
    REQUIRE(e.size() == 4);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int rep = 0; rep < 40; ++rep) {
        int i = pick(rng), j = pick(rng), l = pick(rng), m = pick(rng);
        QGElement prod = e[i][j] * e[l][m];
        if (j == l)
            CHECK(prod == e[i][m]);
        else
            CHECK(prod.is_zero());
    }
    // E_xy E_yx = E_xx
    for (int rep = 0; rep < 8; ++rep) {
        int i = pick(rng), j = pick(rng);
        CHECK(e[i][j] * e[j][i] == e[i][i]);
    }
}

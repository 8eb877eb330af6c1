#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedderkit/certificates.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/unitgens.hpp"

using namespace wedderkit;

TEST_CASE("orbit sums") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    Subgroup ha = generated_subgroup(g, {1});
    Subgroup hb = generated_subgroup(g, {7});
    auto sums = orbit_sums(ha, hb);
    REQUIRE(sums.size() == 3);
    CHECK(sums[0].sum == QGElement::one(g));
    QGElement o1 = QGElement::of(g, 1) + QGElement::of(g, 2) + QGElement::of(g, 4);
    QGElement o2 = QGElement::of(g, 3) + QGElement::of(g, 5) + QGElement::of(g, 6);
    CHECK(sums[1].sum == o1);
    CHECK(sums[2].sum == o2);
    // invariance under conjugation by Y
    for (const auto& os : sums) CHECK(os.sum.conjugate_by(7) == os.sum);

    // trivial Y: one singleton sum per element
    auto singles = orbit_sums(ha, trivial_subgroup(g));
    CHECK(singles.size() == 7);

    // C13xC4: identity plus three orbits of size four
    FiniteGroup g2 = FiniteGroup::metacyclic(13, 4, 0, 5);
    auto sums2 = orbit_sums(generated_subgroup(g2, {1}), generated_subgroup(g2, {13}));
    CHECK(sums2.size() == 4);
    for (size_t i = 1; i < sums2.size(); ++i) CHECK(sums2[i].sum.support_size() == 4);
}

TEST_CASE("t_scale") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    CHECK(t_scale(QGElement::one(g), 5) == 1);
    QGElement half = make_rational(1, 6) * QGElement::of(g, 1);
    CHECK(t_scale(half, 2) == 36);
}

TEST_CASE("component units and V generators for C7xC3") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    MetacyclicComponentUnits cu = metacyclic_component_units(g, 7, 1, 3, 1, 2, 1);
    // x_j powers scale integrally by t_j
    for (long i = 1; i <= 3; ++i) {
        QGElement scaled = Rational(cu.t_j) * cu.x_j.pow(i);
        CHECK(is_integral(scaled));
    }
    auto plus = v_generators(g, cu, VSign::Plus, 3, 1);
    auto minus = v_generators(g, cu, VSign::Minus, 3, 1);
    // 3 orbit sums (incl. identity) x 3 upper positions
    CHECK(plus.size() == 9);
    CHECK(minus.size() == 9);
    for (const auto& v : plus) {
        CHECK(is_integral(v.unit.u));
        CHECK(is_unit_with_inverse(v.unit.u, v.unit.u_inv));
        CHECK(v.h < v.k);
    }
    // u(2-u) = 1 exactly: inverse is the reflection
    const auto& u = plus[0].unit;
    QGElement two_minus = make_rational(2, 1) * QGElement::one(g) - u.u;
    CHECK(u.u * two_minus == QGElement::one(g));
}

TEST_CASE("V generators are unitriangular through psi") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    MetacyclicComponentUnits cu = metacyclic_component_units(g, 7, 1, 3, 1, 2, 1);
    PsiMap psi(g, cu.comp);
    auto [p, a] = build_P_A(3, 7);
    FieldMatrix pinv = p.inverse();
    auto plus = v_generators(g, cu, VSign::Plus, 3, 1);
    for (const auto& v : plus) {
        // In the frame of the matrix units x^h bhat x^{-k}, the image of u - 1
        // is a single entry at the abstract position (h, k); concretely
        // P^{-1} psi(u-1) P has its one nonzero entry at (h mod 3, k mod 3).
        FieldMatrix img = psi.apply((v.unit.u - QGElement::one(g)) * psi.eps());
        FieldMatrix m = pinv * img * p;
        int nonzero = 0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (!m.at(r, c).is_zero()) {
                    ++nonzero;
                    CHECK(r == v.h % 3);
                    CHECK(c == v.k % 3);
                }
        CHECK(nonzero == 1);
    }
    // products of V+ generators stay upper unitriangular in the same frame
    QGElement prod = plus[0].unit.u * plus[1].unit.u * plus[4].unit.u;
    FieldMatrix img = psi.apply((prod - QGElement::one(g)) * psi.eps());
    FieldMatrix m = pinv * img * p;
    // strictly upper in the abstract (h,k) order means: entries at positions
    // (1+h mod 3, 1+k mod 3) with h < k in {1,2,3}; h=3 or k=3 wrap to row/col 0.
    // Easier exact statement: diagonal vanishes and m is nilpotent.
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(1, 1).is_zero());
    CHECK(m.at(2, 2).is_zero());
    FieldMatrix m3 = m * m * m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(m3.at(r, c).is_zero());
}

TEST_CASE("cross-component and central commutation") {
    FiniteGroup g = FiniteGroup::metacyclic(31, 5, 0, 2);
    auto basis = metacyclic_central_basis(g, 31, 1, 5, 1, 2);
    MetacyclicComponentUnits cu = metacyclic_component_units(g, 31, 1, 5, 1, 2, 1);
    auto plus = v_generators(g, cu, VSign::Plus, 5, 1);
    REQUIRE(!basis.empty());
    REQUIRE(!plus.empty());
    // central elements commute with every V generator
    for (size_t i = 0; i < 2; ++i)
        CHECK(basis[0].unit.u * plus[i].unit.u == plus[i].unit.u * basis[0].unit.u);
}

TEST_CASE("full generator set for C7xC3") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    GeneratorCertificate cert = full_generator_set(g, 7, 1, 3, 1, 2, false);
    size_t central = 0, plus = 0, minus = 0;
    for (const auto& e : cert.entries) {
        if (e.role == "central") ++central;
        if (e.role == "v_plus") ++plus;
        if (e.role == "v_minus") ++minus;
        CHECK(e.check_integral);
        CHECK(e.check_unit);
    }
    CHECK(central == 0); // rank 0
    CHECK(plus == 9);
    CHECK(minus == 9);
}

TEST_CASE("exceptional D6 requires and accepts the bicyclic supplement") {
    FiniteGroup s3 = FiniteGroup::metacyclic(3, 2, 0, 2);
    CHECK_THROWS_AS(full_generator_set(s3, 3, 1, 2, 1, 2, false), UnsupportedClassError);
    GeneratorCertificate cert = full_generator_set(s3, 3, 1, 2, 1, 2, true);
    size_t bic = 0;
    for (const auto& e : cert.entries)
        if (e.role == "bicyclic") ++bic;
    CHECK(bic == 3);
}

TEST_CASE("C13xC4 with p = 2, n = 2 needs no supplement") {
    FiniteGroup g = FiniteGroup::metacyclic(13, 4, 0, 5);
    GeneratorCertificate cert = full_generator_set(g, 13, 1, 2, 2, 5, false);
    size_t plus = 0, central = 0;
    for (const auto& e : cert.entries) {
        if (e.role == "v_plus") ++plus;
        if (e.role == "central") ++central;
    }
    CHECK(central == 2);      // rank 2
    CHECK(plus == 4 * 6);     // 4 orbit sums x 6 upper positions
}

TEST_CASE("certificate round-trip and tamper rejection") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    GeneratorCertificate cert = full_generator_set(g, 7, 1, 3, 1, 2, false);
    std::string json = generator_certificate(g, "metacyclic 7 3 0 2", cert);
    VerifyResult ok = verify_certificate(json);
    CHECK(ok.ok);

    // single-coefficient perturbation must be rejected
    auto pos = json.find("\"coeff\": \"");
    REQUIRE(pos != std::string::npos);
    std::string tampered = json;
    tampered.insert(pos + 10, "9");
    VerifyResult bad = verify_certificate(tampered);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("central basis certificate verifies its projections") {
    FiniteGroup g = FiniteGroup::metacyclic(31, 5, 0, 2);
    auto pairs = metacyclic_ssp_catalog(g, 31, 1, 5, 1, 2);
    auto units = metacyclic_central_basis(g, 31, 1, 5, 1, 2);
    std::string json = central_basis_certificate(g, "metacyclic 31 5 0 2", pairs, units);
    VerifyResult ok = verify_certificate(json);
    CHECK(ok.ok);
}

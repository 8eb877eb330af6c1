#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wedderkit/algebra.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/group.hpp"

using namespace wedderkit;

namespace {

QGElement random_element(const FiniteGroup& g, std::mt19937_64& rng, int support = 4) {
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    QGElement x = QGElement::zero(g);
    for (int i = 0; i < support; ++i)
        x += QGElement::of(g, pick(rng), make_rational(num(rng), den(rng)));
    return x;
}

} // namespace

TEST_CASE("QG arithmetic basics") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    std::mt19937_64 rng(3);
    QGElement x = random_element(g, rng);
    CHECK(x * QGElement::one(g) == x);
    CHECK(QGElement::one(g) * x == x);

    // (1+a)(1-a) = 0 in Q C2
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    QGElement u = QGElement::one(c2) + QGElement::of(c2, 1);
    QGElement v = QGElement::one(c2) - QGElement::of(c2, 1);
    CHECK((u * v).is_zero());

    // conjugate_by(b) of a is a^2
    int a = 1, b = 7;
    CHECK(QGElement::of(g, a).conjugate_by(b) == QGElement::of(g, g.power(a, 2)));

    FiniteGroup other = FiniteGroup::cyclic(3);
    CHECK_THROWS_AS(QGElement::one(g) * QGElement::one(other), ValidationError);
}

TEST_CASE("QG ring laws on random elements") {
    FiniteGroup g = FiniteGroup::metacyclic(5, 4, 0, 2);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        QGElement x = random_element(g, rng), y = random_element(g, rng),
                  z = random_element(g, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y).conjugate_by(3) == x.conjugate_by(3) + y.conjugate_by(3));
        CHECK((x * y).conjugate_by(3) == x.conjugate_by(3) * y.conjugate_by(3));
    }
}

TEST_CASE("hat elements") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    CHECK(hat(trivial_subgroup(g)) == QGElement::one(g));

    FiniteGroup c2 = FiniteGroup::cyclic(2);
    QGElement h2 = hat(whole_group(c2));
    CHECK(h2 * h2 == h2);
    CHECK(h2.coeff(0) == make_rational(1, 2));

    Subgroup hb = generated_subgroup(g, {7});
    QGElement hbe = hat(hb);
    CHECK(is_idempotent(hbe));
    CHECK_FALSE(is_central(hbe));

    Subgroup ha = generated_subgroup(g, {1});
    CHECK(is_central(hat(ha))); // <a> is normal

    CHECK_THROWS_AS(hat(g, {}), ValidationError);
}

TEST_CASE("epsilon idempotents") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    Subgroup ha = generated_subgroup(g, {1});
    Subgroup one = trivial_subgroup(g);

    // epsilon(H, H) = H-hat
    CHECK(epsilon(ha, ha) == hat(ha));

    // epsilon(<a>, 1) = 1 - a-hat (C7 is the unique minimal normal subgroup)
    QGElement eps = epsilon(ha, one);
    CHECK(eps == QGElement::one(g) - hat(ha));
    CHECK(is_idempotent(eps));

    // C_{q^2} relative: epsilon(<g>, <g^3>) = K-hat - H-hat in C9
    FiniteGroup c9 = FiniteGroup::cyclic(9);
    Subgroup full = whole_group(c9);
    Subgroup k = generated_subgroup(c9, {c9.power(1, 3)});
    CHECK(epsilon(full, k) == hat(k) - hat(full));

    CHECK_THROWS_AS(epsilon(generated_subgroup(g, {7}), ha), ValidationError);
}

TEST_CASE("epsilon squared equals epsilon across a lattice") {
    FiniteGroup g = FiniteGroup::metacyclic(13, 4, 0, 5);
    auto subs = all_subgroups(g);
    int checked = 0;
    for (const auto& h : subs)
        for (const auto& k : subs) {
            if (!is_subgroup_of(k, h) || !is_normal_in(k, h)) continue;
            QGElement eps = epsilon(h, k, subs);
            CHECK(is_idempotent(eps));
            ++checked;
        }
    CHECK(checked > 10);
}

TEST_CASE("e idempotent of C7xC3") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    Subgroup ha = generated_subgroup(g, {1});
    QGElement e = e_idempotent(g, ha, trivial_subgroup(g));
    // epsilon is already G-invariant here
    CHECK(e == QGElement::one(g) - hat(ha));
    CHECK(is_central(e));
    CHECK(is_idempotent(e));

    // abelian G: e = epsilon
    FiniteGroup c12 = FiniteGroup::cyclic(12);
    Subgroup full = whole_group(c12);
    Subgroup k = generated_subgroup(c12, {c12.power(1, 4)});
    CHECK(e_idempotent(c12, full, k) == epsilon(full, k));
}

TEST_CASE("rho_linear") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    Subgroup full = whole_group(c4);
    Subgroup one = trivial_subgroup(c4);
    CHECK(rho_linear(full, one, QGElement::one(c4)) == Cyclotomic::one(4));
    CHECK(rho_linear(full, one, QGElement::of(c4, c4.power(1, 2))) ==
          Cyclotomic::root_power(4, 2));

    FiniteGroup c9 = FiniteGroup::cyclic(9);
    Subgroup l = generated_subgroup(c9, {c9.power(1, 3)});
    CHECK(rho_linear(whole_group(c9), l, QGElement::of(c9, 1)) == Cyclotomic::zeta(3));

    // multiplicativity on random pairs
    std::mt19937_64 rng(23);
    FiniteGroup c8 = FiniteGroup::cyclic(8);
    Subgroup k2 = generated_subgroup(c8, {c8.power(1, 4)});
    for (int i = 0; i < 200; ++i) {
        QGElement x = random_element(c8, rng, 3);
        QGElement y = random_element(c8, rng, 3);
        CHECK(rho_linear(whole_group(c8), k2, x * y) ==
              rho_linear(whole_group(c8), k2, x) * rho_linear(whole_group(c8), k2, y));
    }
    FiniteGroup v4 = FiniteGroup::abelian({2, 2});
    CHECK_THROWS_AS(
        rho_linear(whole_group(v4), trivial_subgroup(v4), QGElement::one(v4)),
        ValidationError);
}

TEST_CASE("predicates") {
    FiniteGroup g = FiniteGroup::metacyclic(7, 3, 0, 2);
    QGElement one = QGElement::one(g);
    CHECK(is_central(one));
    CHECK(is_idempotent(one));
    CHECK(is_integral(one));
    CHECK(is_unit_with_inverse(one, one));
    CHECK_FALSE(is_integral(hat(whole_group(g))));

    QGElement x = QGElement::of(g, 1) + QGElement::of(g, 7);
    QGElement notinv = QGElement::of(g, 2);
    CHECK_FALSE(is_unit_with_inverse(x, notinv));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grhopf/points.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace {

AlgPtr ring_f2_a4() {
    PresBuilder b("r_a4", Field::gf(2));
    int a = b.gen("a", 1);
    b.rel_zero(a, 4);
    return build_algebra(b.p);
}

// GF(4)[b]/(b^2) with |b| = 1, presented over the common base GF(2):
// GF(2)[z,b]/(z^2 = z + 1, b^2), |z| = 0
AlgPtr ring_gf4_b2() {
    PresBuilder b("r_gf4_b2", Field::gf(2));
    int z = b.gen("z", 0);
    int bb = b.gen("b", 1);
    GenPoly rhs = {{b.p.field->one(), b.exps_of(z, 1)},
                   {b.p.field->one(), b.exps_of(z, 0)}};
    b.p.relations[z] = Relation{z, 2, rhs};
    b.rel_zero(bb, 2);
    return build_algebra(b.p);
}

Vec gen_image(const Morphism& pt, int gen) {
    // generator monomials sit at the exponent vector with a single 1
    const auto& src = pt.src;
    std::vector<int> e(src->pres->generators.size(), 0);
    e[gen] = 1;
    for (int i = 0; i < src->dim; ++i)
        if (src->basis_exponents[i] == e) return pt.mat.column(i);
    throw std::runtime_error("generator not found");
}

}  // namespace

TEST_CASE("a1 over GF(2)[a]/(a^4) is cyclic of order 4") {
    HopfAlgebra h = attach_coalgebra(a1_presentation());
    AlgPtr R = ring_f2_a4();
    PointsGroup g = enumerate_points(h, R);
    REQUIRE(g.points.size() == 4);
    CHECK(element_orders(g) == std::vector<int>{1, 2, 4, 4});

    const Field& f = h.field();
    // the paper law (x,u) * (y,v) = (x+y, u+v+x^2 y) on all 16 pairs
    for (size_t i = 0; i < g.points.size(); ++i)
        for (size_t j = 0; j < g.points.size(); ++j) {
            Vec x = gen_image(g.points[i], 0), u = gen_image(g.points[i], 1);
            Vec y = gen_image(g.points[j], 0), v = gen_image(g.points[j], 1);
            const Morphism& prod = g.points[g.cayley[i][j]];
            Vec ex = vec_add(f, x, y);
            Vec eu = vec_add(f, vec_add(f, u, v),
                             R->mul_vec(R->mul_vec(x, x), y));
            CHECK(vec_eq(f, gen_image(prod, 0), ex));
            CHECK(vec_eq(f, gen_image(prod, 1), eu));
        }

    // squaring the point (a, 0) gives (0, a^3)
    int idx_a0 = -1;
    for (size_t i = 0; i < g.points.size(); ++i) {
        Vec x = gen_image(g.points[i], 0), u = gen_image(g.points[i], 1);
        if (vec_eq(f, x, R->basis_vec(1)) && vec_is_zero(f, u)) idx_a0 = int(i);
    }
    REQUIRE(idx_a0 >= 0);
    int sq = g.cayley[idx_a0][idx_a0];
    CHECK(vec_is_zero(f, gen_image(g.points[sq], 0)));
    CHECK(vec_eq(f, gen_image(g.points[sq], 1), R->basis_vec(3)));

    // the paper inverse (x,u)^{-1} = (x, u + x^3)
    for (size_t i = 0; i < g.points.size(); ++i) {
        Vec x = gen_image(g.points[i], 0), u = gen_image(g.points[i], 1);
        const Morphism& inv = g.points[g.inverse[i]];
        CHECK(vec_eq(f, gen_image(inv, 0), x));
        Vec expect_u = vec_add(f, u, R->pow_vec(x, 3));
        CHECK(vec_eq(f, gen_image(inv, 1), expect_u));
    }
}

TEST_CASE("mu3 picks up the cube roots of unity in GF(4)") {
    HopfAlgebra h = attach_coalgebra(mu3_presentation(Field::gf(2)));
    // GF(4) as a degree-0 test ring over GF(2)
    PresBuilder b("gf4", Field::gf(2));
    int z = b.gen("z", 0);
    GenPoly rhs = {{b.p.field->one(), b.exps_of(z, 1)},
                   {b.p.field->one(), b.exps_of(z, 0)}};
    b.p.relations[z] = Relation{z, 2, rhs};
    AlgPtr R = build_algebra(b.p);
    PointsGroup g = enumerate_points(h, R);
    CHECK(g.points.size() == 3);
    CHECK(element_orders(g) == std::vector<int>{1, 3, 3});
}

TEST_CASE("points valued in the base field are trivial") {
    HopfAlgebra h = attach_coalgebra(a1_presentation());
    AlgPtr k = scalar_algebra(h.alg->field);
    PointsGroup g = enumerate_points(h, k);
    CHECK(g.points.size() == 1);
    CHECK(g.identity == 0);
}

TEST_CASE("c53 over GF(4)[b]/(b^2) gives 12 points with the product law") {
    HopfAlgebra h = attach_coalgebra(c53_presentation());
    AlgPtr R = ring_gf4_b2();
    PointsGroup g = enumerate_points(h, R);
    REQUIRE(g.points.size() == 12);
    // (Z/2)^2 x Z/3: element orders 1, 2 (x3), 3 (x2), 6 (x6)
    CHECK(element_orders(g) ==
          std::vector<int>{1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6});

    const Field& f = h.field();
    // the paper law (s1 + s2, r1 r2) on all 144 pairs: r = image of x (deg 0),
    // s = image of y (deg 1)
    for (size_t i = 0; i < g.points.size(); ++i)
        for (size_t j = 0; j < g.points.size(); ++j) {
            Vec r1 = gen_image(g.points[i], 0), s1 = gen_image(g.points[i], 1);
            Vec r2 = gen_image(g.points[j], 0), s2 = gen_image(g.points[j], 1);
            const Morphism& prod = g.points[g.cayley[i][j]];
            CHECK(vec_eq(f, gen_image(prod, 0), R->mul_vec(r1, r2)));
            CHECK(vec_eq(f, gen_image(prod, 1), vec_add(f, s1, s2)));
        }
    // and the inverse (s, r)^{-1} = (s, r^2)
    for (size_t i = 0; i < g.points.size(); ++i) {
        Vec r = gen_image(g.points[i], 0), s = gen_image(g.points[i], 1);
        const Morphism& inv = g.points[g.inverse[i]];
        CHECK(vec_eq(f, gen_image(inv, 0), R->mul_vec(r, r)));
        CHECK(vec_eq(f, gen_image(inv, 1), s));
    }
}

TEST_CASE("nil sets") {
    AlgPtr R = ring_f2_a4();
    auto n41 = nil_set(R, 4, 1);
    REQUIRE(n41.size() == 2);  // {0, a}
    CHECK(vec_is_zero(*R->field, n41[0]));
    CHECK(vec_eq(*R->field, n41[1], R->basis_vec(1)));

    auto k = scalar_algebra(Field::gf(5));
    auto n0 = nil_set(k, 3, 0);
    REQUIRE(n0.size() == 1);
    CHECK(vec_is_zero(*k->field, n0[0]));
}

TEST_CASE("points of the additive group match its nil set") {
    HopfAlgebra h = attach_coalgebra(ex28_presentation());
    AlgPtr R = ring_f2_a4();
    PointsGroup g = enumerate_points(h, R);
    auto nils = nil_set(R, 4, 1);
    REQUIRE(g.points.size() == nils.size());
    const Field& f = h.field();
    // bijection point <-> its value on t; convolution corresponds to the sum
    for (size_t i = 0; i < g.points.size(); ++i) {
        Vec ti = gen_image(g.points[i], 0);
        bool found = false;
        for (const Vec& v : nils)
            if (vec_eq(f, v, ti)) found = true;
        CHECK(found);
        for (size_t j = 0; j < g.points.size(); ++j) {
            Vec tj = gen_image(g.points[j], 0);
            Vec sum = vec_add(f, ti, tj);
            CHECK(vec_eq(f, gen_image(g.points[g.cayley[i][j]], 0), sum));
        }
    }
}

TEST_CASE("budget is enforced") {
    HopfAlgebra h = attach_coalgebra(a1_presentation());
    AlgPtr R = ring_f2_a4();
    CHECK_THROWS_AS(enumerate_points(h, R, 2), Error);
    try {
        enumerate_points(h, R, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::budget);
    }
}

TEST_CASE("field mismatch is rejected") {
    HopfAlgebra h = attach_coalgebra(mu3_presentation(Field::gf(2)));
    auto k3 = scalar_algebra(Field::gf(3));
    CHECK_THROWS_AS(enumerate_points(h, k3), Error);
}

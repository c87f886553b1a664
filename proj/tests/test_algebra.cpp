#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grhopf/algebra.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace grhopf::testing;

TEST_CASE("odd generator away from characteristic 2 squares to zero") {
    PresBuilder b("forced", Field::gf(3));
    b.gen("y", 1);
    auto a = build_algebra(b.p);
    CHECK(a->dim == 2);
    Vec y = a->basis_vec(1);
    CHECK(vec_is_zero(*a->field, a->mul_vec(y, y)));
}

TEST_CASE("degree-0 power relation gives the residue basis") {
    auto a = build_algebra(mu3_presentation(Field::gf(2)));
    CHECK(a->dim == 3);
    CHECK(a->labels == std::vector<std::string>{"1", "x", "x^2"});
    // x * x^2 = 1
    Vec prod = a->mul_vec(a->basis_vec(1), a->basis_vec(2));
    CHECK(vec_eq(*a->field, prod, a->one_vec()));
}

TEST_CASE("a1 has the expected normal-monomial basis") {
    auto a = build_algebra(a1_presentation());
    // oracle: count exponent pairs below the caps and collect their degrees
    std::vector<long> expected_series(7, 0);
    int count = 0;
    for (int e1 = 0; e1 < 4; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
            ++count;
            expected_series[e1 * 1 + e2 * 3]++;
        }
    CHECK(a->dim == count);
    CHECK(a->hilbert_series() == expected_series);
    CHECK(a->hilbert_series() == std::vector<long>{1, 1, 1, 2, 1, 1, 1});
    CHECK(a->is_graded_commutative());
    CHECK(a->check_associative());
}

TEST_CASE("build rejects malformed presentations") {
    // odd generator with a cubic relation away from char 2
    PresBuilder b1("bad1", Field::gf(3));
    int y = b1.gen("y", 1);
    b1.rel_zero(y, 3);
    CHECK_THROWS_AS(build_algebra(b1.p), Error);

    // degree-0 generator with no relation cannot be truncated into finiteness
    PresBuilder b2("bad2", Field::gf(2));
    b2.gen("x", 0);
    b2.truncate(3);
    CHECK_THROWS_AS(build_algebra(b2.p), Error);

    // no relation and no truncation
    PresBuilder b3("bad3", Field::gf(2));
    b3.gen("t", 1);
    CHECK_THROWS_AS(build_algebra(b3.p), Error);

    // inhomogeneous relation x^2 = x for |x| = 1 over GF(2)
    PresBuilder b4("bad4", Field::gf(2));
    int x = b4.gen("x", 1);
    b4.p.relations[x] = Relation{x, 2, {{b4.p.field->one(), b4.exps_of(x, 1)}}};
    CHECK_THROWS_AS(build_algebra(b4.p), Error);
}

TEST_CASE("truncated free generator") {
    auto a = build_algebra(ex27_presentation());
    CHECK(a->dim == 5);  // 1, t, t^2, t^3, t^4
    Vec t = a->basis_vec(1);
    Vec t4 = a->pow_vec(t, 4);
    CHECK(vec_eq(*a->field, t4, a->basis_vec(4)));
    CHECK(vec_is_zero(*a->field, a->pow_vec(t, 5)));
}

TEST_CASE("koszul sign in the tensor square") {
    // (1 (x) y)(x (x) 1) = -(x (x) y) for |x| = |y| = 1 over GF(3)
    PresBuilder bx("X", Field::gf(3));
    bx.gen("x", 1);
    PresBuilder by("Y", Field::gf(3));
    by.gen("y", 1);
    auto X = build_algebra(bx.p);
    auto Y = build_algebra(by.p);
    auto T = tensor_product(X, Y);
    const Field& f = *T->field;
    int i_1y = tensor_index(*T, 0, 1);
    int i_x1 = tensor_index(*T, 1, 0);
    int i_xy = tensor_index(*T, 1, 1);
    Vec prod = T->mul_vec(T->basis_vec(i_1y), T->basis_vec(i_x1));
    Vec expected = vec_scale(f, f.from_int(-1), T->basis_vec(i_xy));
    CHECK(vec_eq(f, prod, expected));
    CHECK(T->is_graded_commutative());
}

TEST_CASE("hilbert series of a tensor product is the product of series") {
    auto a = build_algebra(a1_presentation());
    auto t = tensor_product(a, a);
    auto ha = a->hilbert_series();
    // oracle: convolve the series by hand
    std::vector<long> expected(ha.size() * 2 - 1, 0);
    for (size_t i = 0; i < ha.size(); ++i)
        for (size_t j = 0; j < ha.size(); ++j) expected[i + j] += ha[i] * ha[j];
    CHECK(t->hilbert_series() == expected);
    CHECK(t->dim == a->dim * a->dim);
}

TEST_CASE("tensor of mu3 and an exterior line matches the two-generator build") {
    PresBuilder by("Y", Field::gf(2));
    int y = by.gen("y", 1);
    by.rel_zero(y, 2);
    auto X = build_algebra(mu3_presentation(Field::gf(2)));
    auto Y = build_algebra(by.p);
    auto T = tensor_product(X, Y);
    auto C = build_algebra(c53_presentation());
    REQUIRE(T->dim == C->dim);
    // bases align index by index: (x^i, y^j) lex against exponent vectors (i, j)
    for (int u = 0; u < T->dim; ++u) {
        auto [i, j] = T->tensor_info->index_to_pair[u];
        CHECK(C->basis_exponents[u] == std::vector<int>{i, j});
        CHECK(T->degree[u] == C->degree[u]);
    }
    const Field& f = *T->field;
    for (int u = 0; u < T->dim; ++u)
        for (int v = 0; v < T->dim; ++v) {
            Vec tp = vec_from_lincomb(f, T->dim, T->table(u, v));
            Vec cp = vec_from_lincomb(f, C->dim, C->table(u, v));
            CHECK(vec_eq(f, tp, cp));
        }
}

TEST_CASE("field itself has hilbert series (1)") {
    auto k = scalar_algebra(Field::gf(2));
    CHECK(k->hilbert_series() == std::vector<long>{1});
}

TEST_CASE("make_morphism: identity on a1") {
    auto a = build_algebra(a1_presentation());
    std::vector<Vec> gens;
    for (size_t g = 0; g < a->pres->generators.size(); ++g) {
        std::vector<int> e(a->pres->generators.size(), 0);
        e[g] = 1;
        for (int i = 0; i < a->dim; ++i)
            if (a->basis_exponents[i] == e) gens.push_back(a->basis_vec(i));
    }
    REQUIRE(gens.size() == 2);
    Morphism id = make_morphism(a, a, gens);
    CHECK(id.mat.eq(Matrix::identity(a->field, a->dim)));
    CHECK(id.algebra_map);
}

TEST_CASE("make_morphism: counit-style map to the scalars") {
    auto a = build_algebra(a1_presentation());
    auto k = scalar_algebra(a->field);
    std::vector<Vec> zeros = {k->zero_vec(), k->zero_vec()};
    Morphism eps = make_morphism(a, k, zeros);
    CHECK(eps.algebra_map);
    CHECK(a->field->is_one(eps.apply(a->one_vec())[0]));
}

TEST_CASE("make_morphism: a1 into F2[a]/(a^4)") {
    auto a = build_algebra(a1_presentation());
    PresBuilder br("R", Field::gf(2));
    int g = br.gen("a", 1);
    br.rel_zero(g, 4);
    auto R = build_algebra(br.p);
    // xi1 -> a, xi2 -> a^3: a^4 = 0 and (a^3)^2 = 0
    Morphism m = make_morphism(a, R, {R->basis_vec(1), R->basis_vec(3)});
    CHECK(m.algebra_map);
    // degree mismatch: xi2 -> a
    CHECK_THROWS_AS(make_morphism(a, R, {R->basis_vec(1), R->basis_vec(1)}), Error);
}

TEST_CASE("make_morphism: relation violations are reported") {
    auto m3 = build_algebra(mu3_presentation(Field::gf(2)));
    auto k = scalar_algebra(m3->field);
    // x -> 0 violates x^3 = 1
    CHECK_THROWS_WITH_AS(make_morphism(m3, k, {k->zero_vec()}),
                         doctest::Contains("relation"), Error);
}

TEST_CASE("frobenius iterate in an algebra context") {
    // (1+u)^2 = 1 in GF(2)[u]/(u^2)
    PresBuilder b("U", Field::gf(2));
    int u = b.gen("u", 0);
    b.rel_zero(u, 2);
    auto A = build_algebra(b.p);
    Vec one_plus_u = vec_add(*A->field, A->one_vec(), A->basis_vec(1));
    CHECK(vec_eq(*A->field, A->frobenius_iterate(one_plus_u, 1), A->one_vec()));
    // an idempotent is fixed for every m
    Vec e = A->one_vec();
    for (int m = 1; m <= 3; ++m) CHECK(vec_eq(*A->field, A->frobenius_iterate(e, m), e));
}

TEST_CASE("graded commutativity and associativity on the bundled shapes") {
    for (auto pres : {a1_presentation(), c53_presentation(), dvariety_presentation(),
                      ex28_presentation(), ex27_presentation()}) {
        auto a = build_algebra(pres);
        CHECK(a->is_graded_commutative());
        CHECK(a->check_associative());
    }
    auto aq = build_algebra(mu3_presentation(Field::rationals()));
    CHECK(aq->is_graded_commutative());
    CHECK(aq->check_associative());
}

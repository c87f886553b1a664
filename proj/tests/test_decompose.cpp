#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "grhopf/decompose.hpp"
#include "helpers.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace {

Morphism counit_morphism(const AlgPtr& a, const std::vector<Vec>& images) {
    return make_morphism(a, scalar_algebra(a->field), images);
}

// all idempotents of a small finite-field algebra by exhaustive search
std::vector<Vec> brute_force_idempotents(const AlgPtr& a) {
    const Field& f = *a->field;
    long q = f.order();
    REQUIRE(q > 0);
    double total = 1;
    for (int i = 0; i < a->dim; ++i) total *= double(q);
    REQUIRE(total <= (1 << 20));
    std::vector<Vec> found;
    std::vector<long> odo(a->dim, 0);
    while (true) {
        Vec v(a->dim);
        for (int i = 0; i < a->dim; ++i) v[i] = f.element_at(odo[i]);
        if (vec_eq(f, a->mul_vec(v, v), v)) found.push_back(v);
        int i = 0;
        for (; i < a->dim; ++i) {
            if (++odo[i] < q) break;
            odo[i] = 0;
        }
        if (i == a->dim) break;
    }
    return found;
}

std::string key_of(const Field& f, const Vec& v) {
    std::string s;
    for (const auto& x : v) s += f.str(x) + "|";
    return s;
}

}  // namespace

TEST_CASE("mu3 over QQ decomposes with the exact rational idempotents") {
    auto a = build_algebra(mu3_presentation(Field::rationals()));
    const Field& f = *a->field;
    Morphism eps = counit_morphism(a, {scalar_algebra(a->field)->one_vec()});
    Decomposition dec = decompose_local(a, &eps);
    REQUIRE(dec.components.size() == 2);
    // e = 1/3 (x^2 + x + 1) and 1 - e = -1/3 (x^2 + x - 2), in lex order
    Vec e = {f.from_rational(Rational(1, 3)), f.from_rational(Rational(1, 3)),
             f.from_rational(Rational(1, 3))};
    Vec one_minus_e = {f.from_rational(Rational(2, 3)), f.from_rational(Rational(-1, 3)),
                       f.from_rational(Rational(-1, 3))};
    CHECK(vec_eq(f, dec.idempotents[0], e));
    CHECK(vec_eq(f, dec.idempotents[1], one_minus_e));
    CHECK(dec.components[0]->dim == 1);
    CHECK(dec.components[1]->dim == 2);
    REQUIRE(dec.counit_component.has_value());
    CHECK(*dec.counit_component == 0);
    CHECK(dec.residue_fields[0].degree_over_base == 1);
    CHECK(dec.residue_fields[1].degree_over_base == 2);
    CHECK(dec.residue_fields[1].certified_field);
}

TEST_CASE("mu3 over GF(2) decomposes into GF(2) x GF(4)") {
    auto a = build_algebra(mu3_presentation(Field::gf(2)));
    const Field& f = *a->field;
    Morphism eps = counit_morphism(a, {scalar_algebra(a->field)->one_vec()});
    Decomposition dec = decompose_local(a, &eps);
    REQUIRE(dec.components.size() == 2);
    // lex order puts x^2 + x = (0,1,1) before x^2 + x + 1 = (1,1,1)
    Vec e_gf4 = {f.zero(), f.one(), f.one()};
    Vec e_counit = {f.one(), f.one(), f.one()};
    CHECK(vec_eq(f, dec.idempotents[0], e_gf4));
    CHECK(vec_eq(f, dec.idempotents[1], e_counit));
    REQUIRE(dec.counit_component.has_value());
    CHECK(*dec.counit_component == 1);
    CHECK(dec.components[1]->dim == 1);
    CHECK(dec.components[0]->dim == 2);
    REQUIRE(dec.residue_fields[0].as_field_spec.has_value());
    CHECK(dec.residue_fields[0].as_field_spec->extension_degree == 2);
    CHECK(dec.residue_fields[1].as_field_spec->extension_degree == 1);
}

TEST_CASE("a1 is gr-local: a single component") {
    auto a = build_algebra(a1_presentation());
    Decomposition dec = decompose_local(a);
    CHECK(dec.components.size() == 1);
    CHECK(dec.components[0]->dim == 8);
    CHECK(is_gr_local(a));
}

TEST_CASE("d_variety is gr-local with a fat degree-0 part") {
    auto a = build_algebra(dvariety_presentation());
    Decomposition dec = decompose_local(a);
    CHECK(dec.components.size() == 1);
    CHECK(is_gr_local(a));
    CHECK_FALSE(is_separable(a));
}

TEST_CASE("c53 splits into two gr-local components of dims 2 and 4") {
    auto a = build_algebra(c53_presentation());
    Decomposition dec = decompose_local(a);
    REQUIRE(dec.components.size() == 2);
    std::multiset<int> dims = {dec.components[0]->dim, dec.components[1]->dim};
    CHECK(dims == std::multiset<int>{2, 4});
    CHECK_FALSE(is_gr_local(a));
}

TEST_CASE("nilpotent unipotent case: GF(2)[x]/(x^2 = 1) is local") {
    // (x+1)^2 = 0, so the algebra is local although x^2 - 1 splits as (x-1)^2
    PresBuilder b("mu2", Field::gf(2));
    int x = b.gen("x", 0);
    b.rel_one(x, 2);
    auto a = build_algebra(b.p);
    Decomposition dec = decompose_local(a);
    CHECK(dec.components.size() == 1);
    CHECK(dec.residue_fields[0].degree_over_base == 1);
    CHECK_FALSE(is_separable(a));
}

TEST_CASE("separability flags") {
    CHECK(is_separable(build_algebra(mu3_presentation(Field::gf(2)))));
    CHECK(is_separable(build_algebra(mu3_presentation(Field::rationals()))));

    PresBuilder bu("u", Field::gf(2));
    int u = bu.gen("u", 0);
    bu.rel_zero(u, 2);
    CHECK_FALSE(is_separable(build_algebra(bu.p)));  // nilpotent in degree 0

    PresBuilder by("yline", Field::gf(2));
    int y = by.gen("y", 1);
    by.rel_zero(y, 2);
    CHECK_FALSE(is_separable(build_algebra(by.p)));  // positive-degree content
}

TEST_CASE("char-0 splitting through pairwise products") {
    // QQ[x]/(x^4 = 4) = QQ(sqrt 2) x QQ(sqrt -2); x itself has no rational
    // eigenvalue but x^2 does
    PresBuilder b("quartic", Field::rationals());
    int x = b.gen("x", 0);
    b.p.relations[x] = Relation{x, 4, {{b.p.field->from_int(4), b.exps_of(x, 0)}}};
    auto a = build_algebra(b.p);
    Decomposition dec = decompose_local(a);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0]->dim == 2);
    CHECK(dec.components[1]->dim == 2);
    CHECK(dec.residue_fields[0].certified_field);
    CHECK(dec.residue_fields[1].certified_field);
}

TEST_CASE("rational decomposition with nilpotents") {
    // QQ[x]/(x^3 = x^2): min poly t^3 - t^2 = t^2 (t-1): local pieces QQ[eps], QQ
    PresBuilder b("nilp", Field::rationals());
    int x = b.gen("x", 0);
    b.p.relations[x] = Relation{x, 3, {{b.p.field->one(), b.exps_of(x, 2)}}};
    auto a = build_algebra(b.p);
    Decomposition dec = decompose_local(a);
    REQUIRE(dec.components.size() == 2);
    std::multiset<int> dims = {dec.components[0]->dim, dec.components[1]->dim};
    CHECK(dims == std::multiset<int>{1, 2});
    for (const auto& rf : dec.residue_fields) CHECK(rf.degree_over_base == 1);
}

TEST_CASE("degree-0 idempotent search agrees with brute force on small fixtures") {
    for (auto pres : {mu3_presentation(Field::gf(2)), c53_presentation(),
                      dvariety_presentation(), a1_presentation()}) {
        auto a = build_algebra(pres);
        const Field& f = *a->field;
        Decomposition dec = decompose_local(a);
        auto brute = brute_force_idempotents(a);
        // every idempotent is a subset sum of the primitive family
        std::set<std::string> from_primitive;
        size_t n = dec.idempotents.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            Vec s = a->zero_vec();
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) s = vec_add(f, s, dec.idempotents[i]);
            from_primitive.insert(key_of(f, s));
        }
        std::set<std::string> from_brute;
        for (const Vec& v : brute) {
            from_brute.insert(key_of(f, v));
            // Prop-style check: every idempotent is homogeneous of degree 0
            if (!vec_is_zero(f, v)) {
                auto d = a->homogeneous_degree(v);
                REQUIRE(d.has_value());
                CHECK(*d == 0);
            }
        }
        CHECK(from_brute == from_primitive);
        CHECK(brute.size() == (size_t(1) << n));
    }
}

TEST_CASE("decomposition invariants: orthogonal, complete, dims sum") {
    for (auto pres : {mu3_presentation(Field::gf(2)), c53_presentation(),
                      dvariety_presentation()}) {
        auto a = build_algebra(pres);
        const Field& f = *a->field;
        Decomposition dec = decompose_local(a);
        Vec sum = a->zero_vec();
        long dims = 0;
        for (size_t i = 0; i < dec.idempotents.size(); ++i) {
            sum = vec_add(f, sum, dec.idempotents[i]);
            dims += dec.components[i]->dim;
            for (size_t j = 0; j < i; ++j)
                CHECK(vec_is_zero(
                    f, a->mul_vec(dec.idempotents[i], dec.idempotents[j])));
        }
        CHECK(vec_eq(f, sum, a->one_vec()));
        CHECK(dims == a->dim);
        // projections are certified algebra maps
        for (const auto& proj : dec.projections) {
            std::vector<std::string> failures;
            CHECK(verify_algebra_map(proj, &failures));
        }
    }
}

TEST_CASE("quotient by the ideal (x - 1) in c53") {
    auto a = build_algebra(c53_presentation());
    const Field& f = *a->field;
    // x - 1 in coordinates: basis 1, y, x, x y, x^2, x^2 y
    Vec gen = a->zero_vec();
    int ix = -1, i1 = -1;
    for (int i = 0; i < a->dim; ++i) {
        if (a->labels[i] == "x") ix = i;
        if (a->labels[i] == "1") i1 = i;
    }
    REQUIRE(ix >= 0);
    gen[ix] = f.one();
    gen[i1] = f.from_int(-1);
    auto ideal = ideal_span(a, {gen});
    CHECK(ideal.size() == 4);
    Quotient q = quotient_by_ideal(a, ideal);
    CHECK(q.algebra->dim == 2);
    CHECK(q.algebra->hilbert_series() == std::vector<long>{1, 1});
    std::vector<std::string> failures;
    CHECK(verify_algebra_map(q.projection, &failures));
}

TEST_CASE("nilradical over QQ via the trace form") {
    PresBuilder b("dual_numbers", Field::rationals());
    int u = b.gen("u", 0);
    b.rel_zero(u, 2);
    auto a = build_algebra(b.p);
    auto nil = nilradical_basis(a);
    REQUIRE(nil.size() == 1);
    CHECK(a->field->is_zero(nil[0][0]));
    CHECK_FALSE(a->field->is_zero(nil[0][1]));
}

#pragma once

#include <string>
#include <vector>

#include "grhopf/algebra.hpp"

namespace grhopf::testing {

/// Convenience builder for presentations assembled in test code.
struct PresBuilder {
    Presentation p;

    PresBuilder(std::string name, FieldPtr f) {
        p.name = std::move(name);
        p.field = std::move(f);
    }

    int gen(const std::string& n, int deg) {
        p.generators.push_back({n, deg});
        p.relations.push_back(std::nullopt);
        p.comul.emplace_back();
        p.counit.push_back(p.field->zero());
        p.antipode.emplace_back();
        return int(p.generators.size()) - 1;
    }

    std::vector<int> exps_of(int g, int e) const {
        std::vector<int> v(p.generators.size(), 0);
        v[g] = e;
        return v;
    }

    void rel_zero(int g, int n) { p.relations[g] = Relation{g, n, {}}; }

    void rel_one(int g, int n) {
        GenPoly rhs = {{p.field->one(), exps_of(g, 0)}};
        p.relations[g] = Relation{g, n, rhs};
    }

    void truncate(int d) { p.truncation = d; }

    void comul_term(int g, const FElem& c, const std::vector<int>& l,
                    const std::vector<int>& r) {
        p.has_coalgebra = true;
        p.comul[g].push_back({c, l, r});
    }

    void counit(int g, const FElem& c) {
        p.has_coalgebra = true;
        p.counit[g] = c;
    }

    /// comul(x) = x (x) 1 + 1 (x) x, counit(x) = 0
    void primitive(int g) {
        comul_term(g, p.field->one(), exps_of(g, 1), exps_of(g, 0));
        comul_term(g, p.field->one(), exps_of(g, 0), exps_of(g, 1));
        counit(g, p.field->zero());
    }

    /// comul(x) = x (x) x, counit(x) = 1
    void grouplike(int g) {
        comul_term(g, p.field->one(), exps_of(g, 1), exps_of(g, 1));
        counit(g, p.field->one());
    }

    void antipode_term(int g, const FElem& c, const std::vector<int>& exps) {
        p.has_antipode = true;
        p.antipode[g].push_back({c, exps});
    }
};

/// F2[xi1,xi2]/(xi1^4, xi2^2), |xi1|=1, |xi2|=3, the dual Steenrod piece.
inline Presentation a1_presentation(bool with_antipode = true) {
    PresBuilder b("a1", Field::gf(2));
    int x1 = b.gen("xi1", 1);
    int x2 = b.gen("xi2", 3);
    b.rel_zero(x1, 4);
    b.rel_zero(x2, 2);
    b.primitive(x1);
    // comul(xi2) = xi2 (x) 1 + xi1^2 (x) xi1 + 1 (x) xi2
    b.comul_term(x2, b.p.field->one(), b.exps_of(x2, 1), b.exps_of(x2, 0));
    b.comul_term(x2, b.p.field->one(), b.exps_of(x1, 2), b.exps_of(x1, 1));
    b.comul_term(x2, b.p.field->one(), b.exps_of(x2, 0), b.exps_of(x2, 1));
    b.counit(x2, b.p.field->zero());
    if (with_antipode) {
        b.antipode_term(x1, b.p.field->one(), b.exps_of(x1, 1));
        b.antipode_term(x2, b.p.field->one(), b.exps_of(x2, 1));
        b.antipode_term(x2, b.p.field->one(), b.exps_of(x1, 3));
    }
    return b.p;
}

/// k[x]/(x^3 - 1), x grouplike of degree 0 (mu_3 coordinate ring).
inline Presentation mu3_presentation(FieldPtr f, bool with_antipode = true) {
    PresBuilder b("mu3", std::move(f));
    int x = b.gen("x", 0);
    b.rel_one(x, 3);
    b.grouplike(x);
    if (with_antipode) b.antipode_term(x, b.p.field->one(), b.exps_of(x, 2));
    return b.p;
}

/// F2[x,y]/(x^3-1, y^2), |x|=0 grouplike, |y|=1 primitive.
inline Presentation c53_presentation(bool with_antipode = true) {
    PresBuilder b("c_ex53", Field::gf(2));
    int x = b.gen("x", 0);
    int y = b.gen("y", 1);
    b.rel_one(x, 3);
    b.rel_zero(y, 2);
    b.grouplike(x);
    b.primitive(y);
    if (with_antipode) {
        b.antipode_term(x, b.p.field->one(), b.exps_of(x, 2));
        b.antipode_term(y, b.p.field->from_int(-1), b.exps_of(y, 1));
    }
    return b.p;
}

/// F2[u,y]/(u^2, y^2), |u|=0, |y|=1, both primitive: gr-local with
/// a nontrivial degree-0 part.
inline Presentation dvariety_presentation(bool with_antipode = true) {
    PresBuilder b("d_variety", Field::gf(2));
    int u = b.gen("u", 0);
    int y = b.gen("y", 1);
    b.rel_zero(u, 2);
    b.rel_zero(y, 2);
    b.primitive(u);
    b.primitive(y);
    if (with_antipode) {
        b.antipode_term(u, b.p.field->from_int(-1), b.exps_of(u, 1));
        b.antipode_term(y, b.p.field->from_int(-1), b.exps_of(y, 1));
    }
    return b.p;
}

/// F2[t]/(t^4), t primitive of degree 1 (p^r = 4).
inline Presentation ex28_presentation(bool with_antipode = true) {
    PresBuilder b("ex2_8", Field::gf(2));
    int t = b.gen("t", 1);
    b.rel_zero(t, 4);
    b.primitive(t);
    if (with_antipode) b.antipode_term(t, b.p.field->from_int(-1), b.exps_of(t, 1));
    return b.p;
}

/// F2[t] truncated at total degree 4, t primitive of degree 1.
inline Presentation ex27_presentation(bool with_antipode = true) {
    PresBuilder b("ex2_7", Field::gf(2));
    int t = b.gen("t", 1);
    b.truncate(4);
    b.primitive(t);
    if (with_antipode) b.antipode_term(t, b.p.field->from_int(-1), b.exps_of(t, 1));
    return b.p;
}

}  // namespace grhopf::testing

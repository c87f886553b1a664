#include "grhopf/hopf.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace grhopf {

namespace {

Vec kron_into(const AlgPtr& square, const Vec& a, const Vec& b) {
    const Field& f = *square->field;
    const TensorInfo& ti = *square->tensor_info;
    Vec out = vec_zero(f, square->dim);
    for (int i = 0; i < ti.left_dim; ++i) {
        if (f.is_zero(a[i])) continue;
        for (int j = 0; j < ti.right_dim; ++j) {
            if (f.is_zero(b[j])) continue;
            int idx = ti.pair_to_index[size_t(i) * ti.right_dim + j];
            if (idx < 0) continue;
            out[idx] = f.add(out[idx], f.mul(a[i], b[j]));
        }
    }
    return out;
}

// multiplicative extension of generator images over the normal-monomial basis,
// with no relation verification (checks are collected separately)
Morphism extend_multiplicatively(const AlgPtr& src, const AlgPtr& dst,
                                 const std::vector<Vec>& gen_images) {
    Morphism m;
    m.src = src;
    m.dst = dst;
    m.mat = Matrix(dst->field, dst->dim, src->dim);
    for (int b = 0; b < src->dim; ++b) {
        Vec img = dst->one_vec();
        const auto& exps = src->basis_exponents[b];
        for (size_t g = 0; g < exps.size(); ++g) {
            if (exps[g] == 0) continue;
            img = dst->mul_vec(img, dst->pow_vec(gen_images[g], exps[g]));
        }
        for (int i = 0; i < dst->dim; ++i) m.mat.at(i, b) = img[i];
    }
    return m;
}

using TripleMap = std::map<std::tuple<int, int, int>, FElem>;

void triple_add(const Field& f, TripleMap& m, std::tuple<int, int, int> key,
                const FElem& c) {
    auto it = m.find(key);
    if (it == m.end()) {
        if (!f.is_zero(c)) m.emplace(key, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) m.erase(it);
}

}  // namespace

Vec eval_tensor_poly(const AlgPtr& alg, const AlgPtr& square, const Presentation& p,
                     const TensorPoly& tp) {
    const Field& f = *alg->field;
    // generator monomial vectors inside alg
    std::vector<Vec> gens;
    for (size_t g = 0; g < p.generators.size(); ++g) {
        std::vector<int> e(p.generators.size(), 0);
        e[g] = 1;
        Vec v = alg->zero_vec();
        bool found = false;
        for (int i = 0; i < alg->dim; ++i)
            if (alg->basis_exponents[i] == e) {
                v[i] = f.one();
                found = true;
                break;
            }
        if (!found) throw internal_error("generator monomial missing from basis");
        gens.push_back(std::move(v));
    }
    Vec acc = vec_zero(f, square->dim);
    for (const auto& term : tp) {
        Vec left = alg->one_vec();
        Vec right = alg->one_vec();
        for (size_t g = 0; g < term.left.size(); ++g)
            if (term.left[g] > 0) left = alg->mul_vec(left, alg->pow_vec(gens[g], term.left[g]));
        for (size_t g = 0; g < term.right.size(); ++g)
            if (term.right[g] > 0)
                right = alg->mul_vec(right, alg->pow_vec(gens[g], term.right[g]));
        acc = vec_add(f, acc, vec_scale(f, term.coeff, kron_into(square, left, right)));
    }
    return acc;
}

std::vector<CheckResult> bialgebra_checks(const HopfAlgebra& h) {
    std::vector<CheckResult> out;
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    auto push = [&](const std::string& name, bool ok, const std::string& witness = "") {
        out.push_back({name, ok, ok ? "" : witness});
    };

    push("comul degree-preserving", h.comul.is_degree_preserving());
    push("counit degree-preserving", h.counit.is_degree_preserving());

    {
        std::vector<std::string> fails;
        bool ok = verify_algebra_map(h.comul, &fails);
        push("comul is an algebra map", ok, fails.empty() ? "" : fails.front());
    }
    {
        std::vector<std::string> fails;
        bool ok = verify_algebra_map(h.counit, &fails);
        push("counit is an algebra map", ok, fails.empty() ? "" : fails.front());
    }

    // coassociativity as formal triple sums
    {
        const TensorInfo& ti = *h.square->tensor_info;
        bool ok = true;
        std::string witness;
        for (int b = 0; b < A->dim && ok; ++b) {
            Vec delta_b = h.comul.mat.column(b);
            TripleMap left, right;
            for (int u = 0; u < h.square->dim; ++u) {
                if (f.is_zero(delta_b[u])) continue;
                auto [i, j] = ti.index_to_pair[u];
                // (comul (x) id): expand comul(b_i) (x) b_j
                Vec di = h.comul.mat.column(i);
                for (int v = 0; v < h.square->dim; ++v) {
                    if (f.is_zero(di[v])) continue;
                    auto [k, l] = ti.index_to_pair[v];
                    triple_add(f, left, {k, l, j}, f.mul(delta_b[u], di[v]));
                }
                // (id (x) comul): expand b_i (x) comul(b_j)
                Vec dj = h.comul.mat.column(j);
                for (int v = 0; v < h.square->dim; ++v) {
                    if (f.is_zero(dj[v])) continue;
                    auto [l, m] = ti.index_to_pair[v];
                    triple_add(f, right, {i, l, m}, f.mul(delta_b[u], dj[v]));
                }
            }
            if (left.size() != right.size()) {
                ok = false;
            } else {
                for (const auto& [key, val] : left) {
                    auto it = right.find(key);
                    if (it == right.end() || !f.eq(val, it->second)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) witness = A->labels[b];
        }
        push("coassociativity", ok, witness);
    }

    // counit laws
    {
        const TensorInfo& ti = *h.square->tensor_info;
        bool okl = true, okr = true;
        std::string wl, wr;
        for (int b = 0; b < A->dim; ++b) {
            Vec delta_b = h.comul.mat.column(b);
            Vec lhs_l = A->zero_vec(), lhs_r = A->zero_vec();
            for (int u = 0; u < h.square->dim; ++u) {
                if (f.is_zero(delta_b[u])) continue;
                auto [i, j] = ti.index_to_pair[u];
                FElem ei = h.eps(A->basis_vec(i));
                FElem ej = h.eps(A->basis_vec(j));
                lhs_l = vec_add(f, lhs_l,
                                vec_scale(f, f.mul(delta_b[u], ei), A->basis_vec(j)));
                lhs_r = vec_add(f, lhs_r,
                                vec_scale(f, f.mul(delta_b[u], ej), A->basis_vec(i)));
            }
            if (okl && !vec_eq(f, lhs_l, A->basis_vec(b))) {
                okl = false;
                wl = A->labels[b];
            }
            if (okr && !vec_eq(f, lhs_r, A->basis_vec(b))) {
                okr = false;
                wr = A->labels[b];
            }
        }
        push("counit law (eps (x) id) comul = id", okl, wl);
        push("counit law (id (x) eps) comul = id", okr, wr);
    }
    return out;
}

HopfAlgebra attach_coalgebra(const Presentation& p) {
    if (!p.has_coalgebra)
        throw input_error("presentation carries no comultiplication data");
    AlgPtr A = build_algebra(p);
    const Presentation& np = *A->pres;  // normalized (implicit relations added)
    const Field& f = *A->field;
    AlgPtr square = tensor_product(A, A);
    AlgPtr k = scalar_algebra(A->field);

    // evaluate the stated images
    std::vector<Vec> comul_images, counit_images;
    for (size_t g = 0; g < np.generators.size(); ++g) {
        Vec img = eval_tensor_poly(A, square, np, p.comul[g]);
        auto d = square->homogeneous_degree(img);
        if (d && *d != np.generators[g].degree)
            throw input_error("comul image of " + np.generators[g].name +
                              " is not homogeneous of the generator degree");
        if (!square->is_homogeneous(img))
            throw input_error("comul image of " + np.generators[g].name +
                              " is not homogeneous");
        comul_images.push_back(std::move(img));
        FElem c = p.counit[g];
        if (np.generators[g].degree != 0 && !f.is_zero(c))
            throw input_error("counit of positive-degree generator " +
                              np.generators[g].name + " must be 0");
        counit_images.push_back(Vec{c});
    }

    HopfAlgebra h;
    h.alg = A;
    h.square = square;
    h.comul = extend_multiplicatively(A, square, comul_images);
    h.counit = extend_multiplicatively(A, k, counit_images);

    std::vector<CheckResult> checks = bialgebra_checks(h);
    std::vector<CheckResult> fails;
    for (const auto& c : checks)
        if (!c.ok) fails.push_back(c);
    if (!fails.empty()) {
        std::string msg = "coalgebra attachment failed: " + fails.front().name;
        if (!fails.front().witness.empty()) msg += " (witness " + fails.front().witness + ")";
        throw HopfError(msg, fails);
    }
    h.comul.algebra_map = true;
    h.counit.algebra_map = true;

    if (p.has_antipode) {
        std::vector<Vec> gen_vecs;
        for (size_t g = 0; g < np.generators.size(); ++g) {
            std::vector<int> e(np.generators.size(), 0);
            e[g] = 1;
            Vec v = A->zero_vec();
            for (int i = 0; i < A->dim; ++i)
                if (A->basis_exponents[i] == e) v[i] = f.one();
            gen_vecs.push_back(v);
        }
        std::vector<Vec> s_eval;
        for (size_t g = 0; g < np.generators.size(); ++g)
            s_eval.push_back(eval_gen_poly(*A, np, gen_vecs, p.antipode[g]));
        h.antipode = extend_multiplicatively(A, A, s_eval);
    }
    return h;
}

Morphism unit_counit_morphism(const HopfAlgebra& h) {
    Morphism m;
    m.src = h.alg;
    m.dst = h.alg;
    m.mat = Matrix(h.alg->field, h.alg->dim, h.alg->dim);
    for (int b = 0; b < h.alg->dim; ++b) {
        FElem e = h.eps(h.alg->basis_vec(b));
        for (int i = 0; i < h.alg->dim; ++i)
            m.mat.at(i, b) = h.field().mul(e, h.alg->unit[i]);
    }
    return m;
}

namespace {

// m(S (x) id) comul or m(id (x) S) comul as a matrix, for a candidate S
Matrix convolution_with_identity(const HopfAlgebra& h, const Matrix& s, bool s_left) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    const TensorInfo& ti = *h.square->tensor_info;
    Matrix out(A->field, A->dim, A->dim);
    for (int b = 0; b < A->dim; ++b) {
        Vec delta_b = h.comul.mat.column(b);
        Vec acc = A->zero_vec();
        for (int u = 0; u < h.square->dim; ++u) {
            if (f.is_zero(delta_b[u])) continue;
            auto [i, j] = ti.index_to_pair[u];
            Vec left = s_left ? s.column(i) : A->basis_vec(i);
            Vec right = s_left ? A->basis_vec(j) : s.column(j);
            acc = vec_add(f, acc, vec_scale(f, delta_b[u], A->mul_vec(left, right)));
        }
        for (int r = 0; r < A->dim; ++r) out.at(r, b) = acc[r];
    }
    return out;
}

}  // namespace

HopfAlgebra synthesize_antipode(const HopfAlgebra& h) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    const TensorInfo& ti = *h.square->tensor_info;

    // unknowns: s_{k,i} with deg b_k = deg b_i, grouped by ascending degree
    std::vector<std::pair<int, int>> unknowns;  // (k, i)
    std::map<std::pair<int, int>, int> unknown_index;
    for (int d = 0; d <= A->max_degree(); ++d) {
        auto idx = A->degree_indices(d);
        for (int i : idx)
            for (int k : idx) {
                unknown_index[{k, i}] = int(unknowns.size());
                unknowns.push_back({k, i});
            }
    }
    int nu = int(unknowns.size());

    // rows: one per (basis b, target coordinate t), ordered by degree of b
    std::vector<int> basis_order;
    for (int d = 0; d <= A->max_degree(); ++d)
        for (int b : A->degree_indices(d)) basis_order.push_back(b);

    Matrix sys(A->field, A->dim * A->dim, nu);
    Matrix rhs(A->field, A->dim * A->dim, 1);
    int row0 = 0;
    for (int b : basis_order) {
        Vec delta_b = h.comul.mat.column(b);
        // rhs: eps(b) * 1
        FElem e = h.eps(A->basis_vec(b));
        for (int t = 0; t < A->dim; ++t)
            rhs.at(row0 + t, 0) = f.mul(e, A->unit[t]);
        for (int u = 0; u < h.square->dim; ++u) {
            if (f.is_zero(delta_b[u])) continue;
            auto [i, j] = ti.index_to_pair[u];
            // term S(b_i) b_j = sum_k s_{k,i} (b_k b_j)
            for (int k : A->degree_indices(A->degree[i])) {
                int col = unknown_index.at({k, i});
                for (const auto& term : A->table(k, j)) {
                    int row = row0 + term.idx;
                    sys.at(row, col) = f.add(sys.at(row, col), f.mul(delta_b[u], term.coeff));
                }
            }
        }
        row0 += A->dim;
    }

    auto sol = solve_linear_system(sys, rhs);
    if (!sol.solution)
        throw verify_error(
            "antipode synthesis: the convolution system has no solution (input is "
            "not a Hopf algebra under the stated hypotheses)");
    if (!sol.unique)
        throw verify_error(
            "antipode synthesis: solution is not unique (gr-locality hypothesis "
            "violated)");

    Matrix s(A->field, A->dim, A->dim);
    for (int u = 0; u < nu; ++u) {
        auto [k, i] = unknowns[u];
        s.at(k, i) = sol.solution->at(u, 0);
    }

    // verify the opposite identity m(id (x) S) comul = eta eps
    Matrix opp = convolution_with_identity(h, s, false);
    Matrix eta_eps = unit_counit_morphism(h).mat;
    if (!opp.eq(eta_eps))
        throw verify_error("antipode synthesis: m(id (x) S) comul != unit counit");

    HopfAlgebra out = h;
    Morphism sm;
    sm.src = A;
    sm.dst = A;
    sm.mat = s;
    sm.algebra_map = verify_algebra_map(sm);
    out.antipode = sm;
    return out;
}

VerifyReport verify_hopf(const HopfAlgebra& h) {
    VerifyReport rep;
    rep.checks = bialgebra_checks(h);
    if (!h.antipode) {
        rep.checks.push_back({"antipode present", false, "no antipode attached"});
        return rep;
    }
    const Morphism& s = *h.antipode;
    rep.checks.push_back({"antipode degree-preserving", s.is_degree_preserving(), ""});
    Matrix eta_eps = unit_counit_morphism(h).mat;
    Matrix left = convolution_with_identity(h, s.mat, true);
    Matrix right = convolution_with_identity(h, s.mat, false);
    rep.checks.push_back({"antipode law m(S (x) id) comul = unit counit",
                          left.eq(eta_eps), ""});
    rep.checks.push_back({"antipode law m(id (x) S) comul = unit counit",
                          right.eq(eta_eps), ""});
    if (!rep.checks.back().ok || !rep.checks[rep.checks.size() - 2].ok) {
        // witness: first basis element where the law fails
        for (int b = 0; b < h.alg->dim; ++b) {
            bool bad = false;
            for (int t = 0; t < h.alg->dim; ++t)
                if (!h.field().eq(left.at(t, b), eta_eps.at(t, b)) ||
                    !h.field().eq(right.at(t, b), eta_eps.at(t, b)))
                    bad = true;
            if (bad) {
                rep.checks.back().witness = h.alg->labels[b];
                rep.checks[rep.checks.size() - 2].witness = h.alg->labels[b];
                break;
            }
        }
    }
    if (h.alg->is_graded_commutative()) {
        std::vector<std::string> fails;
        bool ok = verify_algebra_map(s, &fails);
        rep.checks.push_back({"antipode is an algebra map (commutative case)", ok,
                              fails.empty() ? "" : fails.front()});
    }
    Matrix s2 = s.mat.mul(s.mat);
    rep.checks.push_back(
        {"antipode is involutive (S . S = id)",
         s2.eq(Matrix::identity(h.alg->field, h.alg->dim)), ""});
    return rep;
}

Morphism convolution(const Morphism& f, const Morphism& g, const HopfAlgebra& h) {
    const Field& fl = h.field();
    if (f.src.get() != h.alg.get() || g.src.get() != h.alg.get())
        throw input_error("convolution: maps must start at the Hopf algebra");
    if (f.dst.get() != g.dst.get())
        throw input_error("convolution: target algebras differ");
    const AlgPtr& R = f.dst;
    const TensorInfo& ti = *h.square->tensor_info;
    Morphism out;
    out.src = h.alg;
    out.dst = R;
    out.mat = Matrix(R->field, R->dim, h.alg->dim);
    for (int b = 0; b < h.alg->dim; ++b) {
        Vec delta_b = h.comul.mat.column(b);
        Vec acc = R->zero_vec();
        for (int u = 0; u < h.square->dim; ++u) {
            if (fl.is_zero(delta_b[u])) continue;
            auto [i, j] = ti.index_to_pair[u];
            acc = vec_add(fl, acc,
                          vec_scale(fl, delta_b[u],
                                    R->mul_vec(f.mat.column(i), g.mat.column(j))));
        }
        for (int r = 0; r < R->dim; ++r) out.mat.at(r, b) = acc[r];
    }
    out.algebra_map = verify_algebra_map(out);
    return out;
}

HopfAlgebra graded_dual(const HopfAlgebra& h) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    const TensorInfo& ti = *h.square->tensor_info;
    long chr = f.characteristic();

    auto dual = std::make_shared<GradedAlgebra>();
    dual->field = A->field;
    dual->dim = A->dim;
    dual->degree = A->degree;
    for (const auto& l : A->labels) dual->labels.push_back(l + "*");
    // unit of the dual is the counit functional
    dual->unit = vec_zero(f, A->dim);
    for (int i = 0; i < A->dim; ++i) dual->unit[i] = h.eps(A->basis_vec(i));
    // product: (b_i* b_j*) = sum_b (-1)^{|b_i||b_j|} comul(b)_{ij} b*
    dual->mult.assign(size_t(A->dim) * A->dim, {});
    std::vector<std::vector<LinTerm>> acc(size_t(A->dim) * A->dim);
    for (int b = 0; b < A->dim; ++b) {
        Vec delta_b = h.comul.mat.column(b);
        for (int u = 0; u < h.square->dim; ++u) {
            if (f.is_zero(delta_b[u])) continue;
            auto [i, j] = ti.index_to_pair[u];
            FElem c = delta_b[u];
            if (chr != 2 && (A->degree[i] & 1) && (A->degree[j] & 1)) c = f.neg(c);
            acc[size_t(i) * A->dim + j].push_back({b, c});
        }
    }
    for (size_t ij = 0; ij < acc.size(); ++ij) {
        LinComb lc;
        std::sort(acc[ij].begin(), acc[ij].end(),
                  [](const LinTerm& x, const LinTerm& y) { return x.idx < y.idx; });
        for (const auto& t : acc[ij]) lc = lincomb_add(f, lc, LinComb{{t.idx, t.coeff}});
        dual->mult[ij] = std::move(lc);
    }

    AlgPtr dual_square = tensor_product(dual, dual);
    const TensorInfo& dti = *dual_square->tensor_info;

    HopfAlgebra out;
    out.alg = dual;
    out.square = dual_square;

    // comultiplication: transpose of the product with the pairing sign
    Morphism dcomul;
    dcomul.src = dual;
    dcomul.dst = dual_square;
    dcomul.mat = Matrix(dual->field, dual_square->dim, dual->dim);
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
            FElem sign = (chr != 2 && (A->degree[i] & 1) && (A->degree[j] & 1))
                             ? f.from_int(-1)
                             : f.one();
            for (const auto& t : A->table(i, j)) {
                int pidx = dti.pair_to_index[size_t(i) * A->dim + j];
                if (pidx < 0) continue;
                dcomul.mat.at(pidx, t.idx) =
                    f.add(dcomul.mat.at(pidx, t.idx), f.mul(sign, t.coeff));
            }
        }
    dcomul.algebra_map = verify_algebra_map(dcomul);
    out.comul = dcomul;

    // counit: evaluation at 1_A
    Morphism dcounit;
    dcounit.src = dual;
    dcounit.dst = scalar_algebra(dual->field);
    dcounit.mat = Matrix(dual->field, 1, dual->dim);
    for (int i = 0; i < A->dim; ++i) dcounit.mat.at(0, i) = A->unit[i];
    dcounit.algebra_map = verify_algebra_map(dcounit);
    out.counit = dcounit;

    if (h.antipode) {
        Morphism ds;
        ds.src = dual;
        ds.dst = dual;
        ds.mat = h.antipode->mat.transpose();
        ds.algebra_map = false;
        out.antipode = ds;
    }
    return out;
}

std::vector<Vec> augmentation_ideal_basis(const HopfAlgebra& h) {
    return kernel_basis(h.counit.mat);
}

bool is_cocommutative(const HopfAlgebra& h) {
    const Field& f = h.field();
    const TensorInfo& ti = *h.square->tensor_info;
    long chr = f.characteristic();
    for (int b = 0; b < h.alg->dim; ++b) {
        Vec delta_b = h.comul.mat.column(b);
        Vec twisted = vec_zero(f, h.square->dim);
        for (int u = 0; u < h.square->dim; ++u) {
            if (f.is_zero(delta_b[u])) continue;
            auto [i, j] = ti.index_to_pair[u];
            int swapped = ti.pair_to_index[size_t(j) * ti.right_dim + i];
            if (swapped < 0) continue;
            FElem c = delta_b[u];
            if (chr != 2 && (h.alg->degree[i] & 1) && (h.alg->degree[j] & 1)) c = f.neg(c);
            twisted[swapped] = f.add(twisted[swapped], c);
        }
        if (!vec_eq(f, twisted, delta_b)) return false;
    }
    return true;
}

HopfAlgebra assemble_hopf(AlgPtr alg, AlgPtr square, Morphism comul, Morphism counit,
                          std::optional<Morphism> antipode) {
    HopfAlgebra h;
    h.alg = std::move(alg);
    h.square = std::move(square);
    h.comul = std::move(comul);
    h.counit = std::move(counit);
    h.antipode = std::move(antipode);
    return h;
}

Connectivization connectivize(const HopfAlgebra& h) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    for (int d : A->degree)
        if (d < 0) throw input_error("connectivize requires a positive grading");

    // I0 = ker eps restricted to degree 0
    std::vector<Vec> i0;
    for (const Vec& v : augmentation_ideal_basis(h)) {
        auto dg = A->homogeneous_degree(v);
        if (dg && *dg == 0) i0.push_back(v);
    }
    std::vector<Vec> ideal = ideal_span(A, i0);
    Quotient q = quotient_by_ideal(A, ideal);
    AlgPtr K = q.algebra;

    // structure maps must descend; verify on the ideal basis
    AlgPtr ksquare = tensor_product(K, K);
    Morphism pp = tensor_morphism(q.projection, q.projection, h.square, ksquare);
    std::vector<CheckResult> fails;
    for (const Vec& j : ideal) {
        if (!vec_is_zero(f, pp.apply(h.comul.apply(j))))
            fails.push_back({"comul descends to the quotient", false, A->element_str(j)});
        if (!f.is_zero(h.eps(j)))
            fails.push_back({"counit descends to the quotient", false, A->element_str(j)});
        if (h.antipode) {
            Vec sj = h.antipode->apply(j);
            if (!vec_is_zero(f, q.projection.apply(sj)))
                fails.push_back(
                    {"antipode descends to the quotient", false, A->element_str(j)});
        }
        if (!fails.empty()) break;
    }
    if (!fails.empty())
        throw HopfError("connectivization: structure maps do not descend", fails);

    // section as a morphism
    Morphism sigma;
    sigma.src = K;
    sigma.dst = A;
    sigma.mat = Matrix::from_columns(A->field, q.section);

    HopfAlgebra kappa;
    kappa.alg = K;
    kappa.square = ksquare;
    kappa.comul = compose(pp, compose(h.comul, sigma));
    kappa.counit = compose(h.counit, sigma);
    if (h.antipode)
        kappa.antipode = compose(q.projection, compose(*h.antipode, sigma));
    kappa.comul.algebra_map = verify_algebra_map(kappa.comul);
    kappa.counit.algebra_map = verify_algebra_map(kappa.counit);

    std::vector<CheckResult> axioms = bialgebra_checks(kappa);
    std::vector<CheckResult> axfails;
    for (const auto& c : axioms)
        if (!c.ok) axfails.push_back(c);
    if (!axfails.empty())
        throw HopfError("connectivization: quotient is not a bialgebra", axfails);
    if (int(K->degree_indices(0).size()) != 1)
        throw verify_error("connectivization: degree-0 part is not one-dimensional");

    // cotensor check: fixed points of (id (x) pi) comul against a (x) 1
    AlgPtr mixed = tensor_product(A, K);
    Morphism idpi = tensor_morphism(identity_morphism(A), q.projection, h.square, mixed);
    Morphism rho = compose(idpi, h.comul);
    Matrix m(A->field, mixed->dim, A->dim);
    const TensorInfo& mti = *mixed->tensor_info;
    for (int b = 0; b < A->dim; ++b) {
        Vec r = rho.mat.column(b);
        // subtract b (x) 1_K
        for (int l = 0; l < K->dim; ++l) {
            if (f.is_zero(K->unit[l])) continue;
            int idx = mti.pair_to_index[size_t(b) * K->dim + l];
            if (idx >= 0) r[idx] = f.sub(r[idx], K->unit[l]);
        }
        for (int t = 0; t < mixed->dim; ++t) m.at(t, b) = r[t];
    }
    std::vector<Vec> fixed = kernel_basis(m);
    std::vector<int> zero_idx = A->degree_indices(0);
    bool cot_ok = int(fixed.size()) == int(zero_idx.size());
    if (cot_ok) {
        // every fixed vector must be supported in degree 0
        for (const Vec& v : fixed)
            for (int i = 0; i < A->dim; ++i)
                if (!f.is_zero(v[i]) && A->degree[i] != 0) cot_ok = false;
    }

    Connectivization out;
    out.kappa = kappa;
    out.projection = q.projection;
    out.cotensor_ok = cot_ok;
    out.cotensor_dim = int(fixed.size());
    return out;
}

std::vector<Vec> free_basis(const HopfAlgebra& h) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    std::vector<int> zero_idx;
    AlgPtr a0 = degree0_subalgebra(A, &zero_idx);
    if (decompose_local(a0).components.size() != 1)
        throw input_error("free_basis requires a gr-local algebra (A_0 local)");
    Connectivization c = connectivize(h);
    // section: basis monomials whose classes form a basis of kappa(A)
    std::vector<Vec> section;
    {
        std::vector<Vec> cols;
        for (int i = 0; i < A->dim; ++i) {
            Vec cls = c.projection.apply(A->basis_vec(i));
            std::vector<Vec> with = cols;
            with.push_back(cls);
            if (int(span_basis(A->field, with).size()) > int(cols.size())) {
                cols.push_back(cls);
                section.push_back(A->basis_vec(i));
            }
        }
        if (int(section.size()) != c.kappa.alg->dim)
            throw internal_error("free_basis: section reconstruction failed");
    }
    std::vector<Vec> columns;
    for (const Vec& rep : section)
        for (int j : zero_idx) columns.push_back(A->mul_vec(A->basis_vec(j), rep));
    if (int(columns.size()) != A->dim)
        throw verify_error("free_basis: dim kappa(A) * dim A_0 != dim A");
    Matrix m = Matrix::from_columns(A->field, columns);
    if (rank(m) != A->dim)
        throw internal_error("free_basis: multiplication map is not bijective");
    return section;
}

VarietyShape classify_variety(const HopfAlgebra& h) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    if (f.is_rational())
        throw input_error("classify_variety works over finite fields");
    if (!is_gr_local(A))
        throw input_error("classify_variety requires a gr-local coordinate ring");
    long p = f.characteristic();

    std::vector<Vec> ideal = augmentation_ideal_basis(h);
    std::vector<Vec> square_prods;
    for (size_t i = 0; i < ideal.size(); ++i)
        for (size_t j = 0; j < ideal.size(); ++j)
            square_prods.push_back(A->mul_vec(ideal[i], ideal[j]));
    std::vector<Vec> isq = span_basis(A->field, square_prods);

    std::vector<Vec> generators;
    for (int d = 0; d <= A->max_degree(); ++d) {
        std::vector<Vec> span;
        for (const Vec& v : isq) {
            auto dg = A->homogeneous_degree(v);
            if (dg && *dg == d) span.push_back(v);
        }
        for (const Vec& v : ideal) {
            auto dg = A->homogeneous_degree(v);
            if (!dg || *dg != d) continue;
            std::vector<Vec> with = span;
            with.push_back(v);
            if (int(span_basis(A->field, with).size()) > int(span_basis(A->field, span).size())) {
                span.push_back(v);
                generators.push_back(v);
            }
        }
    }

    VarietyShape shape;
    for (const Vec& g : generators) {
        int d = *A->homogeneous_degree(g);
        long height = 1;
        Vec pw = g;
        while (!vec_is_zero(f, pw)) {
            pw = A->mul_vec(pw, g);
            ++height;
            if (height > A->dim + 2)
                throw verify_error("classify_variety: generator is not nilpotent");
        }
        bool capped = A->truncation && long(d) * height > *A->truncation;
        if (p != 2 && (d & 1)) {
            if (height != 2)
                throw verify_error("classify_variety: odd generator of height != 2");
            shape.exterior_degrees.push_back(d);
        } else {
            if (!capped) {
                long hh = height;
                while (hh % p == 0) hh /= p;
                if (hh != 1)
                    throw verify_error(
                        "classify_variety: truncated generator height is not a power "
                        "of the characteristic");
            }
            shape.polynomial_generators.push_back({d, height, capped});
        }
    }

    // reconstruct the Hilbert series from the shape
    std::vector<long> series = {1};
    auto mul_series = [&](const std::vector<long>& factor) {
        std::vector<long> out(series.size() + factor.size() - 1, 0);
        for (size_t i = 0; i < series.size(); ++i)
            for (size_t j = 0; j < factor.size(); ++j) out[i + j] += series[i] * factor[j];
        if (A->truncation && int(out.size()) > *A->truncation + 1)
            out.resize(*A->truncation + 1);
        series = std::move(out);
    };
    for (const auto& g : shape.polynomial_generators) {
        std::vector<long> factor;
        for (long e = 0; e < g.height; ++e) {
            if (A->truncation && e * g.degree > *A->truncation) break;
            if (int(factor.size()) < e * g.degree + 1) factor.resize(e * g.degree + 1, 0);
            factor[e * g.degree] += 1;
        }
        mul_series(factor);
    }
    for (int d : shape.exterior_degrees) {
        std::vector<long> factor(d + 1, 0);
        factor[0] = 1;
        factor[d] += 1;
        mul_series(factor);
    }
    while (!series.empty() && series.back() == 0) series.pop_back();
    shape.hilbert = series;
    if (series != A->hilbert_series())
        throw verify_error("classify_variety: shape does not reproduce the Hilbert series");
    return shape;
}

}  // namespace grhopf

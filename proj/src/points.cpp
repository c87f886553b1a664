#include "grhopf/points.hpp"

#include <algorithm>

namespace grhopf {

namespace {

// all homogeneous elements of one degree, in lexicographic coefficient order
std::vector<Vec> homogeneous_elements(const AlgPtr& r, int degree, double* count_out) {
    const Field& f = *r->field;
    long q = f.order();
    std::vector<int> idx = r->degree_indices(degree);
    double count = 1;
    for (size_t i = 0; i < idx.size(); ++i) count *= double(q);
    if (count_out) {
        *count_out = count;
        return {};
    }
    std::vector<Vec> out;
    std::vector<long> odo(idx.size(), 0);
    while (true) {
        Vec v = r->zero_vec();
        for (size_t i = 0; i < idx.size(); ++i) v[idx[i]] = f.element_at(odo[i]);
        out.push_back(std::move(v));
        size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++odo[i] < q) break;
            odo[i] = 0;
        }
        if (i == idx.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return vec_less(f, a, b); });
    return out;
}

int find_point(const std::vector<Morphism>& points, const Matrix& mat) {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].mat.eq(mat)) return int(i);
    return -1;
}

}  // namespace

PointsGroup enumerate_points(const HopfAlgebra& h, const AlgPtr& r, long budget) {
    const Field& f = h.field();
    const AlgPtr& A = h.alg;
    if (!(A->field->spec() == r->field->spec()))
        throw input_error("points: test ring is over a different field");
    if (r->field->is_rational())
        throw input_error("points: enumeration needs a finite coefficient field");
    if (!A->pres) throw internal_error("points: coordinate ring has no presentation");
    if (!h.antipode)
        throw input_error("points: antipode required for inverses (synthesize first)");
    const Presentation& p = *A->pres;

    // budget: product of per-degree candidate counts before filtering
    double total = 1;
    for (const auto& g : p.generators) {
        double c;
        homogeneous_elements(r, g.degree, &c);
        total *= c;
        if (total > double(budget))
            throw budget_error("points: candidate budget exceeded (" +
                               std::to_string((long long)total) + " > " +
                               std::to_string(budget) + ")");
    }

    // per-generator candidates, prefiltered by that generator's own relation
    std::vector<std::vector<Vec>> cands(p.generators.size());
    for (size_t g = 0; g < p.generators.size(); ++g) {
        for (Vec& v : homogeneous_elements(r, p.generators[g].degree, nullptr)) {
            const auto& rel = p.relations[g];
            if (rel) {
                Vec lhs = r->pow_vec(v, rel->exponent);
                GenPoly rhs_uni = rel->rhs;
                // rhs is univariate in generator g: evaluate at v
                Vec rhs = r->zero_vec();
                for (const auto& t : rhs_uni)
                    rhs = vec_add(f, rhs,
                                  vec_scale(f, t.coeff, r->pow_vec(v, t.exps[g])));
                if (!vec_eq(f, lhs, rhs)) continue;
            }
            cands[g].push_back(std::move(v));
        }
        if (cands[g].empty())
            throw verify_error("points: no admissible image for generator " +
                               p.generators[g].name);
    }

    PointsGroup out;
    std::vector<size_t> odo(p.generators.size(), 0);
    while (true) {
        std::vector<Vec> images;
        for (size_t g = 0; g < p.generators.size(); ++g) images.push_back(cands[g][odo[g]]);
        if (auto m = try_make_morphism(A, r, images)) out.points.push_back(*m);
        // lexicographic: advance the last generator fastest
        size_t g = p.generators.size();
        bool done = true;
        while (g-- > 0) {
            if (++odo[g] < cands[g].size()) {
                std::fill(odo.begin() + g + 1, odo.end(), 0);
                done = false;
                break;
            }
            odo[g] = 0;
        }
        if (done) break;
    }

    // no point found twice
    for (size_t i = 0; i < out.points.size(); ++i)
        for (size_t j = i + 1; j < out.points.size(); ++j)
            if (out.points[i].mat.eq(out.points[j].mat))
                throw internal_error("points: duplicate point");

    // identity = eta_R . eps
    Matrix id_mat(r->field, r->dim, A->dim);
    for (int b = 0; b < A->dim; ++b) {
        FElem e = h.eps(A->basis_vec(b));
        for (int t = 0; t < r->dim; ++t) id_mat.at(t, b) = f.mul(e, r->unit[t]);
    }
    out.identity = find_point(out.points, id_mat);
    if (out.identity < 0)
        throw internal_error("points: unit-after-counit point not enumerated");

    int n = int(out.points.size());
    out.cayley.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Morphism conv = convolution(out.points[i], out.points[j], h);
            int k = find_point(out.points, conv.mat);
            if (k < 0)
                throw verify_error(
                    "points: convolution left the point set (invalid Hopf input)");
            out.cayley[i][j] = k;
        }
    out.inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Morphism inv = compose(out.points[i], *h.antipode);
        int k = find_point(out.points, inv.mat);
        if (k < 0)
            throw verify_error("points: antipode inverse left the point set");
        out.inverse[i] = k;
    }

    // group axioms on the table
    for (int i = 0; i < n; ++i) {
        if (out.cayley[out.identity][i] != i || out.cayley[i][out.identity] != i)
            throw verify_error("points: identity law fails on the table");
        if (out.cayley[i][out.inverse[i]] != out.identity ||
            out.cayley[out.inverse[i]][i] != out.identity)
            throw verify_error("points: inverse law fails on the table");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (out.cayley[out.cayley[i][j]][k] != out.cayley[i][out.cayley[j][k]])
                    throw verify_error("points: associativity fails on the table");
    return out;
}

std::vector<Vec> nil_set(const AlgPtr& r, long m, int degree, long budget) {
    if (r->field->is_rational())
        throw input_error("nil_set: enumeration needs a finite coefficient field");
    if (m <= 0) throw input_error("nil_set: the exponent must be positive");
    double count;
    homogeneous_elements(r, degree, &count);
    if (count > double(budget)) throw budget_error("nil_set: budget exceeded");
    std::vector<Vec> out;
    const Field& f = *r->field;
    for (Vec& v : homogeneous_elements(r, degree, nullptr))
        if (vec_is_zero(f, r->pow_vec(v, m))) out.push_back(std::move(v));
    return out;
}

std::vector<int> element_orders(const PointsGroup& g) {
    std::vector<int> orders;
    int n = int(g.points.size());
    for (int i = 0; i < n; ++i) {
        int cur = i;
        int ord = 1;
        while (cur != g.identity) {
            cur = g.cayley[cur][i];
            ++ord;
            if (ord > n + 1) throw internal_error("element order exceeds group size");
        }
        orders.push_back(ord);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace grhopf

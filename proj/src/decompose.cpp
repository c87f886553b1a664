#include "grhopf/decompose.hpp"

#include <algorithm>
#include <map>

namespace grhopf {

namespace {

// --- rational polynomial helpers (coefficient index = exponent)

using QPoly = std::vector<Rational>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// divide a by b, returning (quotient, remainder)
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qtrim(a);
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    return {q, a};
}

Rational qeval(const QPoly& f, const Rational& x) {
    Rational r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

// Bezout: u*a + v*b = gcd (gcd normalized monic)
void qbezout(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v, QPoly& g) {
    QPoly r0 = a, r1 = b, s0 = {Rational(1)}, s1 = {}, t0 = {}, t1 = {Rational(1)};
    qtrim(r0);
    qtrim(r1);
    while (!r1.empty()) {
        auto [q, r2] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational lead = r0.empty() ? Rational(1) : r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
    g = r0;
    u = s0;
    v = t0;
}

// small divisors of |n| by trial division; empty when n is too large to scan
std::vector<BigInt> small_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    if (n == 0) return divs;
    if (n > BigInt("1000000000000")) return divs;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            divs.push_back(n / d);
            if (divs.size() > 1024) return divs;
        }
    }
    return divs;
}

// distinct rational roots of a rational polynomial, by the integer
// root-bound candidates; may miss roots when the cleared coefficients are
// huge (scan gives up), which only coarsens a char-0 splitting
std::vector<Rational> rational_roots(const QPoly& f) {
    std::vector<Rational> roots;
    QPoly g = f;
    qtrim(g);
    if (g.size() <= 1) return roots;
    if (g[0] == 0) roots.push_back(Rational(0));
    // clear denominators
    BigInt lcm = 1;
    for (const auto& c : g) {
        BigInt den = boost::multiprecision::denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<BigInt> zc;
    for (const auto& c : g) zc.push_back(BigInt(c * lcm));
    size_t lo = 0;
    while (lo < zc.size() && zc[lo] == 0) ++lo;
    if (lo >= zc.size()) return roots;
    auto ps = small_divisors(zc[lo]);
    auto qs = small_divisors(zc.back());
    for (const auto& pn : ps)
        for (const auto& qn : qs)
            for (int sgn : {1, -1}) {
                Rational cand(pn * sgn, qn);
                if (qeval(g, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// --- characteristic p helpers

// kernel of the GF(p)-linear map x -> x^(p^s) on the whole algebra
std::vector<Vec> frobenius_kernel(const GradedAlgebra& a, int s) {
    const Field& f = *a.field;
    long p = f.characteristic();
    int n = f.extension_degree();
    int d = a.dim;
    auto fp = Field::gf(p);
    Matrix m(fp, d * n, d * n);
    FElem beta = n > 1 ? f.from_coeffs({0, 1}) : f.one();
    for (int i = 0; i < d; ++i) {
        FElem bt = f.one();
        for (int t = 0; t < n; ++t) {
            Vec x = vec_scale(f, bt, a.basis_vec(i));
            Vec y = a.frobenius_iterate(x, s);
            for (int j = 0; j < d; ++j)
                for (int u = 0; u < n; ++u)
                    m.at(j * n + u, i * n + t) = fp->from_int(n > 1 ? y[j].c[u] : y[j].v);
            bt = f.mul(bt, beta);
        }
    }
    std::vector<Vec> out;
    for (const Vec& kv : kernel_basis(m)) {
        Vec v = vec_zero(f, d);
        for (int i = 0; i < d; ++i) {
            std::vector<long> coeffs(n, 0);
            for (int t = 0; t < n; ++t) coeffs[t] = kv[i * n + t].v;
            v[i] = n > 1 ? f.from_coeffs(coeffs) : f.from_int(coeffs[0]);
        }
        out.push_back(std::move(v));
    }
    return span_basis(a.field, out);
}

int frobenius_steps(const GradedAlgebra& a) {
    long p = a.field->characteristic();
    int s = 0;
    long pw = 1;
    while (pw < a.dim) {
        pw *= p;
        ++s;
    }
    return std::max(s, 1);
}

// --- splitting machinery

struct SplitPart {
    std::vector<Vec> basis;  // subspace basis, ambient coordinates
    Vec idempotent;          // unit of the part
};

// primitive idempotents of a reduced commutative algebra over GF(q):
// restrict to the Frobenius-fixed subalgebra B = {x : x^q = x} (a split
// etale algebra) and refine into joint eigenlines of its multiplications
std::vector<Vec> split_etale_finite(const AlgPtr& s_bar) {
    const Field& f = *s_bar->field;
    int d = s_bar->dim;
    // B = ker(Frob_q - id), GF(q)-linear
    Matrix m(s_bar->field, d, d);
    for (int i = 0; i < d; ++i) {
        Vec y = s_bar->frobenius_iterate(s_bar->basis_vec(i), f.extension_degree());
        for (int j = 0; j < d; ++j)
            m.at(j, i) = (i == j) ? f.sub(y[j], f.one()) : y[j];
    }
    std::vector<Vec> bbasis = kernel_basis(m);
    std::vector<std::vector<Vec>> comps = {bbasis};
    long q = f.order();
    for (const Vec& beta : bbasis) {
        std::vector<std::vector<Vec>> next;
        for (auto& w : comps) {
            if (w.size() <= 1) {
                next.push_back(w);
                continue;
            }
            // action of beta on the subspace w
            SpanSolver solver(s_bar->field, w);
            int k = int(w.size());
            Matrix act(s_bar->field, k, k);
            for (int j = 0; j < k; ++j) {
                Vec prod = s_bar->mul_vec(beta, w[j]);
                auto coords = solver.express(prod);
                if (!coords) throw internal_error("split: subspace not invariant");
                for (int i = 0; i < k; ++i) act.at(i, j) = (*coords)[i];
            }
            size_t found = 0;
            for (long lam = 0; lam < q && int(found) < k; ++lam) {
                Matrix shifted = act;
                FElem l = f.element_at(lam);
                for (int i = 0; i < k; ++i) shifted.at(i, i) = f.sub(act.at(i, i), l);
                std::vector<Vec> kern = kernel_basis(shifted);
                if (kern.empty()) continue;
                std::vector<Vec> sub;
                for (const Vec& kv : kern) {
                    Vec v = vec_zero(f, d);
                    for (int i = 0; i < k; ++i)
                        v = vec_add(f, v, vec_scale(f, kv[i], w[i]));
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (int(found) != k) throw internal_error("split: eigenvalues not in base field");
        }
        comps = std::move(next);
    }
    std::vector<Vec> idems;
    for (const auto& w : comps) {
        if (w.size() != 1) throw internal_error("split: refinement left a fat component");
        const Vec& v = w[0];
        Vec vv = s_bar->mul_vec(v, v);
        SpanSolver line(s_bar->field, {v});
        auto c = line.express(vv);
        if (!c || f.is_zero((*c)[0]))
            throw internal_error("split: eigenline is not an idempotent line");
        idems.push_back(vec_scale(f, f.inv((*c)[0]), v));
    }
    return idems;
}

// minimal polynomial of z inside the unital subalgebra (span, unit)
QPoly min_poly_rational(const AlgPtr& amb, const std::vector<Vec>& span, const Vec& unit,
                        const Vec& z) {
    const Field& f = *amb->field;
    std::vector<Vec> powers = {unit};
    Vec cur = unit;
    while (true) {
        cur = amb->mul_vec(cur, z);
        Matrix pm = Matrix::from_columns(amb->field, powers);
        Matrix b = Matrix::from_columns(amb->field, {cur});
        auto sol = solve_linear_system(pm, b);
        if (sol.solution) {
            QPoly mu(powers.size() + 1, Rational(0));
            mu[powers.size()] = 1;
            for (size_t i = 0; i < powers.size(); ++i) mu[i] = -sol.solution->at(int(i), 0).q;
            return mu;
        }
        powers.push_back(cur);
        if (powers.size() > span.size() + 1)
            throw internal_error("min_poly: no dependence found");
    }
}

Vec eval_qpoly_at(const AlgPtr& amb, const QPoly& f, const Vec& z, const Vec& unit) {
    const Field& fl = *amb->field;
    Vec acc = vec_zero(fl, amb->dim);
    for (size_t i = f.size(); i-- > 0;) {
        acc = amb->mul_vec(acc, z);
        acc = vec_add(fl, acc, vec_scale(fl, fl.from_rational(f[i]), unit));
    }
    return acc;
}

// split a commutative semisimple QQ-algebra by rational eigenvalues of its
// elements; complete whenever every needed split is witnessed by a rational
// root of some basis element's (or pairwise product's) minimal polynomial
std::vector<SplitPart> split_semisimple_rational(const AlgPtr& s_bar) {
    const Field& f = *s_bar->field;
    std::vector<SplitPart> parts;
    std::vector<Vec> whole;
    for (int i = 0; i < s_bar->dim; ++i) whole.push_back(s_bar->basis_vec(i));
    parts.push_back({whole, s_bar->one_vec()});
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<SplitPart> next;
        for (auto& part : parts) {
            if (part.basis.size() <= 1) {
                next.push_back(part);
                continue;
            }
            // candidate elements: the part's basis and their pairwise products
            std::vector<Vec> cands = part.basis;
            for (size_t i = 0; i < part.basis.size(); ++i)
                for (size_t j = i; j < part.basis.size(); ++j)
                    cands.push_back(s_bar->mul_vec(part.basis[i], part.basis[j]));
            bool split_done = false;
            for (const Vec& z : cands) {
                QPoly mu = min_poly_rational(s_bar, part.basis, part.idempotent, z);
                if (mu.size() <= 2) continue;  // scalar in this part
                for (const Rational& r : rational_roots(mu)) {
                    // mu = (t - r)^m * h with h(r) != 0
                    QPoly lin = {-r, Rational(1)};
                    QPoly h = mu;
                    QPoly pw = {Rational(1)};
                    while (true) {
                        auto [q, rem] = qdivmod(h, lin);
                        if (!rem.empty()) break;
                        h = q;
                        pw = qmul(pw, lin);
                    }
                    if (h.size() <= 1) continue;  // z - r nilpotent in the part: no split
                    QPoly u, v, g;
                    qbezout(pw, h, u, v, g);
                    if (g.size() != 1) continue;
                    // e1 = (v*h)(z), e2 = (u*pw)(z); complementary idempotents
                    Vec e1 = eval_qpoly_at(s_bar, qmul(v, h), z, part.idempotent);
                    e1 = s_bar->mul_vec(e1, part.idempotent);
                    Vec e2 = vec_sub(f, part.idempotent, e1);
                    if (vec_is_zero(f, e1) || vec_is_zero(f, e2)) continue;
                    for (const Vec& e : {e1, e2}) {
                        SplitPart sp;
                        sp.idempotent = e;
                        std::vector<Vec> gens;
                        for (const Vec& w : part.basis)
                            gens.push_back(s_bar->mul_vec(w, e));
                        sp.basis = span_basis(s_bar->field, gens);
                        next.push_back(std::move(sp));
                    }
                    split_done = true;
                    progress = true;
                    break;
                }
                if (split_done) break;
            }
            if (!split_done) next.push_back(part);
        }
        parts = std::move(next);
    }
    return parts;
}

// try to certify a char-0 component as a field: find a primitive element and
// check its minimal polynomial is irreducible (degree <= 3 by roots, else by
// reduction mod small primes)
bool certify_field_rational(const AlgPtr& s_bar, const SplitPart& part) {
    int d = int(part.basis.size());
    if (d == 1) return true;
    std::vector<Vec> cands = part.basis;
    const Field& f = *s_bar->field;
    for (size_t i = 0; i + 1 < part.basis.size(); ++i)
        for (long m = 1; m <= 3; ++m)
            cands.push_back(vec_add(f, part.basis[i],
                                    vec_scale(f, f.from_int(m), part.basis[i + 1])));
    for (const Vec& z : cands) {
        QPoly mu = min_poly_rational(s_bar, part.basis, part.idempotent, z);
        if (int(mu.size()) - 1 != d) continue;
        if (!rational_roots(mu).empty()) return false;  // splits further, not a field
        if (d <= 3) return true;  // no rational roots and degree <= 3: irreducible
        // clear denominators and test irreducibility mod a few primes
        BigInt lcm = 1;
        for (const auto& c : mu) {
            BigInt den = boost::multiprecision::denominator(c);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            if (BigInt(mu.back() * lcm) % p == 0) continue;
            std::vector<long> fp;
            for (const auto& c : mu) {
                BigInt ci = BigInt(c * lcm) % p;
                fp.push_back(long(ci < 0 ? ci + p : ci));
            }
            long li = fp.back();
            long inv = 1;
            for (long t = 1; t < p; ++t)
                if ((li * t) % p == 1) inv = t;
            for (auto& c : fp) c = (c * inv) % p;
            // the Field constructor validates irreducibility of the modulus;
            // irreducible mod p implies irreducible over QQ
            try {
                FieldSpec fs;
                fs.characteristic = p;
                fs.extension_degree = d;
                fs.modulus = fp;
                Field probe(fs);
                return true;
            } catch (const Error&) {
                continue;
            }
        }
        return false;
    }
    return false;
}

Vec newton_lift_idempotent(const AlgPtr& a, Vec e) {
    const Field& f = *a->field;
    bool char2 = f.characteristic() == 2;
    int bound = 2;
    int d = a->dim;
    while ((1 << bound) < 2 * d) ++bound;
    for (int it = 0; it <= bound + 1; ++it) {
        Vec e2 = a->mul_vec(e, e);
        if (vec_eq(f, e2, e)) return e;
        if (char2) {
            e = e2;
        } else {
            // e <- 3e^2 - 2e^3
            Vec e3 = a->mul_vec(e2, e);
            e = vec_sub(f, vec_scale(f, f.from_int(3), e2), vec_scale(f, f.from_int(2), e3));
        }
    }
    throw internal_error("idempotent lifting did not converge");
}

}  // namespace

AlgPtr degree0_subalgebra(const AlgPtr& a, std::vector<int>* indices) {
    const Field& f = *a->field;
    std::vector<int> idx = a->degree_indices(0);
    std::vector<int> back(a->dim, -1);
    for (size_t i = 0; i < idx.size(); ++i) back[idx[i]] = int(i);
    auto sub = std::make_shared<GradedAlgebra>();
    sub->field = a->field;
    sub->dim = int(idx.size());
    sub->degree.assign(idx.size(), 0);
    for (int i : idx) sub->labels.push_back(a->labels[i]);
    sub->unit = vec_zero(f, sub->dim);
    for (size_t i = 0; i < idx.size(); ++i) {
        if (!f.is_zero(a->unit[idx[i]])) sub->unit[i] = a->unit[idx[i]];
    }
    sub->mult.resize(size_t(sub->dim) * sub->dim);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            LinComb lc;
            for (const auto& t : a->table(idx[i], idx[j])) {
                if (back[t.idx] < 0)
                    throw internal_error("degree-0 part is not multiplicatively closed");
                lc.push_back({back[t.idx], t.coeff});
            }
            std::sort(lc.begin(), lc.end(),
                      [](const LinTerm& x, const LinTerm& y) { return x.idx < y.idx; });
            sub->mult[i * idx.size() + j] = std::move(lc);
        }
    if (indices) *indices = idx;
    return sub;
}

std::vector<Vec> nilradical_basis(const AlgPtr& a) {
    const Field& f = *a->field;
    if (!f.is_rational()) return frobenius_kernel(*a, frobenius_steps(*a));
    // char 0: the positive part is nilpotent, and on the degree-0 part the
    // radical of the trace form (x,y) -> tr L_{xy} is the nilradical
    std::vector<int> idx;
    AlgPtr a0 = degree0_subalgebra(a, &idx);
    int d = a0->dim;
    Matrix gram(a0->field, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec v = a0->mul_vec(a0->basis_vec(i), a0->basis_vec(j));
            FElem tr = f.zero();
            for (int k = 0; k < d; ++k) {
                Vec w = a0->mul_vec(v, a0->basis_vec(k));
                tr = f.add(tr, w[k]);
            }
            gram.at(i, j) = tr;
        }
    std::vector<Vec> out;
    for (const Vec& kv : kernel_basis(gram)) {
        Vec v = a->zero_vec();
        for (int i = 0; i < d; ++i) v[idx[i]] = kv[i];
        out.push_back(std::move(v));
    }
    for (int i = 0; i < a->dim; ++i)
        if (a->degree[i] != 0) out.push_back(a->basis_vec(i));
    return span_basis(a->field, out);
}

std::vector<Vec> ideal_span(const AlgPtr& a, const std::vector<Vec>& gens) {
    std::vector<Vec> prods;
    for (const Vec& g : gens) {
        prods.push_back(g);
        for (int i = 0; i < a->dim; ++i) prods.push_back(a->mul_vec(a->basis_vec(i), g));
    }
    return span_basis(a->field, prods);
}

Quotient quotient_by_ideal(const AlgPtr& a, const std::vector<Vec>& ideal) {
    const Field& f = *a->field;
    Quotient q;
    // greedy representatives: basis vectors independent of the ideal span
    std::vector<Vec> cols = ideal;
    std::vector<int> reps;
    for (int i = 0; i < a->dim; ++i) {
        std::vector<Vec> with = cols;
        with.push_back(a->basis_vec(i));
        if (int(span_basis(a->field, with).size()) > int(span_basis(a->field, cols).size())) {
            cols.push_back(a->basis_vec(i));
            reps.push_back(i);
        }
    }
    SpanSolver solver(a->field, cols);
    int nq = int(reps.size());
    int ni = int(ideal.size());
    auto project = [&](const Vec& v) {
        auto coords = solver.express(v);
        if (!coords) throw internal_error("quotient projection failed");
        Vec out(nq);
        for (int i = 0; i < nq; ++i) out[i] = (*coords)[ni + i];
        return out;
    };
    auto alg = std::make_shared<GradedAlgebra>();
    alg->field = a->field;
    alg->dim = nq;
    for (int r : reps) {
        alg->degree.push_back(a->degree[r]);
        alg->labels.push_back("[" + a->labels[r] + "]");
    }
    alg->truncation = a->truncation;
    alg->unit = project(a->one_vec());
    alg->mult.resize(size_t(nq) * nq);
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) {
            Vec prod = project(a->mul_vec(a->basis_vec(reps[i]), a->basis_vec(reps[j])));
            alg->mult[size_t(i) * nq + j] = lincomb_from_vec(f, prod);
        }
    Morphism proj;
    proj.src = a;
    proj.dst = alg;
    proj.mat = Matrix(a->field, nq, a->dim);
    for (int i = 0; i < a->dim; ++i) {
        Vec pi = project(a->basis_vec(i));
        for (int r = 0; r < nq; ++r) proj.mat.at(r, i) = pi[r];
    }
    q.algebra = alg;
    q.projection = proj;
    for (int r : reps) q.section.push_back(a->basis_vec(r));
    q.section_indices = reps;
    return q;
}

Decomposition decompose_local(const AlgPtr& a, const Morphism* counit) {
    const Field& f = *a->field;
    if (!a->is_graded_commutative())
        throw input_error("decompose_local requires a graded-commutative algebra");
    std::vector<int> zero_idx;
    AlgPtr a0 = degree0_subalgebra(a, &zero_idx);

    // nilradical of A_0 and the reduced quotient
    std::vector<Vec> n0 = nilradical_basis(a0);
    Quotient sq = quotient_by_ideal(a0, n0);
    AlgPtr s_bar = sq.algebra;

    // primitive idempotents of the reduced degree-0 part
    std::vector<Vec> idems_sbar;
    std::vector<int> residue_dims;
    std::vector<bool> certified;
    if (f.is_rational()) {
        auto parts = split_semisimple_rational(s_bar);
        for (const auto& part : parts) {
            idems_sbar.push_back(part.idempotent);
            residue_dims.push_back(int(part.basis.size()));
            certified.push_back(certify_field_rational(s_bar, part));
        }
    } else {
        idems_sbar = split_etale_finite(s_bar);
        for (const Vec& e : idems_sbar) {
            std::vector<Vec> gens;
            for (int i = 0; i < s_bar->dim; ++i)
                gens.push_back(s_bar->mul_vec(e, s_bar->basis_vec(i)));
            residue_dims.push_back(int(span_basis(s_bar->field, gens).size()));
            certified.push_back(true);
        }
    }

    // pull representatives back to A_0 and lift along the nilradical
    std::vector<Vec> idems_a;
    for (const Vec& es : idems_sbar) {
        Vec rep0 = vec_zero(f, a0->dim);
        for (int i = 0; i < s_bar->dim; ++i)
            rep0 = vec_add(f, rep0, vec_scale(f, es[i], sq.section[i]));
        Vec lifted0 = newton_lift_idempotent(a0, rep0);
        Vec in_a = vec_zero(f, a->dim);
        for (size_t i = 0; i < zero_idx.size(); ++i) in_a[zero_idx[i]] = lifted0[i];
        idems_a.push_back(std::move(in_a));
    }

    // deterministic order, keeping the residue data aligned
    std::vector<int> order(idems_a.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return vec_less(f, idems_a[x], idems_a[y]);
    });

    Decomposition dec;
    Vec total = a->zero_vec();
    for (int oi : order) {
        const Vec& e = idems_a[oi];
        total = vec_add(f, total, e);
        // orthogonality against the previously accepted family
        for (const Vec& prev : dec.idempotents)
            if (!vec_is_zero(f, a->mul_vec(prev, e)))
                throw internal_error("lifted idempotents are not orthogonal");
        if (!vec_eq(f, a->mul_vec(e, e), e))
            throw internal_error("lifted element is not idempotent");
        if (auto d0 = a->homogeneous_degree(e); !d0 || *d0 != 0)
            throw internal_error("idempotent is not homogeneous of degree 0");
        dec.idempotents.push_back(e);

        // component A*e with its own homogeneous basis, e first
        std::vector<Vec> comp_basis = {e};
        for (int i = 0; i < a->dim; ++i) {
            Vec cand = a->mul_vec(a->basis_vec(i), e);
            std::vector<Vec> with = comp_basis;
            with.push_back(cand);
            if (int(span_basis(a->field, with).size()) > int(comp_basis.size()))
                comp_basis.push_back(std::move(cand));
        }
        SpanSolver solver(a->field, comp_basis);
        auto comp = std::make_shared<GradedAlgebra>();
        comp->field = a->field;
        comp->dim = int(comp_basis.size());
        for (const Vec& v : comp_basis) {
            auto dg = a->homogeneous_degree(v);
            if (!dg) throw internal_error("component basis element is not homogeneous");
            comp->degree.push_back(*dg);
            comp->labels.push_back(a->element_str(v));
        }
        comp->truncation = a->truncation;
        comp->unit = vec_zero(f, comp->dim);
        comp->unit[0] = f.one();
        comp->mult.resize(size_t(comp->dim) * comp->dim);
        for (int i = 0; i < comp->dim; ++i)
            for (int j = 0; j < comp->dim; ++j) {
                Vec prod = a->mul_vec(comp_basis[i], comp_basis[j]);
                auto coords = solver.express(prod);
                if (!coords) throw internal_error("component is not multiplicatively closed");
                comp->mult[size_t(i) * comp->dim + j] = lincomb_from_vec(f, *coords);
            }
        Morphism proj;
        proj.src = a;
        proj.dst = comp;
        proj.mat = Matrix(a->field, comp->dim, a->dim);
        for (int i = 0; i < a->dim; ++i) {
            Vec pe = a->mul_vec(a->basis_vec(i), e);
            auto coords = solver.express(pe);
            if (!coords) throw internal_error("projection image escapes the component");
            for (int r = 0; r < comp->dim; ++r) proj.mat.at(r, i) = (*coords)[r];
        }
        proj.algebra_map = true;
        dec.components.push_back(comp);
        dec.projections.push_back(std::move(proj));
        dec.component_bases.push_back(comp_basis);

        ResidueFieldInfo rf;
        rf.base = f.spec();
        rf.degree_over_base = residue_dims[oi];
        rf.certified_field = certified[oi];
        if (!f.is_rational()) {
            FieldSpec ext;
            ext.characteristic = f.characteristic();
            ext.extension_degree = f.extension_degree() * residue_dims[oi];
            rf.as_field_spec = ext;
        }
        dec.residue_fields.push_back(rf);
    }
    if (!vec_eq(f, total, a->one_vec()))
        throw internal_error("idempotents do not sum to 1");
    long total_dim = 0;
    for (const auto& c : dec.components) total_dim += c->dim;
    if (total_dim != a->dim)
        throw internal_error("component dimensions do not sum to dim A");

    if (counit) {
        int found = -1;
        for (size_t i = 0; i < dec.idempotents.size(); ++i) {
            Vec v = counit->apply(dec.idempotents[i]);
            if (f.is_one(v[0])) {
                if (found >= 0) throw internal_error("two components carry the counit");
                found = int(i);
            } else if (!f.is_zero(v[0])) {
                throw internal_error("counit of an idempotent is neither 0 nor 1");
            }
        }
        if (found < 0) throw internal_error("no component carries the counit");
        dec.counit_component = found;
    }
    return dec;
}

bool is_separable(const AlgPtr& a) {
    for (int d : a->degree)
        if (d != 0) return false;
    return nilradical_basis(a).empty();
}

bool is_gr_local(const AlgPtr& a) {
    AlgPtr a0 = degree0_subalgebra(a);
    return decompose_local(a0).components.size() == 1;
}

}  // namespace grhopf

#include "grhopf/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace grhopf {

int Presentation::gen_index(const std::string& gname) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == gname) return int(i);
    return -1;
}

// --- lincomb helpers

LinComb lincomb_add(const Field& f, const LinComb& a, const LinComb& b) {
    LinComb r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].idx < b[j].idx) {
            r.push_back(a[i++]);
        } else if (a[i].idx > b[j].idx) {
            r.push_back(b[j++]);
        } else {
            FElem c = f.add(a[i].coeff, b[j].coeff);
            if (!f.is_zero(c)) r.push_back({a[i].idx, c});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

LinComb lincomb_scale(const Field& f, const FElem& c, const LinComb& a) {
    if (f.is_zero(c)) return {};
    LinComb r;
    r.reserve(a.size());
    for (const auto& t : a) r.push_back({t.idx, f.mul(c, t.coeff)});
    return r;
}

LinComb lincomb_from_vec(const Field& f, const Vec& v) {
    LinComb r;
    for (int i = 0; i < int(v.size()); ++i)
        if (!f.is_zero(v[i])) r.push_back({i, v[i]});
    return r;
}

Vec vec_from_lincomb(const Field& f, int dim, const LinComb& l) {
    Vec v = vec_zero(f, dim);
    for (const auto& t : l) v[t.idx] = t.coeff;
    return v;
}

// --- GradedAlgebra element operations

Vec GradedAlgebra::basis_vec(int i) const {
    Vec v = zero_vec();
    v[i] = field->one();
    return v;
}

Vec GradedAlgebra::mul_vec(const Vec& a, const Vec& b) const {
    const Field& f = *field;
    LinComb acc;
    for (int i = 0; i < dim; ++i) {
        if (f.is_zero(a[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (f.is_zero(b[j])) continue;
            FElem c = f.mul(a[i], b[j]);
            acc = lincomb_add(f, acc, lincomb_scale(f, c, table(i, j)));
        }
    }
    return vec_from_lincomb(f, dim, acc);
}

Vec GradedAlgebra::pow_vec(const Vec& a, long e) const {
    if (e < 0) throw internal_error("negative algebra power");
    Vec r = one_vec();
    Vec base = a;
    while (e > 0) {
        if (e & 1) r = mul_vec(r, base);
        e >>= 1;
        if (e > 0) base = mul_vec(base, base);
    }
    return r;
}

Vec GradedAlgebra::frobenius_iterate(const Vec& a, int m) const {
    if (field->is_rational())
        throw Error(ErrorKind::input,
                    "frobenius_iterate is unsupported in characteristic 0");
    return frobenius_power(a, field->characteristic(), m,
                           [this](const Vec& x, const Vec& y) { return mul_vec(x, y); });
}

std::optional<int> GradedAlgebra::homogeneous_degree(const Vec& v) const {
    const Field& f = *field;
    std::optional<int> d;
    for (int i = 0; i < dim; ++i) {
        if (f.is_zero(v[i])) continue;
        if (!d) {
            d = degree[i];
        } else if (*d != degree[i]) {
            return std::nullopt;
        }
    }
    return d;  // nullopt for the zero vector
}

bool GradedAlgebra::is_homogeneous(const Vec& v) const {
    return vec_is_zero(*field, v) || homogeneous_degree(v).has_value();
}

std::vector<long> GradedAlgebra::hilbert_series() const {
    std::vector<long> h(size_t(max_degree()) + 1, 0);
    for (int i = 0; i < dim; ++i) h[degree[i]]++;
    return h;
}

int GradedAlgebra::max_degree() const {
    int m = 0;
    for (int d : degree) m = std::max(m, d);
    return m;
}

std::vector<int> GradedAlgebra::degree_indices(int d) const {
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
        if (degree[i] == d) out.push_back(i);
    return out;
}

bool GradedAlgebra::is_graded_commutative() const {
    const Field& f = *field;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            LinComb rhs = table(j, i);
            if ((degree[i] & 1) && (degree[j] & 1)) rhs = lincomb_scale(f, f.from_int(-1), rhs);
            const LinComb& lhs = table(i, j);
            if (lhs.size() != rhs.size()) return false;
            for (size_t t = 0; t < lhs.size(); ++t)
                if (lhs[t].idx != rhs[t].idx || !f.eq(lhs[t].coeff, rhs[t].coeff))
                    return false;
        }
    return true;
}

bool GradedAlgebra::is_commutative() const {
    const Field& f = *field;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const LinComb& a = table(i, j);
            const LinComb& b = table(j, i);
            if (a.size() != b.size()) return false;
            for (size_t t = 0; t < a.size(); ++t)
                if (a[t].idx != b[t].idx || !f.eq(a[t].coeff, b[t].coeff)) return false;
        }
    return true;
}

bool GradedAlgebra::check_associative() const {
    const Field& f = *field;
    auto mul_lincomb_basis = [&](const LinComb& l, int k) {
        LinComb acc;
        for (const auto& t : l)
            acc = lincomb_add(f, acc, lincomb_scale(f, t.coeff, table(t.idx, k)));
        return acc;
    };
    auto mul_basis_lincomb = [&](int k, const LinComb& l) {
        LinComb acc;
        for (const auto& t : l)
            acc = lincomb_add(f, acc, lincomb_scale(f, t.coeff, table(k, t.idx)));
        return acc;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const LinComb& ij = table(i, j);
            for (int k = 0; k < dim; ++k) {
                LinComb left = mul_lincomb_basis(ij, k);
                LinComb right = mul_basis_lincomb(i, table(j, k));
                if (left.size() != right.size()) return false;
                for (size_t t = 0; t < left.size(); ++t)
                    if (left[t].idx != right[t].idx || !f.eq(left[t].coeff, right[t].coeff))
                        return false;
            }
        }
    return true;
}

std::string GradedAlgebra::element_str(const Vec& v) const {
    const Field& f = *field;
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < dim; ++i) {
        if (f.is_zero(v[i])) continue;
        if (any) os << " + ";
        bool unit_coeff = f.is_one(v[i]);
        bool unit_label = labels[i] == "1";
        if (!unit_coeff || unit_label) {
            std::string cs = f.str(v[i]);
            if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
            os << cs;
            if (!unit_label) os << " ";
        }
        if (!unit_label) os << labels[i];
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

// --- build_algebra

namespace {

std::string monomial_label(const Presentation& p, const std::vector<int>& exps) {
    std::ostringstream os;
    bool any = false;
    for (size_t g = 0; g < exps.size(); ++g) {
        if (exps[g] == 0) continue;
        if (any) os << " ";
        os << p.generators[g].name;
        if (exps[g] > 1) os << "^" << exps[g];
        any = true;
    }
    if (!any) return "1";
    return os.str();
}

long monomial_degree(const Presentation& p, const std::vector<int>& exps) {
    long d = 0;
    for (size_t g = 0; g < exps.size(); ++g)
        d += long(exps[g]) * p.generators[g].degree;
    return d;
}

struct Builder {
    const Presentation& p;
    const Field& f;
    std::vector<int> caps;          // exponent bound per generator (exclusive)
    std::vector<Relation> rels;     // normalized, one per generator (rhs may be empty)
    std::vector<bool> has_rel;      // generator has a genuine power relation
    std::map<std::vector<int>, int> index_of;
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, LinComb> normal_cache;

    explicit Builder(const Presentation& pr) : p(pr), f(*pr.field) {}

    void normalize_relations() {
        long chr = f.spec().characteristic;
        int n = int(p.generators.size());
        caps.assign(n, 0);
        rels.resize(n);
        has_rel.assign(n, false);
        for (int g = 0; g < n; ++g) {
            const auto& rel = p.relations[g];
            int deg = p.generators[g].degree;
            bool odd = (deg % 2) != 0;
            if (rel) {
                if (rel->exponent < 2)
                    throw input_error("relation exponent must be >= 2 for generator " +
                                      p.generators[g].name);
                if (chr != 2 && odd) {
                    bool rhs_zero = rel->rhs.empty();
                    if (rel->exponent != 2 || !rhs_zero)
                        throw input_error(
                            "odd-degree generator " + p.generators[g].name +
                            " must satisfy x^2 = 0 away from characteristic 2");
                }
                // degree homogeneity: every rhs monomial has degree n*|x|
                for (const auto& t : rel->rhs) {
                    for (size_t h = 0; h < t.exps.size(); ++h)
                        if (t.exps[h] != 0 && int(h) != g)
                            throw input_error("relation for " + p.generators[g].name +
                                              " must be univariate");
                    long td = monomial_degree(p, t.exps);
                    if (td != long(rel->exponent) * deg)
                        throw input_error("inhomogeneous relation for generator " +
                                          p.generators[g].name);
                    if (t.exps[g] >= rel->exponent)
                        throw input_error("relation right side must have exponent < " +
                                          std::to_string(rel->exponent));
                }
                rels[g] = *rel;
                has_rel[g] = true;
                caps[g] = rel->exponent;
            } else if (chr != 2 && odd) {
                // implicit x^2 = 0
                rels[g] = Relation{g, 2, {}};
                has_rel[g] = true;
                caps[g] = 2;
            } else if (p.truncation) {
                if (deg <= 0)
                    throw input_error("generator " + p.generators[g].name +
                                      " of degree 0 needs a relation (truncation cannot "
                                      "bound it)");
                caps[g] = *p.truncation / deg + 1;
            } else {
                throw input_error("generator " + p.generators[g].name +
                                  " has no relation and no truncation degree is given");
            }
        }
    }

    void enumerate_basis() {
        int n = int(p.generators.size());
        std::vector<int> e(n, 0);
        // lexicographic: first generator most significant
        while (true) {
            long d = monomial_degree(p, e);
            if (!p.truncation || d <= *p.truncation) {
                index_of[e] = int(basis.size());
                basis.push_back(e);
            }
            int i = n - 1;
            for (; i >= 0; --i) {
                if (e[i] + 1 < caps[i]) {
                    ++e[i];
                    std::fill(e.begin() + i + 1, e.end(), 0);
                    break;
                }
            }
            if (i < 0) break;
        }
    }

    LinComb normal_form(const std::vector<int>& exps) {
        auto it = normal_cache.find(exps);
        if (it != normal_cache.end()) return it->second;
        LinComb result;
        long d = monomial_degree(p, exps);
        if (p.truncation && d > *p.truncation) {
            normal_cache[exps] = result;
            return result;
        }
        int over = -1;
        for (size_t g = 0; g < exps.size(); ++g)
            if (has_rel[g] && exps[g] >= rels[g].exponent) {
                over = int(g);
                break;
            }
        if (over < 0) {
            auto bit = index_of.find(exps);
            if (bit == index_of.end()) {
                // exponents below caps but above truncation were filtered out
                normal_cache[exps] = result;
                return result;
            }
            result.push_back({bit->second, f.one()});
            normal_cache[exps] = result;
            return result;
        }
        const Relation& rel = rels[over];
        std::vector<int> base = exps;
        base[over] -= rel.exponent;
        // x^n -> rhs; rhs may be empty (= 0)
        for (const auto& t : rel.rhs) {
            std::vector<int> next = base;
            next[over] += t.exps[over];
            LinComb sub = normal_form(next);
            result = lincomb_add(f, result, lincomb_scale(f, t.coeff, sub));
        }
        normal_cache[exps] = result;
        return result;
    }

    AlgPtr build() {
        normalize_relations();
        enumerate_basis();
        auto alg = std::make_shared<GradedAlgebra>();
        alg->field = p.field;
        alg->dim = int(basis.size());
        alg->truncation = p.truncation;
        long chr = f.spec().characteristic;
        for (const auto& e : basis) {
            alg->degree.push_back(int(monomial_degree(p, e)));
            alg->labels.push_back(monomial_label(p, e));
            alg->basis_exponents.push_back(e);
        }
        alg->unit = vec_zero(f, alg->dim);
        alg->unit[index_of.at(std::vector<int>(p.generators.size(), 0))] = f.one();
        alg->mult.resize(size_t(alg->dim) * alg->dim);
        int n = int(p.generators.size());
        for (int i = 0; i < alg->dim; ++i) {
            const auto& a = basis[i];
            for (int j = 0; j < alg->dim; ++j) {
                const auto& b = basis[j];
                // Koszul sign from moving the right factors past the left ones
                long sgn = 0;
                if (chr != 2) {
                    for (int g = 0; g < n; ++g) {
                        if (!(p.generators[g].degree & 1)) continue;
                        for (int h = 0; h < g; ++h) {
                            if (!(p.generators[h].degree & 1)) continue;
                            sgn += long(a[g]) * b[h];
                        }
                    }
                }
                std::vector<int> merged(n);
                for (int g = 0; g < n; ++g) merged[g] = a[g] + b[g];
                LinComb prod = normal_form(merged);
                if (sgn % 2 != 0) prod = lincomb_scale(f, f.from_int(-1), prod);
                alg->mult[size_t(i) * alg->dim + j] = std::move(prod);
            }
        }
        // store the normalized presentation (implicit odd squares made explicit)
        auto np = std::make_shared<Presentation>(p);
        for (int g = 0; g < n; ++g)
            np->relations[g] = has_rel[g] ? std::optional<Relation>(rels[g]) : std::nullopt;
        alg->pres = np;
        return alg;
    }
};

}  // namespace

AlgPtr build_algebra(const Presentation& p) {
    if (!p.field) throw input_error("presentation has no field");
    if (p.relations.size() != p.generators.size())
        throw input_error("presentation relations must align with generators");
    if (p.truncation && *p.truncation < 0)
        throw input_error("truncation degree must be nonnegative");
    for (const auto& g : p.generators)
        if (g.degree < 0) throw input_error("generator degrees must be nonnegative");
    Builder b(p);
    return b.build();
}

AlgPtr scalar_algebra(const FieldPtr& f) {
    auto alg = std::make_shared<GradedAlgebra>();
    alg->field = f;
    alg->dim = 1;
    alg->degree = {0};
    alg->labels = {"1"};
    alg->unit = {f->one()};
    alg->mult = {{LinTerm{0, f->one()}}};
    return alg;
}

int tensor_index(const GradedAlgebra& tensor, int i, int j) {
    if (!tensor.tensor_info) throw internal_error("not a tensor product algebra");
    const TensorInfo& ti = *tensor.tensor_info;
    return ti.pair_to_index[size_t(i) * ti.right_dim + j];
}

AlgPtr tensor_product(const AlgPtr& a, const AlgPtr& b) {
    if (!(a->field->spec() == b->field->spec()))
        throw input_error("tensor product requires matching coefficient fields");
    const Field& f = *a->field;
    auto alg = std::make_shared<GradedAlgebra>();
    alg->field = a->field;
    std::optional<int> trunc;
    if (a->truncation || b->truncation) {
        int t = std::numeric_limits<int>::max();
        if (a->truncation) t = std::min(t, *a->truncation);
        if (b->truncation) t = std::min(t, *b->truncation);
        trunc = t;
    }
    alg->truncation = trunc;
    TensorInfo ti;
    ti.left_dim = a->dim;
    ti.right_dim = b->dim;
    ti.pair_to_index.assign(size_t(a->dim) * b->dim, -1);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < b->dim; ++j) {
            int d = a->degree[i] + b->degree[j];
            if (trunc && d > *trunc) continue;
            ti.pair_to_index[size_t(i) * b->dim + j] = int(ti.index_to_pair.size());
            ti.index_to_pair.push_back({i, j});
            alg->degree.push_back(d);
            alg->labels.push_back(a->labels[i] + " (x) " + b->labels[j]);
        }
    alg->dim = int(ti.index_to_pair.size());
    alg->tensor_info = ti;
    // unit = 1 (x) 1 expanded from the factor units
    alg->unit = vec_zero(f, alg->dim);
    for (int i = 0; i < a->dim; ++i) {
        if (f.is_zero(a->unit[i])) continue;
        for (int j = 0; j < b->dim; ++j) {
            if (f.is_zero(b->unit[j])) continue;
            int idx = ti.pair_to_index[size_t(i) * b->dim + j];
            if (idx >= 0)
                alg->unit[idx] = f.add(alg->unit[idx], f.mul(a->unit[i], b->unit[j]));
        }
    }
    alg->mult.resize(size_t(alg->dim) * alg->dim);
    long chr = f.spec().characteristic;
    for (int u = 0; u < alg->dim; ++u) {
        auto [i1, j1] = ti.index_to_pair[u];
        for (int v = 0; v < alg->dim; ++v) {
            auto [i2, j2] = ti.index_to_pair[v];
            // (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1 a2 (x) b1 b2
            bool flip = chr != 2 && (b->degree[j1] & 1) && (a->degree[i2] & 1);
            const LinComb& left = a->table(i1, i2);
            const LinComb& right = b->table(j1, j2);
            LinComb prod;
            for (const auto& lt : left)
                for (const auto& rt : right) {
                    int idx = ti.pair_to_index[size_t(lt.idx) * b->dim + rt.idx];
                    if (idx < 0) continue;
                    FElem c = f.mul(lt.coeff, rt.coeff);
                    if (flip) c = f.neg(c);
                    prod = lincomb_add(f, prod, LinComb{{idx, c}});
                }
            alg->mult[size_t(u) * alg->dim + v] = std::move(prod);
        }
    }
    return alg;
}

// --- morphisms

bool Morphism::is_degree_preserving() const {
    const Field& f = *src->field;
    for (int j = 0; j < src->dim; ++j)
        for (int i = 0; i < dst->dim; ++i)
            if (!f.is_zero(mat.at(i, j)) && dst->degree[i] != src->degree[j])
                return false;
    return true;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.src.get() != g.dst.get() && !(f.src->dim == g.dst->dim))
        throw internal_error("compose: middle algebras disagree");
    Morphism r;
    r.src = g.src;
    r.dst = f.dst;
    r.mat = f.mat.mul(g.mat);
    r.algebra_map = f.algebra_map && g.algebra_map;
    return r;
}

Morphism identity_morphism(const AlgPtr& a) {
    Morphism m;
    m.src = a;
    m.dst = a;
    m.mat = Matrix::identity(a->field, a->dim);
    m.algebra_map = true;
    return m;
}

bool verify_algebra_map(const Morphism& m, std::vector<std::string>* failures) {
    const Field& f = *m.src->field;
    bool ok = true;
    auto report = [&](const std::string& s) {
        ok = false;
        if (failures) failures->push_back(s);
    };
    if (!vec_eq(f, m.apply(m.src->one_vec()), m.dst->one_vec()))
        report("unit is not preserved");
    std::vector<Vec> img(m.src->dim);
    for (int i = 0; i < m.src->dim; ++i) img[i] = m.mat.column(i);
    for (int i = 0; i < m.src->dim; ++i)
        for (int j = 0; j < m.src->dim; ++j) {
            Vec lhs = m.dst->mul_vec(img[i], img[j]);
            Vec rhs = m.dst->zero_vec();
            for (const auto& t : m.src->table(i, j))
                rhs = vec_add(f, rhs, vec_scale(f, t.coeff, img[t.idx]));
            if (!vec_eq(f, lhs, rhs)) {
                report("multiplicativity fails on " + m.src->labels[i] + " * " +
                       m.src->labels[j]);
                if (!failures) return false;
            }
        }
    return ok;
}

namespace {

std::optional<Morphism> try_make_morphism_impl(const AlgPtr& src, const AlgPtr& dst,
                                               const std::vector<Vec>& gen_images,
                                               std::string* err, bool full_check) {
    auto fail = [&](const std::string& s) {
        if (err) *err = s;
        return std::nullopt;
    };
    if (!src->pres) throw internal_error("make_morphism needs a presented source");
    const Presentation& p = *src->pres;
    const Field& f = *src->field;
    if (!(src->field->spec() == dst->field->spec()))
        return fail("coefficient fields differ");
    if (gen_images.size() != p.generators.size())
        return fail("expected one image per generator");
    for (size_t g = 0; g < gen_images.size(); ++g) {
        const Vec& im = gen_images[g];
        if (int(im.size()) != dst->dim) return fail("image has wrong dimension");
        if (!dst->is_homogeneous(im))
            return fail("image of generator " + p.generators[g].name +
                        " is not homogeneous");
        auto d = dst->homogeneous_degree(im);
        if (d && *d != p.generators[g].degree)
            return fail("image of generator " + p.generators[g].name +
                        " has degree " + std::to_string(*d) + ", expected " +
                        std::to_string(p.generators[g].degree));
    }
    // relation check: phi(x)^n = rhs(phi(x))
    for (size_t g = 0; g < p.generators.size(); ++g) {
        const auto& rel = p.relations[g];
        if (!rel) continue;
        Vec lhs = dst->pow_vec(gen_images[g], rel->exponent);
        Vec rhs = eval_gen_poly(*dst, p, gen_images, rel->rhs);
        if (!vec_eq(f, lhs, rhs))
            return fail("relation violated for generator " + p.generators[g].name +
                        " (^" + std::to_string(rel->exponent) + ")");
    }
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
    if (full_check) {
        std::vector<std::string> failures;
        if (!verify_algebra_map(m, &failures))
            return fail(failures.empty() ? "not an algebra map" : failures.front());
    }
    m.algebra_map = true;
    return m;
}

}  // namespace

Morphism make_morphism(const AlgPtr& src, const AlgPtr& dst,
                       const std::vector<Vec>& gen_images) {
    std::string err;
    auto m = try_make_morphism_impl(src, dst, gen_images, &err, true);
    if (!m) throw verify_error("make_morphism: " + err);
    return *m;
}

std::optional<Morphism> try_make_morphism(const AlgPtr& src, const AlgPtr& dst,
                                          const std::vector<Vec>& gen_images,
                                          std::string* err) {
    return try_make_morphism_impl(src, dst, gen_images, err, true);
}

Morphism tensor_morphism(const Morphism& f, const Morphism& g,
                         const AlgPtr& src_tensor, const AlgPtr& dst_tensor) {
    const Field& fld = *f.src->field;
    if (!f.is_degree_preserving() || !g.is_degree_preserving())
        throw internal_error("tensor_morphism expects degree-preserving maps");
    Morphism r;
    r.src = src_tensor;
    r.dst = dst_tensor;
    r.mat = Matrix(src_tensor->field, dst_tensor->dim, src_tensor->dim);
    const TensorInfo& sti = *src_tensor->tensor_info;
    const TensorInfo& dti = *dst_tensor->tensor_info;
    for (int u = 0; u < src_tensor->dim; ++u) {
        auto [i, j] = sti.index_to_pair[u];
        Vec fi = f.mat.column(i);
        Vec gj = g.mat.column(j);
        for (int k = 0; k < int(fi.size()); ++k) {
            if (fld.is_zero(fi[k])) continue;
            for (int l = 0; l < int(gj.size()); ++l) {
                if (fld.is_zero(gj[l])) continue;
                int idx = dti.pair_to_index[size_t(k) * dti.right_dim + l];
                if (idx < 0) continue;
                r.mat.at(idx, u) = fld.add(r.mat.at(idx, u), fld.mul(fi[k], gj[l]));
            }
        }
    }
    r.algebra_map = f.algebra_map && g.algebra_map;
    return r;
}

Vec eval_gen_poly(const GradedAlgebra& dst, const Presentation& p,
                  const std::vector<Vec>& gen_images, const GenPoly& poly) {
    const Field& f = *dst.field;
    Vec acc = dst.zero_vec();
    for (const auto& t : poly) {
        Vec m = dst.one_vec();
        for (size_t g = 0; g < t.exps.size(); ++g) {
            if (t.exps[g] == 0) continue;
            m = dst.mul_vec(m, dst.pow_vec(gen_images[g], t.exps[g]));
        }
        acc = vec_add(f, acc, vec_scale(f, t.coeff, m));
    }
    return acc;
}

}  // namespace grhopf

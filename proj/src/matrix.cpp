#include "grhopf/matrix.hpp"

#include <algorithm>

namespace grhopf {

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_columns(const FieldPtr& field, const std::vector<Vec>& cols) {
    int n = cols.empty() ? 0 : int(cols[0].size());
    Matrix m(field, n, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != n) throw internal_error("ragged columns");
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix dimension mismatch in mul");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FElem& x = at(i, k);
            if (field_->is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_->add(r.at(i, j), field_->mul(x, o.at(k, j)));
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw internal_error("matrix/vector size mismatch");
    Vec r(rows_, field_->zero());
    for (int j = 0; j < cols_; ++j) {
        if (field_->is_zero(v[j])) continue;
        for (int i = 0; i < rows_; ++i)
            r[i] = field_->add(r[i], field_->mul(at(i, j), v[j]));
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw internal_error("hcat row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

bool Matrix::eq(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!field_->eq(a_[i], o.a_[i])) return false;
    return true;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!field_->is_zero(x)) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& r = res.reduced;
    const Field& f = *m.field();
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (!f.is_zero(r.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        FElem inv = f.inv(r.at(lead, col));
        for (int j = 0; j < m.cols(); ++j) r.at(lead, j) = f.mul(inv, r.at(lead, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || f.is_zero(r.at(i, col))) continue;
            FElem c = r.at(i, col);
            for (int j = 0; j < m.cols(); ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(lead, j)));
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = int(res.pivot_cols.size());
    return res;
}

LinearSolve solve_linear_system(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw input_error("solve: a and b must have the same number of rows");
    const FieldPtr& fp = a.field();
    const Field& f = *fp;
    Matrix aug = a.hcat(b);
    RrefResult rr = rref(aug);
    LinearSolve out;
    // consistency: no pivot may fall in the b block
    std::vector<int> pivots;
    for (int c : rr.pivot_cols) {
        if (c >= a.cols()) return out;  // inconsistent
        pivots.push_back(c);
    }
    out.unique = int(pivots.size()) == a.cols();
    Matrix x(fp, a.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.at(pivots[r], j) = rr.reduced.at(int(r), a.cols() + j);
    // check the rows below the rank are zero in the b block (they are, by rref)
    for (int i = int(pivots.size()); i < aug.rows(); ++i)
        for (int j = 0; j < aug.cols(); ++j)
            if (!f.is_zero(rr.reduced.at(i, j))) return out;
    out.solution = std::move(x);
    return out;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    const FieldPtr& fp = a.field();
    const Field& f = *fp;
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols(), f.zero());
        v[free] = f.one();
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[rr.pivot_cols[r]] = f.neg(rr.reduced.at(int(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Matrix& a) { return rref(a).rank; }

SpanSolver::SpanSolver(FieldPtr field, const std::vector<Vec>& columns)
    : field_(std::move(field)) {
    k_ = int(columns.size());
    n_ = columns.empty() ? 0 : int(columns[0].size());
    Matrix a = Matrix::from_columns(field_, columns);
    Matrix aug = a.hcat(Matrix::identity(field_, n_));
    RrefResult rr = rref(aug);
    // pivots inside the column block give the rank; the identity block records
    // the row transform
    transform_ = Matrix(field_, n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) transform_.at(i, j) = rr.reduced.at(i, k_ + j);
    for (int c : rr.pivot_cols)
        if (c < k_) pivot_cols_.push_back(c);
    rank_ = int(pivot_cols_.size());
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
    const Field& f = *field_;
    Vec w = transform_.apply(v);
    // rows at indices >= rank_ must vanish for consistency ... but rows of the
    // reduced system where the column block is zero can appear below rank_ only.
    for (int i = rank_; i < n_; ++i)
        if (!f.is_zero(w[i])) return std::nullopt;
    Vec coords(k_, f.zero());
    for (int r = 0; r < rank_; ++r) coords[pivot_cols_[r]] = w[r];
    return coords;
}

Vec vec_zero(const Field& f, int n) { return Vec(n, f.zero()); }

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, const FElem& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Field& f, const Vec& a) {
    return std::all_of(a.begin(), a.end(), [&](const FElem& x) { return f.is_zero(x); });
}

bool vec_eq(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

bool vec_less(const Field& f, const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (f.eq(a[i], b[i])) continue;
        return f.less(a[i], b[i]);
    }
    return a.size() < b.size();
}

std::vector<Vec> span_basis(const FieldPtr& f, const std::vector<Vec>& vecs) {
    if (vecs.empty()) return {};
    // rows = vectors; reduce and keep nonzero rows
    Matrix m(f, int(vecs.size()), int(vecs[0].size()));
    for (int i = 0; i < int(vecs.size()); ++i)
        for (int j = 0; j < int(vecs[0].size()); ++j) m.at(i, j) = vecs[i][j];
    RrefResult rr = rref(m);
    std::vector<Vec> out;
    for (int i = 0; i < rr.rank; ++i) out.push_back(rr.reduced.row(i));
    return out;
}

}  // namespace grhopf

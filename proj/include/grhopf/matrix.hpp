#pragma once

#include <optional>
#include <vector>

#include "grhopf/field.hpp"

namespace grhopf {

using Vec = std::vector<FElem>;

/// Dense matrix over one exact field. Row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldPtr field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(size_t(rows) * cols, field_->zero()) {}

    static Matrix identity(const FieldPtr& field, int n);
    static Matrix from_columns(const FieldPtr& field, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FElem& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const FElem& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Matrix mul(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    Matrix hcat(const Matrix& o) const;
    bool eq(const Matrix& o) const;
    Vec column(int j) const;
    Vec row(int i) const;
    bool is_zero() const;

  private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<FElem> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Deterministic Gauss-Jordan: pivot on the first nonzero entry in column
/// order, normalize to 1, clear the column.
RrefResult rref(const Matrix& m);

struct LinearSolve {
    std::optional<Matrix> solution;  // one solution (free variables set to 0)
    bool unique = false;             // full column rank
};

/// Solve a x = b columnwise; empty solution when inconsistent.
LinearSolve solve_linear_system(const Matrix& a, const Matrix& b);

/// Basis of the null space, one column vector per basis element,
/// ordered by ascending free column.
std::vector<Vec> kernel_basis(const Matrix& a);

int rank(const Matrix& a);

/// Precomputed solver for repeated "express v in the span of fixed columns"
/// queries.
class SpanSolver {
  public:
    SpanSolver(FieldPtr field, const std::vector<Vec>& columns);
    /// Coordinates of v in the given columns, or nullopt when outside the span.
    std::optional<Vec> express(const Vec& v) const;
    bool contains(const Vec& v) const { return express(v).has_value(); }
    int rank() const { return rank_; }

  private:
    FieldPtr field_;
    int n_ = 0;            // ambient dimension
    int k_ = 0;            // number of columns
    Matrix transform_;     // row operations that reduce the column matrix
    std::vector<int> pivot_cols_;
    int rank_ = 0;
};

// --- dense vector helpers over a field

Vec vec_zero(const Field& f, int n);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const FElem& c, const Vec& a);
bool vec_is_zero(const Field& f, const Vec& a);
bool vec_eq(const Field& f, const Vec& a, const Vec& b);
/// Lexicographic comparison with the field's deterministic element order.
bool vec_less(const Field& f, const Vec& a, const Vec& b);

/// Row-reduce a list of vectors, returning a deterministic basis of their span.
std::vector<Vec> span_basis(const FieldPtr& f, const std::vector<Vec>& vecs);

}  // namespace grhopf

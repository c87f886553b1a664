#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grhopf/matrix.hpp"
#include "grhopf/presentation.hpp"

namespace grhopf {

struct LinTerm {
    int idx;
    FElem coeff;
};
/// Sparse linear combination of basis elements, sorted by index, no zeros.
using LinComb = std::vector<LinTerm>;

class GradedAlgebra;
using AlgPtr = std::shared_ptr<const GradedAlgebra>;

/// Pair-index bookkeeping for tensor products. Pairs whose total degree
/// exceeds a truncation cap are dropped (index -1).
struct TensorInfo {
    int left_dim = 0, right_dim = 0;
    std::vector<int> pair_to_index;               // left_dim*right_dim, -1 = truncated
    std::vector<std::pair<int, int>> index_to_pair;
};

/// Finite-dimensional graded algebra given by a normal-monomial (or abstract)
/// basis with structure constants. Immutable after construction.
class GradedAlgebra {
  public:
    FieldPtr field;
    int dim = 0;
    std::vector<int> degree;          // per basis index
    Vec unit;                         // coordinates of 1
    std::vector<LinComb> mult;        // dim*dim, row-major: mult[i*dim+j] = b_i b_j
    std::vector<std::string> labels;  // printable basis names
    std::optional<int> truncation;    // total-degree cap, when built truncated

    // presentation backing; empty for synthetic algebras (tensors, quotients, duals)
    std::shared_ptr<const Presentation> pres;
    std::vector<std::vector<int>> basis_exponents;  // exponent vector per basis elem
    std::optional<TensorInfo> tensor_info;          // set on tensor products

    const LinComb& table(int i, int j) const { return mult[size_t(i) * dim + j]; }

    // --- element operations (dense coordinate vectors)
    Vec zero_vec() const { return vec_zero(*field, dim); }
    Vec one_vec() const { return unit; }
    Vec basis_vec(int i) const;
    Vec mul_vec(const Vec& a, const Vec& b) const;
    Vec pow_vec(const Vec& a, long e) const;
    /// x -> x^(p^m) through the algebra product; characteristic 0 unsupported.
    Vec frobenius_iterate(const Vec& a, int m) const;

    /// Degree of a homogeneous element, nullopt for 0 or inhomogeneous input.
    std::optional<int> homogeneous_degree(const Vec& v) const;
    bool is_homogeneous(const Vec& v) const;

    std::vector<long> hilbert_series() const;
    int max_degree() const;
    /// Basis indices in one degree.
    std::vector<int> degree_indices(int d) const;

    bool is_graded_commutative() const;
    bool is_commutative() const;  // plain, ignoring signs
    bool check_associative() const;

    std::string element_str(const Vec& v) const;
};

/// Build the normal-monomial algebra of a presentation. Validates degree
/// homogeneity of relations, finiteness, and the odd-square convention away
/// from characteristic 2.
AlgPtr build_algebra(const Presentation& p);

/// Koszul-signed tensor product; basis ordered pairs, left index major.
AlgPtr tensor_product(const AlgPtr& a, const AlgPtr& b);

/// One-dimensional algebra on the base field (tensor unit, counit target).
AlgPtr scalar_algebra(const FieldPtr& f);

/// Basis index of b_i (x) b_j in a tensor product, -1 when truncated away.
int tensor_index(const GradedAlgebra& tensor, int i, int j);

// --- sparse linear-combination helpers
LinComb lincomb_add(const Field& f, const LinComb& a, const LinComb& b);
LinComb lincomb_scale(const Field& f, const FElem& c, const LinComb& a);
LinComb lincomb_from_vec(const Field& f, const Vec& v);
Vec vec_from_lincomb(const Field& f, int dim, const LinComb& l);

/// Degree-preserving linear map between graded algebras with an optional
/// algebra-map certificate.
struct Morphism {
    AlgPtr src, dst;
    Matrix mat;  // dst.dim x src.dim
    bool algebra_map = false;

    Vec apply(const Vec& v) const { return mat.apply(v); }
    bool eq(const Morphism& o) const { return mat.eq(o.mat); }
    bool is_degree_preserving() const;
};

Morphism compose(const Morphism& f, const Morphism& g);  // f after g
Morphism identity_morphism(const AlgPtr& a);

/// Check unit preservation and multiplicativity on all basis pairs; failures
/// are appended as human-readable strings.
bool verify_algebra_map(const Morphism& m, std::vector<std::string>* failures = nullptr);

/// Extend generator images multiplicatively into a certified algebra map.
/// Throws when an image has the wrong degree or a relation is violated.
Morphism make_morphism(const AlgPtr& src, const AlgPtr& dst,
                       const std::vector<Vec>& generator_images);

/// Non-throwing variant used by candidate filtering.
std::optional<Morphism> try_make_morphism(const AlgPtr& src, const AlgPtr& dst,
                                          const std::vector<Vec>& generator_images,
                                          std::string* err = nullptr);

/// Tensor of two degree-preserving morphisms (no Koszul sign arises for
/// degree-0 maps).
Morphism tensor_morphism(const Morphism& f, const Morphism& g,
                         const AlgPtr& src_tensor, const AlgPtr& dst_tensor);

/// Evaluate a generator polynomial in a target algebra, given images of the
/// generators of `p`.
Vec eval_gen_poly(const GradedAlgebra& dst, const Presentation& p,
                  const std::vector<Vec>& gen_images, const GenPoly& poly);

}  // namespace grhopf

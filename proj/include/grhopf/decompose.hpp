#pragma once

#include <optional>
#include <vector>

#include "grhopf/algebra.hpp"

namespace grhopf {

/// Residue gr-field of a gr-local component. In characteristic p the field is
/// named exactly; over the rationals only the degree over the base is carried
/// (extensions of QQ are not FieldSpecs), plus an irreducibility certificate.
struct ResidueFieldInfo {
    FieldSpec base;
    int degree_over_base = 1;
    std::optional<FieldSpec> as_field_spec;  // set in characteristic p
    bool certified_field = true;             // char 0: primitive element certified
};

/// A = prod A_i for orthogonal degree-0 idempotents summing to 1.
struct Decomposition {
    std::vector<Vec> idempotents;        // in the coordinates of the input algebra
    std::vector<AlgPtr> components;      // A * e_i with its own basis
    std::vector<Morphism> projections;   // x -> x * e_i in component coordinates
    std::vector<std::vector<Vec>> component_bases;  // component basis, parent coords
    std::vector<ResidueFieldInfo> residue_fields;
    std::optional<int> counit_component;  // the i with eps(e_i) = 1, when eps given
};

/// Split a finite-dimensional graded-commutative algebra into gr-local
/// components by lifting the primitive idempotents of A_0 modulo its
/// nilradical. A single component means the algebra is gr-local.
Decomposition decompose_local(const AlgPtr& a, const Morphism* counit = nullptr);

/// Degree-0 part as a standalone algebra; indices[i] = position in the parent.
AlgPtr degree0_subalgebra(const AlgPtr& a, std::vector<int>* indices = nullptr);

/// Basis of the nilradical. Characteristic p uses the kernel of the
/// GF(p)-linear map x -> x^(p^s); characteristic 0 the radical of the trace
/// form.
std::vector<Vec> nilradical_basis(const AlgPtr& a);

/// Concentrated in degree 0 and reduced.
bool is_separable(const AlgPtr& a);

/// A_0 local, i.e. the degree-0 part carries no nontrivial idempotents.
bool is_gr_local(const AlgPtr& a);

/// Quotient of an algebra by (the span of) a homogeneous ideal.
struct Quotient {
    AlgPtr algebra;
    Morphism projection;                // parent -> quotient
    std::vector<Vec> section;           // representative of each quotient basis elem
    std::vector<int> section_indices;   // parent basis index of each representative
};

Quotient quotient_by_ideal(const AlgPtr& a, const std::vector<Vec>& ideal_span);

/// Span of I * A for a set of elements I (ideal generated as a subspace, the
/// inputs being multiplied by every basis element).
std::vector<Vec> ideal_span(const AlgPtr& a, const std::vector<Vec>& gens);

}  // namespace grhopf

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grhopf/field.hpp"

namespace grhopf {

struct Generator {
    std::string name;
    int degree = 0;
};

/// One term of a polynomial in the generators: coeff * prod gen_i^exps[i].
struct PolyTerm {
    FElem coeff;
    std::vector<int> exps;
};
using GenPoly = std::vector<PolyTerm>;

/// Power relation x^exponent = rhs, rhs a polynomial in the same generator
/// with exponents < exponent.
struct Relation {
    int gen = -1;
    int exponent = 0;
    GenPoly rhs;
};

/// One term of an element of A (x) A given on generators.
struct TensorTerm {
    FElem coeff;
    std::vector<int> left;
    std::vector<int> right;
};
using TensorPoly = std::vector<TensorTerm>;

/// Parsed form of an algebra: generators with degrees, univariate power
/// relations, optional truncation, optional coalgebra data.
struct Presentation {
    std::string name;
    FieldPtr field;
    std::vector<Generator> generators;
    std::vector<std::optional<Relation>> relations;  // aligned with generators
    std::optional<int> truncation;

    bool has_coalgebra = false;
    std::vector<TensorPoly> comul;  // per generator
    std::vector<FElem> counit;      // per generator

    bool has_antipode = false;
    std::vector<GenPoly> antipode;  // per generator

    int gen_index(const std::string& name) const;
};

}  // namespace grhopf

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grhopf/decompose.hpp"

namespace grhopf {

/// One verified axiom or certificate, with a witness label when it fails.
struct CheckResult {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const auto& c : checks)
            if (!c.ok) out.push_back(c);
        return out;
    }
};

/// Raised when coalgebra attachment or a certified construction fails; carries
/// the failed checks with witnesses.
class HopfError : public Error {
  public:
    HopfError(const std::string& msg, std::vector<CheckResult> fails)
        : Error(ErrorKind::verify, msg), failures(std::move(fails)) {}
    std::vector<CheckResult> failures;
};

/// Graded algebra with comultiplication, counit and (optionally) antipode.
struct HopfAlgebra {
    AlgPtr alg;
    AlgPtr square;  // alg (x) alg, shared by the structure maps
    Morphism comul;   // alg -> square
    Morphism counit;  // alg -> scalar algebra
    std::optional<Morphism> antipode;

    const Field& field() const { return *alg->field; }
    int dim() const { return alg->dim; }
    /// counit value of an element.
    FElem eps(const Vec& v) const { return counit.apply(v)[0]; }
};

/// Build the Hopf-algebra candidate of a presentation carrying coalgebra data;
/// verifies the bialgebra axioms and relation compatibility, throwing a
/// HopfError listing every failed axiom with a witness. A stated antipode is
/// attached unverified (verify_hopf checks it).
HopfAlgebra attach_coalgebra(const Presentation& p);

/// Bialgebra-level checks: structure maps are degree-preserving algebra maps,
/// coassociativity, counit laws.
std::vector<CheckResult> bialgebra_checks(const HopfAlgebra& h);

/// Solve the convolution identity m(S (x) id) comul = unit . counit for the
/// entries of a degree-preserving S, degree by degree; verifies uniqueness and
/// the opposite identity.
HopfAlgebra synthesize_antipode(const HopfAlgebra& h);

/// Re-check every axiom plus the antipode laws, S being an algebra map
/// (commutative case), and S . S = id.
VerifyReport verify_hopf(const HopfAlgebra& h);

/// Convolution f * g = m_R (f (x) g) comul for algebra maps into a common
/// graded-commutative target.
Morphism convolution(const Morphism& f, const Morphism& g, const HopfAlgebra& h);

/// Finite graded dual: multiplication transposes comul, comultiplication
/// transposes the product, with the Koszul pairing sign (-1)^{|f||g|}.
HopfAlgebra graded_dual(const HopfAlgebra& h);

struct Connectivization {
    HopfAlgebra kappa;
    Morphism projection;  // A -> kappa(A)
    bool cotensor_ok = false;
    int cotensor_dim = 0;
};

/// kappa(A) = A / (ker eps \cap A_0) A with the induced Hopf structure; also
/// certifies that the coaction fixed points {a : (id (x) pi) comul a = a (x) 1}
/// recover A_0.
Connectivization connectivize(const HopfAlgebra& h);

/// Homogeneous elements lifting a basis of kappa(A) over which A is a free
/// A_0-module; certified by the rank of the multiplication map.
std::vector<Vec> free_basis(const HopfAlgebra& h);

struct ShapeGenerator {
    int degree = 0;
    long height = 0;         // nilpotency order
    bool truncation_capped = false;
};

struct VarietyShape {
    std::vector<ShapeGenerator> polynomial_generators;
    std::vector<int> exterior_degrees;
    std::vector<long> hilbert;  // reconstructed from the shape
};

/// Extract minimal homogeneous generators of ker eps degreewise, measure their
/// nilpotency heights, and verify the product of the per-generator series
/// reproduces the Hilbert series of the algebra.
VarietyShape classify_variety(const HopfAlgebra& h);

// --- helpers shared with the scheme layer

/// Assemble a Hopf structure from explicit structure maps, without checks.
HopfAlgebra assemble_hopf(AlgPtr alg, AlgPtr square, Morphism comul, Morphism counit,
                          std::optional<Morphism> antipode);

/// eta . eps as a morphism A -> A.
Morphism unit_counit_morphism(const HopfAlgebra& h);

/// Kernel of the counit as a list of homogeneous vectors.
std::vector<Vec> augmentation_ideal_basis(const HopfAlgebra& h);

/// tau . comul = comul, with tau the Koszul twist.
bool is_cocommutative(const HopfAlgebra& h);

/// Evaluate a tensor polynomial (terms coeff * mono (x) mono) in the square.
Vec eval_tensor_poly(const AlgPtr& alg, const AlgPtr& square, const Presentation& p,
                     const TensorPoly& tp);

}  // namespace grhopf

#pragma once

#include "grhopf/hopf.hpp"

namespace grhopf {

struct Pi0Result {
    HopfAlgebra pi0;      // largest gr-separable subalgebra, concentrated in degree 0
    Morphism inclusion;   // pi0 -> A
    bool embedding_verified = false;
};

/// Embed A_0 / N_0 = prod k_i back into A: the Frobenius projector image in
/// characteristic p, Newton-lifted primitive elements over the rationals.
Pi0Result pi0(const HopfAlgebra& h);

struct Component0Result {
    HopfAlgebra comp0;    // the component where the counit is 1
    Morphism projection;  // A -> comp0, a Hopf quotient
    ResidueFieldInfo residue;
};

Component0Result component0(const HopfAlgebra& h);

struct ComponentReport {
    Pi0Result pi0_part;
    Component0Result comp0_part;
    int component_count = 0;
    bool algebraically_connected = false;
    bool connected = false;
    bool etale = false;
    bool gr_local = false;
    bool spectrum_connected = false;
};

ComponentReport classify_components(const HopfAlgebra& h);

struct SemidirectReport {
    std::vector<CheckResult> checks;
    int dim_total = 0, dim_comp0 = 0, dim_pi0 = 0;
    bool dims_multiply = false;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Split exactness data for A: pi0 sub-Hopf, A -> A^0 quotient, and the
/// composite pi0 A -> A -> A/N an isomorphism fixing residues.
SemidirectReport semidirect_check(const HopfAlgebra& h);

struct FourFactorSlot {
    std::string tag;
    HopfAlgebra factor;
    bool tag_verified = false;
};

struct FourFactorReport {
    FourFactorSlot etale_etale;          // dual of the etale part of the dual side
    FourFactorSlot etale_connected;      // (etale, connected-dual)
    FourFactorSlot connected_etale;      // (connected, etale-dual)
    FourFactorSlot connected_connected;  // (connected, connected-dual)
    long dim_product = 0;
    bool dims_ok = false;
};

/// Canonical four-factor splitting of an abelian finite positive gr-group
/// scheme, assembled through the double dual.
FourFactorReport four_factor(const HopfAlgebra& h);

}  // namespace grhopf

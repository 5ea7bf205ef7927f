#pragma once

#include "rumin/operator.hpp"
#include "rumin/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rumin {

GradedOperator build_d0(const Space& space);
GradedOperator build_d(const Space& space);
GradedOperator build_d0_partial_inverse(const GradedOperator& d0);
GradedOperator build_box0(const GradedOperator& d0);

enum class Pi0Route { r0, box0_kernel };
GradedOperator build_pi0(const GradedOperator& d0, const GradedOperator& d0_inv, const GradedOperator& box0,
                         Pi0Route route);
std::vector<long> betti_numbers(const GradedOperator& pi0);

/// Per degree spectral data of Box0.
using SpectralDecomposition = std::vector<std::vector<Eigenspace>>;
SpectralDecomposition spectral_decompose(const GradedOperator& box0);

GradedOperator build_box(const GradedOperator& d, const GradedOperator& d0);

enum class ResolventRoute { spectral, direct };
/// (z - Box)^{-1}; the spectral route needs `spectrum`.
ZGradedOperator build_resolvent(const GradedOperator& box0, const GradedOperator& box, ResolventRoute route,
                                const SpectralDecomposition* spectrum);
/// Entrywise residue at z = 0.
GradedOperator build_P(const ZGradedOperator& resolvent);

struct LOperators {
    GradedOperator L, L_inv, L1;
};
LOperators build_L(const GradedOperator& P, const GradedOperator& pi0);

struct DCOperators {
    GradedOperator LdL, D, C;
};
DCOperators build_D_and_C(const LOperators& l, const GradedOperator& d, const GradedOperator& pi0);

struct RuminOperators {
    GradedOperator b, Pi, Pi_E, dc;
};
RuminOperators build_rumin_dc(const GradedOperator& d, const GradedOperator& d0, const GradedOperator& d0_inv,
                              const GradedOperator& pi0);

struct GHOperators {
    GradedOperator g_hat, g_hat_inv, h;
};
GHOperators build_g_and_h(const GradedOperator& C, const GradedOperator& d0, const GradedOperator& box0,
                          const GradedOperator& pi0, const LOperators& l);

struct PipelineOptions {
    /// Route whose residue defines P.
    ResolventRoute resolvent = ResolventRoute::spectral;
    /// When false, internal identity checks do not throw; the verifier reports them.
    bool strict = true;
    /// Operator to corrupt after construction (for exercising the verifier).
    std::optional<std::string> inject_fault;
};

/// Every operator of the construction, built in pipeline order.
struct RuminComplex {
    Space space;
    int N0 = 1;
    GradedOperator d0, d, d0_t, d0_inv, box0, pi0, pi0_kernel_route;
    std::optional<SpectralDecomposition> spectrum;
    std::string spectrum_error;
    GradedOperator box, B;
    std::optional<ZGradedOperator> resolvent_spectral;
    ZGradedOperator resolvent_direct;
    GradedOperator P, P_spectral, P_direct;
    LOperators l;
    DCOperators dc_split;
    RuminOperators rumin;
    GHOperators gh;
    std::vector<long> betti;
};

RuminComplex build_complex(const Algebra& alg, const PipelineOptions& options = {});

/// Names accepted for operator selection.
const std::vector<std::string>& operator_names();

} // namespace rumin

#pragma once

#include <optional>

#include "paracalc/gentangent.hpp"

namespace paracalc {

// Almost paracontact structure (phi, xi, eta), optionally with a compatible
// pseudo-Riemannian metric. Construction never validates the axioms; the
// checkers below do, so deliberately broken structures can be built.
struct APC {
    std::string name;
    Endo phi;
    VectorField xi;
    OneForm eta;
    std::optional<Metric> g;

    const ChartPtr& chart() const { return phi.chart; }
};

// Generalized almost paracontact structure candidate.
struct GAPC {
    std::string name;
    GenEndo endo;
    VectorField xi;
    OneForm eta;

    const ChartPtr& chart() const { return endo.chart(); }
};

// Axioms phi^2 = I - eta otimes xi and eta(xi) = 1, plus the derived
// identities phi xi = 0 and eta o phi = 0.
CheckReport check_apc(const APC& s, const SamplerConfig& cfg = {});

// Metric compatibility g(phi X, phi Y) = -g(X,Y) + eta(X)eta(Y) with the
// derived identities i_xi g = eta, g(xi,xi) = 1 and phi-skewness of g.
CheckReport check_apc_metric(const APC& s, const SamplerConfig& cfg = {});

// diag(phi, -phi*); requires check_apc to pass at least numerically.
GAPC induce_gapc(const APC& s, const SamplerConfig& cfg = {});

// The four defining conditions on TM + T*M.
CheckReport check_gapc(const GAPC& g, const SamplerConfig& cfg = {});

// The equivalent block system (phi^2 + beta B = I - eta otimes xi, ...)
// plus the derived first-slot contractions beta(eta,.) = 0, B(xi,.) = 0.
CheckReport gapc_block_conditions(const GAPC& g, const SamplerConfig& cfg = {});

// Same block system with right-hand side I (almost product case, P^2 = I);
// used for the adapted structure on M x R.
CheckReport product_block_conditions(const GenEndo& p, const SamplerConfig& cfg = {});

// cos t . S1 + sin t . S2 with a formal parameter t. The expansion identity
// is asserted unconditionally; the structure conclusion only when the
// hypotheses hold on the given pair.
struct FamilyResult {
    GenEndo phi_t;
    VectorField xi_t;
    OneForm eta_t;
    CheckReport report;
};
FamilyResult one_param_family(const APC& s1, const APC& s2, const std::string& t_param,
                              const SamplerConfig& cfg = {});

// Anticommutation G_g Phi = -Phi G_g under the hypothesis
// g(phi X, Y) = -g(X, phi Y), with both musical intertwining identities.
CheckReport compatibility_check(const GAPC& g, const Metric& gt, const SamplerConfig& cfg = {});

// Invariance: condition B2(phi X, Y) = -B2(X, phi Y) and consequence
// Phi_B = Phi. Sufficiency: condition B2(phi^2 X, Y) = B2(phi X, phi Y)
// and, when it holds, Phi_B satisfying the generalized axioms.
CheckReport b_invariance(const TwoForm& b2, const APC& s, const SamplerConfig& cfg = {});
CheckReport b_sufficiency(const TwoForm& b2, const APC& s, const SamplerConfig& cfg = {});

// Mirrors with the bivector transform; sufficiency hypothesis is
// eta(beta2(alpha)) xi = alpha(xi) beta2(eta) on the dual frame, plus the
// structural identity beta((phi*)^2 a) - phi^2(beta(a)) = eta(beta(a)) xi -
// a(xi) beta(eta).
CheckReport beta_invariance(const Bivector& beta2, const APC& s, const SamplerConfig& cfg = {});
CheckReport beta_sufficiency(const Bivector& beta2, const APC& s, const SamplerConfig& cfg = {});

// Helpers shared by the checkers and the test suites.
std::vector<LabeledResidual> matrix_residuals(const ExprMatrix& m, const std::string& prefix);
std::vector<LabeledResidual> blockwise_difference(const GenEndo& a, const GenEndo& b);

} // namespace paracalc

#pragma once

#include "paracalc/catalog.hpp"

namespace paracalc {

// The structure on M x R adapted to (phi, xi, eta): blocks
// phi_lift, beta = xi ^ d/dt, B = eta ^ dt.
struct AdaptedProduct {
    ProductChart product;
    GenEndo p;
    VectorField xi_lift;
    OneForm eta_lift;
    CheckReport block_report; // almost-product block conditions of p
};

// Four-condition system: N_phi - deta . xi, L_xi eta, L_xi phi, and the
// eta-Lie skew condition, each on all coordinate-field pairs.
CheckReport classical_normality(const APC& s, const SamplerConfig& cfg = {});

AdaptedProduct adapted_product(const APC& s, const SamplerConfig& cfg = {});

// N_P(A,C) = [PA, PC] + P^2[A,C] - P[PA, C] - P[A, PC] (Courant brackets).
GenSection courant_nijenhuis(const GenEndo& p, const GenSection& a, const GenSection& c);

// N_P on all unordered pairs of product-chart frame sections.
CheckReport generalized_normality(const APC& s, const SamplerConfig& cfg = {});

// E1 = phi - eta otimes xi, E2 = phi + eta otimes xi with E_i^2 = I, their
// Nijenhuis tensors, and the eta-applied consequence of N_E1 = 0.
struct ProductStructures {
    Endo e1;
    Endo e2;
    CheckReport report;
};
ProductStructures product_structures(const APC& s, const SamplerConfig& cfg = {});

// Classical and generalized checkers must agree (both normal or both not).
CheckReport normality_equivalence(const APC& s, const SamplerConfig& cfg = {});

} // namespace paracalc

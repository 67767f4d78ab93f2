#pragma once

#include "paracalc/tensor.hpp"

namespace paracalc {

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// df = d_i f dx^i
OneForm exterior_derivative(const ChartPtr& chart, const Expr& f);
// (d alpha)_{ij} = d_i alpha_j - d_j alpha_i; no 1/2 normalization, i.e.
// d alpha(X,Y) = X(alpha(Y)) - Y(alpha(X)) - alpha([X,Y]).
TwoForm exterior_derivative(const OneForm& alpha);

// Cartan formula L_X = i_X d + d i_X.
OneForm lie_derivative(const VectorField& x, const OneForm& alpha);
// (L_X phi)(Y) = [X, phi Y] - phi [X, Y], assembled on coordinate fields.
Endo lie_derivative(const VectorField& x, const Endo& phi);

// (phi* alpha)(X) = alpha(phi X)
OneForm dual_endo_apply(const Endo& phi, const OneForm& alpha);

// i_X g = g(X, .)
OneForm interior_product(const VectorField& x, const Metric& g);

OneForm flat(const Metric& g, const VectorField& x);
VectorField sharp(const Metric& g, const OneForm& alpha);

// (xi ^ zeta)^{ij} = xi^i zeta^j - xi^j zeta^i
Bivector wedge(const VectorField& xi, const VectorField& zeta);
// (eta ^ theta)_{ij} = eta_i theta_j - eta_j theta_i
TwoForm wedge(const OneForm& eta, const OneForm& theta);

// N_phi(X,Y) = [phi X, phi Y] + phi^2 [X,Y] - phi[phi X, Y] - phi[X, phi Y]
VectorField nijenhuis(const Endo& phi, const VectorField& x, const VectorField& y);

// Lifts along M -> M x R (zero components in the line direction).
VectorField lift(const ProductChart& p, const VectorField& x);
OneForm lift(const ProductChart& p, const OneForm& alpha);
Endo lift(const ProductChart& p, const Endo& phi);

} // namespace paracalc

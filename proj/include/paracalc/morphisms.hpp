#pragma once

#include "paracalc/parastruct.hpp"

namespace paracalc {

// Chart diffeomorphism with user-supplied symbolic inverse; the inverse is
// verified (both compositions simplify to the identity) rather than computed.
struct Diffeo {
    std::string name;
    ChartPtr source;
    ChartPtr target;
    std::vector<Expr> forward; // target coords as functions of the source coords
    std::vector<Expr> inverse; // source coords as functions of the target coords

    static Diffeo make(const std::string& name, const ChartPtr& source, const ChartPtr& target,
                       std::vector<Expr> forward, std::vector<Expr> inverse);
};

Diffeo compose(const Diffeo& g, const Diffeo& f); // g after f

// (f_* X)^i = (df^i/dx^j X^j) o f^{-1}, expressed in target coordinates.
VectorField pushforward(const Diffeo& f, const VectorField& x);
// (f* alpha)_j = (alpha_i o f) df^i/dx^j, on the source chart.
OneForm pullback(const Diffeo& f, const OneForm& alpha);

// Defining identities phi2 o f_* = f_* o phi1 and f_* xi1 = xi2, the implied
// pullback identity f* eta2 = eta1, and the dual intertwine
// phi1* o f* = f* o phi2*.
CheckReport check_paracontactomorphism(const Diffeo& f, const APC& s1, const APC& s2,
                                       const SamplerConfig& cfg = {});

// f~(X + alpha) = f_* X + (f^{-1})* alpha on the generalized tangent bundle.
GenSection induced_gen_map(const Diffeo& f, const GenSection& a);

// Phi2 o f~ = f~ o Phi1 on all frame sections plus the xi/eta anchors.
CheckReport check_gen_commutation(const Diffeo& f, const APC& s1, const APC& s2,
                                  const SamplerConfig& cfg = {});

} // namespace paracalc

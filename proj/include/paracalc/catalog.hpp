#pragma once

#include "paracalc/parastruct.hpp"

namespace paracalc {

// Built-in structures on the chart R3(x, y, z):
//   S0   flat:        phi: dx <-> dy, phi dz = 0; xi = d/dz; eta = dz;
//                     g = diag(1, -1, 1); normal, para-cosymplectic.
//   S1   contact-type: eta = dz - y dx; phi dx = dy, phi dy = dx + y dz;
//                     normal.
//   S2   z-dependent:  phi dx = e^z dy, phi dy = e^-z dx; eta = dz;
//                     not normal (L_xi phi != 0).
// Negatives break exactly one axiom each and are used for failure-path tests.
struct BuiltinCatalog {
    ChartPtr r3;
    APC s0, s1, s2;
    APC neg_phi_sq; // phi^2 axiom broken, everything else intact
    APC neg_eta_xi; // eta(xi) = 1 broken while phi^2 = I - eta otimes xi holds
    TwoForm omega_s0; // fundamental form g(phi . , .) of s0

    std::vector<const APC*> all() const { return {&s0, &s1, &s2}; }
};

const BuiltinCatalog& builtin_catalog();

} // namespace paracalc

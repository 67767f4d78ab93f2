#pragma once

#include <string>
#include <vector>

#include "paracalc/chart.hpp"
#include "paracalc/matrix.hpp"

namespace paracalc {

struct VectorField {
    ChartPtr chart;
    std::vector<Expr> comps; // coefficients of d/dx^i

    static VectorField zero(const ChartPtr& c);
    static VectorField coordinate(const ChartPtr& c, int i); // d/dx^i
    static VectorField make(const ChartPtr& c, std::vector<Expr> comps);
    VectorField simplified() const;
    std::string str() const;
};

struct OneForm {
    ChartPtr chart;
    std::vector<Expr> comps; // coefficients of dx^i

    static OneForm zero(const ChartPtr& c);
    static OneForm coordinate(const ChartPtr& c, int i); // dx^i
    static OneForm make(const ChartPtr& c, std::vector<Expr> comps);
    OneForm simplified() const;
    std::string str() const;
};

// comps(i,j) = value on (d/dx^i, d/dx^j); antisymmetry is validated.
struct TwoForm {
    ChartPtr chart;
    ExprMatrix comps;

    static TwoForm zero(const ChartPtr& c);
    static TwoForm make(const ChartPtr& c, const ExprMatrix& comps);
};

// comps(i,j) = value on (dx^i, dx^j); antisymmetry is validated.
struct Bivector {
    ChartPtr chart;
    ExprMatrix comps;

    static Bivector zero(const ChartPtr& c);
    static Bivector make(const ChartPtr& c, const ExprMatrix& comps);
};

// Mixed (1,1) tensor; column j is the image of d/dx^j.
struct Endo {
    ChartPtr chart;
    ExprMatrix comps;

    static Endo zero(const ChartPtr& c);
    static Endo identity(const ChartPtr& c);
    static Endo make(const ChartPtr& c, const ExprMatrix& comps);
};

// Symmetric with symbolically nonzero determinant.
struct Metric {
    ChartPtr chart;
    ExprMatrix comps;

    static Metric make(const ChartPtr& c, const ExprMatrix& comps);
    static Metric diagonal(const ChartPtr& c, const std::vector<Expr>& diag);

    Expr det() const;
    // Exact adjugate/determinant inversion; refuses charts larger than the
    // configured limit (cofactor cost grows factorially).
    ExprMatrix inverse(int symbolic_inversion_limit = 6) const;
    // Signature (positives, negatives) from leading principal minors at a
    // sample point, retrying points where a minor degenerates.
    std::pair<int, int> signature(std::uint64_t seed = 20240817) const;
};

// alpha(X)
Expr pairing(const OneForm& alpha, const VectorField& x);

VectorField endo_apply(const Endo& phi, const VectorField& x);
// eta (x) xi as an endomorphism: X -> eta(X) xi.
Endo tensor_product(const OneForm& eta, const VectorField& xi);

} // namespace paracalc

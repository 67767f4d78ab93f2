#include "paracalc/catalog.hpp"

namespace paracalc {

namespace {

BuiltinCatalog build() {
    BuiltinCatalog c;
    c.r3 = make_chart("R3", {"x", "y", "z"});
    const ChartPtr& ch = c.r3;
    Expr y = Expr::coord("y"), z = Expr::coord("z");
    Expr o = Expr::one(), zero = Expr::zero();

    // S0: phi dx = dy, phi dy = dx, phi dz = 0 (columns are images).
    {
        ExprMatrix phi(3, 3);
        phi.at(1, 0) = o;
        phi.at(0, 1) = o;
        APC s;
        s.name = "S0";
        s.phi = Endo::make(ch, phi);
        s.xi = VectorField::make(ch, {zero, zero, o});
        s.eta = OneForm::make(ch, {zero, zero, o});
        s.g = Metric::diagonal(ch, {o, -o, o});
        c.s0 = s;
    }

    // S1: eta = dz - y dx, phi dx = dy, phi dy = dx + y dz.
    {
        ExprMatrix phi(3, 3);
        phi.at(1, 0) = o;
        phi.at(0, 1) = o;
        phi.at(2, 1) = y;
        APC s;
        s.name = "S1";
        s.phi = Endo::make(ch, phi);
        s.xi = VectorField::make(ch, {zero, zero, o});
        s.eta = OneForm::make(ch, {-y, zero, o});
        // Compatible pseudo-metric with g(d/dx,d/dx) = 1.
        ExprMatrix g(3, 3);
        g.at(0, 0) = o;
        g.at(1, 1) = y * y - o;
        g.at(2, 2) = o;
        g.at(0, 2) = -y;
        g.at(2, 0) = -y;
        s.g = Metric::make(ch, g);
        c.s1 = s;
    }

    // S2: phi dx = e^z dy, phi dy = e^-z dx, eta = dz; fails L_xi phi = 0.
    {
        ExprMatrix phi(3, 3);
        phi.at(1, 0) = exp(z);
        phi.at(0, 1) = exp(-z);
        APC s;
        s.name = "S2";
        s.phi = Endo::make(ch, phi);
        s.xi = VectorField::make(ch, {zero, zero, o});
        s.eta = OneForm::make(ch, {zero, zero, o});
        s.g = Metric::diagonal(ch, {exp(z) * exp(z), -o, o});
        c.s2 = s;
    }

    // neg_phi_sq: phi dx = dx, rest zero; only the phi^2 axiom fails.
    {
        ExprMatrix phi(3, 3);
        phi.at(0, 0) = o;
        APC s;
        s.name = "neg_phi_sq";
        s.phi = Endo::make(ch, phi);
        s.xi = VectorField::make(ch, {zero, zero, o});
        s.eta = OneForm::make(ch, {zero, zero, o});
        c.neg_phi_sq = s;
    }

    // neg_eta_xi: eta = dx, xi = d/dz, phi = I - (dx otimes d/dz)/2.
    // Then phi^2 = I - eta otimes xi holds, but eta(xi) = 0.
    {
        ExprMatrix phi = ExprMatrix::identity(3);
        phi.at(2, 0) = Expr::rational(Rational(-1, 2));
        APC s;
        s.name = "neg_eta_xi";
        s.phi = Endo::make(ch, phi);
        s.xi = VectorField::make(ch, {zero, zero, o});
        s.eta = OneForm::make(ch, {o, zero, zero});
        c.neg_eta_xi = s;
    }

    // Fundamental form of S0: omega(X, Y) = g(phi X, Y).
    {
        ExprMatrix om(3, 3);
        const ExprMatrix& g = c.s0.g->comps;
        const ExprMatrix& phi = c.s0.phi.comps;
        ExprMatrix prod = phi.transpose() * g; // om_{ij} = g(phi e_i, e_j)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) om.at(i, j) = prod.at(i, j);
        c.omega_s0 = TwoForm::make(ch, om);
    }
    return c;
}

} // namespace

const BuiltinCatalog& builtin_catalog() {
    static const BuiltinCatalog c = build();
    return c;
}

} // namespace paracalc

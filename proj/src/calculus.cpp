#include "paracalc/calculus.hpp"

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart, y.chart, "lie_bracket");
    const auto& coords = x.chart->coords;
    int n = x.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        Expr acc = Expr::zero();
        for (int j = 0; j < n; ++j)
            acc = acc + x.comps[j] * y.comps[i].diff(coords[j]) -
                  y.comps[j] * x.comps[i].diff(coords[j]);
        comps[i] = expr_simplify(acc);
    }
    return VectorField{x.chart, std::move(comps)};
}

OneForm exterior_derivative(const ChartPtr& chart, const Expr& f) {
    int n = chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) comps[i] = expr_simplify(f.diff(chart->coords[i]));
    return OneForm{chart, std::move(comps)};
}

TwoForm exterior_derivative(const OneForm& alpha) {
    int n = alpha.chart->dim();
    const auto& coords = alpha.chart->coords;
    ExprMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = expr_simplify(alpha.comps[j].diff(coords[i]) - alpha.comps[i].diff(coords[j]));
    return TwoForm{alpha.chart, std::move(m)};
}

OneForm lie_derivative(const VectorField& x, const OneForm& alpha) {
    require_same_chart(x.chart, alpha.chart, "lie_derivative");
    TwoForm da = exterior_derivative(alpha);
    OneForm d_of_pairing = exterior_derivative(x.chart, pairing(alpha, x));
    int n = x.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        Expr acc = d_of_pairing.comps[i];
        for (int j = 0; j < n; ++j) acc = acc + x.comps[j] * da.comps.at(j, i);
        comps[i] = expr_simplify(acc);
    }
    return OneForm{x.chart, std::move(comps)};
}

Endo lie_derivative(const VectorField& x, const Endo& phi) {
    require_same_chart(x.chart, phi.chart, "lie_derivative");
    int n = x.chart->dim();
    ExprMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        VectorField ej = VectorField::coordinate(x.chart, j);
        VectorField col = lie_bracket(x, endo_apply(phi, ej));
        VectorField corr = endo_apply(phi, lie_bracket(x, ej));
        for (int i = 0; i < n; ++i) m.at(i, j) = expr_simplify(col.comps[i] - corr.comps[i]);
    }
    return Endo{x.chart, std::move(m)};
}

OneForm dual_endo_apply(const Endo& phi, const OneForm& alpha) {
    require_same_chart(phi.chart, alpha.chart, "dual_endo_apply");
    int n = phi.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int j = 0; j < n; ++j) {
        Expr acc = Expr::zero();
        for (int i = 0; i < n; ++i) acc = acc + alpha.comps[i] * phi.comps.at(i, j);
        comps[j] = expr_simplify(acc);
    }
    return OneForm{phi.chart, std::move(comps)};
}

OneForm interior_product(const VectorField& x, const Metric& g) {
    require_same_chart(x.chart, g.chart, "interior_product");
    int n = x.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int j = 0; j < n; ++j) {
        Expr acc = Expr::zero();
        for (int i = 0; i < n; ++i) acc = acc + g.comps.at(i, j) * x.comps[i];
        comps[j] = expr_simplify(acc);
    }
    return OneForm{x.chart, std::move(comps)};
}

OneForm flat(const Metric& g, const VectorField& x) { return interior_product(x, g); }

VectorField sharp(const Metric& g, const OneForm& alpha) {
    require_same_chart(g.chart, alpha.chart, "sharp");
    ExprMatrix inv = g.inverse();
    return VectorField{alpha.chart, inv.apply(alpha.comps)};
}

Bivector wedge(const VectorField& xi, const VectorField& zeta) {
    require_same_chart(xi.chart, zeta.chart, "wedge");
    int n = xi.chart->dim();
    ExprMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = expr_simplify(xi.comps[i] * zeta.comps[j] - xi.comps[j] * zeta.comps[i]);
    return Bivector{xi.chart, std::move(m)};
}

TwoForm wedge(const OneForm& eta, const OneForm& theta) {
    require_same_chart(eta.chart, theta.chart, "wedge");
    int n = eta.chart->dim();
    ExprMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = expr_simplify(eta.comps[i] * theta.comps[j] - eta.comps[j] * theta.comps[i]);
    return TwoForm{eta.chart, std::move(m)};
}

VectorField nijenhuis(const Endo& phi, const VectorField& x, const VectorField& y) {
    require_same_chart(phi.chart, x.chart, "nijenhuis");
    require_same_chart(phi.chart, y.chart, "nijenhuis");
    VectorField px = endo_apply(phi, x);
    VectorField py = endo_apply(phi, y);
    VectorField t1 = lie_bracket(px, py);
    VectorField t2 = endo_apply(phi, endo_apply(phi, lie_bracket(x, y)));
    VectorField t3 = endo_apply(phi, lie_bracket(px, y));
    VectorField t4 = endo_apply(phi, lie_bracket(x, py));
    int n = phi.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i)
        comps[i] = expr_simplify(t1.comps[i] + t2.comps[i] - t3.comps[i] - t4.comps[i]);
    return VectorField{x.chart, std::move(comps)};
}

VectorField lift(const ProductChart& p, const VectorField& x) {
    VectorField r = VectorField::zero(p.chart);
    for (int i = 0; i < x.chart->dim(); ++i) r.comps[i] = x.comps[i];
    return r;
}

OneForm lift(const ProductChart& p, const OneForm& alpha) {
    OneForm r = OneForm::zero(p.chart);
    for (int i = 0; i < alpha.chart->dim(); ++i) r.comps[i] = alpha.comps[i];
    return r;
}

Endo lift(const ProductChart& p, const Endo& phi) {
    Endo r = Endo::zero(p.chart);
    for (int i = 0; i < phi.chart->dim(); ++i)
        for (int j = 0; j < phi.chart->dim(); ++j) r.comps.at(i, j) = phi.comps.at(i, j);
    return r;
}

} // namespace paracalc

#include "paracalc/gentangent.hpp"

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

GenSection GenSection::make(VectorField x, OneForm alpha) {
    require_same_chart(x.chart, alpha.chart, "generalized section");
    return GenSection{std::move(x), std::move(alpha)};
}

std::vector<GenSection> frame_sections(const ChartPtr& chart) {
    std::vector<GenSection> out;
    int n = chart->dim();
    for (int i = 0; i < n; ++i)
        out.push_back(GenSection::vector(VectorField::coordinate(chart, i)));
    for (int i = 0; i < n; ++i)
        out.push_back(GenSection::covector(OneForm::coordinate(chart, i)));
    return out;
}

std::string frame_section_label(const ChartPtr& chart, int k) {
    int n = chart->dim();
    if (k < n) return "d/d" + chart->coords[k] + " + 0";
    return "0 + d" + chart->coords[k - n];
}

Expr g0_pair(const GenSection& a, const GenSection& c) {
    require_same_chart(a.chart(), c.chart(), "g0_pair");
    Expr s = pairing(a.form, c.vf) + pairing(c.form, a.vf);
    return expr_simplify(Expr::rational(Rational(1, 2)) * s);
}

GenEndo GenEndo::make(Endo phi, Bivector beta, TwoForm b) {
    require_same_chart(phi.chart, beta.chart, "generalized endomorphism");
    require_same_chart(phi.chart, b.chart, "generalized endomorphism");
    return GenEndo{std::move(phi), std::move(beta), std::move(b)};
}

GenEndo GenEndo::diagonal(const Endo& phi) {
    return GenEndo{phi, Bivector::zero(phi.chart), TwoForm::zero(phi.chart)};
}

ExprMatrix GenEndo::matrix() const {
    return ExprMatrix::blocks2x2(phi.comps, beta.comps.transpose(), b.comps,
                                 phi.comps.transpose().negated());
}

GenEndo GenEndo::from_matrix(const ChartPtr& chart, const ExprMatrix& m) {
    int n = chart->dim();
    if (m.rows() != 2 * n || m.cols() != 2 * n)
        throw DimensionError("block matrix must be 2n x 2n");
    ExprMatrix ul = m.block(0, 0, n, n).simplified();
    ExprMatrix ur = m.block(0, n, n, n).simplified();
    ExprMatrix ll = m.block(n, 0, n, n).simplified();
    ExprMatrix lr = m.block(n, n, n, n).simplified();
    if (!(lr + ul.transpose()).is_symbolically_zero())
        throw Error("g0-skewness violation: lower-right block is not -(upper-left)*");
    return GenEndo{Endo::make(chart, ul), Bivector::make(chart, ur.transpose()),
                   TwoForm::make(chart, ll)};
}

VectorField beta_contract(const Bivector& beta, const OneForm& alpha) {
    require_same_chart(beta.chart, alpha.chart, "beta contraction");
    int n = beta.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        Expr acc = Expr::zero();
        for (int j = 0; j < n; ++j) acc = acc + alpha.comps[j] * beta.comps.at(j, i);
        comps[i] = expr_simplify(acc);
    }
    return VectorField{beta.chart, std::move(comps)};
}

OneForm b_contract(const TwoForm& b, const VectorField& x) {
    require_same_chart(b.chart, x.chart, "B contraction");
    int n = b.chart->dim();
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        Expr acc = Expr::zero();
        for (int j = 0; j < n; ++j) acc = acc + b.comps.at(i, j) * x.comps[j];
        comps[i] = expr_simplify(acc);
    }
    return OneForm{b.chart, std::move(comps)};
}

GenSection gen_endo_apply(const GenEndo& f, const GenSection& a) {
    require_same_chart(f.chart(), a.chart(), "gen_endo_apply");
    VectorField top = endo_apply(f.phi, a.vf);
    VectorField bt = beta_contract(f.beta, a.form);
    OneForm bottom = b_contract(f.b, a.vf);
    OneForm dual = dual_endo_apply(f.phi, a.form);
    int n = f.chart()->dim();
    std::vector<Expr> vcomps(n, Expr::zero()), fcomps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        vcomps[i] = expr_simplify(top.comps[i] + bt.comps[i]);
        fcomps[i] = expr_simplify(bottom.comps[i] - dual.comps[i]);
    }
    return GenSection{VectorField{f.chart(), std::move(vcomps)}, OneForm{f.chart(), std::move(fcomps)}};
}

GenSection courant_bracket(const GenSection& a, const GenSection& c) {
    require_same_chart(a.chart(), c.chart(), "courant_bracket");
    VectorField xy = lie_bracket(a.vf, c.vf);
    OneForm lxg = lie_derivative(a.vf, c.form);
    OneForm lya = lie_derivative(c.vf, a.form);
    Expr scalar = pairing(a.form, c.vf) - pairing(c.form, a.vf);
    OneForm dterm = exterior_derivative(a.chart(), scalar);
    int n = a.chart()->dim();
    std::vector<Expr> fcomps(n, Expr::zero());
    Expr half = Expr::rational(Rational(1, 2));
    for (int i = 0; i < n; ++i)
        fcomps[i] = expr_simplify(lxg.comps[i] - lya.comps[i] + half * dterm.comps[i]);
    return GenSection{xy, OneForm{a.chart(), std::move(fcomps)}};
}

ExprMatrix b_exponential(const TwoForm& b2) {
    int n = b2.chart->dim();
    return ExprMatrix::blocks2x2(ExprMatrix::identity(n), ExprMatrix(n, n), b2.comps,
                                 ExprMatrix::identity(n));
}

ExprMatrix beta_exponential(const Bivector& beta2) {
    int n = beta2.chart->dim();
    return ExprMatrix::blocks2x2(ExprMatrix::identity(n), beta2.comps.transpose(),
                                 ExprMatrix(n, n), ExprMatrix::identity(n));
}

GenEndo b_transform(const GenEndo& f, const TwoForm& b2) {
    require_same_chart(f.chart(), b2.chart, "b_transform");
    TwoForm neg = TwoForm{b2.chart, b2.comps.negated()};
    ExprMatrix conj = b_exponential(b2) * f.matrix() * b_exponential(neg);
    return GenEndo::from_matrix(f.chart(), conj);
}

GenEndo beta_transform(const GenEndo& f, const Bivector& beta2) {
    require_same_chart(f.chart(), beta2.chart, "beta_transform");
    Bivector neg = Bivector{beta2.chart, beta2.comps.negated()};
    ExprMatrix conj = beta_exponential(beta2) * f.matrix() * beta_exponential(neg);
    return GenEndo::from_matrix(f.chart(), conj);
}

GenEndo b_transform_closed_form(const GenEndo& f, const TwoForm& b2) {
    require_same_chart(f.chart(), b2.chart, "b_transform_closed_form");
    // Map-level blocks: phi, q = beta-map, r = own B-map, s = -phi*, with the
    // transform's 2-form map Bm. The transformed blocks are
    //   [[phi - q Bm, q], [Bm phi + phi* Bm + r - Bm q Bm, -phi* + Bm q]].
    const ExprMatrix phi = f.phi.comps;
    const ExprMatrix q = f.beta.comps.transpose();
    const ExprMatrix r = f.b.comps;
    const ExprMatrix bm = b2.comps;
    ExprMatrix ul = (phi - q * bm).simplified();
    ExprMatrix ll = (bm * phi + phi.transpose() * bm + r - bm * q * bm).simplified();
    ExprMatrix lr = (phi.transpose().negated() + bm * q).simplified();
    return GenEndo::from_matrix(f.chart(), ExprMatrix::blocks2x2(ul, q, ll, lr));
}

GenEndo beta_transform_closed_form(const GenEndo& f, const Bivector& beta2) {
    require_same_chart(f.chart(), beta2.chart, "beta_transform_closed_form");
    // With the transform's bivector map bm:
    //   [[phi + bm r, q - phi bm - bm phi* - bm r bm],
    //    [r, -phi* - r bm]]
    // (the trailing upper-right term is -bm r bm).
    const ExprMatrix phi = f.phi.comps;
    const ExprMatrix q = f.beta.comps.transpose();
    const ExprMatrix r = f.b.comps;
    const ExprMatrix bm = beta2.comps.transpose();
    ExprMatrix ul = (phi + bm * r).simplified();
    ExprMatrix ur = (q - phi * bm - bm * phi.transpose() - bm * r * bm).simplified();
    ExprMatrix lr = (phi.transpose().negated() - r * bm).simplified();
    return GenEndo::from_matrix(f.chart(), ExprMatrix::blocks2x2(ul, ur, r, lr));
}

ExprMatrix GenMetric::matrix() const {
    return ExprMatrix::blocks2x2(phi.comps, g1.inverse(), g2.comps, phi.comps.transpose());
}

GenSection GenMetric::apply(const GenSection& a) const {
    ExprMatrix m = matrix();
    std::vector<Expr> stacked(a.vf.comps);
    stacked.insert(stacked.end(), a.form.comps.begin(), a.form.comps.end());
    std::vector<Expr> out = m.apply(stacked);
    int n = phi.chart->dim();
    return GenSection{
        VectorField{phi.chart, std::vector<Expr>(out.begin(), out.begin() + n)},
        OneForm{phi.chart, std::vector<Expr>(out.begin() + n, out.end())}};
}

GenMetric gen_metric_from_riemannian(const Metric& g) {
    return GenMetric{Endo::zero(g.chart), g, g};
}

CheckReport check_gen_metric(const GenMetric& g, const SamplerConfig& cfg) {
    CheckReport rep;
    rep.name = "generalized metric";
    const ChartPtr& chart = g.phi.chart;
    const auto& vars = chart->coords;
    auto frames = frame_sections(chart);

    std::vector<LabeledResidual> iso;
    for (size_t i = 0; i < frames.size(); ++i)
        for (size_t j = i; j < frames.size(); ++j) {
            Expr lhs = g0_pair(g.apply(frames[i]), g.apply(frames[j]));
            Expr rhs = g0_pair(frames[i], frames[j]);
            iso.push_back({"(" + frame_section_label(chart, int(i)) + ", " +
                               frame_section_label(chart, int(j)) + ")",
                           lhs - rhs});
        }
    rep.add(residual_item("g0(G A, G C) = g0(A, C)", iso, vars, cfg));

    ExprMatrix m = g.matrix();
    ExprMatrix sq = (m * m - ExprMatrix::identity(2 * chart->dim())).simplified();
    std::vector<LabeledResidual> invol;
    for (int i = 0; i < sq.rows(); ++i)
        for (int j = 0; j < sq.cols(); ++j)
            invol.push_back({"entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                             sq.at(i, j)});
    rep.add(residual_item("G^2 = I", invol, vars, cfg));

    // Equivalent system: phi^2 = I - sharp_{g1} flat_{g2}, g_i skew w.r.t. phi.
    ExprMatrix eq1 =
        (g.phi.comps * g.phi.comps - ExprMatrix::identity(chart->dim()) + g.g1.inverse() * g.g2.comps)
            .simplified();
    std::vector<LabeledResidual> r1;
    for (int i = 0; i < eq1.rows(); ++i)
        for (int j = 0; j < eq1.cols(); ++j)
            r1.push_back({"entry (" + chart->coords[i] + "," + chart->coords[j] + ")", eq1.at(i, j)});
    rep.add(residual_item("phi^2 = I - sharp_g1 flat_g2", r1, vars, cfg));

    for (int which = 0; which < 2; ++which) {
        const Metric& gi = which == 0 ? g.g1 : g.g2;
        ExprMatrix skew = (gi.comps * g.phi.comps + g.phi.comps.transpose() * gi.comps).simplified();
        std::vector<LabeledResidual> rs;
        for (int i = 0; i < skew.rows(); ++i)
            for (int j = 0; j < skew.cols(); ++j)
                rs.push_back({"entry (" + chart->coords[i] + "," + chart->coords[j] + ")",
                              skew.at(i, j)});
        rep.add(residual_item(std::string("g") + (which == 0 ? "1" : "2") +
                                  "(X, phi Y) + g" + (which == 0 ? "1" : "2") + "(phi X, Y) = 0",
                              rs, vars, cfg));
    }

    auto sig1 = g.g1.signature(cfg.seed);
    auto sig2 = g.g2.signature(cfg.seed);
    rep.add(CheckItem::info("signature of g1",
                            "(" + std::to_string(sig1.first) + "," + std::to_string(sig1.second) + ")"));
    rep.add(CheckItem::info("signature of g2",
                            "(" + std::to_string(sig2.first) + "," + std::to_string(sig2.second) + ")"));
    return rep;
}

} // namespace paracalc

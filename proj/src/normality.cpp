#include "paracalc/normality.hpp"

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

namespace {

void require_apc(const APC& s, const SamplerConfig& cfg, const char* what) {
    if (!check_apc(s, cfg).passed())
        throw PreconditionError(std::string(what) + ": '" + s.name +
                                "' fails the almost paracontact axioms");
}

} // namespace

CheckReport classical_normality(const APC& s, const SamplerConfig& cfg) {
    require_apc(s, cfg, "classical_normality");
    CheckReport rep;
    rep.name = "normality(classical) " + s.name;
    const ChartPtr& chart = s.chart();
    const auto& vars = chart->coords;
    int n = chart->dim();

    TwoForm deta = exterior_derivative(s.eta);
    std::vector<LabeledResidual> c1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VectorField nij = nijenhuis(s.phi, VectorField::coordinate(chart, i),
                                        VectorField::coordinate(chart, j));
            for (int k = 0; k < n; ++k)
                c1.push_back({"(d/d" + chart->coords[i] + ", d/d" + chart->coords[j] + "), d/d" +
                                  chart->coords[k] + "-component",
                              expr_simplify(nij.comps[k] - deta.comps.at(i, j) * s.xi.comps[k])});
        }
    rep.add(residual_item("N_phi(X,Y) - deta(X,Y) xi = 0", c1, vars, cfg));

    OneForm lxe = lie_derivative(s.xi, s.eta);
    std::vector<LabeledResidual> c2;
    for (int i = 0; i < n; ++i)
        c2.push_back({"d" + chart->coords[i] + "-component", lxe.comps[i]});
    rep.add(residual_item("L_xi eta = 0", c2, vars, cfg));

    Endo lxp = lie_derivative(s.xi, s.phi);
    std::vector<LabeledResidual> c3;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            c3.push_back({"(L_xi phi) d/d" + chart->coords[j] + ", d/d" + chart->coords[i] +
                              "-component",
                          lxp.comps.at(i, j)});
    rep.add(residual_item("L_xi phi = 0", c3, vars, cfg));

    std::vector<LabeledResidual> c4;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VectorField xi_f = VectorField::coordinate(chart, i);
            VectorField xj_f = VectorField::coordinate(chart, j);
            OneForm li = lie_derivative(endo_apply(s.phi, xi_f), s.eta);
            OneForm lj = lie_derivative(endo_apply(s.phi, xj_f), s.eta);
            c4.push_back({"(d/d" + chart->coords[i] + ", d/d" + chart->coords[j] + ")",
                          expr_simplify(pairing(li, xj_f) - pairing(lj, xi_f))});
        }
    rep.add(residual_item("(L_{phi X} eta) Y - (L_{phi Y} eta) X = 0", c4, vars, cfg));
    return rep;
}

AdaptedProduct adapted_product(const APC& s, const SamplerConfig& cfg) {
    require_apc(s, cfg, "adapted_product");
    ProductChart pc = product_with_line(s.chart());
    int n1 = pc.chart->dim();

    VectorField xi_l = lift(pc, s.xi);
    OneForm eta_l = lift(pc, s.eta);
    Endo phi_l = lift(pc, s.phi);
    VectorField dt = VectorField::coordinate(pc.chart, n1 - 1);
    OneForm dtf = OneForm::coordinate(pc.chart, n1 - 1);

    Bivector beta = wedge(xi_l, dt);
    TwoForm b = wedge(eta_l, dtf);
    GenEndo p = GenEndo::make(phi_l, beta, b);

    AdaptedProduct out{pc, p, xi_l, eta_l, product_block_conditions(p, cfg)};
    out.block_report.name = "adapted-product blocks " + s.name;
    if (pc.renamed)
        out.block_report.notes.push_back("line coordinate renamed to '" + pc.time_coord +
                                         "' (name collision on the base chart)");
    return out;
}

GenSection courant_nijenhuis(const GenEndo& p, const GenSection& a, const GenSection& c) {
    require_same_chart(p.chart(), a.chart(), "courant_nijenhuis");
    require_same_chart(p.chart(), c.chart(), "courant_nijenhuis");
    GenSection pa = gen_endo_apply(p, a);
    GenSection pc = gen_endo_apply(p, c);
    GenSection t1 = courant_bracket(pa, pc);
    GenSection t2 = gen_endo_apply(p, gen_endo_apply(p, courant_bracket(a, c)));
    GenSection t3 = gen_endo_apply(p, courant_bracket(pa, c));
    GenSection t4 = gen_endo_apply(p, courant_bracket(a, pc));
    int n = p.chart()->dim();
    std::vector<Expr> v(n), f(n);
    for (int i = 0; i < n; ++i) {
        v[i] = expr_simplify(t1.vf.comps[i] + t2.vf.comps[i] - t3.vf.comps[i] - t4.vf.comps[i]);
        f[i] = expr_simplify(t1.form.comps[i] + t2.form.comps[i] - t3.form.comps[i] -
                             t4.form.comps[i]);
    }
    return GenSection{VectorField{p.chart(), std::move(v)}, OneForm{p.chart(), std::move(f)}};
}

CheckReport generalized_normality(const APC& s, const SamplerConfig& cfg) {
    AdaptedProduct ap = adapted_product(s, cfg);
    CheckReport rep;
    rep.name = "normality(generalized) " + s.name;
    rep.notes = ap.block_report.notes;
    const ChartPtr& chart = ap.product.chart;
    const auto& vars = chart->coords;
    int n = chart->dim();

    auto frames = frame_sections(chart);
    std::vector<LabeledResidual> res;
    for (size_t a = 0; a < frames.size(); ++a)
        for (size_t c = a + 1; c < frames.size(); ++c) {
            GenSection np = courant_nijenhuis(ap.p, frames[a], frames[c]);
            std::string pair = "(" + frame_section_label(chart, int(a)) + ", " +
                               frame_section_label(chart, int(c)) + ")";
            for (int i = 0; i < n; ++i) {
                res.push_back({pair + ", d/d" + chart->coords[i] + "-component", np.vf.comps[i]});
                res.push_back({pair + ", d" + chart->coords[i] + "-component", np.form.comps[i]});
            }
        }
    rep.add(residual_item("N_P = 0 on frame-section pairs", res, vars, cfg));

    // The adapted structure must itself satisfy the product block system.
    for (const auto& item : ap.block_report.items) {
        CheckItem copy = item;
        copy.label = "blocks: " + copy.label;
        rep.add(std::move(copy));
    }
    return rep;
}

ProductStructures product_structures(const APC& s, const SamplerConfig& cfg) {
    require_apc(s, cfg, "product_structures");
    const ChartPtr& chart = s.chart();
    const auto& vars = chart->coords;
    int n = chart->dim();

    ExprMatrix k = tensor_product(s.eta, s.xi).comps;
    Endo e1 = Endo::make(chart, s.phi.comps - k);
    Endo e2 = Endo::make(chart, s.phi.comps + k);

    CheckReport rep;
    rep.name = "product structures " + s.name;
    rep.add(residual_item("E1^2 = I",
                          matrix_residuals((e1.comps * e1.comps - ExprMatrix::identity(n)).simplified(),
                                           "entry"),
                          vars, cfg));
    rep.add(residual_item("E2^2 = I",
                          matrix_residuals((e2.comps * e2.comps - ExprMatrix::identity(n)).simplified(),
                                           "entry"),
                          vars, cfg));

    bool nij_pass = true;
    for (int which = 0; which < 2; ++which) {
        const Endo& e = which == 0 ? e1 : e2;
        std::vector<LabeledResidual> res;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                VectorField nij = nijenhuis(e, VectorField::coordinate(chart, i),
                                            VectorField::coordinate(chart, j));
                for (int kk = 0; kk < n; ++kk)
                    res.push_back({"(d/d" + chart->coords[i] + ", d/d" + chart->coords[j] +
                                       "), d/d" + chart->coords[kk] + "-component",
                                   nij.comps[kk]});
            }
        CheckItem item = residual_item(std::string("N_E") + (which == 0 ? "1" : "2") + " = 0", res,
                                       vars, cfg);
        nij_pass = nij_pass && !item.failed();
        rep.add(item);
    }

    OneForm lxe = lie_derivative(s.xi, s.eta);
    std::vector<LabeledResidual> lxe_res;
    for (int i = 0; i < n; ++i)
        lxe_res.push_back({"d" + chart->coords[i] + "-component", lxe.comps[i]});
    CheckItem lxe_item = residual_item("L_xi eta = 0", lxe_res, vars, cfg);
    lxe_item.counted = false;
    bool lxe_pass = !lxe_item.failed();
    rep.add(lxe_item);

    // eta applied to N_E1(phi X, Y): when N_E1 = 0 and L_xi eta = 0 the
    // displayed Lie-derivative combination must vanish.
    std::vector<LabeledResidual> disp;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            VectorField xi_f = VectorField::coordinate(chart, i);
            VectorField xj_f = VectorField::coordinate(chart, j);
            VectorField phix = endo_apply(s.phi, xi_f);
            VectorField phi2x = endo_apply(s.phi, phix);
            VectorField phiy = endo_apply(s.phi, xj_f);
            Expr lhs = pairing(lie_derivative(phi2x, s.eta), xj_f) -
                       pairing(lie_derivative(phiy, s.eta), phix);
            disp.push_back({"(X = d/d" + chart->coords[i] + ", Y = d/d" + chart->coords[j] + ")",
                            expr_simplify(lhs)});
        }
    CheckItem disp_item = residual_item("(L_{phi^2 X} eta) Y - (L_{phi Y} eta)(phi X) = 0", disp,
                                        vars, cfg);
    disp_item.counted = false;
    bool disp_pass = !disp_item.failed();
    rep.add(disp_item);
    rep.add(implication_item("N_E1 = 0 and L_xi eta = 0 => (L_{phi^2 X} eta) Y = (L_{phi Y} eta)(phi X)",
                             nij_pass && lxe_pass, disp_pass));

    return ProductStructures{e1, e2, rep};
}

CheckReport normality_equivalence(const APC& s, const SamplerConfig& cfg) {
    CheckReport classical = classical_normality(s, cfg);
    CheckReport generalized = generalized_normality(s, cfg);
    bool c_normal = classical.passed();
    bool g_normal = generalized.passed();

    CheckReport rep;
    rep.name = "normality equivalence " + s.name;
    rep.add(CheckItem::info("classical verdict", verdict_name(classical.verdict())));
    rep.add(CheckItem::info("generalized verdict", verdict_name(generalized.verdict())));
    CheckItem agree;
    agree.label = "classical normal <=> generalized normal";
    agree.tier = (c_normal == g_normal) ? ZeroTier::SymbolicZero : ZeroTier::NonZero;
    if (c_normal != g_normal) {
        agree.note = "checkers disagree";
        for (const auto& it : classical.items)
            if (it.failed()) rep.notes.push_back("classical failing item: " + it.label);
        for (const auto& it : generalized.items)
            if (it.failed()) rep.notes.push_back("generalized failing item: " + it.label);
    }
    rep.add(agree);
    return rep;
}

} // namespace paracalc

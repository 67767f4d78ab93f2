#include "paracalc/morphisms.hpp"

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

Diffeo Diffeo::make(const std::string& name, const ChartPtr& source, const ChartPtr& target,
                    std::vector<Expr> forward, std::vector<Expr> inverse) {
    if (source->dim() != target->dim())
        throw DimensionError("diffeomorphism between charts of different dimension");
    if (int(forward.size()) != target->dim() || int(inverse.size()) != source->dim())
        throw DimensionError("diffeomorphism '" + name + "': wrong component count");
    Diffeo f{name, source, target, std::move(forward), std::move(inverse)};

    // forward o inverse = id (target), inverse o forward = id (source)
    std::map<std::string, Expr> source_to_forward; // substitute source coords by inverse exprs
    for (int i = 0; i < source->dim(); ++i) source_to_forward.emplace(source->coords[i], f.inverse[i]);
    std::map<std::string, Expr> target_to_inverse;
    for (int i = 0; i < target->dim(); ++i) target_to_inverse.emplace(target->coords[i], f.forward[i]);

    for (int i = 0; i < target->dim(); ++i) {
        // forward_i(inverse(target coords)) must equal target coord i
        Expr comp = f.forward[i].substitute(source_to_forward);
        if (!is_symbolically_zero(comp - Expr::coord(target->coords[i])))
            throw Error("map '" + name + "': forward o inverse is not the identity in coordinate " +
                        target->coords[i]);
    }
    for (int i = 0; i < source->dim(); ++i) {
        Expr comp = f.inverse[i].substitute(target_to_inverse);
        if (!is_symbolically_zero(comp - Expr::coord(source->coords[i])))
            throw Error("map '" + name + "': inverse o forward is not the identity in coordinate " +
                        source->coords[i]);
    }

    // Jacobian determinant symbolically nonzero.
    int n = source->dim();
    ExprMatrix jac(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac.at(i, j) = f.forward[i].diff(source->coords[j]);
    if (is_symbolically_zero(jac.determinant()))
        throw Error("map '" + name + "': Jacobian determinant is symbolically zero");
    return f;
}

Diffeo compose(const Diffeo& g, const Diffeo& f) {
    require_same_chart(f.target, g.source, "compose");
    std::map<std::string, Expr> f_fwd; // g.source coords -> f.forward exprs
    for (int i = 0; i < g.source->dim(); ++i) f_fwd.emplace(g.source->coords[i], f.forward[i]);
    std::map<std::string, Expr> g_inv; // f.target coords -> g.inverse exprs
    for (int i = 0; i < f.target->dim(); ++i) g_inv.emplace(f.target->coords[i], g.inverse[i]);

    std::vector<Expr> fwd, inv;
    for (const auto& e : g.forward) fwd.push_back(expr_simplify(e.substitute(f_fwd)));
    for (const auto& e : f.inverse) inv.push_back(expr_simplify(e.substitute(g_inv)));
    return Diffeo::make(g.name + " o " + f.name, f.source, g.target, fwd, inv);
}

VectorField pushforward(const Diffeo& f, const VectorField& x) {
    require_same_chart(f.source, x.chart, "pushforward");
    int n = f.source->dim();
    std::map<std::string, Expr> to_target; // source coords in terms of target coords
    for (int i = 0; i < n; ++i) to_target.emplace(f.source->coords[i], f.inverse[i]);
    std::vector<Expr> comps(n, Expr::zero());
    for (int i = 0; i < n; ++i) {
        Expr acc = Expr::zero();
        for (int j = 0; j < n; ++j)
            acc = acc + f.forward[i].diff(f.source->coords[j]) * x.comps[j];
        comps[i] = expr_simplify(acc.substitute(to_target));
    }
    return VectorField{f.target, std::move(comps)};
}

OneForm pullback(const Diffeo& f, const OneForm& alpha) {
    require_same_chart(f.target, alpha.chart, "pullback");
    int n = f.source->dim();
    std::map<std::string, Expr> to_source; // target coords in terms of source coords
    for (int i = 0; i < n; ++i) to_source.emplace(f.target->coords[i], f.forward[i]);
    std::vector<Expr> comps(n, Expr::zero());
    for (int j = 0; j < n; ++j) {
        Expr acc = Expr::zero();
        for (int i = 0; i < n; ++i)
            acc = acc + alpha.comps[i].substitute(to_source) * f.forward[i].diff(f.source->coords[j]);
        comps[j] = expr_simplify(acc);
    }
    return OneForm{f.source, std::move(comps)};
}

CheckReport check_paracontactomorphism(const Diffeo& f, const APC& s1, const APC& s2,
                                       const SamplerConfig& cfg) {
    require_same_chart(f.source, s1.chart(), "check_paracontactomorphism");
    require_same_chart(f.target, s2.chart(), "check_paracontactomorphism");
    CheckReport rep;
    rep.name = "paracontactomorphism " + f.name + " : " + s1.name + " -> " + s2.name;
    std::vector<std::string> vars = f.target->coords;
    int n = f.source->dim();

    std::vector<LabeledResidual> intertwine;
    for (int j = 0; j < n; ++j) {
        VectorField ej = VectorField::coordinate(f.source, j);
        VectorField lhs = endo_apply(s2.phi, pushforward(f, ej));
        VectorField rhs = pushforward(f, endo_apply(s1.phi, ej));
        for (int i = 0; i < n; ++i)
            intertwine.push_back({"X = d/d" + f.source->coords[j] + ", d/d" + f.target->coords[i] +
                                      "-component",
                                  expr_simplify(lhs.comps[i] - rhs.comps[i])});
    }
    rep.add(residual_item("phi2 o f_* = f_* o phi1", intertwine, vars, cfg));

    VectorField push_xi = pushforward(f, s1.xi);
    std::vector<LabeledResidual> xi_res;
    for (int i = 0; i < n; ++i)
        xi_res.push_back({"d/d" + f.target->coords[i] + "-component",
                          expr_simplify(push_xi.comps[i] - s2.xi.comps[i])});
    CheckItem i2 = residual_item("f_* xi1 = xi2", xi_res, vars, cfg);
    rep.add(i2);

    bool defining_pass = !rep.items[0].failed() && !rep.items[1].failed();

    OneForm pulled = pullback(f, s2.eta);
    std::vector<LabeledResidual> eta_res;
    for (int i = 0; i < n; ++i)
        eta_res.push_back({"d" + f.source->coords[i] + "-component",
                           expr_simplify(pulled.comps[i] - s1.eta.comps[i])});
    CheckItem implied = residual_item("f* eta2 = eta1 (implied)", eta_res, f.source->coords, cfg);
    bool implied_pass = !implied.failed();
    rep.add(implied);

    std::vector<LabeledResidual> dual;
    for (int k = 0; k < n; ++k) {
        OneForm dk = OneForm::coordinate(f.target, k);
        OneForm lhs = dual_endo_apply(s1.phi, pullback(f, dk));
        OneForm rhs = pullback(f, dual_endo_apply(s2.phi, dk));
        for (int i = 0; i < n; ++i)
            dual.push_back({"alpha = d" + f.target->coords[k] + ", d" + f.source->coords[i] +
                                "-component",
                            expr_simplify(lhs.comps[i] - rhs.comps[i])});
    }
    rep.add(residual_item("phi1* o f* = f* o phi2*", dual, f.source->coords, cfg));

    rep.add(implication_item("defining identities => f* eta2 = eta1", defining_pass, implied_pass));
    return rep;
}

GenSection induced_gen_map(const Diffeo& f, const GenSection& a) {
    require_same_chart(f.source, a.chart(), "induced_gen_map");
    // (f^{-1})* alpha: pullback along the inverse map, landing on the target.
    Diffeo finv{"inverse " + f.name, f.target, f.source, f.inverse, f.forward};
    return GenSection{pushforward(f, a.vf), pullback(finv, a.form)};
}

CheckReport check_gen_commutation(const Diffeo& f, const APC& s1, const APC& s2,
                                  const SamplerConfig& cfg) {
    require_same_chart(f.source, s1.chart(), "check_gen_commutation");
    require_same_chart(f.target, s2.chart(), "check_gen_commutation");
    CheckReport rep;
    rep.name = "generalized commutation " + f.name + " : " + s1.name + " -> " + s2.name;
    const auto& vars = f.target->coords;
    int n = f.source->dim();

    GenEndo phi1 = GenEndo::diagonal(s1.phi);
    GenEndo phi2 = GenEndo::diagonal(s2.phi);
    auto frames = frame_sections(f.source);

    std::vector<LabeledResidual> comm;
    for (size_t k = 0; k < frames.size(); ++k) {
        GenSection lhs = gen_endo_apply(phi2, induced_gen_map(f, frames[k]));
        GenSection rhs = induced_gen_map(f, gen_endo_apply(phi1, frames[k]));
        for (int i = 0; i < n; ++i) {
            comm.push_back({"A = " + frame_section_label(f.source, int(k)) + ", d/d" +
                                f.target->coords[i] + "-component",
                            expr_simplify(lhs.vf.comps[i] - rhs.vf.comps[i])});
            comm.push_back({"A = " + frame_section_label(f.source, int(k)) + ", d" +
                                f.target->coords[i] + "-component",
                            expr_simplify(lhs.form.comps[i] - rhs.form.comps[i])});
        }
    }
    rep.add(residual_item("Phi2 o f~ = f~ o Phi1", comm, vars, cfg));

    GenSection fxi = induced_gen_map(f, GenSection::vector(s1.xi));
    std::vector<LabeledResidual> anchor1;
    for (int i = 0; i < n; ++i) {
        anchor1.push_back({"d/d" + f.target->coords[i] + "-component",
                           expr_simplify(fxi.vf.comps[i] - s2.xi.comps[i])});
        anchor1.push_back({"d" + f.target->coords[i] + "-component", fxi.form.comps[i]});
    }
    rep.add(residual_item("f~(xi1 + 0) = xi2 + 0", anchor1, vars, cfg));

    GenSection feta = induced_gen_map(f, GenSection::covector(s1.eta));
    std::vector<LabeledResidual> anchor2;
    for (int i = 0; i < n; ++i) {
        anchor2.push_back({"d/d" + f.target->coords[i] + "-component", feta.vf.comps[i]});
        anchor2.push_back({"d" + f.target->coords[i] + "-component",
                           expr_simplify(feta.form.comps[i] - s2.eta.comps[i])});
    }
    rep.add(residual_item("f~(0 + eta1) = 0 + eta2", anchor2, vars, cfg));
    return rep;
}

} // namespace paracalc

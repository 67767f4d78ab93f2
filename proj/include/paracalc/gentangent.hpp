#pragma once

#include "paracalc/calculus.hpp"
#include "paracalc/report.hpp"

namespace paracalc {

// Section X + alpha of TM + T*M.
struct GenSection {
    VectorField vf;
    OneForm form;

    static GenSection make(VectorField x, OneForm alpha);
    static GenSection vector(const VectorField& x) { return make(x, OneForm::zero(x.chart)); }
    static GenSection covector(const OneForm& a) { return make(VectorField::zero(a.chart), a); }
    const ChartPtr& chart() const { return vf.chart; }
    GenSection simplified() const { return GenSection{vf.simplified(), form.simplified()}; }
    std::string str() const { return vf.str() + " + " + form.str(); }
};

// The 2n coordinate frame sections d/dx^i + 0 and 0 + dx^i.
std::vector<GenSection> frame_sections(const ChartPtr& chart);
std::string frame_section_label(const ChartPtr& chart, int k);

// Neutral pairing g0(X+alpha, Y+gamma) = (alpha(Y) + gamma(X)) / 2.
Expr g0_pair(const GenSection& a, const GenSection& c);

// Block endomorphism of TM + T*M stored as (phi, beta, B); the lower-right
// block is always -phi*. Contractions: beta acts on covectors through its
// first slot, beta(alpha)^i = sum_j alpha_j beta^{ji}; B acts on vectors
// through its second slot, B(X)_i = sum_j B_{ij} X^j. With these choices the
// 2n x 2n component matrix is [[phi, beta^T], [B, -phi^T]].
struct GenEndo {
    Endo phi;
    Bivector beta;
    TwoForm b;

    static GenEndo make(Endo phi, Bivector beta, TwoForm b);
    static GenEndo diagonal(const Endo& phi); // beta = B = 0
    const ChartPtr& chart() const { return phi.chart; }

    ExprMatrix matrix() const;
    // Re-extracts blocks; throws if the lower-right block is not -phi^T
    // (g0-skewness violation) or the off-diagonal blocks lost antisymmetry.
    static GenEndo from_matrix(const ChartPtr& chart, const ExprMatrix& m);
};

VectorField beta_contract(const Bivector& beta, const OneForm& alpha);
OneForm b_contract(const TwoForm& b, const VectorField& x);

GenSection gen_endo_apply(const GenEndo& f, const GenSection& a);

// [X+alpha, Y+gamma] = [X,Y] + L_X gamma - L_Y alpha + d(alpha(Y)-gamma(X))/2
GenSection courant_bracket(const GenSection& a, const GenSection& c);

// e^B and e^beta as 2n x 2n operators.
ExprMatrix b_exponential(const TwoForm& b2);
ExprMatrix beta_exponential(const Bivector& beta2);

// Conjugation e^{B} Phi e^{-B} on the block matrix, blocks re-extracted.
GenEndo b_transform(const GenEndo& f, const TwoForm& b2);
GenEndo beta_transform(const GenEndo& f, const Bivector& beta2);

// Closed-form transformed blocks, used as an independent cross-check of the
// conjugation path; the beta upper-right block ends in -beta B beta.
GenEndo b_transform_closed_form(const GenEndo& f, const TwoForm& b2);
GenEndo beta_transform_closed_form(const GenEndo& f, const Bivector& beta2);

// Generalized metric candidate ((phi, sharp_{g1}), (flat_{g2}, phi*)).
struct GenMetric {
    Endo phi;
    Metric g1;
    Metric g2;

    ExprMatrix matrix() const; // [[phi, g1^{-1}], [g2, phi^T]]
    GenSection apply(const GenSection& a) const;
};

// G_g: phi = 0, g1 = g2 = g.
GenMetric gen_metric_from_riemannian(const Metric& g);

// Conditions g0(GA, GC) = g0(A, C) and G^2 = I on frame sections, plus the
// equivalent block system and the signatures of g1, g2.
CheckReport check_gen_metric(const GenMetric& g, const SamplerConfig& cfg = {});

} // namespace paracalc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace paracalc;
using namespace paracalc::testing;

namespace {

const ChartPtr& r3() { return builtin_catalog().r3; }

GenSection sec(std::initializer_list<const char*> v, std::initializer_list<const char*> f) {
    std::vector<Expr> vc, fc;
    for (const char* s : v) vc.push_back(parse_expr(s));
    for (const char* s : f) fc.push_back(parse_expr(s));
    return GenSection::make(VectorField::make(r3(), vc), OneForm::make(r3(), fc));
}

} // namespace

TEST_CASE("neutral pairing") {
    // |xi + eta|^2 = eta(xi) = 1 on the flat structure
    const auto& cat = builtin_catalog();
    GenSection xieta = GenSection::make(cat.s0.xi, cat.s0.eta);
    CHECK(symbolic_equal(g0_pair(xieta, xieta), Expr::one()));

    CHECK(is_symbolically_zero(
        g0_pair(sec({"x", "y", "exp(z)"}, {"0", "0", "0"}), sec({"1", "2", "3"}, {"0", "0", "0"}))));

    CHECK(symbolic_equal(g0_pair(sec({"1", "0", "0"}, {"0", "1", "0"}),
                                 sec({"0", "1", "0"}, {"1", "0", "0"})),
                         Expr::one()));
}

TEST_CASE("generalized endomorphism application") {
    const auto& cat = builtin_catalog();
    GenEndo phi = GenEndo::diagonal(cat.s0.phi);

    // Phi(d/dx + dx) = d/dy - dy
    GenSection out = gen_endo_apply(phi, sec({"1", "0", "0"}, {"1", "0", "0"}));
    CHECK(vf_equal(out.vf, VectorField::coordinate(r3(), 1)));
    CHECK(symbolic_equal(out.form.comps[1], Expr::integer(-1)));
    CHECK(is_symbolically_zero(out.form.comps[0]));

    CHECK(gen_section_zero(gen_endo_apply(phi, sec({"0", "0", "0"}, {"0", "0", "0"}))));

    // g0-skewness holds structurally for any blocks
    ExprGen gen(31, {"x", "y", "z"});
    for (int rep = 0; rep < 5; ++rep) {
        GenEndo e{Endo::make(r3(), gen.square(r3())),
                  Bivector::make(r3(), gen.antisymmetric(r3())),
                  TwoForm::make(r3(), gen.antisymmetric(r3()))};
        auto frames = frame_sections(r3());
        for (size_t a = 0; a < frames.size(); ++a)
            for (size_t c = a; c < frames.size(); ++c)
                CHECK(is_symbolically_zero(g0_pair(gen_endo_apply(e, frames[a]), frames[c]) +
                                           g0_pair(frames[a], gen_endo_apply(e, frames[c]))));
    }
}

TEST_CASE("block matrix round trip and skewness guard") {
    ExprGen gen(77, {"x", "y", "z"});
    GenEndo e{Endo::make(r3(), gen.square(r3())), Bivector::make(r3(), gen.antisymmetric(r3())),
              TwoForm::make(r3(), gen.antisymmetric(r3()))};
    GenEndo back = GenEndo::from_matrix(r3(), e.matrix());
    CHECK(matrix_zero((back.matrix() - e.matrix()).simplified()));

    ExprMatrix bad = e.matrix();
    bad.at(3, 3) = bad.at(3, 3) + Expr::one(); // breaks lower-right = -phi^T
    CHECK_THROWS_AS(GenEndo::from_matrix(r3(), bad), Error);
}

TEST_CASE("courant bracket") {
    CHECK(gen_section_zero(courant_bracket(sec({"1", "0", "0"}, {"0", "0", "0"}),
                                           sec({"0", "1", "0"}, {"0", "0", "0"}))));

    // [d/dx + 0, 0 + x dy] = 0 + dy
    GenSection r = courant_bracket(sec({"1", "0", "0"}, {"0", "0", "0"}),
                                   sec({"0", "0", "0"}, {"0", "x", "0"}));
    CHECK(vf_equal(r.vf, VectorField::zero(r3())));
    CHECK(form_equal(r.form, OneForm::make(r3(), {Expr::zero(), Expr::one(), Expr::zero()})));

    GenSection a = sec({"x*y", "sin(z)", "1"}, {"exp(x)", "0", "y"});
    CHECK(gen_section_zero(courant_bracket(a, a)));

    // antisymmetry on frame pairs and on random sections
    auto frames = frame_sections(r3());
    for (size_t i = 0; i < frames.size(); ++i)
        for (size_t j = i; j < frames.size(); ++j) {
            GenSection ab = courant_bracket(frames[i], frames[j]);
            GenSection ba = courant_bracket(frames[j], frames[i]);
            for (int k = 0; k < 3; ++k) {
                CHECK(is_symbolically_zero(ab.vf.comps[k] + ba.vf.comps[k]));
                CHECK(is_symbolically_zero(ab.form.comps[k] + ba.form.comps[k]));
            }
        }
    ExprGen gen(12345, {"x", "y", "z"});
    for (int rep = 0; rep < 50; ++rep) {
        GenSection p = gen.section(r3());
        GenSection q = gen.section(r3());
        GenSection ab = courant_bracket(p, q);
        GenSection ba = courant_bracket(q, p);
        for (int k = 0; k < 3; ++k) {
            CHECK(is_symbolically_zero(ab.vf.comps[k] + ba.vf.comps[k]));
            CHECK(is_symbolically_zero(ab.form.comps[k] + ba.form.comps[k]));
        }
    }
}

TEST_CASE("b and beta exponentials preserve the neutral pairing") {
    ExprGen gen(55, {"x", "y", "z"});
    TwoForm b2 = TwoForm::make(r3(), gen.antisymmetric(r3()));
    Bivector beta2 = Bivector::make(r3(), gen.antisymmetric(r3()));
    ExprMatrix eb = b_exponential(b2);
    ExprMatrix ebeta = beta_exponential(beta2);

    auto apply = [&](const ExprMatrix& m, const GenSection& s) {
        std::vector<Expr> stacked(s.vf.comps);
        stacked.insert(stacked.end(), s.form.comps.begin(), s.form.comps.end());
        auto out = m.apply(stacked);
        return GenSection{VectorField{r3(), {out[0], out[1], out[2]}},
                          OneForm{r3(), {out[3], out[4], out[5]}}};
    };
    auto frames = frame_sections(r3());
    for (size_t i = 0; i < frames.size(); ++i)
        for (size_t j = i; j < frames.size(); ++j) {
            CHECK(is_symbolically_zero(g0_pair(apply(eb, frames[i]), apply(eb, frames[j])) -
                                       g0_pair(frames[i], frames[j])));
            CHECK(is_symbolically_zero(g0_pair(apply(ebeta, frames[i]), apply(ebeta, frames[j])) -
                                       g0_pair(frames[i], frames[j])));
        }
}

TEST_CASE("transforms: identity, inverse, closed-form cross-check") {
    const auto& cat = builtin_catalog();
    GenEndo phi = GenEndo::diagonal(cat.s1.phi);

    // zero transforms change nothing
    CHECK(matrix_zero((b_transform(phi, TwoForm::zero(r3())).matrix() - phi.matrix()).simplified()));
    CHECK(matrix_zero(
        (beta_transform(phi, Bivector::zero(r3())).matrix() - phi.matrix()).simplified()));

    ExprGen gen(2025, {"x", "y", "z"});
    for (int rep = 0; rep < 10; ++rep) {
        GenEndo e{Endo::make(r3(), gen.square(r3())),
                  Bivector::make(r3(), gen.antisymmetric(r3())),
                  TwoForm::make(r3(), gen.antisymmetric(r3()))};
        TwoForm b2 = TwoForm::make(r3(), gen.antisymmetric(r3()));
        Bivector beta2 = Bivector::make(r3(), gen.antisymmetric(r3()));

        // conjugation inverse
        TwoForm nb2{r3(), b2.comps.negated()};
        Bivector nbeta2{r3(), beta2.comps.negated()};
        CHECK(matrix_zero(
            (b_transform(b_transform(e, b2), nb2).matrix() - e.matrix()).simplified()));
        CHECK(matrix_zero(
            (beta_transform(beta_transform(e, beta2), nbeta2).matrix() - e.matrix()).simplified()));

        // closed-form blocks match literal conjugation on full block structures
        CHECK(matrix_zero(
            (b_transform(e, b2).matrix() - b_transform_closed_form(e, b2).matrix()).simplified()));
        CHECK(matrix_zero((beta_transform(e, beta2).matrix() -
                           beta_transform_closed_form(e, beta2).matrix())
                              .simplified()));

        // also with the transform equal to the structure's own blocks
        CHECK(matrix_zero(
            (b_transform(e, e.b).matrix() - b_transform_closed_form(e, e.b).matrix()).simplified()));
        CHECK(matrix_zero((beta_transform(e, e.beta).matrix() -
                           beta_transform_closed_form(e, e.beta).matrix())
                              .simplified()));
    }

    // lower-left block of Phi_B for diagonal Phi: component matrix
    // B2 phi + phi^T B2, i.e. (LL X)(Y) = -(B2(phi X, Y) + B2(X, phi Y)).
    TwoForm b2 = TwoForm::make(r3(), gen.antisymmetric(r3()));
    GenEndo tb = b_transform(GenEndo::diagonal(cat.s0.phi), b2);
    const ExprMatrix& phi0 = cat.s0.phi.comps;
    ExprMatrix expected = (b2.comps * phi0 + phi0.transpose() * b2.comps).simplified();
    CHECK(matrix_zero((tb.b.comps - expected).simplified()));
}

TEST_CASE("generalized metric") {
    const auto& cat = builtin_catalog();
    const Metric& g = *cat.s0.g;
    GenMetric gm = gen_metric_from_riemannian(g);

    // G(d/dz + 0) = 0 + dz and G(0 + dz) = d/dz + 0
    GenSection a = gm.apply(sec({"0", "0", "1"}, {"0", "0", "0"}));
    CHECK(vf_equal(a.vf, VectorField::zero(r3())));
    CHECK(symbolic_equal(a.form.comps[2], Expr::one()));
    GenSection b = gm.apply(sec({"0", "0", "0"}, {"0", "0", "1"}));
    CHECK(symbolic_equal(b.vf.comps[2], Expr::one()));
    CHECK(form_equal(b.form, OneForm::zero(r3())));

    CheckReport rep = check_gen_metric(gm);
    CHECK(rep.verdict() == Verdict::Pass);
    CHECK(rep.find("signature of g1")->note == "(2,1)");

    // phi = identity with euclidean legs fails the block condition
    Metric euclid = Metric::diagonal(r3(), {Expr::one(), Expr::one(), Expr::one()});
    GenMetric badgm{Endo::identity(r3()), euclid, euclid};
    CheckReport bad = check_gen_metric(badgm);
    CHECK(bad.verdict() == Verdict::Fail);
    CHECK(bad.find("phi^2 = I - sharp_g1 flat_g2")->failed());

    // non-constant metric legs pass too
    Metric gy = Metric::diagonal(
        r3(), {Expr::one() + pow(Expr::coord("y"), 2), Expr::integer(-1), Expr::one()});
    CHECK(check_gen_metric(gen_metric_from_riemannian(gy)).verdict() == Verdict::Pass);
}

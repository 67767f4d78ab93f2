#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracalc/morphisms.hpp"
#include "test_support.hpp"

using namespace paracalc;
using namespace paracalc::testing;

namespace {

const ChartPtr& r3() { return builtin_catalog().r3; }

Diffeo swap_map() {
    return Diffeo::make("swap", r3(), r3(),
                        {Expr::coord("y"), Expr::coord("x"), Expr::coord("z")},
                        {Expr::coord("y"), Expr::coord("x"), Expr::coord("z")});
}

Diffeo shift_map() {
    return Diffeo::make("shift", r3(), r3(),
                        {Expr::coord("x") + Expr::one(), Expr::coord("y"), Expr::coord("z")},
                        {Expr::coord("x") - Expr::one(), Expr::coord("y"), Expr::coord("z")});
}

Diffeo scale_map() {
    return Diffeo::make("scale", r3(), r3(),
                        {Expr::integer(2) * Expr::coord("x"), Expr::coord("y"), Expr::coord("z")},
                        {Expr::coord("x") / Expr::integer(2), Expr::coord("y"), Expr::coord("z")});
}

Diffeo identity_map() {
    return Diffeo::make("id", r3(), r3(),
                        {Expr::coord("x"), Expr::coord("y"), Expr::coord("z")},
                        {Expr::coord("x"), Expr::coord("y"), Expr::coord("z")});
}

} // namespace

TEST_CASE("diffeomorphism validation") {
    CHECK_THROWS_AS(Diffeo::make("bad", r3(), r3(),
                                 {Expr::coord("x") + Expr::one(), Expr::coord("y"), Expr::coord("z")},
                                 {Expr::coord("x"), Expr::coord("y"), Expr::coord("z")}),
                    Error); // inverse is not an inverse
    CHECK_THROWS_AS(Diffeo::make("flat", r3(), r3(),
                                 {Expr::coord("x"), Expr::coord("x"), Expr::coord("z")},
                                 {Expr::coord("x"), Expr::coord("y"), Expr::coord("z")}),
                    Error); // singular Jacobian (and no inverse)
}

TEST_CASE("pushforward and pullback") {
    VectorField dx = VectorField::coordinate(r3(), 0);
    CHECK(vf_equal(pushforward(shift_map(), dx), dx));
    CHECK(vf_equal(pushforward(swap_map(), dx), VectorField::coordinate(r3(), 1)));

    OneForm dz = OneForm::coordinate(r3(), 2);
    CHECK(form_equal(pullback(swap_map(), dz), dz));
    CHECK(form_equal(pullback(shift_map(), dz), dz));

    // pushforward re-expresses coefficients through the inverse
    VectorField xdx = VectorField::make(r3(), {Expr::coord("x"), Expr::zero(), Expr::zero()});
    VectorField pushed = pushforward(shift_map(), xdx);
    CHECK(symbolic_equal(pushed.comps[0], Expr::coord("x") - Expr::one()));

    // f*(alpha)(X) = alpha(f_* X) o f on coordinate fields
    Diffeo f = swap_map();
    OneForm alpha = OneForm::make(r3(), {parse_expr("x*y"), parse_expr("sin(z)"), Expr::one()});
    std::map<std::string, Expr> fwd{{"x", f.forward[0]}, {"y", f.forward[1]}, {"z", f.forward[2]}};
    for (int j = 0; j < 3; ++j) {
        VectorField ej = VectorField::coordinate(r3(), j);
        Expr lhs = pairing(pullback(f, alpha), ej);
        Expr rhs = pairing(alpha, pushforward(f, ej)).substitute(fwd);
        CHECK(symbolic_equal(lhs, rhs));
    }
}

TEST_CASE("pushforward is functorial") {
    Diffeo combo = compose(shift_map(), swap_map());
    VectorField w = VectorField::make(r3(), {parse_expr("y"), parse_expr("x^2"), Expr::one()});
    VectorField once = pushforward(combo, w);
    VectorField twice = pushforward(shift_map(), pushforward(swap_map(), w));
    CHECK(vf_equal(once, twice));
}

TEST_CASE("paracontactomorphism checks") {
    const auto& cat = builtin_catalog();

    CheckReport idrep = check_paracontactomorphism(identity_map(), cat.s1, cat.s1);
    CHECK(idrep.verdict() == Verdict::Pass);

    CheckReport swaprep = check_paracontactomorphism(swap_map(), cat.s0, cat.s0);
    CHECK(swaprep.verdict() == Verdict::Pass);
    CHECK(!swaprep.find("phi2 o f_* = f_* o phi1")->failed());
    CHECK(!swaprep.find("f_* xi1 = xi2")->failed());
    CHECK(!swaprep.find("f* eta2 = eta1 (implied)")->failed());
    CHECK(!swaprep.find("phi1* o f* = f* o phi2*")->failed());
    CHECK(!swaprep.find("defining identities => f* eta2 = eta1")->failed());

    // anisotropic scaling breaks the intertwine with a residual witness
    CheckReport scalerep = check_paracontactomorphism(scale_map(), cat.s0, cat.s0);
    CHECK(scalerep.verdict() == Verdict::Fail);
    const CheckItem* item = scalerep.find("phi2 o f_* = f_* o phi1");
    CHECK(item->failed());
    CHECK(item->witness.has_value());
}

TEST_CASE("induced map on the generalized tangent bundle") {
    const auto& cat = builtin_catalog();

    // f~ = identity for the identity map
    GenSection a = GenSection::make(
        VectorField::make(r3(), {parse_expr("x"), Expr::one(), Expr::zero()}),
        OneForm::make(r3(), {Expr::zero(), parse_expr("y"), Expr::one()}));
    GenSection ia = induced_gen_map(identity_map(), a);
    CHECK(vf_equal(ia.vf, a.vf.simplified()));
    CHECK(form_equal(ia.form, a.form.simplified()));

    CheckReport comm = check_gen_commutation(swap_map(), cat.s0, cat.s0);
    CHECK(comm.verdict() == Verdict::Pass);
    CHECK(!comm.find("Phi2 o f~ = f~ o Phi1")->failed());
    CHECK(!comm.find("f~(xi1 + 0) = xi2 + 0")->failed());
    CHECK(!comm.find("f~(0 + eta1) = 0 + eta2")->failed());

    CheckReport badcomm = check_gen_commutation(scale_map(), cat.s0, cat.s0);
    CHECK(badcomm.find("Phi2 o f~ = f~ o Phi1")->failed());
}

#pragma once

#include <map>
#include <string>

#include "paracalc/expr.hpp"

namespace paracalc {

// Rational-linear combination of coordinates plus a constant term; the
// admissible argument class for sin/cos/exp atoms.
struct LinForm {
    Rational constant;
    std::map<std::string, Rational> coeffs; // nonzero entries only

    bool is_zero() const { return constant.is_zero() && coeffs.empty(); }
    LinForm negated() const;
    LinForm plus(const LinForm& o) const;
    LinForm scaled(const Rational& r) const;
    // Total order with implicit zeros, invariant under common shifts.
    int cmp(const LinForm& o) const;
    bool operator<(const LinForm& o) const { return cmp(o) < 0; }
    bool operator==(const LinForm& o) const { return cmp(o) == 0; }
    Expr to_expr() const;
};

struct TrigAtom {
    bool is_cos = false;  // false: sin
    LinForm arg;

    bool operator<(const TrigAtom& o) const {
        int c = arg.cmp(o.arg);
        if (c != 0) return c < 0;
        return int(is_cos) < int(o.is_cos);
    }
    bool operator==(const TrigAtom& o) const {
        return is_cos == o.is_cos && arg == o.arg;
    }
};

// One product of atoms: coordinate powers, trig-atom powers and a single
// exponential factor e^{exp_arg}. Positive cos powers are kept below 2 by
// the Pythagorean rewrite; all stored powers are >= 1.
struct Mono {
    std::map<std::string, int> coords;
    std::map<TrigAtom, int> trig;
    LinForm exp_arg;

    bool trivial() const { return coords.empty() && trig.empty() && exp_arg.is_zero(); }
    bool operator<(const Mono& o) const;
    bool operator==(const Mono& o) const;
};

using Poly = std::map<Mono, Rational>;

Poly poly_zero();
Poly poly_const(const Rational& r);
Poly poly_coord(const std::string& name);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int k); // k >= 0
Poly poly_scale(const Poly& a, const Rational& r);

// Canonical fraction num/den; den never the zero polynomial, normalized
// (common monomial factors cancelled, exponential shifted so den's minimal
// exp part is 0, den's leading coefficient 1).
struct CanonForm {
    Poly num;
    Poly den;

    bool is_zero() const { return num.empty(); }
    bool is_polynomial() const;
    bool operator==(const CanonForm& o) const { return num == o.num && den == o.den; }
};

CanonForm canonicalize(const Expr& e);

// Canonical simplification: unique tree for expressions equal in the
// polynomial-trigonometric class over the fixed atom set.
Expr expr_simplify(const Expr& e);

// canonicalize(e).num empty, with division-by-zero propagated.
bool is_symbolically_zero(const Expr& e);

Expr canon_to_expr(const CanonForm& c);

} // namespace paracalc

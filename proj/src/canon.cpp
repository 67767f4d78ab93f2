#include "paracalc/canon.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "paracalc/errors.hpp"

namespace paracalc {

// ---------------------------------------------------------------------------
// LinForm

LinForm LinForm::negated() const { return scaled(Rational(-1)); }

LinForm LinForm::plus(const LinForm& o) const {
    LinForm r;
    r.constant = constant + o.constant;
    r.coeffs = coeffs;
    for (const auto& [k, v] : o.coeffs) {
        auto it = r.coeffs.find(k);
        if (it == r.coeffs.end()) {
            if (!v.is_zero()) r.coeffs.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

LinForm LinForm::scaled(const Rational& s) const {
    LinForm r;
    if (s.is_zero()) return r;
    r.constant = constant * s;
    for (const auto& [k, v] : coeffs) r.coeffs.emplace(k, v * s);
    return r;
}

int LinForm::cmp(const LinForm& o) const {
    if (constant != o.constant) return constant < o.constant ? -1 : 1;
    auto i = coeffs.begin();
    auto j = o.coeffs.begin();
    while (i != coeffs.end() || j != o.coeffs.end()) {
        if (i == coeffs.end()) return -1;
        if (j == o.coeffs.end()) return 1;
        if (i->first != j->first) {
            // The side owning the smaller key has a nonzero coefficient where
            // the other has zero; order by that coefficient's sign.
            if (i->first < j->first) return i->second.is_negative() ? -1 : 1;
            return j->second.is_negative() ? 1 : -1;
        }
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

Expr LinForm::to_expr() const {
    Expr acc = Expr::zero();
    bool started = false;
    if (!constant.is_zero()) {
        acc = Expr::rational(constant);
        started = true;
    }
    for (const auto& [name, c] : coeffs) {
        Expr term = c.is_one() ? Expr::coord(name) : Expr::rational(c) * Expr::coord(name);
        if (!started) {
            acc = term;
            started = true;
        } else {
            acc = acc + term;
        }
    }
    return started ? acc : Expr::zero();
}

// ---------------------------------------------------------------------------
// Mono

bool Mono::operator<(const Mono& o) const {
    if (coords != o.coords) return coords < o.coords;
    if (!(trig == o.trig)) return trig < o.trig;
    return exp_arg < o.exp_arg;
}

bool Mono::operator==(const Mono& o) const {
    return coords == o.coords && trig == o.trig && exp_arg == o.exp_arg;
}

// ---------------------------------------------------------------------------
// Poly

Poly poly_zero() { return {}; }

Poly poly_const(const Rational& r) {
    Poly p;
    if (!r.is_zero()) p.emplace(Mono{}, r);
    return p;
}

Poly poly_coord(const std::string& name) {
    Mono m;
    m.coords.emplace(name, 1);
    Poly p;
    p.emplace(std::move(m), Rational(1));
    return p;
}

static void poly_accum(Poly& p, const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) poly_accum(r, m, c);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a) r.emplace(m, -c);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    if (s.is_zero()) return {};
    Poly r;
    for (const auto& [m, c] : a) r.emplace(m, c * s);
    return r;
}

// cos^k(u) with k >= 2 rewrites through cos^2 u = 1 - sin^2 u until every
// positive cos power is at most 1; the result lands in `out` scaled by c.
static void normalize_mono(const Mono& m, const Rational& c, Poly& out) {
    for (auto it = m.trig.begin(); it != m.trig.end(); ++it) {
        if (!it->first.is_cos || it->second < 2) continue;
        int k = it->second;
        int q = k / 2, r = k % 2;

        Mono base = m;
        if (r == 0)
            base.trig.erase(it->first);
        else
            base.trig[it->first] = 1;

        TrigAtom sin_atom{false, it->first.arg};
        // (1 - sin^2 u)^q = sum_i C(q,i) (-1)^i sin^{2i} u
        Rational binom(1);
        for (int i = 0; i <= q; ++i) {
            Mono term = base;
            if (i > 0) term.trig[sin_atom] += 2 * i;
            Rational coeff = c * binom * Rational(i % 2 == 0 ? 1 : -1);
            normalize_mono(term, coeff, out);
            binom = binom * Rational(q - i) / Rational(i + 1);
        }
        return;
    }
    poly_accum(out, m, c);
}

static Mono mono_merge_raw(const Mono& a, const Mono& b) {
    Mono r = a;
    for (const auto& [k, v] : b.coords) {
        int nv = (r.coords.count(k) ? r.coords[k] : 0) + v;
        if (nv == 0) r.coords.erase(k); else r.coords[k] = nv;
    }
    for (const auto& [k, v] : b.trig) {
        int nv = (r.trig.count(k) ? r.trig[k] : 0) + v;
        if (nv == 0) r.trig.erase(k); else r.trig[k] = nv;
    }
    r.exp_arg = r.exp_arg.plus(b.exp_arg);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            normalize_mono(mono_merge_raw(ma, mb), ca * cb, r);
    return r;
}

Poly poly_pow(const Poly& a, int k) {
    Poly acc = poly_const(Rational(1));
    for (int i = 0; i < k; ++i) acc = poly_mul(acc, a);
    return acc;
}

// ---------------------------------------------------------------------------
// Fractions

bool CanonForm::is_polynomial() const {
    return den.size() == 1 && den.begin()->first.trivial() && den.begin()->second.is_one();
}

static CanonForm normalize_fraction(Poly num, Poly den) {
    if (den.empty()) throw DivisionByZeroError("division by symbolically zero expression");
    if (num.empty()) return CanonForm{poly_zero(), poly_const(Rational(1))};

    // Cancel coordinate and trig atoms present in every monomial.
    std::map<std::string, int> coord_min;
    std::map<TrigAtom, int> trig_min;
    bool first = true;
    auto scan = [&](const Poly& p) {
        for (const auto& [m, c] : p) {
            (void)c;
            if (first) {
                coord_min = m.coords;
                trig_min = m.trig;
                first = false;
                continue;
            }
            for (auto it = coord_min.begin(); it != coord_min.end();) {
                auto f = m.coords.find(it->first);
                if (f == m.coords.end()) {
                    it = coord_min.erase(it);
                } else {
                    it->second = std::min(it->second, f->second);
                    ++it;
                }
            }
            for (auto it = trig_min.begin(); it != trig_min.end();) {
                auto f = m.trig.find(it->first);
                if (f == m.trig.end()) {
                    it = trig_min.erase(it);
                } else {
                    it->second = std::min(it->second, f->second);
                    ++it;
                }
            }
        }
    };
    scan(num);
    scan(den);

    // Shift the exponential part so den's minimal exp argument becomes 0.
    LinForm shift;
    bool have_shift = false;
    for (const auto& [m, c] : den) {
        (void)c;
        if (!have_shift || m.exp_arg < shift) {
            shift = m.exp_arg;
            have_shift = true;
        }
    }

    bool cancel = !coord_min.empty() || !trig_min.empty() || !shift.is_zero();
    auto strip = [&](const Poly& p) {
        if (!cancel) return p;
        Poly r;
        for (const auto& [m, c] : p) {
            Mono nm = m;
            for (const auto& [k, v] : coord_min) {
                int nv = nm.coords[k] - v;
                if (nv == 0) nm.coords.erase(k); else nm.coords[k] = nv;
            }
            for (const auto& [k, v] : trig_min) {
                int nv = nm.trig[k] - v;
                if (nv == 0) nm.trig.erase(k); else nm.trig[k] = nv;
            }
            nm.exp_arg = nm.exp_arg.plus(shift.negated());
            r.emplace(std::move(nm), c);
        }
        return r;
    };
    num = strip(num);
    den = strip(den);

    // Leading denominator coefficient becomes 1.
    Rational lead = den.begin()->second;
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num = poly_scale(num, inv);
        den = poly_scale(den, inv);
    }
    return CanonForm{std::move(num), std::move(den)};
}

static CanonForm canon_const(const Rational& r) {
    return CanonForm{poly_const(r), poly_const(Rational(1))};
}

static CanonForm canon_add(const CanonForm& a, const CanonForm& b) {
    if (a.den == b.den) return normalize_fraction(poly_add(a.num, b.num), a.den);
    return normalize_fraction(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                              poly_mul(a.den, b.den));
}

static CanonForm canon_neg(const CanonForm& a) { return CanonForm{poly_neg(a.num), a.den}; }

static CanonForm canon_mul(const CanonForm& a, const CanonForm& b) {
    return normalize_fraction(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

static CanonForm canon_div(const CanonForm& a, const CanonForm& b) {
    if (b.num.empty()) throw DivisionByZeroError("division by symbolically zero expression");
    return normalize_fraction(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}

static CanonForm canon_pow(const CanonForm& a, int k) {
    if (k == 0) return canon_const(Rational(1));
    if (k < 0) {
        if (a.num.empty()) throw DivisionByZeroError("negative power of symbolically zero expression");
        return normalize_fraction(poly_pow(a.den, -k), poly_pow(a.num, -k));
    }
    return normalize_fraction(poly_pow(a.num, k), poly_pow(a.den, k));
}

// The argument of sin/cos/exp must canonicalize to a coordinate-linear form.
static LinForm as_linear(const CanonForm& c, const char* fn) {
    if (!c.is_polynomial())
        throw UnsupportedExpressionError(std::string(fn) + " argument is not linear in the coordinates");
    LinForm lf;
    for (const auto& [m, coeff] : c.num) {
        if (!m.trig.empty() || !m.exp_arg.is_zero())
            throw UnsupportedExpressionError(std::string(fn) + " argument is not linear in the coordinates");
        if (m.coords.empty()) {
            lf.constant = lf.constant + coeff;
        } else if (m.coords.size() == 1 && m.coords.begin()->second == 1) {
            lf.coeffs.emplace(m.coords.begin()->first, coeff);
        } else {
            throw UnsupportedExpressionError(std::string(fn) + " argument is not linear in the coordinates");
        }
    }
    return lf;
}

static CanonForm canon_trig(bool is_cos, const LinForm& raw) {
    if (raw.is_zero()) return canon_const(Rational(is_cos ? 1 : 0));
    // Sign-normalize: sin(-u) = -sin(u), cos(-u) = cos(u).
    Rational lead = raw.coeffs.empty() ? raw.constant : raw.coeffs.begin()->second;
    bool flip = lead.is_negative();
    LinForm arg = flip ? raw.negated() : raw;
    Mono m;
    m.trig.emplace(TrigAtom{is_cos, arg}, 1);
    Poly p;
    p.emplace(std::move(m), Rational((flip && !is_cos) ? -1 : 1));
    return CanonForm{std::move(p), poly_const(Rational(1))};
}

static CanonForm canon_exp(const LinForm& arg) {
    Mono m;
    m.exp_arg = arg;
    Poly p;
    p.emplace(std::move(m), Rational(1));
    return CanonForm{std::move(p), poly_const(Rational(1))};
}

CanonForm canonicalize(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.op) {
    case ExprOp::Rat: return canon_const(n.value);
    case ExprOp::Coord:
        return CanonForm{poly_coord(n.name), poly_const(Rational(1))};
    case ExprOp::Add: return canon_add(canonicalize(e.child_a()), canonicalize(e.child_b()));
    case ExprOp::Sub:
        return canon_add(canonicalize(e.child_a()), canon_neg(canonicalize(e.child_b())));
    case ExprOp::Mul: return canon_mul(canonicalize(e.child_a()), canonicalize(e.child_b()));
    case ExprOp::Div: return canon_div(canonicalize(e.child_a()), canonicalize(e.child_b()));
    case ExprOp::Pow: return canon_pow(canonicalize(e.child_a()), n.exponent);
    case ExprOp::Neg: return canon_neg(canonicalize(e.child_a()));
    case ExprOp::Sin: return canon_trig(false, as_linear(canonicalize(e.child_a()), "sin"));
    case ExprOp::Cos: return canon_trig(true, as_linear(canonicalize(e.child_a()), "cos"));
    case ExprOp::Exp: return canon_exp(as_linear(canonicalize(e.child_a()), "exp"));
    }
    throw Error("unreachable expression op");
}

// ---------------------------------------------------------------------------
// Rebuild a tree from the canonical form.

static Expr mono_to_expr(const Mono& m, const Rational& coeff_abs) {
    std::vector<Expr> factors;
    if (!coeff_abs.is_one() || m.trivial()) factors.push_back(Expr::rational(coeff_abs));
    for (const auto& [name, p] : m.coords) {
        Expr atom = Expr::coord(name);
        factors.push_back(p == 1 ? atom : pow(atom, p));
    }
    for (const auto& [atom, p] : m.trig) {
        Expr base = atom.is_cos ? cos(atom.arg.to_expr()) : sin(atom.arg.to_expr());
        factors.push_back(p == 1 ? base : pow(base, p));
    }
    if (!m.exp_arg.is_zero()) factors.push_back(exp(m.exp_arg.to_expr()));
    Expr acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
    return acc;
}

static Expr poly_to_expr(const Poly& p) {
    if (p.empty()) return Expr::zero();
    Expr acc = Expr::zero();
    bool started = false;
    for (const auto& [m, c] : p) {
        bool negative = c.is_negative();
        Expr term = mono_to_expr(m, negative ? -c : c);
        if (!started) {
            acc = negative ? -term : term;
            started = true;
        } else {
            acc = negative ? acc - term : acc + term;
        }
    }
    return acc;
}

Expr canon_to_expr(const CanonForm& c) {
    Expr n = poly_to_expr(c.num);
    if (c.is_polynomial() || c.is_zero()) return n;
    return n / poly_to_expr(c.den);
}

Expr expr_simplify(const Expr& e) { return canon_to_expr(canonicalize(e)); }

bool is_symbolically_zero(const Expr& e) { return canonicalize(e).is_zero(); }

} // namespace paracalc

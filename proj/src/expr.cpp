#include "paracalc/expr.hpp"

#include <cctype>
#include <cmath>

#include "paracalc/errors.hpp"

namespace paracalc {

const ExprNodePtr& Expr::zero_node() {
    static const ExprNodePtr z = std::make_shared<ExprNode>(ExprNode{ExprOp::Rat, Rational(0), "", 0, nullptr, nullptr});
    return z;
}

Expr Expr::make(ExprNode n) { return Expr(std::make_shared<ExprNode>(std::move(n))); }

Expr Expr::rational(const Rational& r) {
    return make(ExprNode{ExprOp::Rat, r, "", 0, nullptr, nullptr});
}

Expr Expr::coord(const std::string& name) {
    return make(ExprNode{ExprOp::Coord, Rational(0), name, 0, nullptr, nullptr});
}

Expr Expr::binary(ExprOp op, const Expr& a, const Expr& b) {
    return Expr(std::make_shared<ExprNode>(ExprNode{op, Rational(0), "", 0, a.node_, b.node_}));
}

Expr Expr::unary(ExprOp op, const Expr& a, int exponent) {
    return Expr(std::make_shared<ExprNode>(ExprNode{op, Rational(0), "", exponent, a.node_, nullptr}));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(ExprOp::Div, a, b); }

Expr Expr::operator-() const {
    // Negated literals fold, matching what the parser produces for "-1/2".
    if (is_rational()) return rational(-node_->value);
    return unary(ExprOp::Neg, *this);
}

Expr pow(const Expr& base, int exponent) { return Expr::unary(ExprOp::Pow, base, exponent); }
Expr sin(const Expr& arg) { return Expr::unary(ExprOp::Sin, arg); }
Expr cos(const Expr& arg) { return Expr::unary(ExprOp::Cos, arg); }
Expr exp(const Expr& arg) { return Expr::unary(ExprOp::Exp, arg); }

bool Expr::same_tree_as(const Expr& other) const {
    const ExprNode& x = *node_;
    const ExprNode& y = *other.node_;
    if (x.op != y.op) return false;
    switch (x.op) {
    case ExprOp::Rat: return x.value == y.value;
    case ExprOp::Coord: return x.name == y.name;
    case ExprOp::Pow:
        return x.exponent == y.exponent && Expr(x.a).same_tree_as(Expr(y.a));
    case ExprOp::Neg:
    case ExprOp::Sin:
    case ExprOp::Cos:
    case ExprOp::Exp:
        return Expr(x.a).same_tree_as(Expr(y.a));
    default:
        return Expr(x.a).same_tree_as(Expr(y.a)) && Expr(x.b).same_tree_as(Expr(y.b));
    }
}

Expr Expr::diff(const std::string& v) const {
    const ExprNode& n = *node_;
    switch (n.op) {
    case ExprOp::Rat: return zero();
    case ExprOp::Coord: return n.name == v ? one() : zero();
    case ExprOp::Add: return Expr(n.a).diff(v) + Expr(n.b).diff(v);
    case ExprOp::Sub: return Expr(n.a).diff(v) - Expr(n.b).diff(v);
    case ExprOp::Mul:
        return Expr(n.a).diff(v) * Expr(n.b) + Expr(n.a) * Expr(n.b).diff(v);
    case ExprOp::Div: {
        Expr f(n.a), g(n.b);
        return (f.diff(v) * g - f * g.diff(v)) / (g * g);
    }
    case ExprOp::Pow: {
        Expr f(n.a);
        if (n.exponent == 0) return zero();
        return integer(n.exponent) * pow(f, n.exponent - 1) * f.diff(v);
    }
    case ExprOp::Neg: return -Expr(n.a).diff(v);
    case ExprOp::Sin: return cos(Expr(n.a)) * Expr(n.a).diff(v);
    case ExprOp::Cos: return -(sin(Expr(n.a)) * Expr(n.a).diff(v));
    case ExprOp::Exp: return exp(Expr(n.a)) * Expr(n.a).diff(v);
    }
    throw Error("unreachable expression op");
}

Expr Expr::substitute(const std::map<std::string, Expr>& repl) const {
    const ExprNode& n = *node_;
    switch (n.op) {
    case ExprOp::Rat: return *this;
    case ExprOp::Coord: {
        auto it = repl.find(n.name);
        return it == repl.end() ? *this : it->second;
    }
    case ExprOp::Add: return Expr(n.a).substitute(repl) + Expr(n.b).substitute(repl);
    case ExprOp::Sub: return Expr(n.a).substitute(repl) - Expr(n.b).substitute(repl);
    case ExprOp::Mul: return Expr(n.a).substitute(repl) * Expr(n.b).substitute(repl);
    case ExprOp::Div: return Expr(n.a).substitute(repl) / Expr(n.b).substitute(repl);
    case ExprOp::Pow: return pow(Expr(n.a).substitute(repl), n.exponent);
    case ExprOp::Neg: return -Expr(n.a).substitute(repl);
    case ExprOp::Sin: return sin(Expr(n.a).substitute(repl));
    case ExprOp::Cos: return cos(Expr(n.a).substitute(repl));
    case ExprOp::Exp: return exp(Expr(n.a).substitute(repl));
    }
    throw Error("unreachable expression op");
}

double Expr::eval(const std::map<std::string, double>& point) const {
    const ExprNode& n = *node_;
    auto finite = [](double v) {
        if (!std::isfinite(v)) throw EvalError("non-finite value during evaluation");
        return v;
    };
    switch (n.op) {
    case ExprOp::Rat: return n.value.to_double();
    case ExprOp::Coord: {
        auto it = point.find(n.name);
        if (it == point.end()) throw EvalError("no value for coordinate '" + n.name + "'");
        return it->second;
    }
    case ExprOp::Add: return finite(Expr(n.a).eval(point) + Expr(n.b).eval(point));
    case ExprOp::Sub: return finite(Expr(n.a).eval(point) - Expr(n.b).eval(point));
    case ExprOp::Mul: return finite(Expr(n.a).eval(point) * Expr(n.b).eval(point));
    case ExprOp::Div: {
        double d = Expr(n.b).eval(point);
        if (std::fabs(d) < 1e-12) throw EvalError("pole: division by ~0 at sample point");
        return finite(Expr(n.a).eval(point) / d);
    }
    case ExprOp::Pow: {
        double b = Expr(n.a).eval(point);
        if (n.exponent < 0 && std::fabs(b) < 1e-12)
            throw EvalError("pole: negative power of ~0 at sample point");
        return finite(std::pow(b, n.exponent));
    }
    case ExprOp::Neg: return -Expr(n.a).eval(point);
    case ExprOp::Sin: return std::sin(Expr(n.a).eval(point));
    case ExprOp::Cos: return std::cos(Expr(n.a).eval(point));
    case ExprOp::Exp: return finite(std::exp(Expr(n.a).eval(point)));
    }
    throw Error("unreachable expression op");
}

void Expr::collect_coords(std::set<std::string>& out) const {
    const ExprNode& n = *node_;
    if (n.op == ExprOp::Coord) {
        out.insert(n.name);
        return;
    }
    if (n.a) Expr(n.a).collect_coords(out);
    if (n.b) Expr(n.b).collect_coords(out);
}

// ---------------------------------------------------------------------------
// Printing. Parenthesization follows the parse grammar so that
// parse(str()) reproduces the tree exactly.

namespace {

int precedence(ExprOp op) {
    switch (op) {
    case ExprOp::Add:
    case ExprOp::Sub: return 1;
    case ExprOp::Mul:
    case ExprOp::Div: return 2;
    case ExprOp::Neg: return 3;
    case ExprOp::Pow: return 4;
    default: return 5; // atoms and function calls
    }
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, int parent_prec, bool is_right, std::string& out) {
    int cp = precedence(child.op);
    // Non-integer or negative literals would re-lex as composite tokens.
    bool awkward_literal = child.op == ExprOp::Rat &&
                           (child.value.is_negative() || !child.value.is_integer());
    bool parens = cp < parent_prec || (cp == parent_prec && is_right) ||
                  (awkward_literal && parent_prec >= 2 && is_right) ||
                  (child.op == ExprOp::Rat && child.value.is_negative() && parent_prec >= 2);
    if (child.op == ExprOp::Neg && parent_prec >= 2 && !is_right) parens = true;
    if (parens) out += "(";
    print_node(child, out);
    if (parens) out += ")";
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.op) {
    case ExprOp::Rat: out += n.value.str(); return;
    case ExprOp::Coord: out += n.name; return;
    case ExprOp::Add:
        print_child(*n.a, 1, false, out);
        out += " + ";
        print_child(*n.b, 1, true, out);
        return;
    case ExprOp::Sub:
        print_child(*n.a, 1, false, out);
        out += " - ";
        print_child(*n.b, 1, true, out);
        return;
    case ExprOp::Mul:
        print_child(*n.a, 2, false, out);
        out += "*";
        print_child(*n.b, 2, true, out);
        return;
    case ExprOp::Div:
        print_child(*n.a, 2, false, out);
        out += "/";
        print_child(*n.b, 2, true, out);
        return;
    case ExprOp::Pow: {
        bool parens = precedence(n.a->op) < 5 ||
                      (n.a->op == ExprOp::Rat &&
                       (n.a->value.is_negative() || !n.a->value.is_integer()));
        if (parens) out += "(";
        print_node(*n.a, out);
        if (parens) out += ")";
        out += "^" + std::to_string(n.exponent);
        return;
    }
    case ExprOp::Neg:
        out += "-";
        print_child(*n.a, 3, true, out);
        return;
    case ExprOp::Sin:
    case ExprOp::Cos:
    case ExprOp::Exp:
        out += n.op == ExprOp::Sin ? "sin(" : (n.op == ExprOp::Cos ? "cos(" : "exp(");
        print_node(*n.a, out);
        out += ")";
        return;
    }
}

} // namespace

std::string Expr::str() const {
    std::string s;
    print_node(*node_, s);
    return s;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the scalar grammar.

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
            if (text[pos] == '\n') { line++; col = 1; } else { col++; }
            pos++;
        }
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char get() {
        char c = peek();
        if (pos < text.size()) { pos++; col++; }
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct ExprParser {
    Lexer lex;
    const std::optional<std::set<std::string>>& coords;

    ExprParser(const std::string& t, const std::optional<std::set<std::string>>& c)
        : lex(t), coords(c) {}

    Expr parse_full() {
        Expr e = parse_sum();
        if (lex.peek() != '\0') lex.fail("unexpected trailing input");
        return e;
    }

    Expr parse_sum() {
        Expr e = parse_product();
        while (true) {
            char c = lex.peek();
            if (c == '+') { lex.get(); e = e + parse_product(); }
            else if (c == '-') { lex.get(); e = e - parse_product(); }
            else break;
        }
        return e;
    }

    Expr parse_product() {
        Expr e = parse_unary();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                e = e * parse_unary();
            } else if (c == '/') {
                lex.get();
                Expr rhs = parse_unary();
                // INT/INT folds to a rational literal.
                if (e.is_rational() && e.node().value.is_integer() && rhs.is_rational() &&
                    rhs.node().value.is_integer()) {
                    if (rhs.node().value.is_zero()) lex.fail("division by zero in rational literal");
                    e = Expr::rational(e.node().value / rhs.node().value);
                } else {
                    e = e / rhs;
                }
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_unary() {
        if (lex.peek() == '-') {
            lex.get();
            Expr e = parse_unary();
            if (e.is_rational()) return Expr::rational(-e.node().value);
            return -e;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (lex.peek() == '^') {
            lex.get();
            bool negative = false;
            if (lex.peek() == '-') { lex.get(); negative = true; }
            if (!std::isdigit((unsigned char)lex.peek())) lex.fail("expected integer exponent after '^'");
            long v = 0;
            while (std::isdigit((unsigned char)lex.peek())) {
                v = v * 10 + (lex.get() - '0');
                if (v > 1000) lex.fail("exponent too large");
            }
            return pow(base, negative ? int(-v) : int(v));
        }
        return base;
    }

    Expr parse_primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            Expr e = parse_sum();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.get();
            return e;
        }
        if (std::isdigit((unsigned char)c)) {
            std::int64_t v = 0;
            while (std::isdigit((unsigned char)lex.peek())) {
                v = v * 10 + (lex.get() - '0');
                if (v > (std::int64_t)1 << 60) lex.fail("integer literal too large");
            }
            return Expr::integer(v);
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string id;
            while (std::isalnum((unsigned char)lex.peek()) || lex.peek() == '_') id += lex.get();
            if (id == "sin" || id == "cos" || id == "exp") {
                if (lex.peek() != '(') lex.fail("expected '(' after function '" + id + "'");
                lex.get();
                Expr arg = parse_sum();
                if (lex.peek() != ')') lex.fail("expected ')'");
                lex.get();
                if (id == "sin") return sin(arg);
                if (id == "cos") return cos(arg);
                return exp(arg);
            }
            if (coords && !coords->count(id)) lex.fail("unknown identifier '" + id + "'");
            return Expr::coord(id);
        }
        if (c == '\0') lex.fail("unexpected end of expression");
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Expr parse_expr(const std::string& text, const std::optional<std::set<std::string>>& allowed_coords) {
    ExprParser p(text, allowed_coords);
    return p.parse_full();
}

} // namespace paracalc

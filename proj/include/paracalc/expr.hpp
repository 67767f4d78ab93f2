#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paracalc/rational.hpp"

namespace paracalc {

enum class ExprOp { Rat, Coord, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp };

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprOp op;
    Rational value;   // Rat
    std::string name; // Coord
    int exponent = 0; // Pow
    ExprNodePtr a, b; // operands
};

// Immutable symbolic scalar over chart coordinates: rational constants,
// coordinate references, + - * /, integer powers, sin/cos/exp/neg.
class Expr {
public:
    Expr() : node_(zero_node()) {}

    static Expr rational(const Rational& r);
    static Expr integer(std::int64_t n) { return rational(Rational(n)); }
    static Expr coord(const std::string& name);
    static Expr zero() { return integer(0); }
    static Expr one() { return integer(1); }

    const ExprNode& node() const { return *node_; }
    ExprOp op() const { return node_->op; }
    Expr child_a() const { return Expr(node_->a); }
    Expr child_b() const { return Expr(node_->b); }

    bool is_rational() const { return node_->op == ExprOp::Rat; }
    bool is_zero_constant() const { return is_rational() && node_->value.is_zero(); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;

    friend Expr pow(const Expr& base, int exponent);
    friend Expr sin(const Expr& arg);
    friend Expr cos(const Expr& arg);
    friend Expr exp(const Expr& arg);

    // Structural (tree) equality.
    bool same_tree_as(const Expr& other) const;

    Expr diff(const std::string& coordinate) const;
    Expr substitute(const std::map<std::string, Expr>& repl) const;

    // Plain tree evaluation; throws EvalError on a pole or non-finite value.
    double eval(const std::map<std::string, double>& point) const;

    void collect_coords(std::set<std::string>& out) const;
    std::set<std::string> free_coords() const {
        std::set<std::string> s;
        collect_coords(s);
        return s;
    }

    std::string str() const;

private:
    explicit Expr(ExprNodePtr n) : node_(std::move(n)) {}
    static const ExprNodePtr& zero_node();
    static Expr make(ExprNode n);
    static Expr binary(ExprOp op, const Expr& a, const Expr& b);
    static Expr unary(ExprOp op, const Expr& a, int exponent = 0);

    ExprNodePtr node_;
};

// Parses the scalar expression grammar: infix with precedence
// ^ > unary- > * / > + -, functions sin/cos/exp, integer literals
// (INT/INT folds to a rational), parentheses. When `allowed_coords` is
// given, identifiers outside it are rejected.
Expr parse_expr(const std::string& text,
                const std::optional<std::set<std::string>>& allowed_coords = std::nullopt);

} // namespace paracalc

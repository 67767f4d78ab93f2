#pragma once

#include <vector>

#include "paracalc/expr.hpp"

namespace paracalc {

// Dense matrix of symbolic scalars; the workhorse behind endomorphisms,
// metrics and 2n x 2n block operators.
class ExprMatrix {
public:
    ExprMatrix() : rows_(0), cols_(0) {}
    ExprMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Expr::zero()) {}

    static ExprMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Expr& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Expr& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    ExprMatrix transpose() const;
    ExprMatrix simplified() const;

    friend ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
    ExprMatrix scaled(const Expr& s) const;
    ExprMatrix negated() const;

    // Block composition helpers for operators on TM + T*M.
    static ExprMatrix blocks2x2(const ExprMatrix& ul, const ExprMatrix& ur,
                                const ExprMatrix& ll, const ExprMatrix& lr);
    ExprMatrix block(int i0, int j0, int rows, int cols) const;

    std::vector<Expr> apply(const std::vector<Expr>& v) const;

    Expr determinant() const;          // cofactor expansion
    ExprMatrix adjugate() const;
    bool is_symbolically_zero() const; // every entry

private:
    int rows_, cols_;
    std::vector<Expr> a_;
};

} // namespace paracalc

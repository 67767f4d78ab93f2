#include "paracalc/matrix.hpp"

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

ExprMatrix ExprMatrix::identity(int n) {
    ExprMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Expr::one();
    return m;
}

ExprMatrix ExprMatrix::transpose() const {
    ExprMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExprMatrix ExprMatrix::simplified() const {
    ExprMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = expr_simplify(at(i, j));
    return r;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch in +");
    ExprMatrix r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch in -");
    ExprMatrix r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch in *");
    ExprMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            Expr acc = Expr::zero();
            for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = expr_simplify(acc);
        }
    return r;
}

ExprMatrix ExprMatrix::scaled(const Expr& s) const {
    ExprMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = s * at(i, j);
    return r;
}

ExprMatrix ExprMatrix::negated() const {
    ExprMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

ExprMatrix ExprMatrix::blocks2x2(const ExprMatrix& ul, const ExprMatrix& ur,
                                 const ExprMatrix& ll, const ExprMatrix& lr) {
    if (ul.rows() != ur.rows() || ll.rows() != lr.rows() || ul.cols() != ll.cols() ||
        ur.cols() != lr.cols())
        throw DimensionError("inconsistent block shapes");
    ExprMatrix r(ul.rows() + ll.rows(), ul.cols() + ur.cols());
    for (int i = 0; i < ul.rows(); ++i) {
        for (int j = 0; j < ul.cols(); ++j) r.at(i, j) = ul.at(i, j);
        for (int j = 0; j < ur.cols(); ++j) r.at(i, ul.cols() + j) = ur.at(i, j);
    }
    for (int i = 0; i < ll.rows(); ++i) {
        for (int j = 0; j < ll.cols(); ++j) r.at(ul.rows() + i, j) = ll.at(i, j);
        for (int j = 0; j < lr.cols(); ++j) r.at(ul.rows() + i, ul.cols() + j) = lr.at(i, j);
    }
    return r;
}

ExprMatrix ExprMatrix::block(int i0, int j0, int rows, int cols) const {
    ExprMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

std::vector<Expr> ExprMatrix::apply(const std::vector<Expr>& v) const {
    if (int(v.size()) != cols_) throw DimensionError("matrix/vector shape mismatch");
    std::vector<Expr> r(rows_, Expr::zero());
    for (int i = 0; i < rows_; ++i) {
        Expr acc = Expr::zero();
        for (int j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
        r[i] = expr_simplify(acc);
    }
    return r;
}

Expr ExprMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    int n = rows_;
    if (n == 1) return at(0, 0);
    if (n == 2) return expr_simplify(at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0));
    Expr acc = Expr::zero();
    for (int k = 0; k < n; ++k) {
        ExprMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = at(i, j);
            }
        }
        Expr term = at(0, k) * minor.determinant();
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return expr_simplify(acc);
}

ExprMatrix ExprMatrix::adjugate() const {
    if (rows_ != cols_) throw DimensionError("adjugate of non-square matrix");
    int n = rows_;
    if (n == 1) {
        ExprMatrix r(1, 1);
        r.at(0, 0) = Expr::one();
        return r;
    }
    ExprMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExprMatrix minor(n - 1, n - 1);
            int mi = 0;
            for (int a = 0; a < n; ++a) {
                if (a == i) continue;
                int mj = 0;
                for (int b = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor.at(mi, mj++) = at(a, b);
                }
                ++mi;
            }
            Expr c = minor.determinant();
            // adj(A)_{ji} = (-1)^{i+j} M_{ij}
            r.at(j, i) = ((i + j) % 2 == 0) ? c : expr_simplify(-c);
        }
    return r;
}

bool ExprMatrix::is_symbolically_zero() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!paracalc::is_symbolically_zero(at(i, j))) return false;
    return true;
}

} // namespace paracalc

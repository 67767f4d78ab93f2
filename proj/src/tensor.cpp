#include "paracalc/tensor.hpp"

#include <random>

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

namespace {

void require_dim(const ChartPtr& c, size_t n, const char* what) {
    if (size_t(c->dim()) != n)
        throw DimensionError(std::string(what) + ": component count " + std::to_string(n) +
                             " does not match chart dimension " + std::to_string(c->dim()));
}

void require_square(const ChartPtr& c, const ExprMatrix& m, const char* what) {
    if (m.rows() != c->dim() || m.cols() != c->dim())
        throw DimensionError(std::string(what) + ": matrix shape does not match chart dimension");
}

void require_antisymmetric(const ChartPtr& c, const ExprMatrix& m, const char* what) {
    for (int i = 0; i < c->dim(); ++i)
        for (int j = i; j < c->dim(); ++j)
            if (!is_symbolically_zero(m.at(i, j) + m.at(j, i)))
                throw Error(std::string(what) + ": components are not antisymmetric at (" +
                            c->coords[i] + "," + c->coords[j] + ")");
}

std::string comps_str(const std::vector<Expr>& comps, const ChartPtr& chart, bool vector_basis) {
    std::string out;
    for (size_t i = 0; i < comps.size(); ++i) {
        Expr s = expr_simplify(comps[i]);
        if (s.is_zero_constant()) continue;
        std::string basis = vector_basis ? "d/d" + chart->coords[i] : "d" + chart->coords[i];
        std::string term = s.same_tree_as(Expr::one()) ? basis : "(" + s.str() + ")*" + basis;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

VectorField VectorField::zero(const ChartPtr& c) {
    return VectorField{c, std::vector<Expr>(c->dim(), Expr::zero())};
}

VectorField VectorField::coordinate(const ChartPtr& c, int i) {
    VectorField v = zero(c);
    v.comps[i] = Expr::one();
    return v;
}

VectorField VectorField::make(const ChartPtr& c, std::vector<Expr> comps) {
    require_dim(c, comps.size(), "vector field");
    return VectorField{c, std::move(comps)};
}

VectorField VectorField::simplified() const {
    VectorField v{chart, comps};
    for (auto& e : v.comps) e = expr_simplify(e);
    return v;
}

std::string VectorField::str() const { return comps_str(comps, chart, true); }

OneForm OneForm::zero(const ChartPtr& c) {
    return OneForm{c, std::vector<Expr>(c->dim(), Expr::zero())};
}

OneForm OneForm::coordinate(const ChartPtr& c, int i) {
    OneForm f = zero(c);
    f.comps[i] = Expr::one();
    return f;
}

OneForm OneForm::make(const ChartPtr& c, std::vector<Expr> comps) {
    require_dim(c, comps.size(), "one-form");
    return OneForm{c, std::move(comps)};
}

OneForm OneForm::simplified() const {
    OneForm f{chart, comps};
    for (auto& e : f.comps) e = expr_simplify(e);
    return f;
}

std::string OneForm::str() const { return comps_str(comps, chart, false); }

TwoForm TwoForm::zero(const ChartPtr& c) { return TwoForm{c, ExprMatrix(c->dim(), c->dim())}; }

TwoForm TwoForm::make(const ChartPtr& c, const ExprMatrix& comps) {
    require_square(c, comps, "two-form");
    require_antisymmetric(c, comps, "two-form");
    return TwoForm{c, comps};
}

Bivector Bivector::zero(const ChartPtr& c) { return Bivector{c, ExprMatrix(c->dim(), c->dim())}; }

Bivector Bivector::make(const ChartPtr& c, const ExprMatrix& comps) {
    require_square(c, comps, "bivector");
    require_antisymmetric(c, comps, "bivector");
    return Bivector{c, comps};
}

Endo Endo::zero(const ChartPtr& c) { return Endo{c, ExprMatrix(c->dim(), c->dim())}; }

Endo Endo::identity(const ChartPtr& c) { return Endo{c, ExprMatrix::identity(c->dim())}; }

Endo Endo::make(const ChartPtr& c, const ExprMatrix& comps) {
    require_square(c, comps, "endomorphism");
    return Endo{c, comps.simplified()};
}

Metric Metric::make(const ChartPtr& c, const ExprMatrix& comps) {
    require_square(c, comps, "metric");
    for (int i = 0; i < c->dim(); ++i)
        for (int j = i + 1; j < c->dim(); ++j)
            if (!is_symbolically_zero(comps.at(i, j) - comps.at(j, i)))
                throw Error("metric components are not symmetric at (" + c->coords[i] + "," +
                            c->coords[j] + ")");
    Metric g{c, comps.simplified()};
    if (is_symbolically_zero(g.det()))
        throw Error("degenerate metric: determinant is symbolically zero");
    return g;
}

Metric Metric::diagonal(const ChartPtr& c, const std::vector<Expr>& diag) {
    require_dim(c, diag.size(), "metric diagonal");
    ExprMatrix m(c->dim(), c->dim());
    for (int i = 0; i < c->dim(); ++i) m.at(i, i) = diag[i];
    return make(c, m);
}

Expr Metric::det() const { return comps.determinant(); }

ExprMatrix Metric::inverse(int symbolic_inversion_limit) const {
    if (chart->dim() > symbolic_inversion_limit)
        throw DimensionError("chart dimension " + std::to_string(chart->dim()) +
                             " exceeds the symbolic inversion limit " +
                             std::to_string(symbolic_inversion_limit));
    Expr d = det();
    if (is_symbolically_zero(d)) throw Error("degenerate metric: determinant is symbolically zero");
    ExprMatrix adj = comps.adjugate();
    ExprMatrix inv(chart->dim(), chart->dim());
    for (int i = 0; i < chart->dim(); ++i)
        for (int j = 0; j < chart->dim(); ++j) inv.at(i, j) = expr_simplify(adj.at(i, j) / d);
    return inv;
}

std::pair<int, int> Metric::signature(std::uint64_t seed) const {
    int n = chart->dim();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::map<std::string, double> point;
        for (const auto& c : chart->coords)
            point[c] = (double(rng() >> 11) * (1.0 / 9007199254740992.0)) * 2.0 - 1.0;
        try {
            // Jacobi's rule: sign changes in the leading principal minors
            // 1, D1, ..., Dn count the negative eigenvalues.
            std::vector<double> minors(n + 1, 1.0);
            bool degenerate = false;
            for (int k = 1; k <= n; ++k) {
                std::vector<std::vector<double>> a(k, std::vector<double>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) a[i][j] = comps.at(i, j).eval(point);
                // Gaussian elimination determinant
                double det = 1.0;
                for (int col = 0; col < k; ++col) {
                    int piv = -1;
                    double best = 1e-12;
                    for (int r = col; r < k; ++r)
                        if (std::fabs(a[r][col]) > best) { best = std::fabs(a[r][col]); piv = r; }
                    if (piv < 0) { degenerate = true; break; }
                    if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
                    det *= a[col][col];
                    for (int r = col + 1; r < k; ++r) {
                        double f = a[r][col] / a[col][col];
                        for (int cc = col; cc < k; ++cc) a[r][cc] -= f * a[col][cc];
                    }
                }
                if (degenerate) break;
                minors[k] = det;
            }
            if (degenerate) continue;
            int neg = 0;
            for (int k = 1; k <= n; ++k)
                if ((minors[k] < 0) != (minors[k - 1] < 0)) ++neg;
            return {n - neg, neg};
        } catch (const EvalError&) {
            continue; // pole in a component; try another point
        }
    }
    throw EvalError("could not determine metric signature at sampled points");
}

Expr pairing(const OneForm& alpha, const VectorField& x) {
    require_same_chart(alpha.chart, x.chart, "pairing");
    Expr acc = Expr::zero();
    for (int i = 0; i < alpha.chart->dim(); ++i) acc = acc + alpha.comps[i] * x.comps[i];
    return expr_simplify(acc);
}

VectorField endo_apply(const Endo& phi, const VectorField& x) {
    require_same_chart(phi.chart, x.chart, "endomorphism application");
    return VectorField{x.chart, phi.comps.apply(x.comps)};
}

Endo tensor_product(const OneForm& eta, const VectorField& xi) {
    require_same_chart(eta.chart, xi.chart, "tensor product");
    int n = eta.chart->dim();
    ExprMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = expr_simplify(xi.comps[i] * eta.comps[j]);
    return Endo{eta.chart, m};
}

} // namespace paracalc

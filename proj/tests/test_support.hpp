#pragma once

#include <random>

#include "paracalc/canon.hpp"
#include "paracalc/catalog.hpp"

namespace paracalc::testing {

inline bool symbolic_equal(const Expr& a, const Expr& b) { return is_symbolically_zero(a - b); }

inline bool vf_equal(const VectorField& a, const VectorField& b) {
    if (!same_chart(a.chart, b.chart)) return false;
    for (int i = 0; i < a.chart->dim(); ++i)
        if (!symbolic_equal(a.comps[i], b.comps[i])) return false;
    return true;
}

inline bool form_equal(const OneForm& a, const OneForm& b) {
    if (!same_chart(a.chart, b.chart)) return false;
    for (int i = 0; i < a.chart->dim(); ++i)
        if (!symbolic_equal(a.comps[i], b.comps[i])) return false;
    return true;
}

inline bool matrix_zero(const ExprMatrix& m) { return m.is_symbolically_zero(); }

inline bool gen_section_zero(const GenSection& a) {
    for (const auto& e : a.vf.comps)
        if (!is_symbolically_zero(e)) return false;
    for (const auto& e : a.form.comps)
        if (!is_symbolically_zero(e)) return false;
    return true;
}

// Deterministic generator for expressions inside the supported atom class
// (polynomials over coordinates and sin/cos/exp of linear arguments).
class ExprGen {
public:
    ExprGen(std::uint64_t seed, std::vector<std::string> coords)
        : rng_(seed), coords_(std::move(coords)) {}

    Expr linear() {
        Expr e = Expr::integer(pick(-2, 2));
        int terms = pick(1, 2);
        for (int i = 0; i < terms; ++i) {
            std::int64_t c = pick(-2, 2);
            if (c == 0) c = 1;
            e = e + Expr::integer(c) * Expr::coord(coords_[size_t(pick(0, int(coords_.size()) - 1))]);
        }
        return e;
    }

    Expr gen(int depth) {
        if (depth <= 0) return leaf();
        switch (pick(0, 5)) {
        case 0: return gen(depth - 1) + gen(depth - 1);
        case 1: return gen(depth - 1) - gen(depth - 1);
        case 2: return gen(depth - 1) * gen(depth - 1);
        case 3: return pow(gen(depth - 1), pick(0, 2));
        case 4: return -gen(depth - 1);
        default: return leaf();
        }
    }

    Rational rational(int lim = 3) {
        std::int64_t num = pick(-lim, lim);
        std::int64_t den = pick(1, lim);
        return Rational(num, den);
    }

    double uniform() {
        return (double(rng_() >> 11) * (1.0 / 9007199254740992.0)) * 2.0 - 1.0;
    }

    std::map<std::string, double> point() {
        std::map<std::string, double> p;
        for (const auto& c : coords_) p[c] = uniform();
        return p;
    }

    int pick(int lo, int hi) {
        return lo + int(rng_() % std::uint64_t(hi - lo + 1));
    }

    ExprMatrix antisymmetric(const ChartPtr& chart, int coeff_lim = 2) {
        int n = chart->dim();
        ExprMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Expr e = Expr::rational(rational(coeff_lim));
                m.at(i, j) = e;
                m.at(j, i) = -e;
            }
        return m;
    }

    ExprMatrix square(const ChartPtr& chart, int coeff_lim = 2) {
        int n = chart->dim();
        ExprMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Expr::rational(rational(coeff_lim));
        return m;
    }

    GenSection section(const ChartPtr& chart) {
        int n = chart->dim();
        std::vector<Expr> v(n, Expr::zero()), f(n, Expr::zero());
        for (int i = 0; i < n; ++i) {
            v[i] = gen(1);
            f[i] = gen(1);
        }
        return GenSection{VectorField{chart, v}, OneForm{chart, f}};
    }

private:
    Expr leaf() {
        switch (pick(0, 5)) {
        case 0: return Expr::coord(coords_[size_t(pick(0, int(coords_.size()) - 1))]);
        case 1: return Expr::rational(rational());
        case 2: return sin(linear());
        case 3: return cos(linear());
        case 4: return exp(linear());
        default: return Expr::integer(pick(-3, 3));
        }
    }

    std::mt19937_64 rng_;
    std::vector<std::string> coords_;
};

} // namespace paracalc::testing

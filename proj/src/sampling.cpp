#include "paracalc/sampling.hpp"

#include <cmath>
#include <random>
#include <set>

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

const char* tier_name(ZeroTier t) {
    switch (t) {
    case ZeroTier::SymbolicZero: return "symbolic-zero";
    case ZeroTier::NumericZero: return "numeric-zero";
    case ZeroTier::NonZero: return "nonzero";
    }
    return "?";
}

namespace {

// Portable uniform in [-range, range): fixed mapping from the mt19937_64
// stream so runs are byte-reproducible for a given seed.
double next_uniform(std::mt19937_64& rng, double range) {
    double u = double(rng() >> 11) * (1.0 / 9007199254740992.0); // [0,1)
    return (2.0 * u - 1.0) * range;
}

} // namespace

ZeroVerdict expr_is_zero(const Expr& e, const std::vector<std::string>& vars,
                         const SamplerConfig& cfg) {
    try {
        if (is_symbolically_zero(e))
            return ZeroVerdict{ZeroTier::SymbolicZero, 0.0, std::nullopt};
    } catch (const UnsupportedExpressionError&) {
        // outside the canonical atom class; fall through to the numeric tier
    }

    std::set<std::string> names(vars.begin(), vars.end());
    e.collect_coords(names);

    std::mt19937_64 rng(cfg.seed);
    double max_abs = 0.0;
    std::map<std::string, double> worst;
    for (int i = 0; i < cfg.samples; ++i) {
        double value = 0.0;
        std::map<std::string, double> point;
        bool ok = false;
        for (int attempt = 0; attempt <= cfg.max_retries && !ok; ++attempt) {
            point.clear();
            for (const auto& n : names) point[n] = next_uniform(rng, cfg.range);
            try {
                value = e.eval(point);
                ok = true;
            } catch (const EvalError&) {
                // pole; draw a fresh point
            }
        }
        if (!ok) throw EvalError("persistent pole while sampling expression " + e.str());
        double a = std::fabs(value);
        if (a > max_abs) {
            max_abs = a;
            worst = point;
        }
    }
    if (max_abs <= cfg.tolerance)
        return ZeroVerdict{ZeroTier::NumericZero, max_abs, std::nullopt};
    return ZeroVerdict{ZeroTier::NonZero, max_abs, worst};
}

} // namespace paracalc

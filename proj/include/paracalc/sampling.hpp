#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracalc/expr.hpp"

namespace paracalc {

struct SamplerConfig {
    std::uint64_t seed = 20240817;
    int samples = 100;
    double tolerance = 1e-8;
    double range = 1.0; // points drawn uniformly from [-range, range]^n
    int max_retries = 8;
};

enum class ZeroTier { SymbolicZero, NumericZero, NonZero };

const char* tier_name(ZeroTier t);

struct ZeroVerdict {
    ZeroTier tier = ZeroTier::SymbolicZero;
    double max_abs_residual = 0.0;
    std::optional<std::map<std::string, double>> witness;

    bool at_least_numeric() const { return tier != ZeroTier::NonZero; }
};

// Two-tier zero test: symbolic (canonical form is the zero constant), then
// seeded numeric sampling over the union of `vars` and the expression's own
// coordinates. Poles at sample points are resampled, bounded by max_retries.
ZeroVerdict expr_is_zero(const Expr& e, const std::vector<std::string>& vars,
                         const SamplerConfig& cfg = {});

} // namespace paracalc

#pragma once

#include "paracalc/session.hpp"

namespace paracalc {

struct RunConfig {
    SamplerConfig sampler;
    bool strict = false; // demote numeric-pass to failure
};

struct RunResult {
    std::vector<CheckReport> reports;
    bool ok = true;     // under the configured strictness
    int exit_code = 0;  // 0 pass, 1 verdict failure
};

// Executes the directives in order; checker errors (violated preconditions,
// degenerate input) become failing reports and execution continues.
RunResult run_session(const Session& s, const RunConfig& cfg = {});

std::string emit_text(const Session& s, const RunResult& r, const RunConfig& cfg);
// Stable schema; byte-identical across runs with the same seed and input.
std::string emit_json(const Session& s, const RunResult& r, const RunConfig& cfg);

} // namespace paracalc

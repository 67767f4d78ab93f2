#pragma once

#include <map>

#include "paracalc/morphisms.hpp"
#include "paracalc/normality.hpp"

namespace paracalc {

// One `check ...` directive, in declaration order.
struct Directive {
    enum class Kind {
        Apc,
        ApcMetric,
        Gapc,
        Blocks,
        Normal,
        Equiv,
        Compat,
        BTransform,
        BetaTransform,
        Morphism,
        Family,
        Products,
        GenMetricCheck,
    };
    Kind kind;
    std::vector<std::string> args;
    std::string via = "both"; // check normal ... via classical|generalized|both
    int line = 0;
    std::string text; // the directive as written, for report naming
};

// A parsed structure-definition file: named declarations plus an ordered
// list of check directives. Every referenced name resolves at parse time.
struct Session {
    std::string source_name;
    std::map<std::string, ChartPtr> charts;
    std::map<std::string, VectorField> vector_fields;
    std::map<std::string, OneForm> one_forms;
    std::map<std::string, TwoForm> two_forms;
    std::map<std::string, Bivector> bivectors;
    std::map<std::string, Metric> metrics;
    std::map<std::string, Endo> endos;
    std::map<std::string, APC> structures;
    std::map<std::string, Diffeo> maps;
    std::vector<Directive> directives;
};

Session parse_session(const std::string& text, const std::string& source_name = "<session>");

// Serializes the declarations back to DSL text; parsing the result yields a
// session with identical semantics (used by the round-trip property tests).
std::string unparse_session(const Session& s);

} // namespace paracalc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracalc/sampling.hpp"

namespace paracalc {

enum class Verdict { Pass, NumericPass, Fail };

const char* verdict_name(Verdict v);

struct Witness {
    std::map<std::string, double> point;
    std::string where; // component / frame-pair label, with the residual
};

struct CheckItem {
    std::string label;
    ZeroTier tier = ZeroTier::SymbolicZero;
    double max_abs = 0.0;
    std::optional<Witness> witness;
    bool counted = true; // observational items are reported but do not fail a check
    std::string note;

    bool failed() const { return tier == ZeroTier::NonZero; }

    static CheckItem info(const std::string& label, const std::string& note);
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;
    std::vector<std::string> notes;

    Verdict verdict() const;
    bool passed() const { return verdict() != Verdict::Fail; }
    bool symbolic_pass() const { return verdict() == Verdict::Pass; }
    const CheckItem* find(const std::string& label) const;
    void add(CheckItem item) { items.push_back(std::move(item)); }
    std::string str() const;
};

// One named residual expression inside an item ("component (x,y)", ...).
struct LabeledResidual {
    std::string where;
    Expr expr;
};

// Zero-tests every residual; the item's tier is the worst tier, the witness
// comes from the largest offending residual.
CheckItem residual_item(const std::string& label, const std::vector<LabeledResidual>& residuals,
                        const std::vector<std::string>& vars, const SamplerConfig& cfg);

// hypothesis => conclusion on the given data; vacuously true hypotheses are
// noted as "hypothesis unmet".
CheckItem implication_item(const std::string& label, bool hypothesis_holds, bool conclusion_holds);

} // namespace paracalc

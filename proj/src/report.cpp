#include "paracalc/report.hpp"

#include "paracalc/canon.hpp"

namespace paracalc {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::NumericPass: return "numeric-pass";
    case Verdict::Fail: return "fail";
    }
    return "?";
}

CheckItem CheckItem::info(const std::string& label, const std::string& note) {
    CheckItem it;
    it.label = label;
    it.note = note;
    it.counted = false;
    return it;
}

Verdict CheckReport::verdict() const {
    Verdict v = Verdict::Pass;
    for (const auto& it : items) {
        if (!it.counted) continue;
        if (it.tier == ZeroTier::NonZero) return Verdict::Fail;
        if (it.tier == ZeroTier::NumericZero) v = Verdict::NumericPass;
    }
    return v;
}

const CheckItem* CheckReport::find(const std::string& label) const {
    for (const auto& it : items)
        if (it.label == label) return &it;
    return nullptr;
}

std::string CheckReport::str() const {
    std::string out = "== " + name + " ==\n";
    for (const auto& it : items) {
        std::string status = it.counted
                                 ? (it.tier == ZeroTier::NonZero
                                        ? "FAIL"
                                        : (it.tier == ZeroTier::NumericZero ? "num " : "ok  "))
                                 : "obs ";
        out += "  [" + status + "] " + it.label + "  (" + tier_name(it.tier) + ")";
        if (it.witness) {
            out += "\n         at " + it.witness->where + ", point {";
            bool first = true;
            for (const auto& [k, v] : it.witness->point) {
                if (!first) out += ", ";
                out += k + "=" + std::to_string(v);
                first = false;
            }
            out += "}";
        }
        if (!it.note.empty()) out += "\n         note: " + it.note;
        out += "\n";
    }
    for (const auto& n : notes) out += "  note: " + n + "\n";
    out += "verdict: " + std::string(verdict_name(verdict())) + "\n";
    return out;
}

CheckItem residual_item(const std::string& label, const std::vector<LabeledResidual>& residuals,
                        const std::vector<std::string>& vars, const SamplerConfig& cfg) {
    CheckItem item;
    item.label = label;
    for (const auto& r : residuals) {
        ZeroVerdict v = expr_is_zero(r.expr, vars, cfg);
        if (v.max_abs_residual > item.max_abs) item.max_abs = v.max_abs_residual;
        if (int(v.tier) > int(item.tier)) item.tier = v.tier;
        if (v.tier == ZeroTier::NonZero && !item.witness) {
            Witness w;
            if (v.witness) w.point = *v.witness;
            std::string shown;
            try {
                shown = expr_simplify(r.expr).str();
            } catch (const Error&) {
                shown = r.expr.str();
            }
            w.where = r.where + " : residual = " + shown;
            item.witness = std::move(w);
        }
    }
    return item;
}

CheckItem implication_item(const std::string& label, bool hypothesis_holds, bool conclusion_holds) {
    CheckItem item;
    item.label = label;
    if (!hypothesis_holds) {
        item.tier = ZeroTier::SymbolicZero;
        item.note = "hypothesis unmet; implication holds vacuously";
    } else if (conclusion_holds) {
        item.tier = ZeroTier::SymbolicZero;
    } else {
        item.tier = ZeroTier::NonZero;
        item.note = "hypothesis holds but conclusion fails";
    }
    return item;
}

} // namespace paracalc

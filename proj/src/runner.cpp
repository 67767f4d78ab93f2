#include "paracalc/runner.hpp"

#include <json.hpp>

#include "paracalc/errors.hpp"

namespace paracalc {

namespace {

CheckReport error_report(const std::string& name, const std::string& message) {
    CheckReport rep;
    rep.name = name;
    CheckItem item;
    item.label = "directive error";
    item.tier = ZeroTier::NonZero;
    item.note = message;
    rep.add(std::move(item));
    return rep;
}

void run_directive(const Session& s, const Directive& d, const SamplerConfig& cfg,
                   std::vector<CheckReport>& out) {
    auto tagged = [&](CheckReport rep) {
        rep.name = d.text + " | " + rep.name;
        out.push_back(std::move(rep));
    };
    switch (d.kind) {
    case Directive::Kind::Apc:
        tagged(check_apc(s.structures.at(d.args[0]), cfg));
        return;
    case Directive::Kind::ApcMetric:
        tagged(check_apc_metric(s.structures.at(d.args[0]), cfg));
        return;
    case Directive::Kind::Gapc:
        tagged(check_gapc(induce_gapc(s.structures.at(d.args[0]), cfg), cfg));
        return;
    case Directive::Kind::Blocks:
        tagged(gapc_block_conditions(induce_gapc(s.structures.at(d.args[0]), cfg), cfg));
        return;
    case Directive::Kind::Normal: {
        const APC& apc = s.structures.at(d.args[0]);
        if (d.via == "classical" || d.via == "both") tagged(classical_normality(apc, cfg));
        if (d.via == "generalized" || d.via == "both") tagged(generalized_normality(apc, cfg));
        if (d.via == "both") tagged(normality_equivalence(apc, cfg));
        return;
    }
    case Directive::Kind::Equiv:
        tagged(normality_equivalence(s.structures.at(d.args[0]), cfg));
        return;
    case Directive::Kind::Compat:
        tagged(compatibility_check(induce_gapc(s.structures.at(d.args[0]), cfg),
                                   s.metrics.at(d.args[1]), cfg));
        return;
    case Directive::Kind::BTransform: {
        const APC& apc = s.structures.at(d.args[0]);
        const TwoForm& b2 = s.two_forms.at(d.args[1]);
        tagged(b_invariance(b2, apc, cfg));
        tagged(b_sufficiency(b2, apc, cfg));
        return;
    }
    case Directive::Kind::BetaTransform: {
        const APC& apc = s.structures.at(d.args[0]);
        const Bivector& b2 = s.bivectors.at(d.args[1]);
        tagged(beta_invariance(b2, apc, cfg));
        tagged(beta_sufficiency(b2, apc, cfg));
        return;
    }
    case Directive::Kind::Morphism: {
        const Diffeo& f = s.maps.at(d.args[0]);
        const APC& a = s.structures.at(d.args[1]);
        const APC& b = s.structures.at(d.args[2]);
        tagged(check_paracontactomorphism(f, a, b, cfg));
        tagged(check_gen_commutation(f, a, b, cfg));
        return;
    }
    case Directive::Kind::Family:
        tagged(one_param_family(s.structures.at(d.args[0]), s.structures.at(d.args[1]), d.args[2],
                                cfg)
                   .report);
        return;
    case Directive::Kind::Products:
        tagged(product_structures(s.structures.at(d.args[0]), cfg).report);
        return;
    case Directive::Kind::GenMetricCheck:
        tagged(check_gen_metric(gen_metric_from_riemannian(s.metrics.at(d.args[0])), cfg));
        return;
    }
}

} // namespace

RunResult run_session(const Session& s, const RunConfig& cfg) {
    RunResult r;
    for (const auto& d : s.directives) {
        try {
            run_directive(s, d, cfg.sampler, r.reports);
        } catch (const Error& e) {
            r.reports.push_back(error_report(d.text, e.what()));
        }
    }
    for (const auto& rep : r.reports) {
        Verdict v = rep.verdict();
        if (v == Verdict::Fail || (cfg.strict && v == Verdict::NumericPass)) r.ok = false;
    }
    r.exit_code = r.ok ? 0 : 1;
    return r;
}

std::string emit_text(const Session& s, const RunResult& r, const RunConfig& cfg) {
    std::string out;
    out += "session: " + s.source_name + "\n";
    out += "seed: " + std::to_string(cfg.sampler.seed) +
           "  samples: " + std::to_string(cfg.sampler.samples) + "\n\n";
    for (const auto& rep : r.reports) out += rep.str() + "\n";
    out += r.ok ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n";
    return out;
}

std::string emit_json(const Session& s, const RunResult& r, const RunConfig& cfg) {
    using json = nlohmann::ordered_json;
    json root;
    root["session"] = s.source_name;
    root["seed"] = cfg.sampler.seed;
    root["samples"] = cfg.sampler.samples;
    root["tolerance"] = cfg.sampler.tolerance;
    root["strict"] = cfg.strict;
    root["reports"] = json::array();
    for (const auto& rep : r.reports) {
        json jr;
        jr["name"] = rep.name;
        jr["items"] = json::array();
        for (const auto& it : rep.items) {
            json ji;
            ji["label"] = it.label;
            ji["tier"] = tier_name(it.tier);
            ji["max_abs_residual"] = it.max_abs;
            ji["counted"] = it.counted;
            if (it.witness) {
                json w;
                w["where"] = it.witness->where;
                json pt;
                for (const auto& [k, v] : it.witness->point) pt[k] = v;
                w["point"] = pt;
                ji["witness"] = w;
            }
            if (!it.note.empty()) ji["note"] = it.note;
            jr["items"].push_back(std::move(ji));
        }
        if (!rep.notes.empty()) jr["notes"] = rep.notes;
        jr["verdict"] = verdict_name(rep.verdict());
        jr["passed"] = rep.verdict() != Verdict::Fail &&
                       !(cfg.strict && rep.verdict() == Verdict::NumericPass);
        root["reports"].push_back(std::move(jr));
    }
    root["ok"] = r.ok;
    return root.dump(2) + "\n";
}

} // namespace paracalc

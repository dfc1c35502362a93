#include "qpsi/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qpsi {

namespace {

using nlohmann::json;

json scalar_json(const Scalar& s) {
    if (s.mode() == Mode::exact) return s.rat().get_str();
    return json{{"im", s.to_double_im()}, {"re", s.to_double()}};
}

json point_json(const ParameterPoint& p) {
    json j;
    j["mode"] = (p.mode() == Mode::exact) ? "exact" : "float";
    j["q"] = scalar_json(p.q());
    json params = json::object();
    for (const auto& [sym, v] : p.values()) params[std::string(1, sym)] = scalar_json(v);
    j["params"] = params;
    json ints = json::object();
    for (const auto& [sym, v] : p.ints()) ints[std::string(1, sym)] = v;
    j["ints"] = ints;
    if (p.sqrt_a()) j["sqrt_a"] = scalar_json(*p.sqrt_a());
    return j;
}

const char* status_name(SampleStatus s) {
    switch (s) {
        case SampleStatus::ok: return "ok";
        case SampleStatus::residual_exceeded: return "residual_exceeded";
        case SampleStatus::pole: return "pole";
        case SampleStatus::degenerate: return "degenerate";
        case SampleStatus::nonconvergence: return "nonconvergence";
        case SampleStatus::error: return "error";
    }
    return "error";
}

}  // namespace

std::string to_json(const VerificationReport& rep, bool with_samples) {
    json j;
    j["id"] = rep.id;
    j["mode"] = (rep.mode == Mode::exact) ? "exact" : "float";
    j["seed"] = rep.seed;
    j["count"] = rep.count;
    j["compare_tol"] = rep.compare_tol;
    j["series_tol"] = rep.series_tol;
    j["max_rel_residual"] = rep.max_rel_residual;
    j["failures"] = rep.failures;
    j["pass"] = rep.pass;
    if (with_samples) {
        json samples = json::array();
        for (size_t i = 0; i < rep.samples.size(); ++i) {
            const SampleOutcome& oc = rep.samples[i];
            json s;
            s["index"] = i;
            s["point"] = point_json(oc.point);
            s["status"] = status_name(oc.status);
            s["detail"] = oc.detail;
            s["lhs"] = scalar_json(oc.lhs);
            s["rhs"] = scalar_json(oc.rhs);
            s["abs_residual"] = oc.abs_residual.get_d();
            s["rel_residual"] = oc.rel_residual;
            s["lhs_tail"] = oc.lhs_tail.get_d();
            s["series_tail"] = oc.series_tail.get_d();
            s["terms_used"] = oc.terms_used;
            samples.push_back(std::move(s));
        }
        j["samples"] = samples;
    }
    return j.dump(2);
}

std::string to_json(const OrthogonalityCampaignReport& rep) {
    json j;
    j["pair"] = rep.pair;
    j["window_l"] = rep.l;
    j["window_n"] = rep.n;
    j["contexts"] = rep.contexts;
    j["failures"] = rep.failures;
    j["all_exact"] = rep.all_exact;
    j["max_offdiag"] = rep.max_offdiag.get_d();
    j["max_diag_dev"] = rep.max_diag_dev.get_d();
    return j.dump(2);
}

std::string to_json(const std::vector<DegenerationOutcome>& outcomes) {
    json arr = json::array();
    for (const auto& oc : outcomes) {
        json j;
        j["source"] = oc.source;
        j["target"] = oc.target;
        j["description"] = oc.description;
        j["pass"] = oc.pass;
        j["detail"] = oc.detail;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string to_human(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.id << " [" << ((rep.mode == Mode::exact) ? "exact" : "float") << "] " << rep.count
       << " samples, seed " << rep.seed << ": " << (rep.pass ? "PASS" : "FAIL")
       << "  max_rel_residual=" << rep.max_rel_residual << "  failures=" << rep.failures.size()
       << "\n";
    for (long idx : rep.failures) {
        const SampleOutcome& oc = rep.samples[idx];
        os << "  sample " << idx << ": " << status_name(oc.status) << " " << oc.detail
           << "  rel_residual=" << oc.rel_residual << "\n";
    }
    return os.str();
}

std::string to_human(const OrthogonalityCampaignReport& rep) {
    std::ostringstream os;
    os << rep.pair << " window (" << rep.l << "," << rep.n << ") x" << rep.contexts
       << " contexts: " << (rep.failures == 0 ? "PASS" : "FAIL");
    if (rep.all_exact)
        os << "  (exact delta)";
    else
        os << "  max_offdiag=" << rep.max_offdiag.get_d() << " max_diag_dev="
           << rep.max_diag_dev.get_d();
    os << "\n";
    return os.str();
}

std::string to_human(const std::vector<DegenerationOutcome>& outcomes) {
    std::ostringstream os;
    for (const auto& oc : outcomes) {
        os << oc.source << " -> " << oc.target << " (" << oc.description << "): "
           << (oc.pass ? "PASS" : "FAIL");
        if (!oc.detail.empty()) os << "  " << oc.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace qpsi

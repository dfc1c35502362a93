// qpsi: list, verify and probe the q-series identity registry.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "qpsi/report.hpp"

namespace {

using namespace qpsi;

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(output);
    if (!os) throw std::runtime_error("cannot open output file: " + output);
    os << text;
    if (!text.empty() && text.back() != '\n') os << "\n";
}

int init_precision(int flag_digits) {
    int digits = 30;
    if (const char* env = std::getenv("QPSI_PRECISION")) {
        int v = std::atoi(env);
        if (v >= 15) digits = v;
    }
    if (flag_digits > 0) digits = flag_digits;
    set_precision_digits(digits);
    return digits;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for curious extensions of the 1psi1 summation"};
    app.require_subcommand(1);

    int precision = 0;
    app.add_option("--precision", precision, "floating precision digits (>= 15; env QPSI_PRECISION)");

    std::string id, mode_str = "auto", format = "human", output, pair = "cor1", source;
    std::vector<long> window = {0, 6};
    long count = 25, contexts = 25;
    std::uint64_t seed = 42;
    double tol = 1e-9, series_tol = 1e-12;
    long B = 1000000;

    auto* cmd_list = app.add_subcommand("list", "list registry identities");

    auto* cmd_verify = app.add_subcommand("verify", "verify one identity on sampled points");
    cmd_verify->add_option("--id", id, "identity id")->required();
    cmd_verify->add_option("--count", count, "number of sample points");
    cmd_verify->add_option("--seed", seed, "sample seed");
    cmd_verify->add_option("--tol", tol, "relative residual threshold (float mode)");
    cmd_verify->add_option("--series-tol", series_tol, "series truncation tolerance");
    cmd_verify->add_option("--mode", mode_str, "exact | float | auto");
    cmd_verify->add_option("--output", output, "output path (default stdout)");
    cmd_verify->add_option("--format", format, "human | json");

    auto* cmd_all = app.add_subcommand("verify-all", "verify every identity plus suites");
    cmd_all->add_option("--count", count, "sample points per identity");
    cmd_all->add_option("--seed", seed, "sample seed");
    cmd_all->add_option("--tol", tol, "relative residual threshold (float mode)");
    cmd_all->add_option("--series-tol", series_tol, "series truncation tolerance");
    cmd_all->add_option("--output", output, "output path (default stdout)");
    cmd_all->add_option("--format", format, "human | json");

    auto* cmd_orth = app.add_subcommand("orthogonality", "verify a matrix inverse pair");
    cmd_orth->add_option("--pair", pair, "lemma | cor1 | cor2")->required();
    cmd_orth->add_option("--window", window, "window indices l n")->expected(2);
    cmd_orth->add_option("--contexts", contexts, "random contexts");
    cmd_orth->add_option("--seed", seed, "sample seed");
    cmd_orth->add_option("--mode", mode_str, "exact | float");
    cmd_orth->add_option("--output", output, "output path");
    cmd_orth->add_option("--format", format, "human | json");

    auto* cmd_degen = app.add_subcommand("degenerations", "run the termwise degeneration suite");
    cmd_degen->add_option("--seed", seed, "sample seed");
    cmd_degen->add_option("--output", output, "output path");
    cmd_degen->add_option("--format", format, "human | json");

    auto* cmd_probe = app.add_subcommand("probe-limit", "large-parameter limit probes");
    cmd_probe->add_option("--source", source,
                          "thm_ts | thm_tns | thm_tnsc | thm_bns | thm_bnsc | hagen_rothe")
        ->required();
    cmd_probe->add_option("--B", B, "probe size (B, and m for hagen_rothe)");
    cmd_probe->add_option("--output", output, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        init_precision(precision);

        if (*cmd_list) {
            std::ostringstream os;
            for (const auto& [rid, rec] : registry()) {
                const char* kind = rec.kind == SeriesKind::terminating ? "terminating"
                                   : rec.kind == SeriesKind::unilateral ? "unilateral"
                                                                        : "bilateral";
                os << rid << "  (" << kind << (rec.exact_capable ? ", exact" : ", float") << ")  "
                   << rec.title << "  [" << rec.constraint_text << "]\n";
            }
            emit(os.str(), output);
            return 0;
        }

        if (*cmd_verify) {
            if (registry().count(id) == 0) {
                std::cerr << "unknown identity id: " << id << "\n";
                return 2;
            }
            const IdentityRecord& rec = record(id);
            SampleSpec spec;
            spec.id = id;
            spec.count = count;
            spec.seed = seed;
            if (mode_str == "auto")
                spec.mode = rec.exact_capable ? Mode::exact : Mode::floating;
            else if (mode_str == "exact")
                spec.mode = Mode::exact;
            else if (mode_str == "float")
                spec.mode = Mode::floating;
            else {
                std::cerr << "bad --mode: " << mode_str << "\n";
                return 2;
            }
            if (spec.mode == Mode::exact && !rec.exact_capable) {
                std::cerr << id << " is nonterminating; exact mode not available\n";
                return 2;
            }
            VerifyOptions opts;
            opts.compare_tol = tol;
            opts.series_tol = series_tol;
            VerificationReport rep = verify(spec, opts);
            emit(format == "json" ? to_json(rep) : to_human(rep), output);
            return rep.pass ? 0 : 1;
        }

        if (*cmd_all) {
            VerifyOptions opts;
            opts.compare_tol = tol;
            opts.series_tol = series_tol;
            auto reports = verify_all(opts, seed, count);
            bool pass = true;
            std::ostringstream os;
            for (const auto& [rid, rep] : reports) {
                pass = pass && rep.pass;
                os << (format == "json" ? to_json(rep, false) + "\n" : to_human(rep));
            }
            OrthogonalityCampaign oc;
            oc.seed = seed;
            for (const char* pr : {"lemma", "cor1", "cor2"}) {
                oc.pair = pr;
                auto orep = run_orthogonality_campaign(oc);
                pass = pass && orep.failures == 0;
                os << (format == "json" ? to_json(orep) + "\n" : to_human(orep));
            }
            auto degen = run_degeneration_suite(seed);
            for (const auto& d : degen) pass = pass && d.pass;
            os << (format == "json" ? to_json(degen) + "\n" : to_human(degen));
            emit(os.str(), output);
            return pass ? 0 : 1;
        }

        if (*cmd_orth) {
            if (pair != "lemma" && pair != "cor1" && pair != "cor2") {
                std::cerr << "unknown pair: " << pair << "\n";
                return 2;
            }
            if (window.size() != 2 || window[0] > window[1]) {
                std::cerr << "bad --window\n";
                return 2;
            }
            OrthogonalityCampaign oc;
            oc.pair = pair;
            oc.l = window[0];
            oc.n = window[1];
            oc.contexts = contexts;
            oc.seed = seed;
            oc.mode = (mode_str == "float") ? Mode::floating : Mode::exact;
            auto rep = run_orthogonality_campaign(oc);
            emit(format == "json" ? to_json(rep) : to_human(rep), output);
            return rep.failures == 0 ? 0 : 1;
        }

        if (*cmd_degen) {
            auto outcomes = run_degeneration_suite(seed);
            bool pass = true;
            for (const auto& oc : outcomes) pass = pass && oc.pass;
            emit(format == "json" ? to_json(outcomes) : to_human(outcomes), output);
            return pass ? 0 : 1;
        }

        if (*cmd_probe) {
            static const std::set<std::string> known = {"thm_ts",  "thm_tns", "thm_tnsc",
                                                        "thm_bns", "thm_bnsc", "hagen_rothe"};
            if (known.count(source) == 0) {
                std::cerr << "unknown probe source: " << source << "\n";
                return 2;
            }
            std::ostringstream os;
            bool pass = false;
            if (source == "hagen_rothe") {
                Scalar a = Scalar::rational(1, 1), b = Scalar::rational(2, 1),
                       c = Scalar::rational(3, 1);
                mpf_class d1 = abel_from_rothe_residual(a, b, c, 3, B);
                mpf_class d2 = abel_from_rothe_residual(a, b, c, 3, 2 * B);
                double ratio = (d1 > 0) ? mpf_class(d2 / d1).get_d() : 0.0;
                os << "hagen_rothe -> abel probe: m=" << B << " residual=" << d1.get_d()
                   << "; m=" << 2 * B << " residual=" << d2.get_d() << "; decay x2=" << 2 * ratio
                   << "\n";
                pass = (2 * ratio > 0.9 && 2 * ratio < 1.1);
            } else {
                mpf_class d1 = vwp_limit_probe(source, B, Mode::floating);
                mpf_class d2 = vwp_limit_probe(source, 2 * B, Mode::floating);
                double ratio = (d1 > 0) ? mpf_class(d2 / d1).get_d() : 0.0;
                os << source << " -> " << vwp_probe_target(source) << " probe: B=" << B
                   << " deviation=" << d1.get_d() << "; B=" << 2 * B << " deviation=" << d2.get_d()
                   << "; decay x2=" << 2 * ratio << "\n";
                pass = (2 * ratio > 0.9 && 2 * ratio < 1.1);
            }
            os << (pass ? "O(1/B) decay confirmed" : "decay rate off target") << "\n";
            emit(os.str(), output);
            return pass ? 0 : 1;
        }
    } catch (const qpsi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

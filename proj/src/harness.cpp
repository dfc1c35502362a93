#include "qpsi/harness.hpp"

#include <algorithm>

namespace qpsi {

std::vector<ParameterPoint> sample(const SampleSpec& spec) {
    const IdentityRecord& rec = record(spec.id);
    RandomSource rng(spec.seed);
    std::vector<ParameterPoint> out;
    out.reserve(spec.count);
    for (long i = 0; i < spec.count; ++i) {
        bool found = false;
        for (long attempt = 0; attempt < spec.reject_cap; ++attempt) {
            ParameterPoint p = rec.sampler(rng, spec.mode, spec.domain);
            DomainCheck dc = rec.domain(p, spec.domain);
            if (dc.ok) {
                out.push_back(std::move(p));
                found = true;
                break;
            }
        }
        if (!found)
            throw SamplingExhaustedError("no in-domain point for " + spec.id + " after cap");
    }
    return out;
}

VerificationReport verify(const SampleSpec& spec, const VerifyOptions& opts) {
    const IdentityRecord& rec = record(spec.id);
    VerificationReport rep;
    rep.id = spec.id;
    rep.mode = spec.mode;
    rep.seed = spec.seed;
    rep.count = spec.count;
    rep.compare_tol = opts.compare_tol;
    rep.series_tol = opts.series_tol;

    std::vector<ParameterPoint> points = sample(spec);
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
        SampleOutcome oc{points[i]};
        try {
            const ParameterPoint& p = points[i];
            double lhs_tol = opts.series_tol / 4;  // coherent budget with the series side
            LhsResult lhs = rec.lhs(p, lhs_tol);
            oc.lhs = lhs.value;
            oc.lhs_tail = lhs.tail_bound;

            double inf_tol = opts.series_tol * 1e-6;
            TermSeries ts = rec.series(p, inf_tol);
            if (opts.perturb_rel != 0.0) {
                auto base = ts.summand;
                Scalar f = Scalar(1) + Scalar::real(opts.perturb_rel);
                ts.summand = [base, f](long k) { return base(k) * f; };
            }
            SumPolicy pol;
            pol.tol = opts.series_tol;
            pol.exact_window = (spec.mode == Mode::exact);
            pol.term_rel_err = 20 * inf_tol;
            if (pol.exact_window && ts.kind != SeriesKind::terminating)
                throw ModeError("exact campaign on a nonterminating identity");
            SumResult sum = sum_series(ts, pol);
            oc.rhs = sum.value;
            oc.series_tail = sum.tail_bound;
            oc.terms_used = sum.terms_used;

            Scalar diff = lhs.value - sum.value;
            oc.abs_residual = mag(diff);
            mpf_class scale = mag(lhs.value);
            mpf_class rs = mag(sum.value);
            if (rs > scale) scale = rs;
            if (scale < 1e-300) scale = 1e-300;
            mpf_class rel = oc.abs_residual / scale;
            oc.rel_residual = rel.get_d();

            bool ok = (spec.mode == Mode::exact) ? diff.is_zero()
                                                 : (oc.rel_residual < opts.compare_tol);
            if (!ok) {
                oc.status = SampleStatus::residual_exceeded;
                oc.detail = "residual above tolerance";
            }
        } catch (const PoleError& e) {
            oc.status = SampleStatus::pole;
            oc.detail = e.what();
        } catch (const DegenerateInputError& e) {
            oc.status = SampleStatus::degenerate;
            oc.detail = e.what();
        } catch (const NonconvergenceError& e) {
            oc.status = SampleStatus::nonconvergence;
            oc.detail = e.what();
        } catch (const Error& e) {
            oc.status = SampleStatus::error;
            oc.detail = e.what();
        }
        if (oc.status != SampleStatus::ok) {
            rep.failures.push_back(i);
            rep.pass = false;
        }
        rep.max_rel_residual = std::max(rep.max_rel_residual, oc.rel_residual);
        rep.samples.push_back(std::move(oc));
    }
    return rep;
}

namespace {

// net exponent per distinct infinite-product argument
void accumulate(std::vector<std::pair<Scalar, int>>& acc, const std::vector<std::pair<Scalar, int>>& add,
                int sign) {
    for (const auto& [arg, e] : add) {
        bool merged = false;
        for (auto& [a0, e0] : acc) {
            if (a0 == arg) {
                e0 += sign * e;
                merged = true;
                break;
            }
        }
        if (!merged) acc.emplace_back(arg, sign * e);
    }
}

bool all_zero(const std::vector<std::pair<Scalar, int>>& acc) {
    for (const auto& [a, e] : acc)
        if (e != 0) return false;
    return true;
}

}  // namespace

bool degeneration_termwise_check(const IdentityRecord& src, const Degeneration& link,
                                 const ParameterPoint& sp, std::string* why) {
    const IdentityRecord& tgt = record(link.target_id);
    ParameterPoint tp = link.to_target(sp);

    TermFactors s0 = src.term(sp, 0);
    TermFactors t0 = tgt.term(tp, 0);
    if (s0.finite.is_zero() || t0.finite.is_zero()) {
        if (why) *why = "vanishing k = 0 term";
        return false;
    }
    long lo = std::min<long>(link.k_lo, 0), hi = link.k_hi;
    for (long k = lo; k <= hi; ++k) {
        TermFactors sk = src.term(sp, k);
        TermFactors tk = tgt.term(tp, k);
        bool szero = sk.finite.is_zero(), tzero = tk.finite.is_zero();
        if (szero || tzero) {
            // a vanishing term must vanish on both sides; the infinite
            // factors are then irrelevant
            if (szero != tzero) {
                if (why) *why = "only one side vanishes at k = " + std::to_string(k);
                return false;
            }
            continue;
        }
        if (link.identical) {
            if (sk.finite != tk.finite) {
                if (why) *why = "finite parts differ at k = " + std::to_string(k);
                return false;
            }
            std::vector<std::pair<Scalar, int>> acc;
            accumulate(acc, sk.inf, +1);
            accumulate(acc, tk.inf, -1);
            if (!all_zero(acc)) {
                if (why) *why = "infinite factors differ at k = " + std::to_string(k);
                return false;
            }
        } else {
            // cross-ratio: t_src(k) t_tgt(0) = t_src(0) t_tgt(k)
            if (sk.finite * t0.finite != s0.finite * tk.finite) {
                if (why) *why = "cross-ratio fails at k = " + std::to_string(k);
                return false;
            }
            std::vector<std::pair<Scalar, int>> acc;
            accumulate(acc, sk.inf, +1);
            accumulate(acc, t0.inf, +1);
            accumulate(acc, s0.inf, -1);
            accumulate(acc, tk.inf, -1);
            if (!all_zero(acc)) {
                if (why) *why = "infinite factors do not cancel at k = " + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

std::vector<DegenerationOutcome> run_degeneration_suite(std::uint64_t seed, long points_per_link) {
    std::vector<DegenerationOutcome> out;
    RandomSource rng(seed);
    DomainPolicy pol;
    for (const auto& [id, rec] : registry()) {
        for (const Degeneration& link : rec.degenerations) {
            DegenerationOutcome oc{id, link.target_id, link.description};
            long done = 0, attempts = 0;
            while (done < points_per_link && attempts < 2000) {
                ++attempts;
                try {
                    ParameterPoint p = rec.sampler(rng, Mode::exact, pol);
                    ParameterPoint sp = link.impose(p);
                    // no convergence-domain gate: termwise checks are pointwise
                    // exact statements; genuine poles throw and trigger a redraw
                    std::string why;
                    if (!degeneration_termwise_check(rec, link, sp, &why)) {
                        oc.pass = false;
                        oc.detail = why;
                        break;
                    }
                    ++done;
                } catch (const Error&) {
                    continue;  // pole at the imposed point; draw again
                }
            }
            if (done < points_per_link && oc.pass) {
                oc.pass = false;
                if (oc.detail.empty()) oc.detail = "could not draw enough valid points";
            }
            out.push_back(std::move(oc));
        }
    }
    return out;
}

InversePair make_named_pair(const std::string& name, RandomSource& rng, Mode mode) {
    if (name == "lemma") {
        Scalar u = Scalar::rational(rng.rational(9, 4)).to_mode(mode);
        Scalar w = Scalar::rational(rng.rational(9, 4)).to_mode(mode);
        Scalar x = Scalar::rational(rng.rational(9, 4)).to_mode(mode);
        // geometric sequences keep the c_j distinct and nonzero
        Scalar rv = Scalar::rational(rng.range(2, 5), 1).to_mode(mode);
        Scalar rw = Scalar::rational(rng.range(2, 5), 1).to_mode(mode);
        auto a_seq = [u, rv](long j) { return u * pow_int(rv, j); };
        auto c_seq = [w, rw](long j) { return w * pow_int(rw, j); };
        return krattenthaler_pair(a_seq, c_seq, x);
    }
    Scalar q = Scalar::rational(rng.rational_in(0.1, 0.7)).to_mode(mode);
    Scalar a = Scalar::rational(rng.rational(40, 13)).to_mode(mode);
    Scalar b = Scalar::rational(rng.rational(40, 13)).to_mode(mode);
    Scalar c = Scalar::rational(rng.rational(40, 13)).to_mode(mode);
    if (name == "cor1") return cor1_pair(a, b, c, q);
    if (name == "cor2") return cor2_pair(a, b, c, q);
    throw Error("unknown inverse pair: " + name);
}

OrthogonalityCampaignReport run_orthogonality_campaign(const OrthogonalityCampaign& c) {
    OrthogonalityCampaignReport rep;
    rep.pair = c.pair;
    rep.l = c.l;
    rep.n = c.n;
    rep.contexts = c.contexts;
    RandomSource rng(c.seed);
    long done = 0, attempts = 0;
    while (done < c.contexts && attempts < 50 * c.contexts + 100) {
        ++attempts;
        try {
            InversePair p = make_named_pair(c.pair, rng, c.mode);
            OrthogonalityReport r = verify_orthogonality(p, c.l, c.n);
            ++done;
            if (c.mode == Mode::exact) {
                if (!r.exact) ++rep.failures;
                rep.all_exact = rep.all_exact && r.exact;
            } else {
                rep.all_exact = false;
                if (r.max_offdiag > 1e-12 || r.diag_dev > 1e-12) ++rep.failures;
            }
            if (r.max_offdiag > rep.max_offdiag) rep.max_offdiag = r.max_offdiag;
            if (r.diag_dev > rep.max_diag_dev) rep.max_diag_dev = r.diag_dev;
        } catch (const Error&) {
            continue;  // degenerate context; redraw
        }
    }
    if (done < c.contexts) ++rep.failures;
    return rep;
}

std::map<std::string, VerificationReport> verify_all(const VerifyOptions& opts, std::uint64_t seed,
                                                     long count) {
    std::map<std::string, VerificationReport> out;
    for (const auto& [id, rec] : registry()) {
        SampleSpec spec;
        spec.id = id;
        spec.seed = seed;
        spec.count = count;
        spec.mode = rec.exact_capable ? Mode::exact : Mode::floating;
        out.emplace(id, verify(spec, opts));
    }
    return out;
}

}  // namespace qpsi

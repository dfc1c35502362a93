#include "qpsi/series.hpp"

#include <algorithm>
#include <vector>

namespace qpsi {

namespace {

struct SideState {
    long step;       // +1 toward +inf, -1 toward -inf
    long next;       // next index to evaluate
    bool done = false;
    bool zero_closed = false;  // closed by the structural zero run
    long count = 0;
    mpf_class last_mag{0};
    bool have_last = false;
    std::vector<mpf_class> ratios;  // sliding window, size policy.ratio_run
    int run_zero = 0;
    int run_diverge = 0;
    mpf_class tail{0};
};

}  // namespace

SumResult sum_series(const TermSeries& s, const SumPolicy& policy) {
    if (s.kind == SeriesKind::terminating && policy.exact_window) {
        SumResult r;
        Scalar acc(0);
        mpf_class sum_abs(0);
        for (long k = 0; k <= s.n; ++k) {
            Scalar t = s.summand(k);
            acc += t;
            if (policy.term_rel_err > 0) sum_abs += mag(t);
        }
        r.value = acc;
        r.tail_bound = sum_abs * policy.term_rel_err;
        r.terms_used = s.n + 1;
        r.k_lo = 0;
        r.k_hi = s.n;
        return r;
    }

    Scalar t0 = s.summand(0);
    if (t0.mode() == Mode::exact)
        throw ModeError("adaptive summation requires floating mode; use an exact window");

    Scalar partial = t0;
    mpf_class max_mag = mag(t0);
    mpf_class sum_abs = max_mag;
    long nterms = 1;
    long k_lo = 0, k_hi = 0;

    // negligible-term floor: max term magnitude scaled down to just above
    // the working precision noise
    mpf_class negl_rel(1);
    for (int i = 0; i < precision_digits() - 5; ++i) negl_rel /= 10;

    double tol_side = (s.kind == SeriesKind::bilateral) ? policy.tol / 4 : policy.tol / 2;

    std::vector<SideState> sides;
    sides.push_back({+1, 1});
    if (s.kind == SeriesKind::bilateral) sides.push_back({-1, -1});

    auto advance = [&](SideState& side) {
        long k = side.next;
        side.next += side.step;
        side.count++;
        Scalar t = s.summand(k);
        mpf_class m = mag(t);
        partial += t;
        sum_abs += m;
        nterms++;
        k_lo = std::min(k_lo, k);
        k_hi = std::max(k_hi, k);
        if (m > max_mag) max_mag = m;

        mpf_class negl = max_mag * negl_rel;
        if (m <= negl) {
            side.run_zero++;
            side.ratios.clear();
            side.have_last = false;
            side.run_diverge = 0;
            if (side.run_zero >= policy.zero_run) {
                // structurally vanishing tail; allow for the noise floor
                side.done = true;
                side.zero_closed = true;
                side.tail = negl * policy.zero_run;
            }
            return;
        }
        side.run_zero = 0;
        if (side.have_last && side.last_mag > 0) {
            mpf_class ratio = m / side.last_mag;
            side.ratios.push_back(ratio);
            if (side.ratios.size() > static_cast<size_t>(policy.ratio_run))
                side.ratios.erase(side.ratios.begin());
            if (ratio > 1.02) {
                side.run_diverge++;
            } else {
                side.run_diverge = 0;
            }
            if (side.run_diverge >= 100 && side.count >= 150)
                throw NonconvergenceError("series terms grow over a sustained range");
            if (side.ratios.size() == static_cast<size_t>(policy.ratio_run)) {
                mpf_class rho = side.ratios[0];
                bool ok = true;
                for (const auto& rr : side.ratios) {
                    if (rr > rho) rho = rr;
                    if (rr >= policy.rho_max) ok = false;
                }
                if (ok) {
                    mpf_class est = m * rho / (1 - rho);
                    mpf_class scale = mag(partial);
                    mpf_class floor = max_mag * 1e-15;
                    if (scale < floor) scale = floor;
                    if (est <= tol_side * scale) {
                        side.done = true;
                        side.tail = est;
                    }
                }
            }
        }
        side.last_mag = m;
        side.have_last = true;
    };

    int reopenings = 0;
    while (true) {
        bool all_done = true;
        for (auto& side : sides) {
            if (side.done) continue;
            all_done = false;
            if (side.count >= policy.k_cap)
                throw NonconvergenceError("empirical tail ratio failed to certify within the term cap");
            advance(side);
        }
        if (!all_done) continue;
        // a side may have closed while the partial sum was transiently large
        // (the other side's hump not yet cancelled); re-check every
        // ratio-closed side against the final magnitude and reopen if its
        // certified tail no longer meets the target
        mpf_class scale = mag(partial);
        mpf_class floor = max_mag * 1e-15;
        if (scale < floor) scale = floor;
        bool reopened = false;
        for (auto& side : sides) {
            if (side.zero_closed) continue;
            if (side.tail > tol_side * scale) {
                side.done = false;
                reopened = true;
            }
        }
        if (!reopened) break;
        if (++reopenings > 500)
            throw NonconvergenceError("tail target not reachable against the cancelled sum");
    }

    SumResult r;
    r.value = partial;
    r.tail_bound = 0;
    for (const auto& side : sides) r.tail_bound += side.tail;
    r.tail_bound += sum_abs * policy.term_rel_err;
    // rounding allowance at working precision
    mpf_class round_rel(1);
    for (int i = 0; i < precision_digits() - 2; ++i) round_rel /= 10;
    r.tail_bound += sum_abs * round_rel;
    r.terms_used = nterms;
    r.k_lo = k_lo;
    r.k_hi = k_hi;
    return r;
}

}  // namespace qpsi

// Generic unilateral/bilateral series summation with empirical geometric
// tail certification.
#pragma once

#include <functional>

#include "qpsi/scalar.hpp"

namespace qpsi {

enum class SeriesKind { unilateral, terminating, bilateral };

struct TermSeries {
    std::function<Scalar(long)> summand;
    SeriesKind kind = SeriesKind::unilateral;
    long n = 0;  // inclusive upper index for terminating series
};

struct SumPolicy {
    bool exact_window = false;  // terminating: sum k = 0..n, no tail machinery
    double tol = 1e-12;         // adaptive relative truncation target
    double rho_max = 0.95;      // admissible empirical tail ratio
    int ratio_run = 5;          // consecutive ratios below rho_max per side
    int zero_run = 6;           // consecutive negligible terms close a side
    long k_cap = 100000;        // per-side term cap before NonconvergenceError
    double term_rel_err = 0.0;  // per-term evaluation error folded into the bound
};

struct SumResult {
    Scalar value;
    mpf_class tail_bound;  // absolute; 0 for exact windows
    long terms_used = 0;
    long k_lo = 0, k_hi = 0;  // window actually summed
};

SumResult sum_series(const TermSeries& s, const SumPolicy& policy);

}  // namespace qpsi

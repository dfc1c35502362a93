// Internal helpers for building registry records: domain accumulation,
// pole-margin scans and closed-form product evaluation with error budgets.
#pragma once

#include <cmath>
#include <string>

#include "qpsi/identity.hpp"

namespace qpsi::detail {

struct DomainAccum {
    DomainCheck out;

    void require(bool cond, const std::string& what) {
        if (out.ok && !cond) {
            out.ok = false;
            out.reason = what;
        }
    }
    // |x| must stay above the pole margin
    void pole(const Scalar& x, double pm, const std::string& what) {
        require(mag(x) > pm, what);
    }
    // every factor 1 - arg q^j (j >= 0) must stay above the pole margin
    void infprod(const Scalar& arg, const Scalar& q, double pm, const std::string& what) {
        require(min_infprod_factor(arg, q) > pm, what);
    }
    // |num/den| <= margin
    void ratio(const Scalar& num, const Scalar& den, double margin, const std::string& what) {
        if (!out.ok) return;
        mpf_class dm = mag(den);
        if (dm == 0) {
            require(false, what);
            return;
        }
        require(mag(num) / dm <= margin, what);
    }
};

// index beyond which |q|^|k| < 1e-18 (numerically active bilateral window)
inline long active_window(const Scalar& q) {
    double qm = mag(q).get_d();
    long w = static_cast<long>(std::ceil(-18.0 / std::log10(qm)));
    return std::max<long>(w, 4);
}

// min over j >= 1 of |1 - b q^-j|, scanned until |b q^-j| > 2 (factors beyond
// have modulus > 1); guards numerator q-Pochhammers at negative index.
inline mpf_class neg_scan_min(const Scalar& b, const Scalar& q, long jmax) {
    Scalar one(1), qinv = inv(q);
    mpf_class best(1);
    Scalar x = b * qinv;
    for (long j = 1; j <= jmax; ++j) {
        mpf_class f = mag(one - x);
        if (f < best) best = f;
        if (mag(x) > 2) break;
        x *= qinv;
    }
    return best;
}

// Closed-form product of infinite q-Pochhammers with a first-order relative
// error budget (each factor certified to rel_tol).
class ProdBuilder {
public:
    ProdBuilder(Scalar q, double rel_tol) : q_(q.to_float()), tol_(rel_tol), value_(Scalar(1).to_float()) {}

    ProdBuilder& mul(const Scalar& s) {
        value_ *= s.to_float();
        return *this;
    }
    ProdBuilder& div(const Scalar& s) {
        Scalar f = s.to_float();
        if (f.is_zero()) throw PoleError("closed form divides by zero");
        value_ /= f;
        return *this;
    }
    ProdBuilder& mul_inf(const Scalar& arg) {
        QPochResult p = qp_infinite(arg.to_float(), q_, tol_);
        value_ *= p.value;
        rel_ += tol_;
        return *this;
    }
    ProdBuilder& div_inf(const Scalar& arg) {
        QPochResult p = qp_infinite(arg.to_float(), q_, tol_);
        if (p.value.is_zero()) throw PoleError("closed form divides by vanishing (a;q)_inf");
        value_ /= p.value;
        rel_ += tol_;
        return *this;
    }
    LhsResult done() const {
        LhsResult r;
        r.value = value_;
        r.tail_bound = mag(value_) * rel_ * 2;  // first order, doubled for safety
        return r;
    }

private:
    Scalar q_;
    double tol_;
    Scalar value_;
    double rel_ = 0.0;
};

// shared q draw: |q| in [0.1, 0.7]
inline Scalar draw_q(RandomSource& rng, Mode mode) {
    return rng.with_modulus(mode, rng.rational_in(0.1, 0.7), mode == Mode::floating, true);
}

inline Scalar draw(RandomSource& rng, Mode mode, double lo, double hi, bool neg = true) {
    return rng.with_modulus(mode, rng.rational_in(lo, hi), mode == Mode::floating, neg);
}

}  // namespace qpsi::detail

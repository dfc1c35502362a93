#include "qpsi/qpoch.hpp"

#include <cmath>

namespace qpsi {

Scalar qp_finite(const Scalar& a, const Scalar& q, long k) {
    Mode m = (a.mode() == Mode::floating || q.mode() == Mode::floating) ? Mode::floating
                                                                        : Mode::exact;
    Scalar one(1);
    if (k >= 0) {
        Scalar r = Scalar(1).to_mode(m);
        Scalar x = a;
        for (long j = 0; j < k; ++j) {
            r *= (one - x);
            x *= q;
        }
        return r;
    }
    Scalar d = Scalar(1).to_mode(m);
    Scalar qinv = inv(q), x = a * qinv;
    for (long j = 0; j < -k; ++j) {
        d *= (one - x);
        x *= qinv;
    }
    if (d.is_zero()) throw PoleError("(a;q)_k pole: vanishing factor at negative index");
    return inv(d);
}

Scalar qp_recip(const Scalar& a, const Scalar& q, long k) {
    Scalar one(1);
    if (k >= 0) {
        Scalar p = qp_finite(a, q, k);
        if (p.is_zero()) throw PoleError("1/(a;q)_k pole: vanishing denominator factor");
        return inv(p);
    }
    Scalar d = Scalar(1).to_mode((a.mode() == Mode::floating || q.mode() == Mode::floating)
                                     ? Mode::floating
                                     : Mode::exact);
    Scalar qinv = inv(q), x = a * qinv;
    for (long j = 0; j < -k; ++j) {
        d *= (one - x);
        x *= qinv;
    }
    return d;
}

QPochResult qp_infinite(const Scalar& a, const Scalar& q, double rel_tol) {
    if (q.mode() == Mode::exact) throw ModeError("(a;q)_inf requires floating mode");
    mpf_class qm = mag(q);
    if (qm >= 1) throw NonconvergenceError("(a;q)_inf requires |q| < 1");
    if (a.is_zero()) return {Scalar(1).to_float(), mpf_class(0), 0};

    Scalar af = a.to_float();
    Scalar one = Scalar(1).to_float();
    mpf_class am = mag(af);

    // J0 per the deterministic cutoff rule, then double until the geometric
    // tail bound |log prod_{j>=J}| <= |a||q|^J / ((1-|q|)(1-|a||q|^J)) meets tol.
    double qd = qm.get_d();
    long target = std::max<long>(20, static_cast<long>(std::ceil(std::log(rel_tol) / std::log(qd))));

    Scalar value = one;
    Scalar x = af;
    mpf_class xm = am;  // |a q^j| for the next factor
    long j = 0;
    mpf_class tail(0);
    while (true) {
        for (; j < target; ++j) {
            Scalar f = one - x;
            if (f.is_zero()) return {f, mpf_class(0), j + 1};
            value *= f;
            x *= q;
            xm *= qm;
        }
        if (xm < 0.5) {
            mpf_class logb = xm / ((1 - qm) * (1 - xm));
            mpf_class rel = 2 * logb;
            if (rel < rel_tol) {
                tail = rel * mag(value);
                break;
            }
        }
        target *= 2;
        if (target > 100000000L) throw NonconvergenceError("(a;q)_inf did not meet tolerance");
    }
    return {value, tail, j};
}

Scalar rising_factorial(const Scalar& a, long k) {
    if (k < 0) throw Error("rising_factorial needs k >= 0");
    Scalar r = Scalar(1).to_mode(a.mode());
    for (long j = 0; j < k; ++j) r *= (a + Scalar(j));
    return r.to_mode(a.mode());
}

Scalar binomial_coeff(const Scalar& x, long k) {
    if (k < 0) throw Error("binomial_coeff needs k >= 0");
    Scalar num = Scalar(1).to_mode(x.mode());
    for (long j = 0; j < k; ++j) num *= (x - Scalar(j));
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(k));
    return num / Scalar::rational(mpq_class(fac));
}

mpf_class min_infprod_factor(const Scalar& a, const Scalar& q) {
    Scalar one(1);
    mpf_class qm = mag(q);
    mpf_class best(0.5);
    Scalar x = a;
    mpf_class xm = mag(a);
    long guard = 0;
    while (xm >= 0.5 && guard++ < 10000) {
        mpf_class f = mag(one - x);
        if (f < best) best = f;
        x *= q;
        xm *= qm;
    }
    // one factor past the cutoff; everything beyond has modulus > 1/2
    mpf_class f = mag(one - x);
    if (f < best) best = f;
    return best;
}

}  // namespace qpsi

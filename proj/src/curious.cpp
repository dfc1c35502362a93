// Curious (non-hypergeometric) summation registry: Abel, Hagen-Rothe, the
// curious duals of (q-)Pfaff-Saalschutz and q-Gauss, the curious terminating
// and nonterminating summations obtained by matrix inversion, and their
// bilateral extensions containing the 1psi1 sum.
#include "qpsi/curious.hpp"

#include "registry_util.hpp"

namespace qpsi {

namespace detail {

namespace {

Scalar zero_of(const ParameterPoint& p) { return Scalar(0).to_mode(p.mode()); }

TermFactors finite_term(Scalar v) {
    TermFactors tf;
    tf.finite = std::move(v);
    return tf;
}

// the mixing pieces shared by the curious summands:
//   M1 = 1 - b q^k,  M2 = c - q^k,  R = M1/M2
struct Mix {
    Scalar qk, M1, M2, R, Rinv;
};

Mix mix_at(const Scalar& b, const Scalar& c, const Scalar& q, long k) {
    Mix m;
    m.qk = pow_int(q, k);
    m.M1 = Scalar(1) - b * m.qk;
    m.M2 = c - m.qk;
    if (m.M1.is_zero()) throw PoleError("1 - b q^k vanishes");
    if (m.M2.is_zero()) throw DegenerateInputError("c = q^k");
    m.R = m.M1 / m.M2;
    m.Rinv = m.M2 / m.M1;
    return m;
}

Scalar nonzero(Scalar v, const char* what) {
    if (v.is_zero()) throw DegenerateInputError(what);
    return v;
}

// sum_k C(n,k) a (a+bk)^{k-1} (c-bk)^{n-k} = (a+c)^n
IdentityRecord make_abel() {
    IdentityRecord r;
    r.id = "abel";
    r.title = "Abel's summation formula";
    r.constraint_text = "a != 0";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        return LhsResult{pow_int(p.get('a') + p.get('c'), p.n())};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        if (k == 0 && a.is_zero()) throw DegenerateInputError("abel needs a != 0 (k = 0 term)");
        Scalar base = a + b * Scalar(k);
        if (base.is_zero() && k - 1 < 0) throw DegenerateInputError("a + bk = 0 with negative exponent");
        Scalar t = binomial_coeff(Scalar(n), k) * a * pow_int(base, k - 1) *
                   pow_int(c - b * Scalar(k), n - k);
        return finite_term(t.to_mode(p.mode()));
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        DomainAccum d;
        d.pole(p.get('a'), pol.pole_margin, "a = 0");
        for (long k = 1; k < p.n(); ++k)
            d.pole(p.get('a') + p.get('b') * Scalar(k), pol.pole_margin, "a + bk = 0");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set('b', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set('c', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "binomial",
        "b = 0 termwise",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('b', Scalar(0));
            return s;
        },
        [](const ParameterPoint& p) {
            ParameterPoint t(p.mode(), p.q());
            t.set('a', p.get('a')).set('c', p.get('c')).set_int('n', p.n());
            return t;
        },
        0, 8, true});
    return r;
}

// sum_k a/(a+bk) C(a+bk, k) C(c-bk, n-k) = C(a+c, n)
IdentityRecord make_hagen_rothe() {
    IdentityRecord r;
    r.id = "hagen_rothe";
    r.title = "Hagen-Rothe summation";
    r.constraint_text = "a + bk != 0 for 0 <= k <= n";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        return LhsResult{binomial_coeff(p.get('a') + p.get('c'), p.n())};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        Scalar shift = nonzero(a + b * Scalar(k), "hagen_rothe: a + bk = 0");
        Scalar t = (a / shift) * binomial_coeff(shift, k) * binomial_coeff(c - b * Scalar(k), n - k);
        return finite_term(t.to_mode(p.mode()));
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        DomainAccum d;
        for (long k = 0; k <= p.n(); ++k)
            d.pole(p.get('a') + p.get('b') * Scalar(k), pol.pole_margin, "a + bk = 0");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set('b', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set('c', Scalar::rational(rng.rational(20, 7)).to_mode(mode));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "chu_vandermonde",
        "b = 0 termwise",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('b', Scalar(0));
            return s;
        },
        [](const ParameterPoint& p) {
            ParameterPoint t(p.mode(), p.q());
            t.set('a', p.get('a')).set('c', p.get('c')).set_int('n', p.n());
            return t;
        },
        0, 8, true});
    return r;
}

// curious dual of the Pfaff-Saalschutz summation:
//   (2c+1)_n/(c+1)_n = sum_k [mixing ratios] (-n)_k (c)_k (a-c+b/(a+k))_k
//     / ((1)_k (-c-n)_k (a+c+b/(a+k)+1)_k) * (a+c+b/(a+k)+1)_n/(a+b/(a+k)+1)_n
IdentityRecord make_curious_ps() {
    IdentityRecord r;
    r.id = "curious_ps";
    r.title = "curious dual of the Pfaff-Saalschutz summation";
    r.constraint_text = "a+k, b+a(a+k), b+(a-c)(a+k) nonvanishing on 0..n";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar& c = p.get('c');
        long n = p.n();
        Scalar den = nonzero(rising_factorial(c + Scalar(1), n), "curious_ps: (c+1)_n = 0");
        return LhsResult{rising_factorial(Scalar(2) * c + Scalar(1), n) / den};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        Scalar ak = nonzero(a + Scalar(k), "curious_ps: a + k = 0");
        Scalar one(1);
        // the leading ratios are identically 1 at k = 0 (numerator equals
        // denominator), which keeps the b = -(a-c)a boundary well-defined
        Scalar r1 = (k == 0) ? one
                             : (b + (a - c) * a) /
                                   nonzero(b + (a - c) * ak, "curious_ps: b+(a-c)(a+k) = 0");
        Scalar r2 = (k == 0) ? one
                             : (b + ak * ak) / nonzero(b + a * ak, "curious_ps: b+a(a+k) = 0");
        Scalar bok = b / ak;
        Scalar num = rising_factorial(Scalar(-n), k) * rising_factorial(c, k) *
                     rising_factorial(a - c + bok, k) * rising_factorial(a + c + bok + one, n);
        Scalar den = rising_factorial(one, k) * rising_factorial(-c - Scalar(n), k) *
                     rising_factorial(a + c + bok + one, k) * rising_factorial(a + bok + one, n);
        return finite_term(r1 * r2 * num / nonzero(den, "curious_ps: denominator factorial = 0"));
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        long n = p.n();
        DomainAccum d;
        Scalar one(1);
        for (long j = 0; j < n; ++j) {
            d.pole(c + Scalar(1 + j), pol.pole_margin, "(c+1)_n factor");
            d.pole(-c - Scalar(n) + Scalar(j), pol.pole_margin, "(-c-n)_k factor");
        }
        for (long k = 0; k <= n; ++k) {
            Scalar ak = a + Scalar(k);
            d.pole(ak, pol.pole_margin, "a + k = 0");
            if (!d.out.ok) break;
            if (k > 0) {
                d.pole(b + (a - c) * ak, pol.pole_margin, "b+(a-c)(a+k) = 0");
                d.pole(b + a * ak, pol.pole_margin, "b+a(a+k) = 0");
            }
            Scalar bok = b / ak;
            for (long j = 0; j < n; ++j) {
                d.pole(a + c + bok + one + Scalar(j), pol.pole_margin, "(a+c+b/(a+k)+1)_n factor");
                d.pole(a + bok + one + Scalar(j), pol.pole_margin, "(a+b/(a+k)+1)_n factor");
            }
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', draw(rng, mode, 0.3, 3.0));
        p.set('b', draw(rng, mode, 0.2, 3.0));
        p.set('c', draw(rng, mode, 0.2, 3.0));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// curious dual of the q-Pfaff-Saalschutz summation:
//   (c^2 q;q)_n/(cq;q)_n = sum_k [mixing ratios] (q^-n;q)_k (c;q)_k (S/cw;q)_k
//     / ((q;q)_k (q^-n/c;q)_k (cqS/w;q)_k) * (cqS/w;q)_n/(qS/w;q)_n q^k
// with w = a - q^-k and S = b + a w.
IdentityRecord make_curious_qps() {
    IdentityRecord r;
    r.id = "curious_qps";
    r.title = "curious dual of the q-Pfaff-Saalschutz summation";
    r.constraint_text = "a != q^-k; b+(a-1)(a-q^-k), b+(a-c)(a-q^-k) nonvanishing";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar &c = p.get('c'), &q = p.q();
        long n = p.n();
        return LhsResult{qp_finite(c * c * q, q, n) * qp_recip(c * q, q, n)};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar one(1);
        Scalar w = nonzero(a - pow_int(q, -k), "curious_qps: a = q^-k");
        Scalar S = b + a * w;
        Scalar r1 = (k == 0) ? one
                             : (b + (a - c) * (a - one)) /
                                   nonzero(b + (a - c) * w, "curious_qps: b+(a-c)(a-q^-k) = 0");
        Scalar r2 = (k == 0) ? one
                             : (b + w * w) /
                                   nonzero(b + (a - one) * w, "curious_qps: b+(a-1)(a-q^-k) = 0");
        Scalar cqsw = c * q * S / nonzero(w, "curious_qps: w = 0");
        Scalar t = r1 * r2 * qp_finite(pow_int(q, -n), q, k) * qp_finite(c, q, k) *
                   qp_finite(S / (c * w), q, k) * qp_recip(q, q, k) *
                   qp_recip(pow_int(q, -n) / c, q, k) * qp_recip(cqsw, q, k) *
                   qp_finite(cqsw, q, n) * qp_recip(q * S / w, q, n) * pow_int(q, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        long n = p.n();
        DomainAccum d;
        Scalar one(1);
        d.pole(c, pol.pole_margin, "c = 0");
        for (long k = 0; k <= n; ++k) {
            Scalar w = a - pow_int(q, -k);
            d.pole(w, pol.pole_margin, "a = q^-k");
            if (!d.out.ok) break;
            if (k > 0) {
                d.pole(b + (a - c) * w, pol.pole_margin, "b+(a-c)(a-q^-k) = 0");
                d.pole(b + (a - one) * w, pol.pole_margin, "b+(a-1)(a-q^-k) = 0");
            }
            Scalar cqsw = c * q * (b + a * w) / w;
            Scalar qsw = q * (b + a * w) / w;
            Scalar x = cqsw, y = qsw;
            for (long j = 0; j < n; ++j) {
                d.pole(one - x, pol.pole_margin, "(cqS/w;q)_n factor");
                d.pole(one - y, pol.pole_margin, "(qS/w;q)_n factor");
                x *= q;
                y *= q;
            }
        }
        Scalar x = c * q, y = pow_int(q, -n) / c;
        for (long j = 0; j < n; ++j) {
            d.pole(one - x, pol.pole_margin, "(cq;q)_n factor");
            d.pole(one - y, pol.pole_margin, "(q^-n/c;q)_k factor");
            x *= q;
            y *= q;
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', draw(rng, mode, 0.1, 1.4));
        p.set('b', draw(rng, mode, 0.2, 2.5));
        p.set('c', draw(rng, mode, 0.2, 1.3));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// nonterminating curious dual of the q-Gauss summation, |bq| < 1:
//   (b^2 q;q)_inf/(bq;q)_inf = sum_{k>=0} [mixing ratios] (b;q)_k (u/(c-au);q)_k
//     (u b^2 q^{k+1}/(c-au);q)_inf / ((q;q)_k (u bq/(c-au);q)_inf) (bq)^k,  u = a + b q^k
IdentityRecord make_curious_nt() {
    IdentityRecord r;
    r.id = "curious_nt";
    r.title = "nonterminating curious dual of the q-Gauss summation";
    r.constraint_text = "|bq| < 1";
    r.params = {'a', 'b', 'c'};
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &b = p.get('b'), &q = p.q();
        ProdBuilder pb(q, tol);
        pb.mul_inf(b * b * q).div_inf(b * q);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar one(1);
        Scalar u = a + b * pow_int(q, k);
        Scalar den = nonzero(c - a * u, "curious_nt: c - a(a+bq^k) = 0");
        Scalar r1 = (k == 0) ? one
                             : (c - (a + one) * (a + b)) /
                                   nonzero(c - (a + one) * u, "curious_nt: c-(a+1)(a+bq^k) = 0");
        Scalar r2 = (k == 0) ? one
                             : (c - u * u) /
                                   nonzero(c - (a + b) * u, "curious_nt: c-(a+b)(a+bq^k) = 0");
        TermFactors tf;
        tf.finite = r1 * r2 * qp_finite(b, q, k) * qp_finite(u / den, q, k) * qp_recip(q, q, k) *
                    pow_int(b * q, k);
        tf.inf.emplace_back(u * b * b * pow_int(q, k + 1) / den, +1);
        tf.inf.emplace_back(u * b * q / den, -1);
        return tf;
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        DomainAccum d;
        Scalar one(1);
        d.require(mag(b * q) <= pol.margin, "|bq| too close to 1");
        d.infprod(b * q, q, pol.pole_margin, "(bq;q)_inf factor too small");
        d.infprod(b * b * q, q, pol.pole_margin, "(b^2 q;q)_inf factor too small");
        long kmax = std::min<long>(active_window(q), 80);
        for (long k = 0; k <= kmax && d.out.ok; ++k) {
            Scalar u = a + b * pow_int(q, k);
            Scalar den = c - a * u;
            d.pole(den, pol.pole_margin, "c - a(a+bq^k) = 0");
            if (!d.out.ok) break;
            if (k > 0) {
                d.pole(c - (a + one) * u, pol.pole_margin, "c-(a+1)(a+bq^k) = 0");
                d.pole(c - (a + b) * u, pol.pole_margin, "c-(a+b)(a+bq^k) = 0");
            }
            d.infprod(u * b * q / den, q, pol.pole_margin, "(ubq/(c-au);q)_inf factor too small");
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar w = draw(rng, mode, 0.05, 0.63);
        p.set('b', w / p.q());
        p.set('a', draw(rng, mode, 0.1, 1.5));
        p.set('c', draw(rng, mode, 1.5, 5.0));
        return p;
    };
    return r;
}

// curious terminating summation obtained by inverting the terminating
// very-well-poised 6phi5:
//   (q/d;q)_n/(ad;q)_n (ad)^n = sum_{k=0}^n [R-mixed summand] q^k
IdentityRecord make_thm_ts() {
    IdentityRecord r;
    r.id = "thm_ts";
    r.title = "curious terminating summation (dual very-well-poised 6phi5)";
    r.constraint_text = "c != q^k, bq^k != 1 on 0..n; (ad;q)_n nonvanishing";
    r.params = {'a', 'b', 'c', 'd'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar &a = p.get('a'), &d = p.get('d'), &q = p.q();
        long n = p.n();
        Scalar ad = a * d;
        if (d.is_zero()) throw DegenerateInputError("thm_ts: d = 0");
        return LhsResult{qp_finite(q / d, q, n) * qp_recip(ad, q, n) * pow_int(ad, n)};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        Mix mk = mix_at(b, c, q, k);
        Mix mn = mix_at(b, c, q, n);
        Scalar ad = a * d;
        Scalar den1 = one - mk.Rinv * a * mk.qk;
        if (den1.is_zero()) throw PoleError("thm_ts: 1 - (c-q^k)/(1-bq^k) a q^k = 0");
        Scalar den2 = one - mk.R;
        if (den2.is_zero()) throw PoleError("thm_ts: 1 - (1-bq^k)/(c-q^k) = 0");
        Scalar t = (mn.M1 / mk.M1) * pow_int(mk.R, n) * qp_finite(pow_int(q, -n), q, k) *
                   qp_finite(a * pow_int(q, n), q, k) * qp_recip(q, q, k) * qp_recip(ad, q, k) *
                   ((one - mn.Rinv * a * pow_int(q, n)) / den1) * ((one - mk.R * mk.qk) / den2) *
                   qp_finite(mk.Rinv * ad, q, k) * qp_recip(mk.Rinv * a, q, k) *
                   qp_finite(mk.Rinv * a, q, n) * qp_recip(mk.R * q, q, n) * mk.qk;
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        long n = p.n();
        DomainAccum d_;
        Scalar one(1);
        d_.pole(d, pol.pole_margin, "d = 0");
        for (long k = 0; k <= n && d_.out.ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = one - b * qk, M2 = c - qk;
            d_.pole(M1, pol.pole_margin, "1 - bq^k = 0");
            d_.pole(M2, pol.pole_margin, "c = q^k");
            if (!d_.out.ok) break;
            Scalar R = M1 / M2, Rinv = M2 / M1;
            d_.pole(one - Rinv * a * qk, pol.pole_margin, "mixing denominator = 0");
            d_.pole(one - R, pol.pole_margin, "1 - R(k) = 0");
            Scalar x = Rinv * a, y = R * q;
            for (long j = 0; j < n; ++j) {
                d_.pole(one - x, pol.pole_margin, "(Rinv a;q)_n factor");
                d_.pole(one - y, pol.pole_margin, "(Rq;q)_n factor");
                x *= q;
                y *= q;
            }
        }
        Scalar x = a * d;
        for (long j = 0; j < n; ++j) {
            d_.pole(one - x, pol.pole_margin, "(ad;q)_n factor");
            x *= q;
        }
        return d_.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', draw(rng, mode, 0.1, 1.5));
        p.set('b', draw(rng, mode, 0.1, 0.85));
        p.set('c', draw(rng, mode, 1.3, 4.0));
        p.set('d', draw(rng, mode, 0.1, 1.5));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "qps",
        "c = 1/b termwise (q-Pfaff-Saalschutz)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('c', inv(p.get('b')));
            return s;
        },
        [](const ParameterPoint& p) {
            const Scalar &a = p.get('a'), &b = p.get('b'), &d = p.get('d');
            ParameterPoint t(p.mode(), p.q());
            t.set('a', a * pow_int(p.q(), p.n()));
            t.set('b', a * d / b);
            t.set('c', a * d);
            t.set_int('n', p.n());
            return t;
        },
        0, 8, false});
    return r;
}

// curious nonterminating summation (dual of the very-well-poised 5phi5),
// |d/c| < 1:
//   (ad;q)_inf/((1-b+a(1-c)) (aq;q)_inf) = sum_{k>=0} [R-mixed summand] d^k
IdentityRecord make_thm_tns() {
    IdentityRecord r;
    r.id = "thm_tns";
    r.title = "curious nonterminating summation (dual very-well-poised 5phi5)";
    r.constraint_text = "|d/c| < 1; 1-b+a(1-c) != 0";
    r.params = {'a', 'b', 'c', 'd'};
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        Scalar den = one - b + a * (one - c);
        if (den.is_zero()) throw PoleError("thm_tns: 1 - b + a(1-c) = 0");
        ProdBuilder pb(q, tol);
        pb.mul_inf(a * d).div_inf(a * q).div(den);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        Mix m = mix_at(b, c, q, k);
        TermFactors tf;
        tf.finite = (one / m.M1) * pow_int(m.R, k) * (one - m.R * m.qk) * qp_finite(q / d, q, k) *
                    qp_recip(q, q, k) * qp_recip(a * q, q, k) * qp_finite(m.Rinv * a * q, q, k - 1) *
                    pow_int(d, k);
        tf.inf.emplace_back(m.R * d, +1);
        tf.inf.emplace_back(m.R, -1);
        return tf;
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        DomainAccum d_;
        d_.pole(d, pol.pole_margin, "d = 0");
        d_.ratio(d, c, pol.margin, "|d/c| too close to 1");
        d_.pole(one - b + a * (one - c), pol.pole_margin, "1 - b + a(1-c) = 0");
        d_.infprod(a * q, q, pol.pole_margin, "(aq;q)_inf factor too small");
        d_.infprod(a * d, q, pol.pole_margin, "(ad;q)_inf factor too small");
        long kmax = std::min<long>(active_window(q), 140);
        for (long k = 0; k <= kmax && d_.out.ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = one - b * qk, M2 = c - qk;
            d_.pole(M1, pol.pole_margin, "1 - bq^k = 0");
            d_.pole(M2, pol.pole_margin, "c = q^k");
            if (!d_.out.ok) break;
            d_.infprod(M1 / M2, q, pol.pole_margin, "(R;q)_inf factor too small");
        }
        return d_.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar a = rng.chance(1, 6) ? Scalar(0).to_mode(mode) : draw(rng, mode, 0.05, 1.2);
        Scalar c = draw(rng, mode, 1.3, 4.0);
        p.set('a', a).set('b', draw(rng, mode, 0.05, 0.85)).set('c', c);
        p.set('d', c * draw(rng, mode, 0.05, 0.63));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "qgauss",
        "c = 1/b termwise (q-Gauss)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('c', inv(p.get('b')));
            return s;
        },
        [](const ParameterPoint& p) {
            const Scalar &a = p.get('a'), &b = p.get('b'), &d = p.get('d'), &q = p.q();
            ParameterPoint t(p.mode(), q);
            t.set('a', a / b).set('b', q / d).set('c', a * q);
            return t;
        },
        0, 8, false});
    return r;
}

// contiguous companion of thm_tns, |d/c| < 1:
//   (adq;q)_inf/((c-d) (aq;q)_inf) = sum_{k>=0} [R-mixed summand] d^k
IdentityRecord make_thm_tnsc() {
    IdentityRecord r;
    r.id = "thm_tnsc";
    r.title = "contiguous curious nonterminating summation";
    r.constraint_text = "|d/c| < 1; c != d";
    r.params = {'a', 'b', 'c', 'd'};
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &c = p.get('c'), &d = p.get('d'), &q = p.q();
        Scalar den = c - d;
        if (den.is_zero()) throw PoleError("thm_tnsc: c = d");
        ProdBuilder pb(q, tol);
        pb.mul_inf(a * d * q).div_inf(a * q).div(den);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        Mix m = mix_at(b, c, q, k);
        TermFactors tf;
        tf.finite = (one / m.M2) * pow_int(m.R, k) * (one - m.R * m.qk) *
                    qp_finite(inv(d), q, k) * qp_recip(q, q, k) * qp_recip(a * q, q, k) *
                    qp_finite(m.Rinv * a * q, q, k) * pow_int(d, k);
        tf.inf.emplace_back(m.R * d * q, +1);
        tf.inf.emplace_back(m.R, -1);
        return tf;
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &d = p.get('d'),
                     &q = p.q();
        Scalar one(1);
        DomainAccum d_;
        d_.pole(d, pol.pole_margin, "d = 0");
        d_.ratio(d, c, pol.margin, "|d/c| too close to 1");
        d_.pole(c - d, pol.pole_margin, "c = d");
        d_.infprod(a * q, q, pol.pole_margin, "(aq;q)_inf factor too small");
        d_.infprod(a * d * q, q, pol.pole_margin, "(adq;q)_inf factor too small");
        long kmax = std::min<long>(active_window(q), 140);
        for (long k = 0; k <= kmax && d_.out.ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = one - b * qk, M2 = c - qk;
            d_.pole(M1, pol.pole_margin, "1 - bq^k = 0");
            d_.pole(M2, pol.pole_margin, "c = q^k");
            if (!d_.out.ok) break;
            d_.infprod(M1 / M2, q, pol.pole_margin, "(R;q)_inf factor too small");
        }
        return d_.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar a = rng.chance(1, 6) ? Scalar(0).to_mode(mode) : draw(rng, mode, 0.05, 1.2);
        Scalar c = draw(rng, mode, 1.3, 4.0);
        p.set('a', a).set('b', draw(rng, mode, 0.05, 0.85)).set('c', c);
        p.set('d', c * draw(rng, mode, 0.05, 0.63));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "qgauss",
        "c = 1/b termwise (q-Gauss)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('c', inv(p.get('b')));
            return s;
        },
        [](const ParameterPoint& p) {
            const Scalar &a = p.get('a'), &b = p.get('b'), &d = p.get('d'), &q = p.q();
            ParameterPoint t(p.mode(), q);
            t.set('a', a * q / b).set('b', inv(d)).set('c', a * q);
            return t;
        },
        0, 8, false});
    return r;
}

// curious bilateral extension containing the 1psi1 sum, |d/c| < 1, |e/b| < 1:
//   (q;q)_inf (de;q)_inf / ((e-b) (d;q)_inf (eq;q)_inf)
//     = sum_{k in Z} [R-mixed summand] (Rd)^k
IdentityRecord make_thm_bns() {
    IdentityRecord r;
    r.id = "thm_bns";
    r.title = "curious bilateral extension of the 1psi1 sum";
    r.constraint_text = "|d/c| < 1, |e/b| < 1; e != b";
    r.params = {'b', 'c', 'd', 'e'};
    r.kind = SeriesKind::bilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &b = p.get('b'), &d = p.get('d'), &e = p.get('e'), &q = p.q();
        Scalar den = e - b;
        if (den.is_zero()) throw PoleError("thm_bns: e = b");
        ProdBuilder pb(q, tol);
        pb.mul_inf(q).mul_inf(d * e).div_inf(d).div_inf(e * q).div(den);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        const Scalar &b = p.get('b'), &c = p.get('c'), &d = p.get('d'), &e = p.get('e'),
                     &q = p.q();
        Scalar one(1);
        Mix m = mix_at(b, c, q, k);
        TermFactors tf;
        tf.finite = (one / m.M1) * (one - m.R * m.qk) * qp_finite(q / d, q, k) *
                    qp_recip(e * q, q, k) * pow_int(m.R * d, k);
        tf.inf.emplace_back(m.R * d, +1);
        tf.inf.emplace_back(m.Rinv * e * q, +1);
        tf.inf.emplace_back(m.R, -1);
        tf.inf.emplace_back(m.Rinv * q, -1);
        return tf;
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &b = p.get('b'), &c = p.get('c'), &d = p.get('d'), &e = p.get('e'),
                     &q = p.q();
        Scalar one(1);
        DomainAccum d_;
        d_.pole(d, pol.pole_margin, "d = 0");
        d_.pole(b, pol.pole_margin, "b = 0");
        d_.ratio(d, c, pol.margin, "|d/c| too close to 1");
        d_.ratio(e, b, pol.margin, "|e/b| too close to 1");
        d_.pole(e - b, pol.pole_margin, "e = b");
        d_.infprod(d, q, pol.pole_margin, "(d;q)_inf factor too small");
        d_.infprod(e * q, q, pol.pole_margin, "(eq;q)_inf factor too small");
        d_.infprod(d * e, q, pol.pole_margin, "(de;q)_inf factor too small");
        d_.require(neg_scan_min(q / d, q, active_window(q)) > pol.pole_margin,
                   "(q/d;q)_k pole at negative index");
        long w = std::min<long>(active_window(q), 130);
        for (long k = -w; k <= w && d_.out.ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = one - b * qk, M2 = c - qk;
            d_.pole(M1, pol.pole_margin, "1 - bq^k = 0");
            d_.pole(M2, pol.pole_margin, "c = q^k");
            if (!d_.out.ok) break;
            d_.infprod(M1 / M2, q, pol.pole_margin, "(R;q)_inf factor too small");
            d_.infprod((M2 / M1) * q, q, pol.pole_margin, "(Rinv q;q)_inf factor too small");
        }
        return d_.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar b = draw(rng, mode, 0.1, 0.85);
        Scalar c = draw(rng, mode, 1.3, 4.0);
        p.set('b', b).set('c', c);
        p.set('d', c * draw(rng, mode, 0.05, 0.63));
        p.set('e', b * draw(rng, mode, 0.05, 0.63));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "thm_tns",
        "e = 1 termwise (a = 0 case)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('e', Scalar(1));
            return s;
        },
        [](const ParameterPoint& p) {
            ParameterPoint t(p.mode(), p.q());
            t.set('a', Scalar(0)).set('b', p.get('b')).set('c', p.get('c')).set('d', p.get('d'));
            return t;
        },
        -3, 8, true});
    return r;
}

// contiguous companion of thm_bns:
//   (q;q)_inf (deq;q)_inf / ((c-d) (dq;q)_inf (eq;q)_inf)
//     = sum_{k in Z} [R-mixed summand] (Rd)^k
IdentityRecord make_thm_bnsc() {
    IdentityRecord r;
    r.id = "thm_bnsc";
    r.title = "contiguous curious bilateral extension of the 1psi1 sum";
    r.constraint_text = "|d/c| < 1, |e/b| < 1; c != d";
    r.params = {'b', 'c', 'd', 'e'};
    r.kind = SeriesKind::bilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &c = p.get('c'), &d = p.get('d'), &e = p.get('e'), &q = p.q();
        Scalar den = c - d;
        if (den.is_zero()) throw PoleError("thm_bnsc: c = d");
        ProdBuilder pb(q, tol);
        pb.mul_inf(q).mul_inf(d * e * q).div_inf(d * q).div_inf(e * q).div(den);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        const Scalar &b = p.get('b'), &c = p.get('c'), &d = p.get('d'), &e = p.get('e'),
                     &q = p.q();
        Scalar one(1);
        Mix m = mix_at(b, c, q, k);
        TermFactors tf;
        tf.finite = (one / m.M2) * (one - m.R * m.qk) * qp_finite(inv(d), q, k) *
                    qp_recip(e * q, q, k) * pow_int(m.R * d, k);
        tf.inf.emplace_back(m.R * d * q, +1);
        tf.inf.emplace_back(m.Rinv * e * q, +1);
        tf.inf.emplace_back(m.R, -1);
        tf.inf.emplace_back(m.Rinv * q, -1);
        return tf;
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &b = p.get('b'), &c = p.get('c'), &d = p.get('d'), &e = p.get('e'),
                     &q = p.q();
        Scalar one(1);
        DomainAccum d_;
        d_.pole(d, pol.pole_margin, "d = 0");
        d_.pole(b, pol.pole_margin, "b = 0");
        d_.ratio(d, c, pol.margin, "|d/c| too close to 1");
        d_.ratio(e, b, pol.margin, "|e/b| too close to 1");
        d_.pole(c - d, pol.pole_margin, "c = d");
        d_.infprod(d * q, q, pol.pole_margin, "(dq;q)_inf factor too small");
        d_.infprod(e * q, q, pol.pole_margin, "(eq;q)_inf factor too small");
        d_.infprod(d * e * q, q, pol.pole_margin, "(deq;q)_inf factor too small");
        d_.require(neg_scan_min(inv(d), q, active_window(q)) > pol.pole_margin,
                   "(1/d;q)_k pole at negative index");
        long w = std::min<long>(active_window(q), 130);
        for (long k = -w; k <= w && d_.out.ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = one - b * qk, M2 = c - qk;
            d_.pole(M1, pol.pole_margin, "1 - bq^k = 0");
            d_.pole(M2, pol.pole_margin, "c = q^k");
            if (!d_.out.ok) break;
            d_.infprod(M1 / M2, q, pol.pole_margin, "(R;q)_inf factor too small");
            d_.infprod((M2 / M1) * q, q, pol.pole_margin, "(Rinv q;q)_inf factor too small");
        }
        return d_.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar b = draw(rng, mode, 0.1, 0.85);
        Scalar c = draw(rng, mode, 1.3, 4.0);
        p.set('b', b).set('c', c);
        p.set('d', c * draw(rng, mode, 0.05, 0.63));
        p.set('e', b * draw(rng, mode, 0.05, 0.63));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "thm_tnsc",
        "e = 1 termwise (a = 0 case)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('e', Scalar(1));
            return s;
        },
        [](const ParameterPoint& p) {
            ParameterPoint t(p.mode(), p.q());
            t.set('a', Scalar(0)).set('b', p.get('b')).set('c', p.get('c')).set('d', p.get('d'));
            return t;
        },
        -3, 8, true});
    r.degenerations.push_back(Degeneration{
        "1psi1",
        "c = 1/b termwise (Ramanujan's 1psi1)",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('c', inv(p.get('b')));
            return s;
        },
        [](const ParameterPoint& p) {
            const Scalar &b = p.get('b'), &d = p.get('d'), &e = p.get('e'), &q = p.q();
            ParameterPoint t(p.mode(), q);
            t.set('a', inv(d)).set('b', e * q).set('z', b * d);
            return t;
        },
        -8, 8, false});
    return r;
}

}  // namespace

void register_curious(std::map<std::string, IdentityRecord>& reg) {
    for (auto&& rec : {make_abel(), make_hagen_rothe(), make_curious_ps(), make_curious_qps(),
                       make_curious_nt(), make_thm_ts(), make_thm_tns(), make_thm_tnsc(),
                       make_thm_bns(), make_thm_bnsc()}) {
        reg.emplace(rec.id, rec);
    }
}

}  // namespace detail

mpf_class abel_from_rothe_residual(const Scalar& a, const Scalar& b, const Scalar& c, long n,
                                   long m) {
    Scalar ms(m);
    Scalar A = ms * a, B = ms * b, C = ms * c;
    Scalar sum(0);
    for (long k = 0; k <= n; ++k) {
        Scalar shift = A + B * Scalar(k);
        if (shift.is_zero()) throw DegenerateInputError("rothe probe: ma + mbk = 0");
        sum += (A / shift) * binomial_coeff(shift, k) * binomial_coeff(C - B * Scalar(k), n - k);
    }
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
    Scalar probe = Scalar::rational(mpq_class(fac)) * sum / pow_int(ms, n);
    Scalar abel_rhs = pow_int(a + c, n);
    return mag(probe - abel_rhs);
}

namespace {

struct ProbeSpec {
    std::string target;
    long k_lo, k_hi;
    // builds the matched target point from the base (pre-substitution) point
    std::function<ParameterPoint(const ParameterPoint&)> to_target;
};

const std::map<std::string, ProbeSpec>& probe_specs() {
    static const std::map<std::string, ProbeSpec> specs = [] {
        std::map<std::string, ProbeSpec> m;
        m["thm_ts"] = ProbeSpec{"65s", 0, -1,  // k_hi = n resolved at run time
                                [](const ParameterPoint& p) {
                                    ParameterPoint t(p.mode(), p.q());
                                    t.set_sqrt_a(p.get('s'));
                                    t.set('b', p.get('a') * pow_int(p.q(), p.n()));
                                    t.set('c', p.get('c') * p.q() / (p.get('a') * p.get('d')));
                                    t.set_int('n', p.n());
                                    return t;
                                }};
        m["thm_tns"] = ProbeSpec{"55ns", 0, 10,
                                 [](const ParameterPoint& p) {
                                     ParameterPoint t(p.mode(), p.q());
                                     t.set_sqrt_a(p.get('s'));
                                     t.set('b', p.q() / p.get('d'));
                                     t.set('c', p.get('c') / p.get('a'));
                                     return t;
                                 }};
        m["thm_tnsc"] = ProbeSpec{"55ns", 0, 10,
                                  [](const ParameterPoint& p) {
                                      ParameterPoint t(p.mode(), p.q());
                                      t.set_sqrt_a(p.get('s'));
                                      t.set('b', inv(p.get('d')));
                                      t.set('c', p.get('c') / p.get('a'));
                                      return t;
                                  }};
        m["thm_bns"] = ProbeSpec{"46s", -6, 6,
                                 [](const ParameterPoint& p) {
                                     ParameterPoint t(p.mode(), p.q());
                                     t.set_sqrt_a(p.get('s'));
                                     t.set('b', p.get('c') / p.get('e'));
                                     t.set('c', p.q() / p.get('d'));
                                     return t;
                                 }};
        m["thm_bnsc"] = ProbeSpec{"46s", -6, 6,
                                  [](const ParameterPoint& p) {
                                      ParameterPoint t(p.mode(), p.q());
                                      t.set_sqrt_a(p.get('s'));
                                      t.set('b', p.get('c') / p.get('e'));
                                      t.set('c', inv(p.get('d')));
                                      return t;
                                  }};
        return m;
    }();
    return specs;
}

}  // namespace

ParameterPoint vwp_probe_base(const std::string& source_id, Mode mode) {
    ParameterPoint p(mode, Scalar::rational(1, 2).to_mode(mode));
    Scalar s = Scalar::rational(3, 5).to_mode(mode);
    p.set('s', s);
    p.set('c', s * s);
    if (source_id == "thm_ts") {
        p.set('a', Scalar::rational(1, 3)).set('d', Scalar::rational(5, 7)).set_int('n', 4);
    } else if (source_id == "thm_tns" || source_id == "thm_tnsc") {
        p.set('a', Scalar::rational(1, 4)).set('d', Scalar::rational(2, 5));
    } else if (source_id == "thm_bns" || source_id == "thm_bnsc") {
        p.set('d', Scalar::rational(3, 7)).set('e', Scalar::rational(2, 3));
    } else {
        throw Error("no limit probe for identity id: " + source_id);
    }
    return p;
}

const std::string& vwp_probe_target(const std::string& source_id) {
    auto it = probe_specs().find(source_id);
    if (it == probe_specs().end()) throw Error("no limit probe for identity id: " + source_id);
    return it->second.target;
}

mpf_class vwp_limit_probe(const IdentityRecord& source, const IdentityRecord& target, long B,
                          const ParameterPoint& base) {
    auto it = probe_specs().find(source.id);
    if (it == probe_specs().end()) throw Error("no limit probe for identity id: " + source.id);
    const ProbeSpec& spec = it->second;
    if (target.id != spec.target)
        throw Error("limit probe for " + source.id + " targets " + spec.target);

    // substituted source point: b := B, c := -B/c0
    ParameterPoint src = base;
    Scalar Bs = Scalar(B).to_mode(base.mode());
    src.set('b', Bs);
    src.set('c', -(Bs / base.get('c')));

    ParameterPoint tgt = spec.to_target(base);

    long k_lo = spec.k_lo;
    long k_hi = (spec.k_hi < 0) ? base.n() : spec.k_hi;
    double inf_tol = 1e-25;

    Scalar s0 = source.summand(src, 0, inf_tol);
    Scalar t0 = target.summand(tgt, 0, inf_tol);
    if (s0.is_zero() || t0.is_zero()) throw DegenerateInputError("limit probe: vanishing k = 0 term");

    mpf_class worst(0);
    for (long k = k_lo; k <= k_hi; ++k) {
        Scalar lhs = source.summand(src, k, inf_tol) / s0;
        Scalar rhs = target.summand(tgt, k, inf_tol) / t0;
        mpf_class dev = mag(lhs - rhs);
        if (dev > worst) worst = dev;
    }
    return worst;
}

mpf_class vwp_limit_probe(const std::string& source_id, long B, Mode mode) {
    const IdentityRecord& src = record(source_id);
    const IdentityRecord& tgt = record(vwp_probe_target(source_id));
    return vwp_limit_probe(src, tgt, B, vwp_probe_base(source_id, mode));
}

Scalar thm_bns_shifted_unilateral(const ParameterPoint& p, long l, double tol) {
    const Scalar &b = p.get('b'), &c = p.get('c'), &d = p.get('d'), &q = p.q();
    Scalar one(1);
    double inf_tol = tol * 1e-6;

    TermSeries ts;
    ts.kind = SeriesKind::unilateral;
    ts.summand = [=](long k) {
        Scalar qkl = pow_int(q, k - l);
        Scalar M1 = one - b * qkl;
        if (M1.is_zero()) throw PoleError("shifted sum: 1 - b q^{k-l} = 0");
        Scalar M2 = c - qkl;
        if (M2.is_zero()) throw DegenerateInputError("shifted sum: c = q^{k-l}");
        Scalar R = M1 / M2;
        Scalar num = qp_infinite(R * d, q, inf_tol).value;
        Scalar den = qp_infinite(R * pow_int(q, -l), q, inf_tol).value;
        if (den.is_zero()) throw PoleError("shifted sum: (R q^-l;q)_inf = 0");
        return (one / M1) * (one - R * qkl) * (num / den) *
               qp_finite(pow_int(q, 1 - l) / d, q, k) * qp_recip(q, q, k) * pow_int(R * d, k);
    };
    SumPolicy pol;
    pol.tol = tol;
    pol.term_rel_err = 10 * inf_tol;
    SumResult sum = sum_series(ts, pol);

    Scalar prefactor = qp_finite(q, q, l) * qp_recip(d, q, l) * pow_int(q, -l);
    return prefactor * sum.value;
}

}  // namespace qpsi

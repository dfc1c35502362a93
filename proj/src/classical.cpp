// Classical summation registry: binomial theorem, Chu-Vandermonde,
// Pfaff-Saalschutz, their q-analogues, the very-well-poised 6phi5/5phi5
// summations, Bailey's 6psi6, the 4psi6 and Ramanujan's 1psi1.
#include "registry_util.hpp"

namespace qpsi::detail {

namespace {

Scalar zero_of(const ParameterPoint& p) { return Scalar(0).to_mode(p.mode()); }

TermFactors finite_term(Scalar v) {
    TermFactors tf;
    tf.finite = std::move(v);
    return tf;
}

IdentityRecord make_binomial() {
    IdentityRecord r;
    r.id = "binomial";
    r.title = "binomial theorem";
    r.constraint_text = "none (polynomial identity)";
    r.params = {'a', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        return LhsResult{pow_int(p.get('a') + p.get('c'), p.n())};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        Scalar t = binomial_coeff(Scalar(n), k) * pow_int(p.get('a'), k) * pow_int(p.get('c'), n - k);
        return finite_term(t.to_mode(p.mode()));
    };
    r.domain = [](const ParameterPoint&, const DomainPolicy&) { return DomainCheck{}; };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', Scalar::rational(rng.rational(30, 12)).to_mode(mode));
        p.set('c', Scalar::rational(rng.rational(30, 12)).to_mode(mode));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

IdentityRecord make_chu_vandermonde() {
    IdentityRecord r;
    r.id = "chu_vandermonde";
    r.title = "Chu-Vandermonde summation";
    r.constraint_text = "none (polynomial identity)";
    r.params = {'a', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        return LhsResult{binomial_coeff(p.get('a') + p.get('c'), p.n())};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        Scalar t = binomial_coeff(p.get('a'), k) * binomial_coeff(p.get('c'), n - k);
        return finite_term(t.to_mode(p.mode()));
    };
    r.domain = [](const ParameterPoint&, const DomainPolicy&) { return DomainCheck{}; };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', Scalar::rational(rng.rational(30, 12)).to_mode(mode));
        p.set('c', Scalar::rational(rng.rational(30, 12)).to_mode(mode));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// sum_k (a)_k (b)_k (-n)_k / ((1)_k (c)_k (a+b-c+1-n)_k)
//   = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
IdentityRecord make_pfaff_saalschutz() {
    IdentityRecord r;
    r.id = "pfaff_saalschutz";
    r.title = "Pfaff-Saalschutz summation";
    r.constraint_text = "denominator shifted factorials nonvanishing";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        long n = p.n();
        Scalar num = rising_factorial(c - a, n) * rising_factorial(c - b, n);
        Scalar den = rising_factorial(c, n) * rising_factorial(c - a - b, n);
        if (den.is_zero()) throw PoleError("pfaff_saalschutz: closed-form denominator vanishes");
        return LhsResult{num / den};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        Scalar num = rising_factorial(a, k) * rising_factorial(b, k) * rising_factorial(Scalar(-n), k);
        Scalar den = rising_factorial(Scalar(1), k) * rising_factorial(c, k) *
                     rising_factorial(a + b - c + Scalar(1 - n), k);
        if (den.is_zero()) throw PoleError("pfaff_saalschutz: summand denominator vanishes");
        return finite_term(num / den);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        long n = p.n();
        DomainAccum d;
        for (long j = 0; j < n; ++j) {
            d.pole(c + Scalar(j), pol.pole_margin, "(c)_n factor too small");
            d.pole(c - a - b + Scalar(j), pol.pole_margin, "(c-a-b)_n factor too small");
            d.pole(a + b - c + Scalar(1 - n + j), pol.pole_margin, "(a+b-c+1-n)_k factor too small");
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', Scalar::rational(rng.rational(20, 9)).to_mode(mode));
        p.set('b', Scalar::rational(rng.rational(20, 9)).to_mode(mode));
        p.set('c', Scalar::rational(rng.rational(20, 9)).to_mode(mode));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// sum_k (a;q)_k (b;q)_k (q^-n;q)_k / ((q;q)_k (c;q)_k (abq^{1-n}/c;q)_k) q^k
//   = (c/a;q)_n (c/b;q)_n / ((c;q)_n (c/ab;q)_n)
IdentityRecord make_qps() {
    IdentityRecord r;
    r.id = "qps";
    r.title = "q-Pfaff-Saalschutz summation";
    r.constraint_text = "denominator q-shifted factorials nonvanishing";
    r.params = {'a', 'b', 'c'};
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        long n = p.n();
        Scalar v = qp_finite(c / a, q, n) * qp_finite(c / b, q, n) * qp_recip(c, q, n) *
                   qp_recip(c / (a * b), q, n);
        return LhsResult{v};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar qm_n = pow_int(q, -n);
        Scalar t = qp_finite(a, q, k) * qp_finite(b, q, k) * qp_finite(qm_n, q, k) *
                   qp_recip(q, q, k) * qp_recip(c, q, k) * qp_recip(a * b * q * qm_n / c, q, k) *
                   pow_int(q, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        long n = p.n();
        DomainAccum d;
        d.pole(a, pol.pole_margin, "a = 0");
        d.pole(b, pol.pole_margin, "b = 0");
        d.pole(c, pol.pole_margin, "c = 0");
        Scalar x = c, y = a * b * pow_int(q, 1 - n) / c;
        for (long j = 0; j < n; ++j) {
            d.pole(Scalar(1) - x, pol.pole_margin, "(c;q)_n factor too small");
            d.pole(Scalar(1) - y, pol.pole_margin, "(abq^{1-n}/c;q)_n factor too small");
            x *= q;
            y *= q;
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set('a', draw(rng, mode, 0.1, 2.5));
        p.set('b', draw(rng, mode, 0.1, 2.5));
        p.set('c', draw(rng, mode, 0.1, 2.5));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// sum_{k>=0} (a;q)_k (b;q)_k / ((q;q)_k (c;q)_k) (c/ab)^k
//   = (c/a;q)_inf (c/b;q)_inf / ((c;q)_inf (c/ab;q)_inf),  |c/ab| < 1
IdentityRecord make_qgauss() {
    IdentityRecord r;
    r.id = "qgauss";
    r.title = "q-Gauss summation";
    r.constraint_text = "|c/ab| < 1";
    r.params = {'a', 'b', 'c'};
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        if (p.mode() == Mode::exact) {
            // terminating collapse: a or b equal to q^-m turns the quotient of
            // infinite products into (c/x;q)_m / (c;q)_m
            for (int which = 0; which < 2; ++which) {
                const Scalar& u = (which == 0) ? b : a;
                const Scalar& v = (which == 0) ? a : b;
                Scalar upow = u;
                for (long m = 0; m <= 64; ++m) {
                    if (upow.is_one())
                        return LhsResult{qp_finite(c / v, q, m) * qp_recip(c, q, m)};
                    upow *= q;
                }
            }
            throw ModeError("qgauss closed form needs floating mode unless a or b is q^-m");
        }
        ProdBuilder pb(q, tol);
        pb.mul_inf(c / a).mul_inf(c / b).div_inf(c).div_inf(c / (a * b));
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar t = qp_finite(a, q, k) * qp_finite(b, q, k) * qp_recip(q, q, k) * qp_recip(c, q, k) *
                   pow_int(c / (a * b), k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        DomainAccum d;
        d.pole(a, pol.pole_margin, "a = 0");
        d.pole(b, pol.pole_margin, "b = 0");
        d.ratio(c, a * b, pol.margin, "|c/ab| too close to 1");
        d.infprod(c, q, pol.pole_margin, "(c;q)_inf factor too small");
        d.infprod(c / (a * b), q, pol.pole_margin, "(c/ab;q)_inf factor too small");
        d.infprod(c / a, q, pol.pole_margin, "(c/a;q)_inf factor too small");
        d.infprod(c / b, q, pol.pole_margin, "(c/b;q)_inf factor too small");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar a = draw(rng, mode, 0.4, 2.0);
        Scalar b = draw(rng, mode, 0.4, 2.0);
        Scalar w = draw(rng, mode, 0.05, 0.7);
        p.set('a', a).set('b', b).set('c', a * b * w);
        return p;
    };
    return r;
}

// terminating very-well-poised 6phi5:
// sum_{k=0}^n (a,q√a,-q√a,b,c,q^-n;q)_k / (q,√a,-√a,aq/b,aq/c,aq^{1+n};q)_k (aq^{1+n}/bc)^k
//   = (aq;q)_n (aq/bc;q)_n / ((aq/b;q)_n (aq/c;q)_n)
// (right side uses the terminating index n)
IdentityRecord make_65s() {
    IdentityRecord r;
    r.id = "65s";
    r.title = "terminating very-well-poised 6phi5 summation";
    r.constraint_text = "terminating; denominator factors nonvanishing";
    r.params = {'b', 'c'};
    r.uses_sqrt_a = true;
    r.has_n = true;
    r.kind = SeriesKind::terminating;
    r.exact_capable = true;
    r.lhs = [](const ParameterPoint& p, double) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        long n = p.n();
        Scalar v = qp_finite(a * q, q, n) * qp_finite(a * q / (b * c), q, n) *
                   qp_recip(a * q / b, q, n) * qp_recip(a * q / c, q, n);
        return LhsResult{v};
    };
    r.term = [](const ParameterPoint& p, long k) {
        long n = p.n();
        if (k < 0 || k > n) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        const Scalar& s = *p.sqrt_a();
        Scalar z = a * pow_int(q, 1 + n) / (b * c);
        Scalar t = qp_finite(a, q, k) * qp_finite(q * s, q, k) * qp_finite(-(q * s), q, k) *
                   qp_finite(b, q, k) * qp_finite(c, q, k) * qp_finite(pow_int(q, -n), q, k) *
                   qp_recip(q, q, k) * qp_recip(s, q, k) * qp_recip(-s, q, k) *
                   qp_recip(a * q / b, q, k) * qp_recip(a * q / c, q, k) *
                   qp_recip(a * pow_int(q, 1 + n), q, k) * pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        const Scalar& s = *p.sqrt_a();
        long n = p.n();
        DomainAccum d;
        d.pole(b, pol.pole_margin, "b = 0");
        d.pole(c, pol.pole_margin, "c = 0");
        d.pole(a, pol.pole_margin, "a = 0");
        Scalar one(1);
        Scalar xs = s, xm = -s, xb = a * q / b, xc = a * q / c, xn = a * pow_int(q, 1 + n);
        for (long j = 0; j < n; ++j) {
            d.pole(one - xs, pol.pole_margin, "(sqrt_a;q)_k factor too small");
            d.pole(one - xm, pol.pole_margin, "(-sqrt_a;q)_k factor too small");
            d.pole(one - xb, pol.pole_margin, "(aq/b;q)_n factor too small");
            d.pole(one - xc, pol.pole_margin, "(aq/c;q)_n factor too small");
            d.pole(one - xn, pol.pole_margin, "(aq^{1+n};q)_k factor too small");
            xs *= q;
            xm *= q;
            xb *= q;
            xc *= q;
            xn *= q;
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set_sqrt_a(draw(rng, mode, 0.3, 1.3));
        p.set('b', draw(rng, mode, 0.4, 3.0));
        p.set('c', draw(rng, mode, 0.4, 3.0));
        p.set_int('n', rng.range(0, 8));
        return p;
    };
    return r;
}

// nonterminating very-well-poised 6phi5, |aq/bcd| < 1:
//   sum = (aq, aq/bc, aq/bd, aq/cd;q)_inf / (aq/b, aq/c, aq/d, aq/bcd;q)_inf
IdentityRecord make_65ns() {
    IdentityRecord r;
    r.id = "65ns";
    r.title = "nonterminating very-well-poised 6phi5 summation";
    r.constraint_text = "|aq/bcd| < 1";
    r.params = {'b', 'c', 'd'};
    r.uses_sqrt_a = true;
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &q = p.q();
        ProdBuilder pb(p.q(), tol);
        pb.mul_inf(a * q).mul_inf(a * q / (b * c)).mul_inf(a * q / (b * dd)).mul_inf(a * q / (c * dd));
        pb.div_inf(a * q / b).div_inf(a * q / c).div_inf(a * q / dd).div_inf(a * q / (b * c * dd));
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &q = p.q();
        const Scalar& s = *p.sqrt_a();
        Scalar z = a * q / (b * c * dd);
        Scalar t = qp_finite(a, q, k) * qp_finite(q * s, q, k) * qp_finite(-(q * s), q, k) *
                   qp_finite(b, q, k) * qp_finite(c, q, k) * qp_finite(dd, q, k) *
                   qp_recip(q, q, k) * qp_recip(s, q, k) * qp_recip(-s, q, k) *
                   qp_recip(a * q / b, q, k) * qp_recip(a * q / c, q, k) * qp_recip(a * q / dd, q, k) *
                   pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &q = p.q();
        const Scalar& s = *p.sqrt_a();
        DomainAccum d;
        d.pole(a, pol.pole_margin, "a = 0");
        d.pole(b, pol.pole_margin, "b = 0");
        d.pole(c, pol.pole_margin, "c = 0");
        d.pole(dd, pol.pole_margin, "d = 0");
        d.ratio(a * q, b * c * dd, pol.margin, "|aq/bcd| too close to 1");
        for (const Scalar& arg : {s, -s, a * q / b, a * q / c, a * q / dd, a * q / (b * c * dd)})
            d.infprod(arg, q, pol.pole_margin, "denominator q-factorial factor too small");
        for (const Scalar& arg : {a * q, a * q / (b * c), a * q / (b * dd), a * q / (c * dd)})
            d.infprod(arg, q, pol.pole_margin, "closed-form numerator factor too small");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set_sqrt_a(draw(rng, mode, 0.3, 1.2));
        Scalar b = draw(rng, mode, 0.6, 3.0);
        Scalar c = draw(rng, mode, 0.6, 3.0);
        Scalar w = draw(rng, mode, 0.05, 0.7);
        p.set('b', b).set('c', c);
        p.set('d', p.get('a') * p.q() / (b * c * w));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "65s",
        "d = q^-m termwise",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            long m = p.has_int('m') ? p.get_int('m') : 3;
            s.set('d', pow_int(p.q(), -m));
            s.set_int('m', m);
            return s;
        },
        [](const ParameterPoint& p) {
            long m = p.get_int('m');
            ParameterPoint t(p.mode(), p.q());
            t.set_sqrt_a(*p.sqrt_a());
            t.set('b', p.get('b')).set('c', p.get('c'));
            t.set_int('n', m);
            return t;
        },
        0, 8, true});
    return r;
}

// nonterminating very-well-poised 5phi5 (the d -> inf case of the 6phi5):
//   sum over k of [VWP terms] (-1)^k q^binom(k,2) (aq/bc)^k
//   = (aq;q)_inf (aq/bc;q)_inf / ((aq/b;q)_inf (aq/c;q)_inf); converges everywhere
IdentityRecord make_55ns() {
    IdentityRecord r;
    r.id = "55ns";
    r.title = "nonterminating very-well-poised 5phi5 summation";
    r.constraint_text = "entire in the argument";
    r.params = {'b', 'c'};
    r.uses_sqrt_a = true;
    r.kind = SeriesKind::unilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c');
        ProdBuilder pb(p.q(), tol);
        pb.mul_inf(a * p.q()).mul_inf(a * p.q() / (b * c));
        pb.div_inf(a * p.q() / b).div_inf(a * p.q() / c);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        if (k < 0) return finite_term(zero_of(p));
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        const Scalar& s = *p.sqrt_a();
        Scalar z = a * q / (b * c);
        Scalar t = qp_finite(a, q, k) * qp_finite(q * s, q, k) * qp_finite(-(q * s), q, k) *
                   qp_finite(b, q, k) * qp_finite(c, q, k) * qp_recip(q, q, k) * qp_recip(s, q, k) *
                   qp_recip(-s, q, k) * qp_recip(a * q / b, q, k) * qp_recip(a * q / c, q, k) *
                   Scalar(sign_pow(k)) * qpow_binom2(q, k) * pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        const Scalar& s = *p.sqrt_a();
        DomainAccum d;
        d.pole(a, pol.pole_margin, "a = 0");
        d.pole(b, pol.pole_margin, "b = 0");
        d.pole(c, pol.pole_margin, "c = 0");
        for (const Scalar& arg : {s, -s, a * q / b, a * q / c})
            d.infprod(arg, q, pol.pole_margin, "denominator q-factorial factor too small");
        for (const Scalar& arg : {a * q, a * q / (b * c)})
            d.infprod(arg, q, pol.pole_margin, "closed-form numerator factor too small");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set_sqrt_a(draw(rng, mode, 0.3, 1.2));
        p.set('b', draw(rng, mode, 0.5, 3.0));
        p.set('c', draw(rng, mode, 0.5, 3.0));
        return p;
    };
    return r;
}

// Bailey's very-well-poised 6psi6, |a^2 q/bcde| < 1 (the series argument;
// the textbook prose bound |aq^2/bcde| is recorded but the argument's
// modulus is what both tails' ratio tests actually need):
IdentityRecord make_66s() {
    IdentityRecord r;
    r.id = "66s";
    r.title = "Bailey's very-well-poised 6psi6 summation";
    r.constraint_text = "|a^2 q/bcde| < 1 (prose form |aq^2/bcde| recorded, unused)";
    r.params = {'b', 'c', 'd', 'e'};
    r.uses_sqrt_a = true;
    r.kind = SeriesKind::bilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &e = p.get('e'), &q = p.q();
        Scalar aq = a * q;
        ProdBuilder pb(q, tol);
        pb.mul_inf(q).mul_inf(aq).mul_inf(q / a);
        pb.mul_inf(aq / (b * c)).mul_inf(aq / (b * dd)).mul_inf(aq / (b * e));
        pb.mul_inf(aq / (c * dd)).mul_inf(aq / (c * e)).mul_inf(aq / (dd * e));
        pb.div_inf(q / b).div_inf(q / c).div_inf(q / dd).div_inf(q / e);
        pb.div_inf(aq / b).div_inf(aq / c).div_inf(aq / dd).div_inf(aq / e);
        pb.div_inf(a * aq / (b * c * dd * e));
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &e = p.get('e'), &q = p.q();
        Scalar one(1);
        Scalar vwp_den = one - a;
        if (vwp_den.is_zero()) throw PoleError("66s: a = 1");
        Scalar z = a * a * q / (b * c * dd * e);
        // the +-sqrt(a) factor pairs telescope to (1-aq^2k)/(1-a) for every
        // integer k; the paired form avoids removable 0*inf at negative k
        Scalar t = ((one - a * pow_int(q, 2 * k)) / vwp_den) * qp_finite(b, q, k) *
                   qp_finite(c, q, k) * qp_finite(dd, q, k) * qp_finite(e, q, k) *
                   qp_recip(a * q / b, q, k) * qp_recip(a * q / c, q, k) *
                   qp_recip(a * q / dd, q, k) * qp_recip(a * q / e, q, k) * pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &dd = p.get('d'),
                     &e = p.get('e'), &q = p.q();
        Scalar aq = a * q;
        DomainAccum d;
        for (const Scalar& x : {a, b, c, dd, e}) d.pole(x, pol.pole_margin, "parameter = 0");
        d.pole(Scalar(1) - a, pol.pole_margin, "a = 1");
        d.ratio(a * a * q, b * c * dd * e, pol.margin, "|a^2 q/bcde| too close to 1");
        for (const Scalar& arg :
             {aq / b, aq / c, aq / dd, aq / e, q / b, q / c, q / dd, q / e,
              a * aq / (b * c * dd * e)})
            d.infprod(arg, q, pol.pole_margin, "denominator factor too small");
        for (const Scalar& arg :
             {aq, q / a, aq / (b * c), aq / (b * dd), aq / (b * e), aq / (c * dd), aq / (c * e),
              aq / (dd * e)})
            d.infprod(arg, q, pol.pole_margin, "closed-form numerator factor too small");
        long w = active_window(q);
        for (const Scalar& num : {b, c, dd, e}) {
            d.require(neg_scan_min(num, q, w) > pol.pole_margin,
                      "numerator q-factorial pole at negative index");
        }
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set_sqrt_a(draw(rng, mode, 0.4, 1.2));
        Scalar b = draw(rng, mode, 0.7, 3.0);
        Scalar c = draw(rng, mode, 0.7, 3.0);
        Scalar dd = draw(rng, mode, 0.7, 3.0);
        Scalar w = draw(rng, mode, 0.05, 0.7);
        const Scalar& a = p.get('a');
        p.set('b', b).set('c', c).set('d', dd);
        p.set('e', a * a * p.q() / (b * c * dd * w));
        return p;
    };
    r.degenerations.push_back(Degeneration{
        "65ns",
        "e = a termwise",
        [](const ParameterPoint& p) {
            ParameterPoint s = p;
            s.set('e', p.get('a'));
            return s;
        },
        [](const ParameterPoint& p) {
            ParameterPoint t(p.mode(), p.q());
            t.set_sqrt_a(*p.sqrt_a());
            t.set('b', p.get('b')).set('c', p.get('c')).set('d', p.get('d'));
            return t;
        },
        0, 8, true});
    return r;
}

// very-well-poised 4psi6 (d,e -> inf case of the 6psi6):
//   sum over all k of [VWP terms] q^{k(k-1)} (a^2 q/bc)^k
//   = (q, aq, q/a, aq/bc;q)_inf / ((q/b, q/c, aq/b, aq/c;q)_inf)
IdentityRecord make_46s() {
    IdentityRecord r;
    r.id = "46s";
    r.title = "very-well-poised 4psi6 summation";
    r.constraint_text = "entire for nonzero argument";
    r.params = {'b', 'c'};
    r.uses_sqrt_a = true;
    r.kind = SeriesKind::bilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar aq = a * q;
        ProdBuilder pb(q, tol);
        pb.mul_inf(q).mul_inf(aq).mul_inf(q / a).mul_inf(aq / (b * c));
        pb.div_inf(q / b).div_inf(q / c).div_inf(aq / b).div_inf(aq / c);
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar one(1);
        Scalar vwp_den = one - a;
        if (vwp_den.is_zero()) throw PoleError("46s: a = 1");
        Scalar z = a * a * q / (b * c);
        Scalar q2 = qpow_binom2(q, k);
        Scalar t = ((one - a * pow_int(q, 2 * k)) / vwp_den) * qp_finite(b, q, k) *
                   qp_finite(c, q, k) * qp_recip(a * q / b, q, k) * qp_recip(a * q / c, q, k) *
                   q2 * q2 * pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &c = p.get('c'), &q = p.q();
        Scalar aq = a * q;
        DomainAccum d;
        for (const Scalar& x : {a, b, c}) d.pole(x, pol.pole_margin, "parameter = 0");
        d.pole(Scalar(1) - a, pol.pole_margin, "a = 1");
        for (const Scalar& arg : {aq / b, aq / c, q / b, q / c})
            d.infprod(arg, q, pol.pole_margin, "denominator factor too small");
        for (const Scalar& arg : {aq, q / a, aq / (b * c)})
            d.infprod(arg, q, pol.pole_margin, "closed-form numerator factor too small");
        long w = active_window(q);
        for (const Scalar& num : {b, c})
            d.require(neg_scan_min(num, q, w) > pol.pole_margin,
                      "numerator q-factorial pole at negative index");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        p.set_sqrt_a(draw(rng, mode, 0.4, 1.2));
        p.set('b', draw(rng, mode, 0.5, 3.0));
        p.set('c', draw(rng, mode, 0.5, 3.0));
        return p;
    };
    return r;
}

// Ramanujan's 1psi1 summation, |b/a| < |z| < 1:
// sum_{k=-inf}^{inf} (a;q)_k/(b;q)_k z^k
//   = (q, b/a, az, q/az;q)_inf / ((b, q/a, z, b/az;q)_inf)
IdentityRecord make_1psi1() {
    IdentityRecord r;
    r.id = "1psi1";
    r.title = "Ramanujan's 1psi1 summation";
    r.constraint_text = "|b/a| < |z| < 1";
    r.params = {'a', 'b', 'z'};
    r.kind = SeriesKind::bilateral;
    r.lhs = [](const ParameterPoint& p, double tol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &z = p.get('z'), &q = p.q();
        ProdBuilder pb(q, tol);
        pb.mul_inf(q).mul_inf(b / a).mul_inf(a * z).mul_inf(q / (a * z));
        pb.div_inf(b).div_inf(q / a).div_inf(z).div_inf(b / (a * z));
        return pb.done();
    };
    r.term = [](const ParameterPoint& p, long k) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &z = p.get('z'), &q = p.q();
        Scalar t = qp_finite(a, q, k) * qp_recip(b, q, k) * pow_int(z, k);
        return finite_term(t);
    };
    r.domain = [](const ParameterPoint& p, const DomainPolicy& pol) {
        const Scalar &a = p.get('a'), &b = p.get('b'), &z = p.get('z'), &q = p.q();
        DomainAccum d;
        d.pole(a, pol.pole_margin, "a = 0");
        d.pole(z, pol.pole_margin, "z = 0");
        d.require(mag(z) <= pol.margin, "|z| too close to 1");
        d.ratio(b, a * z, pol.margin, "|b/az| too close to 1");
        for (const Scalar& arg : {b, q / a, z, b / (a * z)})
            d.infprod(arg, q, pol.pole_margin, "denominator factor too small");
        for (const Scalar& arg : {b / a, a * z, q / (a * z)})
            d.infprod(arg, q, pol.pole_margin, "closed-form numerator factor too small");
        d.require(neg_scan_min(a, q, active_window(q)) > pol.pole_margin,
                  "(a;q)_k pole at negative index");
        return d.out;
    };
    r.sampler = [](RandomSource& rng, Mode mode, const DomainPolicy&) {
        ParameterPoint p(mode, draw_q(rng, mode));
        Scalar a = draw(rng, mode, 0.4, 2.0);
        Scalar z = draw(rng, mode, 0.15, 0.7);
        Scalar w = draw(rng, mode, 0.05, 0.7);
        p.set('a', a).set('z', z).set('b', a * z * w);
        return p;
    };
    return r;
}

}  // namespace

void register_classical(std::map<std::string, IdentityRecord>& reg) {
    for (auto&& rec : {make_binomial(), make_chu_vandermonde(), make_pfaff_saalschutz(), make_qps(),
                       make_qgauss(), make_65s(), make_65ns(), make_55ns(), make_66s(), make_46s(),
                       make_1psi1()}) {
        reg.emplace(rec.id, rec);
    }
}

}  // namespace qpsi::detail

#include "qpsi/inversion.hpp"

#include "qpsi/qpoch.hpp"

namespace qpsi {

namespace {

Scalar checked_div(Scalar num, const Scalar& den, const char* what) {
    if (den.is_zero()) throw DegenerateInputError(what);
    return num / den;
}

}  // namespace

InversePair krattenthaler_pair(std::function<Scalar(long)> a_seq, std::function<Scalar(long)> c_seq,
                               Scalar d) {
    InversePair p;
    p.name = "krattenthaler";
    p.f = [a_seq, c_seq, d](long n, long k) {
        Scalar ck = c_seq(k);
        if (ck.is_zero()) throw DegenerateInputError("c_k = 0");
        Scalar dck = d / ck;
        Scalar num(1), den(1);
        for (long j = k; j <= n - 1; ++j) num *= (a_seq(j) - dck) * (a_seq(j) - ck);
        for (long j = k + 1; j <= n; ++j) den *= (c_seq(j) - dck) * (c_seq(j) - ck);
        return checked_div(num, den, "f_nk: vanishing (c_j - d/c_k)(c_j - c_k)");
    };
    p.g = [a_seq, c_seq, d](long k, long l) {
        Scalar ck = c_seq(k), cl = c_seq(l);
        if (ck.is_zero()) throw DegenerateInputError("c_k = 0");
        Scalar dck = d / ck;
        Scalar al = a_seq(l), ak = a_seq(k);
        // at l = k the head is a ratio of identical expressions, so it is 1
        // even where a_k = c_k would make it 0/0
        Scalar head = (l == k)
                          ? Scalar(1).to_mode(ck.mode())
                          : checked_div((al * cl - d) * (al - cl), (ak * ck - d) * (ak - ck),
                                        "g_kl: vanishing (a_k c_k - d)(a_k - c_k)");
        Scalar num(1), den(1);
        for (long j = l + 1; j <= k; ++j) num *= (a_seq(j) - dck) * (a_seq(j) - ck);
        for (long j = l; j <= k - 1; ++j) den *= (c_seq(j) - dck) * (c_seq(j) - ck);
        return head * checked_div(num, den, "g_kl: vanishing (c_j - d/c_k)(c_j - c_k)");
    };
    return p;
}

InversePair cor_specialized_kratt(const Scalar& a, const Scalar& b, const Scalar& c,
                                  const Scalar& q) {
    Scalar d = Scalar(1) - b * c;
    auto a_seq = [a, b, c, q](long j) {
        return checked_div(Scalar(1) - b * c, Scalar(1) - a * c * pow_int(q, j), "1 - acq^j = 0");
    };
    auto c_seq = [c, q](long j) { return Scalar(1) - c * pow_int(q, -j); };
    InversePair p = krattenthaler_pair(a_seq, c_seq, d);
    p.name = "cor_specialized_kratt";
    return p;
}

// f_nk = (1-bq^n)/(1-bq^k) ((1-bq^k)/(c-q^k))^n
//        (1 - (c-q^n)/(1-bq^n) a q^n)/(1 - (c-q^k)/(1-bq^k) a)
//        (1 - (1-bq^k)/(c-q^k) q^k)/(1 - (1-bq^k)/(c-q^k)) q^k
//        (q^-n;q)_k (aq^n;q)_k / ((q;q)_k (aq;q)_k)
//        ((c-q^k)/(1-bq^k) a;q)_n / ((1-bq^k)/(c-q^k) q;q)_n
// g_kl = ((c-q^k)/(1-bq^k))^l q^{kl} (1-aq^{2l})/(1-a)
//        (a;q)_l (q^-k;q)_l / ((q;q)_l (aq^{1+k};q)_l)
//        ((1-bq^k)/(c-q^k);q)_l / ((c-q^k)/(1-bq^k) aq;q)_l
InversePair cor1_pair(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& q) {
    InversePair p;
    p.name = "cor1";
    p.f = [a, b, c, q](long n, long k) {
        Scalar one(1);
        Scalar qk = pow_int(q, k), qn = pow_int(q, n);
        Scalar M1k = one - b * qk, M2k = c - qk;
        Scalar M1n = one - b * qn, M2n = c - qn;
        if (M1k.is_zero() || M1n.is_zero()) throw PoleError("cor1 f: 1 - bq^k = 0");
        if (M2k.is_zero()) throw DegenerateInputError("cor1 f: c = q^k");
        Scalar R = M1k / M2k, Rinv = M2k / M1k;
        Scalar den1 = one - Rinv * a;
        if (den1.is_zero()) throw DegenerateInputError("cor1 f: 1 - (c-q^k)/(1-bq^k) a = 0");
        Scalar den2 = one - R;
        if (den2.is_zero()) throw DegenerateInputError("cor1 f: 1 - R = 0");
        return (M1n / M1k) * pow_int(R, n) * ((one - (M2n / M1n) * a * qn) / den1) *
               ((one - R * qk) / den2) * qk * qp_finite(pow_int(q, -n), q, k) *
               qp_finite(a * qn, q, k) * qp_recip(q, q, k) * qp_recip(a * q, q, k) *
               qp_finite(Rinv * a, q, n) * qp_recip(R * q, q, n);
    };
    p.g = [a, b, c, q](long k, long l) {
        Scalar one(1);
        Scalar qk = pow_int(q, k);
        Scalar M1 = one - b * qk, M2 = c - qk;
        if (M1.is_zero()) throw PoleError("cor1 g: 1 - bq^k = 0");
        if (M2.is_zero()) throw DegenerateInputError("cor1 g: c = q^k");
        Scalar R = M1 / M2, Rinv = M2 / M1;
        Scalar den = one - a;
        if (den.is_zero()) throw DegenerateInputError("cor1 g: a = 1");
        return pow_int(Rinv, l) * pow_int(q, k * l) * ((one - a * pow_int(q, 2 * l)) / den) *
               qp_finite(a, q, l) * qp_finite(pow_int(q, -k), q, l) * qp_recip(q, q, l) *
               qp_recip(a * pow_int(q, 1 + k), q, l) * qp_finite(R, q, l) *
               qp_recip(Rinv * a * q, q, l);
    };
    return p;
}

// f_nk = ((1-bq^k)/(c-q^k) q^-k)^{n-k} (1-aq^{2n})/(1-aq^{2k})
//        (aq^{2k};q)_{n-k}/(q;q)_{n-k}
//        ((c-q^k)/(1-bq^k) aq^k;q)_{n-k} / ((1-bq^k)/(c-q^k) q^{1+k};q)_{n-k}
// g_kl = (-1)^{k-l} q^{binom(l,2)-binom(k,2)} (aq;q)_{2k}/((q;q)_{k-l} (aq;q)_{k+l})
//        (1-bq^l)/(1-bq^k) ((1-bq^k)/(c-q^k))^{k-l}
//        (1 - (c-q^l)/(1-bq^l) aq^l)/(1 - (c-q^k)/(1-bq^k) aq^k)
//        ((c-q^k)/(1-bq^k) aq;q)_k / ((1-bq^k)/(c-q^k);q)_k
//        ((1-bq^k)/(c-q^k);q)_l / ((c-q^k)/(1-bq^k) aq;q)_l
InversePair cor2_pair(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& q) {
    InversePair p;
    p.name = "cor2";
    p.f = [a, b, c, q](long n, long k) {
        Scalar one(1);
        Scalar qk = pow_int(q, k);
        Scalar M1 = one - b * qk, M2 = c - qk;
        if (M1.is_zero()) throw PoleError("cor2 f: 1 - bq^k = 0");
        if (M2.is_zero()) throw DegenerateInputError("cor2 f: c = q^k");
        Scalar R = M1 / M2, Rinv = M2 / M1;
        Scalar den = one - a * pow_int(q, 2 * k);
        if (den.is_zero()) throw DegenerateInputError("cor2 f: 1 - aq^{2k} = 0");
        return pow_int(R * pow_int(q, -k), n - k) * ((one - a * pow_int(q, 2 * n)) / den) *
               qp_finite(a * pow_int(q, 2 * k), q, n - k) * qp_recip(q, q, n - k) *
               qp_finite(Rinv * a * qk, q, n - k) * qp_recip(R * pow_int(q, 1 + k), q, n - k);
    };
    p.g = [a, b, c, q](long k, long l) {
        Scalar one(1);
        Scalar qk = pow_int(q, k), ql = pow_int(q, l);
        Scalar M1k = one - b * qk, M2k = c - qk;
        Scalar M1l = one - b * ql, M2l = c - ql;
        if (M1k.is_zero() || M1l.is_zero()) throw PoleError("cor2 g: 1 - bq^k = 0");
        if (M2k.is_zero()) throw DegenerateInputError("cor2 g: c = q^k");
        Scalar R = M1k / M2k, Rinv = M2k / M1k;
        Scalar den1 = one - Rinv * a * qk;
        if (den1.is_zero()) throw DegenerateInputError("cor2 g: mixing denominator = 0");
        Scalar sign = Scalar(sign_pow(k - l));
        Scalar qpow = qpow_binom2(q, l) / qpow_binom2(q, k);
        return sign * qpow * qp_finite(a * q, q, 2 * k) * qp_recip(q, q, k - l) *
               qp_recip(a * q, q, k + l) * (M1l / M1k) * pow_int(R, k - l) *
               ((one - (M2l / M1l) * a * ql) / den1) * qp_finite(Rinv * a * q, q, k) *
               qp_recip(R, q, k) * qp_finite(R, q, l) * qp_recip(Rinv * a * q, q, l);
    };
    return p;
}

OrthogonalityReport verify_orthogonality(const InversePair& p, long l, long n) {
    if (n < l) throw Error("verify_orthogonality needs n >= l");
    OrthogonalityReport rep;
    rep.l = l;
    rep.n = n;
    bool exact_mode = true;
    bool exact_delta = true;

    auto run = [&](const std::function<Scalar(long, long)>& first,
                   const std::function<Scalar(long, long)>& second) {
        for (long nn = l; nn <= n; ++nn) {
            for (long ll = l; ll <= nn; ++ll) {
                Scalar sum(0);
                for (long k = ll; k <= nn; ++k) sum += first(nn, k) * second(k, ll);
                if (sum.mode() == Mode::floating) exact_mode = false;
                Scalar expect(nn == ll ? 1 : 0);
                Scalar dev = sum - expect.to_mode(sum.mode());
                if (!dev.is_zero()) exact_delta = false;
                mpf_class m = mag(dev);
                if (nn == ll) {
                    if (m > rep.diag_dev) rep.diag_dev = m;
                } else {
                    if (m > rep.max_offdiag) rep.max_offdiag = m;
                }
            }
        }
    };
    run(p.f, p.g);
    run(p.g, p.f);  // dual orthogonality, verified independently
    rep.exact = exact_mode && exact_delta;
    return rep;
}

std::vector<Scalar> apply_inverse_relation(const InversePair& p,
                                           const std::function<Scalar(long)>& seq,
                                           InverseDirection dir, long count, double tol,
                                           long tail_cap) {
    std::vector<Scalar> out;
    out.reserve(count);
    for (long i = 0; i < count; ++i) {
        Scalar sum(0);
        switch (dir) {
            case InverseDirection::inv_f: {
                for (long k = 0; k <= i; ++k) sum += p.f(i, k) * seq(k);
                break;
            }
            case InverseDirection::inv_g: {
                for (long k = 0; k <= i; ++k) sum += p.g(i, k) * seq(k);
                break;
            }
            case InverseDirection::rotinv_f:
            case InverseDirection::rotinv_g: {
                // b_k = sum_{n>=k} f_nk a_n   /   a_l = sum_{k>=l} g_kl b_k
                int quiet = 0;
                long j = i;
                mpf_class scale(0);
                while (true) {
                    Scalar t = (dir == InverseDirection::rotinv_f) ? p.f(j, i) * seq(j)
                                                                   : p.g(j, i) * seq(j);
                    sum += t;
                    mpf_class sm = mag(sum);
                    if (sm > scale) scale = sm;
                    mpf_class tm = mag(t);
                    if (j > i && tm < (tol / 10) * (scale > 0 ? scale : mpf_class(1))) {
                        if (++quiet >= 3) break;
                    } else {
                        quiet = 0;
                    }
                    if (++j - i > tail_cap)
                        throw NonconvergenceError("rotated inverse relation tail did not settle");
                }
                break;
            }
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace qpsi

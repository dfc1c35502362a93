#include <doctest.h>

#include "qpsi/harness.hpp"
#include "test_util.hpp"

using namespace qpsi;
using qpsi::testutil::rat;
using qpsi::testutil::rel_err;

namespace {

InversePair example_pair() {
    // a_j = 2^j, c_j = 3^j, d = 5
    return krattenthaler_pair([](long j) { return pow_int(Scalar(2), j); },
                              [](long j) { return pow_int(Scalar(3), j); }, Scalar(5));
}

}  // namespace

TEST_CASE("general pair: unit diagonal and exact delta on a window") {
    InversePair p = example_pair();
    CHECK(p.f(2, 2) == Scalar(1));
    CHECK(p.f(5, 5) == Scalar(1));
    CHECK(p.g(3, 3) == Scalar(1));
    OrthogonalityReport r = verify_orthogonality(p, 0, 3);
    CHECK(r.exact);
    CHECK(r.max_offdiag == 0);
    CHECK(r.diag_dev == 0);
}

TEST_CASE("worked product identity for the specialized sequences") {
    // prod_{j=l+1}^k (a_j - c_k)
    //   = (c(1-bq^k)/q^k)^{k-l} ((c-q^k)/(1-bq^k) aq^{1+l};q)_{k-l} / (acq^{1+l};q)_{k-l}
    RandomSource rng(1234);
    for (int trial = 0; trial < 8; ++trial) {
        Scalar a = Scalar::rational(rng.rational(20, 9));
        Scalar b = Scalar::rational(rng.rational(20, 9));
        Scalar c = Scalar::rational(rng.rational(20, 9));
        Scalar q = Scalar::rational(rng.rational_in(0.1, 0.7));
        if (a.is_zero() || c.is_zero()) continue;
        auto a_seq = [&](long j) { return (Scalar(1) - b * c) / (Scalar(1) - a * c * pow_int(q, j)); };
        auto c_at = [&](long j) { return Scalar(1) - c * pow_int(q, -j); };
        bool ok = true;
        for (long k = 0; k <= 6 && ok; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = Scalar(1) - b * qk, M2 = c - qk;
            if (M1.is_zero() || M2.is_zero()) { ok = false; break; }
            for (long l = 0; l <= k; ++l) {
                Scalar prod(1);
                try {
                    for (long j = l + 1; j <= k; ++j) prod *= (a_seq(j) - c_at(k));
                    Scalar rhs = pow_int(c * M1 / qk, k - l) *
                                 qp_finite((M2 / M1) * a * pow_int(q, 1 + l), q, k - l) *
                                 qp_recip(a * c * pow_int(q, 1 + l), q, k - l);
                    CHECK(prod == rhs);
                } catch (const Error&) {
                    // degenerate draw (vanishing 1-acq^j or (acq^{1+l};q) factor)
                }
            }
        }
    }
}

TEST_CASE("first specialized pair (cor1)") {
    Scalar a = rat(1, 3), b = rat(1, 5), c(7), q = rat(1, 2);
    InversePair p = cor1_pair(a, b, c, q);

    SUBCASE("diagonal entry matches its hand-simplified closed form") {
        for (long k = 1; k <= 4; ++k) {
            Scalar qk = pow_int(q, k);
            Scalar M1 = Scalar(1) - b * qk, M2 = c - qk;
            Scalar R = M1 / M2, Rinv = M2 / M1;
            // (q^-k;q)_k = (-1)^k q^{-k(k+1)/2} (q;q)_k collapses the general form
            Scalar expect = pow_int(R, k) * qk * Scalar(sign_pow(k)) *
                            inv(qpow_binom2(q, k + 1)) * qp_finite(q, q, k) *
                            qp_finite(a * qk, q, k) * qp_recip(q, q, k) * qp_recip(a * q, q, k) *
                            ((Scalar(1) - Rinv * a * qk) / (Scalar(1) - Rinv * a)) *
                            ((Scalar(1) - R * qk) / (Scalar(1) - R)) * qp_finite(Rinv * a, q, k) *
                            qp_recip(R * q, q, k);
            CHECK(p.f(k, k) == expect);
        }
    }
    SUBCASE("window (0,4) gives the exact Kronecker delta, both orientations") {
        OrthogonalityReport r = verify_orthogonality(p, 0, 4);
        CHECK(r.exact);
    }
    SUBCASE("window (2,2) is the 1x1 identity") {
        OrthogonalityReport r = verify_orthogonality(p, 2, 2);
        CHECK(r.exact);
    }
    SUBCASE("diagonal reciprocity f_kk g_kk = 1") {
        for (long k = 0; k <= 5; ++k) CHECK(p.f(k, k) * p.g(k, k) == Scalar(1));
    }
}

TEST_CASE("second specialized pair (cor2)") {
    Scalar a = rat(1, 3), b = rat(1, 5), c(7), q = rat(1, 2);
    InversePair p = cor2_pair(a, b, c, q);

    SUBCASE("window (0,4) exact delta") {
        OrthogonalityReport r = verify_orthogonality(p, 0, 4);
        CHECK(r.exact);
    }
    SUBCASE("g(k,k) = 1 at random rational contexts") {
        RandomSource rng(5150);
        int done = 0;
        while (done < 3) {
            Scalar aa = Scalar::rational(rng.rational(20, 9));
            Scalar bb = Scalar::rational(rng.rational(20, 9));
            Scalar cc = Scalar::rational(rng.rational(20, 9));
            Scalar qq = Scalar::rational(rng.rational_in(0.1, 0.7));
            try {
                InversePair pp = cor2_pair(aa, bb, cc, qq);
                for (long k = 0; k <= 4; ++k) CHECK(pp.g(k, k) == Scalar(1));
                CHECK(pp.f(3, 3) == Scalar(1));
                ++done;
            } catch (const Error&) {
                continue;
            }
        }
    }
    SUBCASE("sign factor cancels: all-positive context still yields delta") {
        InversePair pp = cor2_pair(rat(2, 5), rat(1, 7), rat(9, 2), rat(1, 3));
        OrthogonalityReport r = verify_orthogonality(pp, 0, 3);
        CHECK(r.exact);
    }
}

TEST_CASE("floating-mode orthogonality stays below 1e-12") {
    RandomSource rng(21);
    InversePair p = make_named_pair("cor1", rng, Mode::floating);
    OrthogonalityReport r = verify_orthogonality(p, 0, 6);
    CHECK_FALSE(r.exact);
    CHECK(r.max_offdiag < 1e-12);
    CHECK(r.diag_dev < 1e-12);
}

TEST_CASE("transfer between the general pair and its first specialization") {
    // f1 = alpha(n) fL beta(k), g1 = gL / (beta(k) alpha(l)); reconstructed
    // empirically via rank-1 cross-ratios and the reciprocal product
    Scalar a = rat(1, 3), b = rat(1, 5), c(7), q = rat(1, 2);
    InversePair base = cor_specialized_kratt(a, b, c, q);
    InversePair spec = cor1_pair(a, b, c, q);
    const long N = 5;
    auto r = [&](long n, long k) { return spec.f(n, k) / base.f(n, k); };
    auto s = [&](long k, long l) { return spec.g(k, l) / base.g(k, l); };
    // anchored reconstruction: alpha(n) = r(n,0), beta(k) = r(N,k)/r(N,0)
    auto alpha = [&](long n) { return r(n, 0); };
    auto beta = [&](long k) { return r(N, k) / r(N, 0); };
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k) CHECK(r(n, k) == alpha(n) * beta(k));
    for (long k = 0; k <= N; ++k)
        for (long l = 0; l <= k; ++l) CHECK(s(k, l) * beta(k) * alpha(l) == Scalar(1));
}

TEST_CASE("transfer between the two specializations") {
    RandomSource rng(333);
    int done = 0;
    while (done < 3) {
        Scalar a = Scalar::rational(rng.rational(15, 7));
        Scalar b = Scalar::rational(rng.rational(15, 7));
        Scalar c = Scalar::rational(rng.rational(15, 7));
        Scalar q = Scalar::rational(rng.rational_in(0.1, 0.7));
        const long N = 4;
        std::vector<std::vector<Scalar>> rv(N + 1), sv(N + 1);
        try {
            InversePair one = cor1_pair(a, b, c, q);
            InversePair two = cor2_pair(a, b, c, q);
            for (long n = 0; n <= N; ++n)
                for (long k = 0; k <= n; ++k) {
                    rv[n].push_back(two.f(n, k) / one.f(n, k));
                    sv[n].push_back(two.g(n, k) / one.g(n, k));
                }
        } catch (const Error&) {
            continue;  // degenerate context (c on the q^k lattice etc.); redraw
        }
        auto alpha = [&](long n) { return rv[n][0]; };
        auto beta = [&](long k) { return rv[N][k] / rv[N][0]; };
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= n; ++k) CHECK(rv[n][k] == alpha(n) * beta(k));
        for (long k = 0; k <= N; ++k)
            for (long l = 0; l <= k; ++l) CHECK(sv[k][l] * beta(k) * alpha(l) == Scalar(1));
        ++done;
    }
}

TEST_CASE("inverse relations round trip exactly") {
    Scalar a = rat(1, 3), b = rat(1, 5), c(7), q = rat(1, 2);
    InversePair p = cor1_pair(a, b, c, q);
    RandomSource rng(777);
    std::vector<Scalar> orig;
    for (int i = 0; i < 7; ++i) orig.push_back(Scalar::rational(rng.rational(30, 11)));
    auto a_of = [&](long k) { return orig[k]; };
    std::vector<Scalar> bvals = apply_inverse_relation(p, a_of, InverseDirection::inv_f, 7);
    auto b_of = [&](long l) { return bvals[l]; };
    std::vector<Scalar> back = apply_inverse_relation(p, b_of, InverseDirection::inv_g, 7);
    for (int i = 0; i < 7; ++i) CHECK(back[i] == orig[i]);
}

TEST_CASE("terminating curious summation reconstructed through the inverse relation") {
    // with a_k = (aq;q)_k/(ad;q)_k (Rinv ad;q)_k/(Rinv aq;q)_k and
    // b_l = (q/d;q)_l/(ad;q)_l (ad)^l, the g-side relation holds exactly
    // (it is the terminating 6phi5) and the f-side reproduces thm_ts termwise
    Scalar a = rat(1, 3), b = rat(1, 5), c(7), q = rat(1, 2), d = rat(2, 3);
    Scalar ad = a * d;
    InversePair pair = cor1_pair(a, b, c, q);

    auto mix_inv = [&](long k) {
        Scalar qk = pow_int(q, k);
        return (c - qk) / (Scalar(1) - b * qk);
    };
    auto a_of = [&](long k) {
        Scalar Rinv = mix_inv(k);
        return qp_finite(a * q, q, k) * qp_recip(ad, q, k) * qp_finite(Rinv * ad, q, k) *
               qp_recip(Rinv * a * q, q, k);
    };
    auto b_of = [&](long l) {
        return qp_finite(q / d, q, l) * qp_recip(ad, q, l) * pow_int(ad, l);
    };

    SUBCASE("g-side relation (the inverted terminating 6phi5) holds exactly") {
        for (long k = 0; k <= 4; ++k) {
            Scalar sum(0);
            for (long l = 0; l <= k; ++l) sum += pair.g(k, l) * b_of(l);
            CHECK(sum == a_of(k));
        }
    }
    SUBCASE("f-side terms equal the curious summand, and the sums agree") {
        const IdentityRecord& rec = record("thm_ts");
        long n = 3;
        ParameterPoint p(Mode::exact, q);
        p.set('a', a).set('b', b).set('c', c).set('d', d).set_int('n', n);
        Scalar sum(0);
        for (long k = 0; k <= n; ++k) {
            Scalar via_pair = pair.f(n, k) * a_of(k);
            CHECK(via_pair == rec.term(p, k).finite);
            sum += via_pair;
        }
        CHECK(sum == b_of(n));
        CHECK(sum == rec.lhs(p, 0).value);
    }
}

TEST_CASE("nonterminating curious summation reconstructed through the rotated relation") {
    // a_n = (-1)^n q^binom(n,2) (q/d;q)_n/(ad;q)_n d^n;
    // b_k = (-1)^k q^binom(k,2) d^k (q/d;q)_k (aq^{1+2k};q)_inf/(ad;q)_inf
    //       (R d;q)_inf/(R q^{1+k};q)_inf   with R = (1-bq^k)/(c-q^k)
    Scalar q = Scalar::real(0.5);
    Scalar a = Scalar::real(0.25), b = Scalar::real(0.2), c = Scalar::real(3.0),
           d = Scalar::real(0.4);
    Scalar ad = a * d;
    double t = 1e-18;
    InversePair pair = cor2_pair(a, b, c, q);

    auto a_of = [&](long n) {
        return Scalar(sign_pow(n)) * qpow_binom2(q, n) * qp_finite(q / d, q, n) *
               qp_recip(ad, q, n) * pow_int(d, n);
    };
    auto b_of = [&](long k) {
        Scalar qk = pow_int(q, k);
        Scalar R = (Scalar(1) - b * qk) / (c - qk);
        return Scalar(sign_pow(k)) * qpow_binom2(q, k) * pow_int(d, k) * qp_finite(q / d, q, k) *
               qp_infinite(a * pow_int(q, 1 + 2 * k), q, t).value /
               qp_infinite(ad, q, t).value * qp_infinite(R * d, q, t).value /
               qp_infinite(R * pow_int(q, 1 + k), q, t).value;
    };

    SUBCASE("rotated f-relation (the nonterminating 5phi5) holds numerically") {
        std::vector<Scalar> bs = apply_inverse_relation(pair, a_of, InverseDirection::rotinv_f, 3);
        for (long k = 0; k < 3; ++k) CHECK(rel_err(bs[k], b_of(k)) < 1e-9);
    }
    SUBCASE("rotated g-relation at l = 0 recovers a_0 = 1 (the curious summation)") {
        std::vector<Scalar> as = apply_inverse_relation(pair, b_of, InverseDirection::rotinv_g, 1);
        CHECK(rel_err(as[0], Scalar::real(1.0)) < 1e-9);
    }
}

TEST_CASE("orthogonality campaign over random contexts") {
    for (const char* name : {"lemma", "cor1", "cor2"}) {
        OrthogonalityCampaign c;
        c.pair = name;
        c.l = 0;
        c.n = 6;
        c.contexts = 5;
        OrthogonalityCampaignReport rep = run_orthogonality_campaign(c);
        INFO(name);
        CHECK(rep.failures == 0);
        CHECK(rep.all_exact);
    }
}

#include <doctest.h>

#include "qpsi/harness.hpp"
#include "test_util.hpp"

using namespace qpsi;
using qpsi::testutil::rat;
using qpsi::testutil::record_residual;
using qpsi::testutil::rel_err;

namespace {

Scalar exact_sum(const IdentityRecord& rec, const ParameterPoint& p) {
    SumPolicy pol;
    pol.exact_window = true;
    return sum_series(rec.series(p), pol).value;
}

ParameterPoint float_point(std::initializer_list<std::pair<char, double>> vals, double q = 0.5) {
    ParameterPoint p(Mode::floating, Scalar::real(q));
    for (auto [sym, v] : vals) p.set(sym, Scalar::real(v));
    return p;
}

}  // namespace

TEST_CASE("Abel's summation") {
    const IdentityRecord& rec = record("abel");
    SUBCASE("a=1, b=2, c=3, n=2: both sides 16, matching a direct 3-term oracle") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(1)).set('b', Scalar(2)).set('c', Scalar(3)).set_int('n', 2);
        // oracle: sum of C(2,k)*1*(1+2k)^{k-1}*(3-2k)^{2-k} for k = 0,1,2
        // k=0: 1 * 1/1 * 9 = 9;  k=1: 2 * 1 * 1 = 2;  k=2: 1 * 5 * 1 = 5
        CHECK(exact_sum(rec, p) == Scalar(9 + 2 + 5));
        CHECK(rec.lhs(p, 0).value == Scalar(16));
    }
    SUBCASE("n = 0 gives 1 = 1") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(2, 3)).set('b', rat(5, 7)).set('c', rat(1, 3)).set_int('n', 0);
        CHECK(exact_sum(rec, p) == pow_int(p.get('a') + p.get('c'), 0));
    }
    SUBCASE("a = 0 is rejected") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(0)).set('b', Scalar(2)).set('c', Scalar(3)).set_int('n', 2);
        CHECK_THROWS_AS(rec.term(p, 0), DegenerateInputError);
        CHECK_FALSE(rec.domain(p, DomainPolicy{}).ok);
    }
}

TEST_CASE("Hagen-Rothe summation") {
    const IdentityRecord& rec = record("hagen_rothe");
    SUBCASE("a=2, b=1, c=3, n=2: C(5,2) = 10 with a direct oracle") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(2)).set('b', Scalar(1)).set('c', Scalar(3)).set_int('n', 2);
        // k=0: 1*C(2,0)C(3,2)=3; k=1: (2/3)C(3,1)C(2,1)=4; k=2: (2/4)C(4,2)C(1,0)=3
        CHECK(exact_sum(rec, p) == Scalar(10));
        CHECK(rec.lhs(p, 0).value == Scalar(10));
    }
    SUBCASE("n = 0") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(3, 4)).set('b', rat(2, 5)).set('c', rat(7, 9)).set_int('n', 0);
        CHECK(exact_sum(rec, p) == Scalar(1));
        CHECK(rec.lhs(p, 0).value == Scalar(1));
    }
}

TEST_CASE("Hagen-Rothe -> Abel large-m probe decays as O(1/m)") {
    Scalar a(1), b(2), c(3);
    SUBCASE("residual ratio across three decades") {
        mpf_class r3 = abel_from_rothe_residual(a, b, c, 3, 1000);
        mpf_class r6 = abel_from_rothe_residual(a, b, c, 3, 1000000);
        double ratio = mpf_class(r3 / r6).get_d();
        CHECK(ratio > 0.9e3);
        CHECK(ratio < 1.1e3);
    }
    SUBCASE("large m limit is within 1e-6") {
        CHECK(abel_from_rothe_residual(a, b, c, 3, 1000000000L).get_d() < 1e-6);
    }
    SUBCASE("n = 0 is exact for every m") {
        CHECK(abel_from_rothe_residual(a, b, c, 0, 10) == 0);
        CHECK(abel_from_rothe_residual(a, b, c, 0, 1000) == 0);
    }
}

TEST_CASE("curious dual of Pfaff-Saalschutz") {
    const IdentityRecord& rec = record("curious_ps");
    SUBCASE("n = 0") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(1)).set('b', Scalar(1)).set('c', rat(1, 2)).set_int('n', 0);
        CHECK(exact_sum(rec, p) == Scalar(1));
        CHECK(rec.lhs(p, 0).value == Scalar(1));
    }
    SUBCASE("n = 1 exact at a=1, b=1, c=1/2") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(1)).set('b', Scalar(1)).set('c', rat(1, 2)).set_int('n', 1);
        CHECK(rec.lhs(p, 0).value == exact_sum(rec, p));
    }
    SUBCASE("boundary b = -(a-c)a still verifies exactly at n = 2") {
        Scalar a(1), c = rat(1, 3);
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', a).set('b', -(a - c) * a).set('c', c).set_int('n', 2);
        CHECK(rec.lhs(p, 0).value == exact_sum(rec, p));
        // every k >= 1 term vanishes through the first mixing ratio
        CHECK(rec.term(p, 1).finite.is_zero());
        CHECK(rec.term(p, 2).finite.is_zero());
    }
}

TEST_CASE("curious dual of q-Pfaff-Saalschutz") {
    const IdentityRecord& rec = record("curious_qps");
    SUBCASE("n = 0") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(3)).set('b', rat(1, 3)).set('c', rat(1, 5)).set_int('n', 0);
        CHECK(exact_sum(rec, p) == Scalar(1));
    }
    SUBCASE("n = 2 exact (a = 3 keeps a off the q^-k lattice)") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', Scalar(3)).set('b', rat(1, 3)).set('c', rat(1, 5)).set_int('n', 2);
        CHECK(rec.lhs(p, 0).value == exact_sum(rec, p));
    }
}

TEST_CASE("nonterminating curious dual of q-Gauss") {
    const IdentityRecord& rec = record("curious_nt");
    SUBCASE("b = 0 gives 1 on both sides") {
        ParameterPoint p = float_point({{'a', 1.0 / 3}, {'b', 0.0}, {'c', 5.0}});
        CHECK(rec.lhs(p, 1e-14).value == Scalar(1).to_float());
        SumPolicy pol;
        SumResult r = sum_series(rec.series(p), pol);
        CHECK(rel_err(r.value, Scalar::real(1.0)) < 1e-12);
    }
    SUBCASE("residual at a=1/3, b=1/2, c=5") {
        ParameterPoint p = float_point({{'a', 1.0 / 3}, {'b', 0.5}, {'c', 5.0}});
        REQUIRE(rec.domain(p, DomainPolicy{}).ok);
        CHECK(record_residual(rec, p) < 1e-10);
    }
    SUBCASE("b = q^-1 violates |bq| < 1") {
        ParameterPoint p = float_point({{'a', 1.0 / 3}, {'b', 2.0}, {'c', 5.0}});
        CHECK_FALSE(rec.domain(p, DomainPolicy{}).ok);
    }
}

TEST_CASE("curious terminating summation") {
    const IdentityRecord& rec = record("thm_ts");
    SUBCASE("n = 0") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(1, 3)).set('b', rat(1, 5)).set('c', Scalar(7)).set('d', Scalar(2));
        p.set_int('n', 0);
        CHECK(rec.lhs(p, 0).value == Scalar(1));
        CHECK(exact_sum(rec, p) == Scalar(1));
    }
    SUBCASE("n = 3 exact at fixed rationals") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(1, 3)).set('b', rat(1, 5)).set('c', Scalar(7)).set('d', Scalar(2));
        p.set_int('n', 3);
        CHECK(rec.lhs(p, 0).value == exact_sum(rec, p));
    }
    SUBCASE("c = 1/b termwise matches the q-Pfaff-Saalschutz summand") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(1, 3)).set('b', rat(1, 5)).set('c', Scalar(7)).set('d', rat(2, 3));
        p.set_int('n', 4);
        const Degeneration& link = rec.degenerations.at(0);
        std::string why;
        CHECK(degeneration_termwise_check(rec, link, link.impose(p), &why));
        INFO(why);
    }
}

TEST_CASE("curious nonterminating summation") {
    const IdentityRecord& rec = record("thm_tns");
    SUBCASE("d = q collapses the series to its k = 0 term") {
        ParameterPoint p = float_point({{'a', 0.25}, {'b', 1.0 / 3}, {'c', 4.0}});
        p.set('d', p.q());
        CHECK(rec.summand(p, 1).is_zero());
        CHECK(rec.summand(p, 3).is_zero());
        Scalar one(1);
        Scalar expect = inv(one.to_float() - p.get('b') + p.get('a') * (one - p.get('c')));
        CHECK(rel_err(rec.summand(p, 0), expect) < 1e-12);
        CHECK(rel_err(rec.lhs(p, 1e-14).value, expect) < 1e-12);
    }
    SUBCASE("a = 0 residual at a reference point") {
        ParameterPoint p = float_point({{'a', 0.0}, {'b', 1.0 / 3}, {'c', 4.0}, {'d', 0.5}});
        REQUIRE(rec.domain(p, DomainPolicy{}).ok);
        CHECK(record_residual(rec, p) < 1e-10);
    }
    SUBCASE("c = 1/b termwise matches the q-Gauss summand") {
        ParameterPoint p(Mode::exact, rat(1, 2));
        p.set('a', rat(1, 4)).set('b', rat(1, 5)).set('c', Scalar(5)).set('d', rat(1, 3));
        const Degeneration& link = rec.degenerations.at(0);
        std::string why;
        CHECK(degeneration_termwise_check(rec, link, link.impose(p), &why));
        INFO(why);
    }
}

TEST_CASE("contiguous curious nonterminating summation") {
    const IdentityRecord& rec = record("thm_tnsc");
    SUBCASE("d = 1 collapses the series to its k = 0 term") {
        ParameterPoint p = float_point({{'a', 0.25}, {'b', 1.0 / 3}, {'c', 4.0}, {'d', 1.0}});
        CHECK(rec.summand(p, 1).is_zero());
        Scalar expect = inv(p.get('c') - Scalar(1));
        CHECK(rel_err(rec.summand(p, 0), expect) < 1e-12);
        CHECK(rel_err(rec.lhs(p, 1e-14).value, expect) < 1e-12);
    }
    SUBCASE("a = 0 residual at a reference point") {
        ParameterPoint p = float_point({{'a', 0.0}, {'b', 1.0 / 3}, {'c', 4.0}, {'d', 0.5}});
        REQUIRE(rec.domain(p, DomainPolicy{}).ok);
        CHECK(record_residual(rec, p) < 1e-10);
    }
}

TEST_CASE("curious bilateral extension (thm_bns)") {
    const IdentityRecord& rec = record("thm_bns");
    SUBCASE("residual at a reference point") {
        // c stays off the q^k lattice (4 = q^-2 at q = 1/2 is excluded)
        ParameterPoint p =
            float_point({{'b', 0.2}, {'c', 5.0}, {'d', 1.0 / 3}, {'e', 0.1}});
        REQUIRE(rec.domain(p, DomainPolicy{}).ok);
        CHECK(record_residual(rec, p) < 1e-10);
    }
    SUBCASE("e = q^l chain: bilateral sum = shifted unilateral sum = closed form") {
        for (long l : {0L, 2L}) {
            ParameterPoint p = float_point({{'b', 0.2}, {'c', 5.0}, {'d', 1.0 / 3}});
            p.set('e', pow_int(p.q(), l));
            SumPolicy pol;
            pol.tol = 1e-12;
            pol.term_rel_err = 1e-17;
            SumResult bilateral = sum_series(rec.series(p, 1e-18), pol);
            Scalar shifted = thm_bns_shifted_unilateral(p, l, 1e-12);
            Scalar lhs = rec.lhs(p, 1e-14).value;
            INFO("l = ", l);
            CHECK(rel_err(bilateral.value, shifted) < 1e-9);
            CHECK(rel_err(shifted, lhs) < 1e-9);
            // terms below k = -l vanish
            CHECK(rec.summand(p, -l - 1, 1e-18).is_zero());
        }
    }
}

TEST_CASE("contiguous curious bilateral extension (thm_bnsc)") {
    const IdentityRecord& rec = record("thm_bnsc");
    SUBCASE("residual at a reference point") {
        // c stays off the q^k lattice (4 = q^-2 at q = 1/2 is excluded)
        ParameterPoint p =
            float_point({{'b', 0.2}, {'c', 5.0}, {'d', 1.0 / 3}, {'e', 0.1}});
        REQUIRE(rec.domain(p, DomainPolicy{}).ok);
        CHECK(record_residual(rec, p) < 1e-10);
    }
    SUBCASE("c = 1/b matched-point equality with the 1psi1 closed form") {
        // at c = 1/b both sides equal b (bdq;q) (eq/b;q) / ((b;q)(q/b;q)) times
        // the 1psi1 sum at (a, b, z) = (1/d, eq, bd)
        Scalar q = Scalar::real(0.5);
        Scalar b = Scalar::real(0.4), d = Scalar::real(0.35), e = Scalar::real(0.15);
        ParameterPoint p(Mode::floating, q);
        p.set('b', b).set('c', inv(b)).set('d', d).set('e', e);
        Scalar lhs = rec.lhs(p, 1e-15).value;
        const IdentityRecord& ram = record("1psi1");
        ParameterPoint rp(Mode::floating, q);
        rp.set('a', inv(d)).set('b', e * q).set('z', b * d);
        Scalar ram_lhs = ram.lhs(rp, 1e-15).value;
        double t = 1e-15;
        Scalar kappa = b * qp_infinite(b * d * q, q, t).value *
                       qp_infinite(e * q / b, q, t).value /
                       (qp_infinite(b, q, t).value * qp_infinite(q / b, q, t).value);
        CHECK(rel_err(lhs, kappa * ram_lhs) < 1e-10);
        // and the bilateral series itself still verifies at this point
        if (rec.domain(p, DomainPolicy{}).ok) CHECK(record_residual(rec, p) < 1e-9);
    }
}

TEST_CASE("large-parameter limit probes toward the very-well-poised summations") {
    SUBCASE("thm_ts -> 65s in exact arithmetic") {
        mpf_class d1 = vwp_limit_probe("thm_ts", 1000000L, Mode::exact);
        mpf_class d2 = vwp_limit_probe("thm_ts", 2000000L, Mode::exact);
        double twice = 2 * mpf_class(d2 / d1).get_d();
        CHECK(twice > 0.9);
        CHECK(twice < 1.1);
    }
    SUBCASE("floating probes decay at O(1/B)") {
        for (const char* src : {"thm_tns", "thm_tnsc", "thm_bns", "thm_bnsc"}) {
            mpf_class d1 = vwp_limit_probe(src, 500000L, Mode::floating);
            mpf_class d2 = vwp_limit_probe(src, 1000000L, Mode::floating);
            double twice = 2 * mpf_class(d2 / d1).get_d();
            INFO(src);
            CHECK(twice > 0.9);
            CHECK(twice < 1.1);
        }
    }
    SUBCASE("mismatched target is rejected") {
        CHECK_THROWS_AS(
            vwp_limit_probe(record("thm_ts"), record("46s"), 1000,
                            vwp_probe_base("thm_ts", Mode::exact)),
            Error);
    }
}

TEST_CASE("exactness invariant: curious terminating identities at many rational points") {
    for (const char* id : {"thm_ts", "curious_ps", "curious_qps", "abel", "hagen_rothe"}) {
        SampleSpec spec;
        spec.id = id;
        spec.count = 10;
        spec.seed = 31;
        spec.mode = Mode::exact;
        VerificationReport rep = verify(spec);
        INFO(id);
        CHECK(rep.pass);
        CHECK(rep.max_rel_residual == 0.0);
    }
}

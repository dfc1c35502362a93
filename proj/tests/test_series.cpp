#include <doctest.h>

#include "qpsi/series.hpp"
#include "test_util.hpp"

using namespace qpsi;
using qpsi::testutil::rat;
using qpsi::testutil::rel_err;

TEST_CASE("bilateral delta summand sums to 1") {
    TermSeries s;
    s.kind = SeriesKind::bilateral;
    s.summand = [](long k) { return k == 0 ? Scalar::real(1.0) : Scalar::real(0.0); };
    SumPolicy pol;
    SumResult r = sum_series(s, pol);
    CHECK(r.value == Scalar::real(1.0));
    CHECK(r.tail_bound.get_d() < 1e-12);
}

TEST_CASE("geometric series z = 1/2 sums to 2 within its own bound") {
    TermSeries s;
    s.kind = SeriesKind::unilateral;
    s.summand = [](long k) { return pow_int(Scalar::real(0.5), k); };
    SumPolicy pol;
    pol.tol = 1e-13;
    SumResult r = sum_series(s, pol);
    mpf_class dev = mag(r.value - Scalar::real(2.0));
    CHECK(dev <= r.tail_bound);
    CHECK(rel_err(r.value, Scalar::real(2.0)) < 1e-12);
}

TEST_CASE("divergent geometric series raises NonconvergenceError") {
    TermSeries s;
    s.kind = SeriesKind::unilateral;
    s.summand = [](long k) { return pow_int(Scalar::real(1.3), k); };
    SumPolicy pol;
    pol.k_cap = 2000;
    CHECK_THROWS_AS(sum_series(s, pol), NonconvergenceError);
}

TEST_CASE("terminating sum is independent of the truncation policy") {
    // (q^-n;q)_k-style summand vanishes identically past n
    const IdentityRecord& rec = record("qps");
    ParameterPoint p(Mode::floating, Scalar::real(0.5));
    p.set('a', Scalar::real(0.5)).set('b', Scalar::real(1.0 / 3)).set('c', Scalar::real(0.2));
    p.set_int('n', 5);

    TermSeries s = rec.series(p);
    SumPolicy exact_pol;
    exact_pol.exact_window = true;
    SumResult rw = sum_series(s, exact_pol);

    TermSeries s2 = rec.series(p);
    s2.kind = SeriesKind::unilateral;  // force the adaptive engine past n
    SumPolicy apol;
    SumResult ra = sum_series(s2, apol);

    CHECK(rel_err(rw.value, ra.value) < 1e-20);
}

TEST_CASE("adaptive summation requires floating mode") {
    TermSeries s;
    s.kind = SeriesKind::unilateral;
    s.summand = [](long k) { return pow_int(rat(1, 2), k); };
    SumPolicy pol;
    CHECK_THROWS_AS(sum_series(s, pol), ModeError);
}

TEST_CASE("1psi1 series matches the closed form at a = 1/3, b = q^2 a, z = 1/2") {
    const IdentityRecord& rec = record("1psi1");
    ParameterPoint p(Mode::floating, Scalar::real(0.5));
    Scalar a = Scalar::real(1.0 / 3);
    p.set('a', a).set('b', a * Scalar::real(0.25)).set('z', Scalar::real(0.5));
    CHECK(rec.domain(p, DomainPolicy{}).ok);
    CHECK(qpsi::testutil::record_residual(rec, p) < 1e-11);
}

TEST_CASE("exact and floating evaluations of the same finite expression agree") {
    const IdentityRecord& rec = record("qps");
    ParameterPoint pe(Mode::exact, rat(2, 5));
    pe.set('a', rat(1, 2)).set('b', rat(1, 3)).set('c', rat(1, 5)).set_int('n', 6);
    ParameterPoint pf = pe.to_float();

    Scalar le = rec.lhs(pe, 0).value;
    Scalar lf = rec.lhs(pf, 0).value;
    double tol = 10 * std::pow(10.0, -precision_digits());
    CHECK(rel_err(le.to_float(), lf) < tol);

    SumPolicy pol;
    pol.exact_window = true;
    Scalar se = sum_series(rec.series(pe), pol).value;
    Scalar sf = sum_series(rec.series(pf), pol).value;
    CHECK(se == le);  // exact identity
    CHECK(rel_err(se.to_float(), sf) < tol);
}

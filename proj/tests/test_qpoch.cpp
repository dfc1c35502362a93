#include <doctest.h>

#include "qpsi/qpoch.hpp"
#include "qpsi/random.hpp"
#include "test_util.hpp"

using namespace qpsi;
using qpsi::testutil::rat;

TEST_CASE("finite q-shifted factorial, small cases") {
    Scalar q = rat(1, 4);
    CHECK(qp_finite(rat(7, 3), q, 0) == Scalar(1));  // empty product
    CHECK(qp_finite(rat(1, 2), q, 1) == rat(1, 2));  // 1 - a
    // negative index via the infinite-product quotient:
    // (1/2;1/4)_{-1} = 1/(1 - (1/2)(1/4)^-1) = 1/(1-2) = -1
    CHECK(qp_finite(rat(1, 2), q, -1) == Scalar(-1));
}

TEST_CASE("negative-index pole") {
    // (a;q)_{-1} with a = q has the vanishing factor 1 - a/q
    CHECK_THROWS_AS(qp_finite(rat(1, 2), rat(1, 2), -1), PoleError);
    // reciprocal form is the plain product and may be zero
    CHECK(qp_recip(rat(1, 2), rat(1, 2), -1) == Scalar(0));
    CHECK_THROWS_AS(qp_recip(Scalar(1), rat(1, 2), 3), PoleError);  // (1;q)_3 = 0
}

TEST_CASE("splitting law (a;q)_{j+k} = (a;q)_j (aq^j;q)_k on random rationals") {
    RandomSource rng(20240811);
    int done = 0;
    while (done < 50) {
        Scalar a = Scalar::rational(rng.rational(30, 11));
        Scalar q = Scalar::rational(rng.rational_in(0.1, 0.7));
        long j = rng.range(-6, 6), k = rng.range(-6, 6);
        try {
            Scalar lhs = qp_finite(a, q, j + k);
            Scalar rhs = qp_finite(a, q, j) * qp_finite(a * pow_int(q, j), q, k);
            CHECK(lhs == rhs);
            ++done;
        } catch (const PoleError&) {
            continue;
        }
    }
}

TEST_CASE("infinite product with certified tail") {
    Scalar q = Scalar::real(0.5);

    SUBCASE("a = 0 gives 1 with zero tail") {
        QPochResult r = qp_infinite(Scalar(0), q, 1e-20);
        CHECK(r.value == Scalar(1).to_float());
        CHECK(r.tail_bound == 0);
    }
    SUBCASE("a = 1 vanishes at the first factor") {
        QPochResult r = qp_infinite(Scalar(1).to_float(), q, 1e-20);
        CHECK(r.value.is_zero());
        CHECK(r.tail_bound == 0);
    }
    SUBCASE("(1/2;1/2)_inf against a direct 200-factor product") {
        // independent oracle: plain loop, no tail machinery
        mpf_class oracle(1);
        mpf_class x(0.5);
        for (int j = 0; j < 200; ++j) {
            oracle *= (1 - x);
            x /= 2;
        }
        QPochResult r = qp_infinite(Scalar::real(0.5), q, 1e-18);
        mpf_class dev = abs(mpf_class(r.value.cf().re - oracle));
        CHECK(dev.get_d() <= r.tail_bound.get_d() + 1e-25);
        CHECK(std::abs(r.value.to_double() - 0.2887880951) < 1e-9);
        CHECK(r.tail_bound < mpf_class(1e-18 * mag(r.value) + 1e-40));
    }
    SUBCASE("mode and convergence guards") {
        CHECK_THROWS_AS(qp_infinite(rat(1, 2), rat(1, 2), 1e-10), ModeError);
        CHECK_THROWS_AS(qp_infinite(Scalar::real(0.5), Scalar::real(1.5), 1e-10),
                        NonconvergenceError);
    }
}

TEST_CASE("finite times shifted-infinite equals infinite, k in [-6,6]") {
    Scalar a = Scalar::real(0.3), q = Scalar::real(0.45);
    QPochResult whole = qp_infinite(a, q, 1e-22);
    for (long k = -6; k <= 6; ++k) {
        Scalar fin = qp_finite(a, q, k);
        QPochResult rest = qp_infinite(a * pow_int(q, k), q, 1e-22);
        mpf_class dev = mag(fin * rest.value - whole.value);
        mpf_class budget = whole.tail_bound + rest.tail_bound * mag(fin) + mpf_class(1e-24);
        CHECK(dev <= budget);
    }
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(rat(7, 5), 0) == Scalar(1));
    CHECK(rising_factorial(Scalar(3), 3) == Scalar(60));   // 3*4*5
    CHECK(rising_factorial(Scalar(-2), 4) == Scalar(0));   // hits a+2 = 0
    CHECK(rising_factorial(rat(1, 2), 2) == rat(3, 4));    // (1/2)(3/2)
}

TEST_CASE("generalized binomial coefficient") {
    CHECK(binomial_coeff(rat(9, 7), 0) == Scalar(1));
    CHECK(binomial_coeff(Scalar(5), 2) == Scalar(10));
    // oracle: (1/2)(1/2 - 1)/2! = -1/8 in exact rationals
    Scalar oracle = rat(1, 2) * (rat(1, 2) - Scalar(1)) / Scalar(2);
    CHECK(binomial_coeff(rat(1, 2), 2) == oracle);
    CHECK(oracle == rat(-1, 8));
}

TEST_CASE("pole-margin scan floor") {
    // (a;q) with a = 1 has a vanishing first factor
    CHECK(min_infprod_factor(Scalar(1), rat(1, 2)) == 0);
    // all factors comfortably away from zero
    mpf_class m = min_infprod_factor(rat(1, 3), rat(1, 2));
    CHECK(m.get_d() >= 0.5);
}

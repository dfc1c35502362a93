#include <doctest.h>

#include "qpsi/scalar.hpp"

using namespace qpsi;

TEST_CASE("exact rational arithmetic is closed and canonical") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a.rat() == mpq_class(1, 2));
    Scalar b = Scalar::rational(1, 3);
    CHECK((a + b).rat() == mpq_class(5, 6));
    CHECK((a * b).rat() == mpq_class(1, 6));
    CHECK((a - b).rat() == mpq_class(1, 6));
    CHECK((a / b).rat() == mpq_class(3, 2));
    CHECK((a + b).mode() == Mode::exact);
}

TEST_CASE("division by zero is an error, never a NaN-like value") {
    Scalar a = Scalar::rational(1, 2);
    CHECK_THROWS_AS(a / Scalar(0), DivisionByZeroError);
    CHECK_THROWS_AS(inv(Scalar(0)), DivisionByZeroError);
    CHECK_THROWS_AS(a / Scalar::real(0.0), DivisionByZeroError);
    CHECK_THROWS_AS(pow_int(Scalar(0), -1), DivisionByZeroError);
}

TEST_CASE("complex floating arithmetic") {
    Scalar i = Scalar::complex(0, 1);
    Scalar z = i * i;
    CHECK(z.to_double() == -1.0);
    CHECK(z.to_double_im() == 0.0);
    Scalar w = Scalar::complex(3, 4);
    CHECK(mpf_class(mag(w) - 5).get_d() == doctest::Approx(0.0));
    Scalar u = w / w;
    CHECK(u.to_double() == doctest::Approx(1.0));
    CHECK(u.to_double_im() == doctest::Approx(0.0));
}

TEST_CASE("mixed-mode operations promote to floating") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::real(0.5);
    CHECK((a + b).mode() == Mode::floating);
    CHECK((a * b).mode() == Mode::floating);
    CHECK((a + b).to_double() == doctest::Approx(1.0 / 3 + 0.5));
}

TEST_CASE("integer powers, including negative exponents") {
    Scalar q = Scalar::rational(1, 2);
    CHECK(pow_int(q, 3) == Scalar::rational(1, 8));
    CHECK(pow_int(q, -3) == Scalar(8));
    CHECK(pow_int(q, 0) == Scalar(1));
    CHECK(pow_int(Scalar(0), 0) == Scalar(1));
    // q^binom(k,2) stays a nonnegative power for negative k
    CHECK(qpow_binom2(q, -3) == Scalar::rational(1, 64));  // binom(-3,2) = 6
    CHECK(qpow_binom2(q, 4) == Scalar::rational(1, 64));
    CHECK(qpow_binom2(q, 0) == Scalar(1));
    CHECK(qpow_binom2(q, 1) == Scalar(1));
}

TEST_CASE("precision floor is enforced") {
    CHECK_THROWS_AS(set_precision_digits(10), ModeError);
    CHECK(precision_digits() >= 15);
}

TEST_CASE("structural equality distinguishes modes") {
    CHECK(Scalar::rational(1, 2) == Scalar::rational(2, 4));
    CHECK(Scalar::rational(1, 2) != Scalar::real(0.5));
    CHECK(Scalar::rational(1, 2).to_float() == Scalar::real(0.5));
}

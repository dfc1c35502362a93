// Scalar value type: exact rationals or complex floating point at a
// configurable working precision, behind one arithmetic interface.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace qpsi {

enum class Mode { exact, floating };

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : Error {
    using Error::Error;
};
struct DegenerateInputError : Error {
    using Error::Error;
};
struct NonconvergenceError : Error {
    using Error::Error;
};
struct ModeError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct SamplingExhaustedError : Error {
    using Error::Error;
};

// Working precision for floating mode. Must be set before the first
// floating computation; minimum 15 digits.
void set_precision_digits(int digits);
int precision_digits();

// Complex number over mpf at the current working precision.
struct Cplx {
    mpf_class re;
    mpf_class im;

    Cplx() : re(0), im(0) {}
    Cplx(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(long n) : v_(mpq_class(n)) {}  // NOLINT: implicit, so integer literals read naturally in summands
    Scalar(int n) : v_(mpq_class(n)) {}   // NOLINT

    static Scalar rational(long num, long den);
    static Scalar rational(const mpq_class& q);
    static Scalar real(double x);
    static Scalar complex(double re, double im);
    static Scalar floating(const mpf_class& re, const mpf_class& im);

    Mode mode() const { return std::holds_alternative<mpq_class>(v_) ? Mode::exact : Mode::floating; }
    bool is_exact() const { return mode() == Mode::exact; }

    const mpq_class& rat() const;
    const Cplx& cf() const;

    Scalar to_float() const;
    Scalar to_mode(Mode m) const { return m == Mode::floating ? to_float() : *this; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Exact structural equality (same mode, same value bits).
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    double to_double() const;     // real part
    double to_double_im() const;  // imaginary part (0 in exact mode)
    std::string str() const;      // "num/den" or "(re,im)"

private:
    std::variant<mpq_class, Cplx> v_;
};

// |x| at working precision (exact values converted).
mpf_class mag(const Scalar& x);

// Multiplicative inverse; throws DivisionByZeroError on zero.
Scalar inv(const Scalar& x);

// x^e for any integer e (negative inverts; 0^0 = 1).
Scalar pow_int(const Scalar& x, long e);

// q^(k(k-1)/2); the exponent is a nonnegative integer for every integer k.
Scalar qpow_binom2(const Scalar& q, long k);

// (-1)^k.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace qpsi

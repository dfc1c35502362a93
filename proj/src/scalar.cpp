#include "qpsi/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qpsi {

namespace {
int g_digits = 30;
}

void set_precision_digits(int digits) {
    if (digits < 15) throw ModeError("precision_digits must be >= 15");
    g_digits = digits;
    // bits ~ digits * log2(10), plus headroom for intermediate rounding
    auto bits = static_cast<mp_bitcnt_t>(digits * 3.3219280948873626) + 32;
    mpf_set_default_prec(bits);
}

int precision_digits() { return g_digits; }

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    Scalar s;
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.v_ = q;
    return s;
}

Scalar Scalar::real(double x) {
    Scalar s;
    s.v_ = Cplx(mpf_class(x), mpf_class(0));
    return s;
}

Scalar Scalar::complex(double re, double im) {
    Scalar s;
    s.v_ = Cplx(mpf_class(re), mpf_class(im));
    return s;
}

Scalar Scalar::floating(const mpf_class& re, const mpf_class& im) {
    Scalar s;
    s.v_ = Cplx(re, im);
    return s;
}

const mpq_class& Scalar::rat() const {
    if (mode() != Mode::exact) throw ModeError("rat() on floating scalar");
    return std::get<mpq_class>(v_);
}

const Cplx& Scalar::cf() const {
    if (mode() != Mode::floating) throw ModeError("cf() on exact scalar");
    return std::get<Cplx>(v_);
}

Scalar Scalar::to_float() const {
    if (mode() == Mode::floating) return *this;
    const auto& q = std::get<mpq_class>(v_);
    Scalar s;
    s.v_ = Cplx(mpf_class(q), mpf_class(0));
    return s;
}

bool Scalar::is_zero() const {
    if (mode() == Mode::exact) return std::get<mpq_class>(v_) == 0;
    const auto& c = std::get<Cplx>(v_);
    return c.re == 0 && c.im == 0;
}

bool Scalar::is_one() const {
    if (mode() == Mode::exact) return std::get<mpq_class>(v_) == 1;
    const auto& c = std::get<Cplx>(v_);
    return c.re == 1 && c.im == 0;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (s.mode() == Mode::exact) {
        std::get<mpq_class>(s.v_) = -std::get<mpq_class>(s.v_);
    } else {
        auto& c = std::get<Cplx>(s.v_);
        c.re = -c.re;
        c.im = -c.im;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (mode() == Mode::exact && o.mode() == Mode::exact) {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
        return *this;
    }
    Scalar a = to_float(), b = o.to_float();
    Cplx r(a.cf().re + b.cf().re, a.cf().im + b.cf().im);
    v_ = std::move(r);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (mode() == Mode::exact && o.mode() == Mode::exact) {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
        return *this;
    }
    Scalar a = to_float(), b = o.to_float();
    const Cplx &x = a.cf(), &y = b.cf();
    Cplx r(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    v_ = std::move(r);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    if (mode() == Mode::exact && o.mode() == Mode::exact) {
        std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
        return *this;
    }
    Scalar a = to_float(), b = o.to_float();
    const Cplx &x = a.cf(), &y = b.cf();
    mpf_class d = y.re * y.re + y.im * y.im;
    Cplx r((x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d);
    v_ = std::move(r);
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode() != o.mode()) return false;
    if (mode() == Mode::exact) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    const auto &a = std::get<Cplx>(v_), &b = std::get<Cplx>(o.v_);
    return a.re == b.re && a.im == b.im;
}

double Scalar::to_double() const {
    if (mode() == Mode::exact) return std::get<mpq_class>(v_).get_d();
    return std::get<Cplx>(v_).re.get_d();
}

double Scalar::to_double_im() const {
    if (mode() == Mode::exact) return 0.0;
    return std::get<Cplx>(v_).im.get_d();
}

std::string Scalar::str() const {
    if (mode() == Mode::exact) return std::get<mpq_class>(v_).get_str();
    std::ostringstream os;
    os << "(" << to_double() << "," << to_double_im() << ")";
    return os.str();
}

mpf_class mag(const Scalar& x) {
    if (x.mode() == Mode::exact) {
        mpf_class f(x.rat());
        return abs(f);
    }
    const Cplx& c = x.cf();
    if (c.im == 0) return abs(c.re);
    if (c.re == 0) return abs(c.im);
    mpf_class s = c.re * c.re + c.im * c.im;
    return sqrt(s);
}

Scalar inv(const Scalar& x) {
    if (x.is_zero()) throw DivisionByZeroError("inverse of zero");
    return Scalar(1) / x;
}

Scalar pow_int(const Scalar& x, long e) {
    if (e == 0) return Scalar(1).to_mode(x.mode());
    if (e < 0) return inv(pow_int(x, -e));
    Scalar base = x, acc = Scalar(1);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Scalar qpow_binom2(const Scalar& q, long k) {
    // k(k-1)/2 >= 0 for all integers k
    long e = k * (k - 1) / 2;
    return pow_int(q, e);
}

}  // namespace qpsi

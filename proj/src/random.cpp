#include "qpsi/random.hpp"

namespace qpsi {

long RandomSource::range(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection keeps the draw unbiased
    std::uint64_t limit = (~std::uint64_t{0} / span) * span;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return lo + static_cast<long>(v % span);
}

mpq_class RandomSource::rational(long max_num, long max_den) {
    long num = range(1, max_num);
    long den = range(1, max_den);
    if (chance(1, 2)) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class RandomSource::rational_in(double lo, double hi) {
    const long grid = 512;
    long a = static_cast<long>(lo * grid) + 1;
    long b = static_cast<long>(hi * grid);
    if (b < a) b = a;
    mpq_class q(range(a, b), grid);
    q.canonicalize();
    return q;
}

Scalar RandomSource::with_modulus(Mode mode, const mpq_class& modulus, bool allow_complex,
                                  bool allow_negative) {
    if (mode == Mode::exact || !allow_complex || chance(1, 2)) {
        mpq_class v = modulus;
        if (allow_negative && chance(1, 5)) v = -v;
        return Scalar::rational(v).to_mode(mode);
    }
    // rational point on the unit circle from t = tan(theta/2)
    mpq_class t(range(-64, 64), 64);
    mpq_class denom = 1 + t * t;
    mpq_class c = (1 - t * t) / denom;
    mpq_class s = 2 * t / denom;
    Scalar re = Scalar::rational(modulus * c).to_float();
    Scalar im = Scalar::rational(modulus * s).to_float();
    return Scalar::floating(re.cf().re, im.cf().re);
}

}  // namespace qpsi

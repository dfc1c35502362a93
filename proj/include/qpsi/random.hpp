// Deterministic random draws for parameter sampling. All draws are derived
// from raw mt19937_64 output (no distribution objects), so a fixed seed
// yields the same sequence on every platform.
#pragma once

#include <cstdint>
#include <random>

#include "qpsi/scalar.hpp"

namespace qpsi {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // uniform integer in [lo, hi]
    long range(long lo, long hi);

    bool chance(int num, int den) { return range(1, den) <= num; }

    // nonzero rational with numerator in [-max_num, max_num], denominator in [1, max_den]
    mpq_class rational(long max_num = 60, long max_den = 60);

    // rational approximately uniform in [lo, hi] (on a grid of 1/512)
    mpq_class rational_in(double lo, double hi);

    // Scalar of the requested mode with |value| = modulus; floating mode may
    // rotate by a rational point on the unit circle (cos,sin) = ((1-t^2), 2t)/(1+t^2).
    Scalar with_modulus(Mode mode, const mpq_class& modulus, bool allow_complex, bool allow_negative);

private:
    std::mt19937_64 eng_;
};

}  // namespace qpsi

// A named assignment of values to the base q and the identity parameters
// a, b, c, d, e, z plus integer parameters such as n.
#pragma once

#include <map>
#include <optional>

#include "qpsi/scalar.hpp"

namespace qpsi {

class ParameterPoint {
public:
    ParameterPoint(Mode mode, Scalar q);

    ParameterPoint& set(char sym, Scalar v);
    ParameterPoint& set_int(char sym, long v);
    // Stores sqrt_a and derives a := sqrt_a^2, so the two are consistent by
    // construction (square roots are never computed).
    ParameterPoint& set_sqrt_a(Scalar s);

    Mode mode() const { return mode_; }
    const Scalar& q() const { return q_; }

    bool has(char sym) const { return vals_.count(sym) != 0; }
    const Scalar& get(char sym) const;
    bool has_int(char sym) const { return ints_.count(sym) != 0; }
    long get_int(char sym) const;
    long n() const { return get_int('n'); }

    const std::optional<Scalar>& sqrt_a() const { return sqrt_a_; }

    ParameterPoint to_float() const;

    const std::map<char, Scalar>& values() const { return vals_; }
    const std::map<char, long>& ints() const { return ints_; }

private:
    Mode mode_;
    Scalar q_;
    std::map<char, Scalar> vals_;
    std::map<char, long> ints_;
    std::optional<Scalar> sqrt_a_;
};

}  // namespace qpsi

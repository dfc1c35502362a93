// q-shifted factorials, rising factorials and generalized binomials.
//
//   (a;q)_k   = prod_{j=0}^{k-1} (1 - a q^j)              k >= 0
//   (a;q)_-m  = 1 / prod_{j=1}^{m} (1 - a q^-j)           m > 0
//   (a;q)_inf = prod_{j>=0} (1 - a q^j)                   |q| < 1
#pragma once

#include "qpsi/scalar.hpp"

namespace qpsi {

struct QPochResult {
    Scalar value;
    mpf_class tail_bound;  // upper bound on |true - value|, 0 when exact
    long terms_used = 0;
};

// (a;q)_k for arbitrary integer k, as a value (numerator use). A vanishing
// factor in the negative-index reciprocal is a pole of (a;q)_k itself.
Scalar qp_finite(const Scalar& a, const Scalar& q, long k);

// 1/(a;q)_k, for denominator use. For k >= 0 a vanishing factor is a pole;
// for k < 0 the reciprocal is the plain product prod_{j=1}^{-k}(1 - a q^-j),
// which may legitimately be zero (the term it multiplies vanishes).
Scalar qp_recip(const Scalar& a, const Scalar& q, long k);

// (a;q)_inf with a certified relative truncation bound. Floating mode only.
QPochResult qp_infinite(const Scalar& a, const Scalar& q, double rel_tol);

// (a)_k = a(a+1)...(a+k-1), k >= 0.
Scalar rising_factorial(const Scalar& a, long k);

// Generalized binomial x(x-1)...(x-k+1)/k!, k >= 0.
Scalar binomial_coeff(const Scalar& x, long k);

// min over j >= 0 of |1 - a q^j|, scanned until |a q^j| < 1/2 (beyond which
// every factor has modulus > 1/2). Used by pole-margin predicates.
mpf_class min_infprod_factor(const Scalar& a, const Scalar& q);

}  // namespace qpsi

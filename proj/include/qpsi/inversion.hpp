// Lower-triangular matrix inverse pairs: the general two-sequence inverse,
// its two q/R-mixed specializations, windowed orthogonality verification and
// inverse-relation application.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpsi/parameter_point.hpp"

namespace qpsi {

struct InversePair {
    std::string name;
    // entries defined for n >= k (resp. k >= l); never evaluated outside
    std::function<Scalar(long n, long k)> f;
    std::function<Scalar(long k, long l)> g;
};

// General inverse pair from sequences (a_j), (c_j) and indeterminate d:
//   f_nk = prod_{j=k}^{n-1} (a_j - d/c_k)(a_j - c_k)
//        / prod_{j=k+1}^{n} (c_j - d/c_k)(c_j - c_k)
//   g_kl = (a_l c_l - d)(a_l - c_l)/((a_k c_k - d)(a_k - c_k))
//        * prod_{j=l+1}^{k} (a_j - d/c_k)(a_j - c_k)
//        / prod_{j=l}^{k-1} (c_j - d/c_k)(c_j - c_k)
InversePair krattenthaler_pair(std::function<Scalar(long)> a_seq, std::function<Scalar(long)> c_seq,
                               Scalar d);

// The two R-mixed specializations (parameters a, b, c and base q); cor2 is
// cor1 with one-index factors transferred between the matrices.
InversePair cor1_pair(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& q);
InversePair cor2_pair(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& q);

// The sequences behind cor1/cor2: a_j = (1-bc)/(1-acq^j), c_j = 1-cq^-j, d = 1-bc.
InversePair cor_specialized_kratt(const Scalar& a, const Scalar& b, const Scalar& c,
                                  const Scalar& q);

struct OrthogonalityReport {
    long l = 0, n = 0;
    mpf_class max_offdiag{0};
    mpf_class diag_dev{0};
    bool exact = false;  // exact mode and exactly delta
};

// sum_{l <= k <= n} f_nk g_kl over every (l', n') inside [l, n], plus the
// dual sum with f and g swapped.
OrthogonalityReport verify_orthogonality(const InversePair& p, long l, long n);

enum class InverseDirection { inv_f, inv_g, rotinv_f, rotinv_g };

// Finite directions: b_n = sum_{k=0..n} f_nk a_k (inv_f) and its inverse
// a_k = sum_{l=0..k} g_kl b_l (inv_g), over indices 0..count-1.
// Rotated directions: b_k = sum_{n >= k} f_nk a_n (rotinv_f),
// a_l = sum_{k >= l} g_kl b_k (rotinv_g); the input sequence must keep
// supplying values until the truncation rule is met (three consecutive
// appended terms each changing the partial sum by < tol/10).
std::vector<Scalar> apply_inverse_relation(const InversePair& p,
                                           const std::function<Scalar(long)>& seq,
                                           InverseDirection dir, long count, double tol = 1e-12,
                                           long tail_cap = 4000);

}  // namespace qpsi

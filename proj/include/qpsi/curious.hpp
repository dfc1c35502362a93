// Probe operations attached to the curious identities: large-parameter
// limit checks toward the very-well-poised summations, the Hagen-Rothe ->
// Abel limit, and the shifted unilateral form behind the bilateral
// extension's e = q^l specialization.
#pragma once

#include "qpsi/identity.hpp"

namespace qpsi {

// | n! * rothe(ma, mb, mc)/m^n - (a+c)^n |, exact rational arithmetic.
// Decays as O(1/m).
mpf_class abel_from_rothe_residual(const Scalar& a, const Scalar& b, const Scalar& c, long n,
                                   long m);

// Max termwise deviation between the source summand at b := B, c := -B/c0
// (normalized by its k = 0 term) and the matched very-well-poised target
// summand (normalized likewise). Decays as O(1/B). The base point supplies
// the remaining parameters; 's' must hold a square root of c0.
mpf_class vwp_limit_probe(const IdentityRecord& source, const IdentityRecord& target, long B,
                          const ParameterPoint& base);

// Convenience: canonical base point for a source id ("thm_ts", "thm_tns",
// "thm_tnsc", "thm_bns", "thm_bnsc").
ParameterPoint vwp_probe_base(const std::string& source_id, Mode mode);
const std::string& vwp_probe_target(const std::string& source_id);
mpf_class vwp_limit_probe(const std::string& source_id, long B, Mode mode);

// The e = q^l case of the bilateral thm_bns right side, rewritten as the
// index-shifted unilateral sum
//   (q;q)_l/(d;q)_l q^-l sum_{k>=0} u_k,
// evaluated adaptively. Point p carries b, c, d and q.
Scalar thm_bns_shifted_unilateral(const ParameterPoint& p, long l, double tol);

}  // namespace qpsi

// IdentityRecord: one summation identity as data — closed form, summand,
// domain predicate, sampler and degeneration links.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qpsi/parameter_point.hpp"
#include "qpsi/qpoch.hpp"
#include "qpsi/random.hpp"
#include "qpsi/series.hpp"

namespace qpsi {

struct DomainPolicy {
    double margin = 0.9;       // cap on every convergence-ratio modulus
    double pole_margin = 1e-6;  // floor on every (1 - X) style factor
};

struct DomainCheck {
    bool ok = true;
    std::string reason;
};

struct LhsResult {
    Scalar value;
    mpf_class tail_bound{0};
};

// A summand term split into an exact-capable finite part and a list of
// (argument, exponent) infinite q-Pochhammer factors. Exact-mode termwise
// comparisons cancel the infinite factors symbolically instead of
// evaluating them.
struct TermFactors {
    Scalar finite;
    std::vector<std::pair<Scalar, int>> inf;  // value *= (arg;q)_inf ^ exp
};

struct Degeneration {
    std::string target_id;
    std::string description;
    // impose the constraint (e.g. c := 1/b) on a source-shaped point
    std::function<ParameterPoint(const ParameterPoint&)> impose;
    // map the constrained source point to the target identity's parameters
    std::function<ParameterPoint(const ParameterPoint&)> to_target;
    long k_lo = 0, k_hi = 8;
    bool identical = false;  // termwise equal with constant exactly 1
};

struct IdentityRecord {
    std::string id;
    std::string title;
    std::string constraint_text;
    std::vector<char> params;
    bool uses_sqrt_a = false;
    bool has_n = false;
    SeriesKind kind = SeriesKind::unilateral;
    bool exact_capable = false;  // both sides finite rational expressions

    std::function<LhsResult(const ParameterPoint&, double rel_tol)> lhs;
    std::function<TermFactors(const ParameterPoint&, long k)> term;
    std::function<DomainCheck(const ParameterPoint&, const DomainPolicy&)> domain;
    std::function<ParameterPoint(RandomSource&, Mode, const DomainPolicy&)> sampler;
    std::vector<Degeneration> degenerations;

    // Summand value; infinite factors evaluated at inf_tol (floating mode).
    Scalar summand(const ParameterPoint& p, long k, double inf_tol = 1e-20) const;
    TermSeries series(const ParameterPoint& p, double inf_tol = 1e-20) const;
};

// Full registry (classical + curious), keyed by stable id.
const std::map<std::string, IdentityRecord>& registry();
const IdentityRecord& record(const std::string& id);

// Evaluate a TermFactors value (floating mode when infinite factors present).
Scalar term_value(const TermFactors& tf, const Scalar& q, double inf_tol);

namespace detail {
void register_classical(std::map<std::string, IdentityRecord>& reg);
void register_curious(std::map<std::string, IdentityRecord>& reg);
}  // namespace detail

}  // namespace qpsi

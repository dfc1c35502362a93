// Randomized and exact verification campaigns over the identity registry.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsi/curious.hpp"
#include "qpsi/identity.hpp"
#include "qpsi/inversion.hpp"

namespace qpsi {

struct SampleSpec {
    std::string id;
    long count = 50;
    std::uint64_t seed = 42;
    Mode mode = Mode::exact;
    double q_lo = 0.1, q_hi = 0.7;  // |q| range
    DomainPolicy domain;             // margin 0.9, pole margin 1e-6
    long reject_cap = 10000;         // attempts per point
};

std::vector<ParameterPoint> sample(const SampleSpec& spec);

struct VerifyOptions {
    double compare_tol = 1e-9;   // float-mode relative residual threshold
    double series_tol = 1e-12;   // adaptive truncation target
    double perturb_rel = 0.0;    // fault injection: summand *= (1 + perturb_rel)
};

enum class SampleStatus { ok, residual_exceeded, pole, degenerate, nonconvergence, error };

struct SampleOutcome {
    ParameterPoint point;
    SampleStatus status = SampleStatus::ok;
    std::string detail;
    Scalar lhs, rhs;
    mpf_class abs_residual{0};
    double rel_residual = 0.0;
    mpf_class lhs_tail{0};
    mpf_class series_tail{0};
    long terms_used = 0;
};

struct VerificationReport {
    std::string id;
    Mode mode = Mode::exact;
    std::uint64_t seed = 0;
    long count = 0;
    double compare_tol = 0, series_tol = 0;
    std::vector<SampleOutcome> samples;
    double max_rel_residual = 0.0;
    std::vector<long> failures;  // indices into samples
    bool pass = true;
};

VerificationReport verify(const SampleSpec& spec, const VerifyOptions& opts = {});

// Termwise degeneration checks (exact cross-ratio with symbolic cancellation
// of the infinite factors).
struct DegenerationOutcome {
    std::string source, target, description;
    bool pass = true;
    std::string detail;
};

bool degeneration_termwise_check(const IdentityRecord& src, const Degeneration& link,
                                 const ParameterPoint& imposed_source_point, std::string* why);
std::vector<DegenerationOutcome> run_degeneration_suite(std::uint64_t seed, long points_per_link = 3);

// Orthogonality campaigns over random contexts.
struct OrthogonalityCampaign {
    std::string pair;  // "lemma", "cor1", "cor2"
    long l = 0, n = 6;
    long contexts = 25;
    std::uint64_t seed = 42;
    Mode mode = Mode::exact;
};

struct OrthogonalityCampaignReport {
    std::string pair;
    long l = 0, n = 0;
    long contexts = 0;
    long failures = 0;
    bool all_exact = true;
    mpf_class max_offdiag{0};
    mpf_class max_diag_dev{0};
};

InversePair make_named_pair(const std::string& name, RandomSource& rng, Mode mode);
OrthogonalityCampaignReport run_orthogonality_campaign(const OrthogonalityCampaign& c);

std::map<std::string, VerificationReport> verify_all(const VerifyOptions& opts = {},
                                                     std::uint64_t seed = 42, long count = 25);

}  // namespace qpsi

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballcomp/sample.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

struct Failure {
  Sample sample;
  std::string reason;
};

struct VerificationReport {
  std::string scheme_id;
  std::size_t samples = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first few only
  std::size_t max_support = 0;
  std::size_t properness_violations = 0;
  std::optional<ApproxParams> approx;

  bool passed() const { return failure_count == 0; }
  std::string to_string() const;
};

struct VerifyOptions {
  int size_bound = 0;
  bool proper = true;
  // Fixed approximation; when unset and per_sample_approx is true, the
  // scheme's own per-output bounds are used.
  std::optional<ApproxParams> approx;
  bool per_sample_approx = false;
  std::size_t keep_failures = 20;
};

VerifyOptions default_options(const Scheme& s);
VerificationReport verify_scheme(const Scheme& s, const std::vector<Sample>& samples, const VerifyOptions& opt);
VerificationReport verify_scheme(const Scheme& s, const std::vector<Sample>& samples);

// The family a scheme targets: all balls, or the balls of its fixed radius.
std::vector<Ball> target_family(const Scheme& s);

}  // namespace ballcomp

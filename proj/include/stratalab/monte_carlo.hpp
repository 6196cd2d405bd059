#pragma once

#include <cstdint>
#include <optional>

#include "stratalab/analytics.hpp"
#include "stratalab/spec.hpp"

namespace stratalab {

struct SimulationOptions {
  /// Label whose count is tracked; (1, ..., 1) when empty.
  std::optional<LabelVector> target;
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). The report
  /// does not depend on this value.
  unsigned threads = 0;
};

struct SimulationReport {
  Method method;
  ExperimentSpec spec;
  std::uint64_t trials;
  std::uint64_t seed;
  LabelVector target;
  double empirical_mean;
  std::optional<double> empirical_variance;  // divisor trials - 1; empty when trials < 2
  std::uint64_t min_count;
  std::uint64_t max_count;
  double chi_square_statistic;               // pooled over every label and trial
  std::optional<double> stderr_of_variance;  // sqrt(2 / (trials - 1)) * variance

  friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// Stream id used for trial `trial` of `method`. The two methods draw from
/// disjoint stream sets, so paired runs under one seed are independent.
std::uint64_t trial_stream(Method method, std::uint64_t trial) noexcept;

/// Runs `trials` independent labelling experiments, trial t on
/// RandomSource(seed, trial_stream(method, t)), and reports moments of the
/// target label's count. Throws Error{BadTrials} when trials == 0 and
/// Error{BadLabel} for an invalid target.
SimulationReport simulate(Method method, const ExperimentSpec& spec, std::uint64_t trials,
                          std::uint64_t seed, const SimulationOptions& options = {});

/// |variance - exact| <= 3 stderr. A zero-variance sample passes only against
/// an exact variance of zero.
bool within_band(const SimulationReport& sim, const Rational& exact_variance);

struct MethodCheck {
  SimulationReport simulation;
  AnalyticsReport exact;
  bool pass;
};

struct PairedReport {
  MethodCheck first;
  MethodCheck second;
  Rational delta_exact;
  /// Sign of (first empirical variance - second empirical variance).
  int empirical_ordering;
};

PairedReport empirical_vs_exact(const ExperimentSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                const SimulationOptions& options = {});

}  // namespace stratalab

#pragma once

#include <cstdint>

#include "stratalab/numeric.hpp"
#include "stratalab/spec.hpp"

namespace stratalab {

/// |S|: the number of equally likely outcomes of a method, balls distinguishable.
///   first:  prod_i N! / ((N/n_i)!)^{n_i}
///   second: N! / ((N/n_1)!)^{n_1} * prod_{i>=2} [ (N/n_{i-1})! / ((N/(n_{i-1} n_i))!)^{n_i} ]^{n_{i-1}}
BigInt outcome_count(Method method, const ExperimentSpec& spec);

/// Outcomes in which `committed` (1 or 2) designated balls all land in the
/// target pot at every stage. Zero when a target cell is too small to hold
/// them. Throws Error{BadCommitCount} for any other `committed`.
BigInt committed_outcome_count(Method method, const ExperimentSpec& spec, int committed);

/// av = N / prod n_i; the same for both methods.
Rational expected_count(const ExperimentSpec& spec);

/// W(alpha) = E[C(alpha, 2)], closed form.
///   first:  C(N,2) prod_i n_i^-2 (1 - n_i/N) / (1 - 1/N)
///   second: C(N,2) prod_i n_i^-2 * (1 - n_1/N)/(1 - 1/N)
///                  * prod_{i>=2} (1 - n_{i-1} n_i/N) / (1 - n_{i-1}/N)
Rational w_statistic(Method method, const ExperimentSpec& spec);

/// W(alpha) through the pair-counting route: C(N,2) * committed(2) / |S|.
Rational w_statistic_from_counts(Method method, const ExperimentSpec& spec);

/// V(alpha) = 2 W + av - av^2.
Rational variance_exact(Method method, const ExperimentSpec& spec);

/// Leading-order variance with the O(1) remainder dropped:
///   first:  N/P - (N/P^2) (1 + sum_i (n_i - 1))
///   second: N/P - (N/P^2) (n_1 + sum_{i>=2} (n_i - 1) n_{i-1})
/// where P = prod n_i.
Rational variance_asymptotic(Method method, const ExperimentSpec& spec);

struct AnalyticsReport {
  Method method;
  ExperimentSpec spec;
  BigInt outcome_count;
  Rational average;
  Rational w_statistic;
  Rational variance_exact;
  Rational variance_asymptotic;
  std::uint64_t pots_needed;

  /// The O(1) term the asymptotic expression leaves out.
  Rational remainder() const { return variance_exact - variance_asymptotic; }

  friend bool operator==(const AnalyticsReport&, const AnalyticsReport&) = default;
};

AnalyticsReport analyze(Method method, const ExperimentSpec& spec);

struct ComparisonReport {
  AnalyticsReport first;
  AnalyticsReport second;
  Rational delta_exact;       // V_first - V_second
  Rational delta_asymptotic;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

ComparisonReport compare_methods(const ExperimentSpec& spec);

}  // namespace stratalab

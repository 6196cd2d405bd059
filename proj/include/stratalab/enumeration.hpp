#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "stratalab/assignment.hpp"
#include "stratalab/numeric.hpp"
#include "stratalab/spec.hpp"

namespace stratalab {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

using OutcomeVisitor = std::function<void(const LabelMatrix&)>;

/// Walks the full outcome set of `method`, calling `visit` once per outcome
/// with a matrix that is reused between calls. Ordered set partitions are
/// generated with lexicographic combinations, round by round (first way) or
/// pot by pot within each round (second way). Nothing is materialized beyond
/// the current outcome. Returns the number of outcomes visited.
///
/// Throws Error{BudgetExceeded} without walking when |S| > budget; the
/// detail carries the exact |S|.
BigInt enumerate_outcomes(Method method, const ExperimentSpec& spec, const BigInt& budget,
                          const OutcomeVisitor& visit);

using Pmf = std::map<std::uint64_t, Rational>;

/// Exact distribution of alpha for one target label under the uniform
/// measure on S, obtained by counting.
struct AlphaPmf {
  Method method;
  ExperimentSpec spec;
  LabelVector target;
  Pmf support;
  BigInt outcomes;  // |S| as walked

  friend bool operator==(const AlphaPmf&, const AlphaPmf&) = default;
};

AlphaPmf alpha_distribution(Method method, const ExperimentSpec& spec, const LabelVector& target,
                            const BigInt& budget = kDefaultBudget);

struct Moments {
  Rational mean;
  Rational variance;

  friend bool operator==(const Moments&, const Moments&) = default;
};

Moments moments_from_pmf(const Pmf& pmf);
inline Moments moments_from_pmf(const AlphaPmf& pmf) { return moments_from_pmf(pmf.support); }

}  // namespace stratalab

#include "stratalab/analytics.hpp"

#include <vector>

#include "stratalab/error.hpp"

namespace stratalab {

namespace {

BigInt big(std::uint64_t value) { return BigInt(std::to_string(value)); }

/// Ordered ways to split M balls into n pots of c (with n c = M) when `k`
/// designated balls are forced into one particular pot:
///   (M - k)! / ((c - k)! (c!)^{n-1}),   zero when c < k.
BigInt committed_split(FactorialCache& fact, std::uint64_t balls, std::uint64_t capacity, std::uint64_t pots,
                       std::uint64_t k) {
  if (capacity < k) return 0;
  BigInt denominator = fact(capacity - k) * pow(fact(capacity), pots - 1);
  BigInt result;
  mpz_divexact(result.get_mpz_t(), fact(balls - k).get_mpz_t(), denominator.get_mpz_t());
  return result;
}

/// Multinomial M! / (c!)^n for M balls into n pots of c.
BigInt free_split(FactorialCache& fact, std::uint64_t balls, std::uint64_t capacity, std::uint64_t pots) {
  return committed_split(fact, balls, capacity, pots, 0);
}

/// Product of num_j / den_j. A zero numerator short-circuits: in the second
/// way a later factor can read 0/0 (a parent pot of one ball), but only after
/// an earlier factor has already vanished.
Rational product_of_ratios(const std::vector<std::pair<Rational, Rational>>& factors) {
  Rational product = 1;
  for (const auto& [num, den] : factors) {
    if (num == 0) return 0;
    product *= num / den;
  }
  return product;
}

}  // namespace

BigInt outcome_count(Method method, const ExperimentSpec& spec) {
  FactorialCache fact;
  const auto n_balls = spec.ball_count();
  if (method == Method::FirstWay) {
    BigInt count = 1;
    for (std::size_t i = 0; i < spec.rank(); ++i) count *= free_split(fact, n_balls, spec.capacity(i), spec.pots(i));
    return count;
  }
  BigInt count = free_split(fact, n_balls, spec.capacity(0), spec.pots(0));
  for (std::size_t i = 1; i < spec.rank(); ++i) {
    count *= pow(free_split(fact, spec.capacity(i - 1), spec.cell_capacity(i), spec.pots(i)), spec.pots(i - 1));
  }
  return count;
}

BigInt committed_outcome_count(Method method, const ExperimentSpec& spec, int committed) {
  if (committed != 1 && committed != 2) {
    throw Error(ErrorCode::BadCommitCount, "committed ball count must be 1 or 2",
                {{"committed", std::to_string(committed)}});
  }
  const auto k = static_cast<std::uint64_t>(committed);
  FactorialCache fact;
  const auto n_balls = spec.ball_count();
  if (method == Method::FirstWay) {
    BigInt count = 1;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
      count *= committed_split(fact, n_balls, spec.capacity(i), spec.pots(i), k);
    }
    return count;
  }
  BigInt count = committed_split(fact, n_balls, spec.capacity(0), spec.pots(0), k);
  for (std::size_t i = 1; i < spec.rank() && count != 0; ++i) {
    const auto parent = spec.capacity(i - 1);
    const auto cell = spec.cell_capacity(i);
    // The pot holding the committed balls is split under the constraint; the
    // other n_{i-1} - 1 pots split freely.
    count *= committed_split(fact, parent, cell, spec.pots(i), k) *
             pow(free_split(fact, parent, cell, spec.pots(i)), spec.pots(i - 1) - 1);
  }
  return count;
}

Rational expected_count(const ExperimentSpec& spec) {
  return make_rational(big(spec.ball_count()), label_space_size(spec));
}

Rational w_statistic(Method method, const ExperimentSpec& spec) {
  const auto n_balls = spec.ball_count();
  if (n_balls < 2) return 0;
  const Rational N(big(n_balls));
  const Rational one(1);

  Rational scale = Rational(choose2(n_balls));
  for (const auto n : spec.pot_counts()) scale /= Rational(big(n) * big(n));

  std::vector<std::pair<Rational, Rational>> factors;
  if (method == Method::FirstWay) {
    for (const auto n : spec.pot_counts()) factors.emplace_back(one - Rational(big(n)) / N, one - one / N);
  } else {
    factors.emplace_back(one - Rational(big(spec.pots(0))) / N, one - one / N);
    for (std::size_t i = 1; i < spec.rank(); ++i) {
      const Rational prev(big(spec.pots(i - 1)));
      factors.emplace_back(one - prev * Rational(big(spec.pots(i))) / N, one - prev / N);
    }
  }
  return scale * product_of_ratios(factors);
}

Rational w_statistic_from_counts(Method method, const ExperimentSpec& spec) {
  return make_rational(choose2(spec.ball_count()) * committed_outcome_count(method, spec, 2),
                       outcome_count(method, spec));
}

Rational variance_exact(Method method, const ExperimentSpec& spec) {
  const Rational av = expected_count(spec);
  return 2 * w_statistic(method, spec) + av - av * av;
}

Rational variance_asymptotic(Method method, const ExperimentSpec& spec) {
  const Rational P(label_space_size(spec));
  const Rational N(big(spec.ball_count()));
  BigInt spread = 0;
  if (method == Method::FirstWay) {
    spread = 1;
    for (const auto n : spec.pot_counts()) spread += big(n) - 1;
  } else {
    spread = big(spec.pots(0));
    for (std::size_t i = 1; i < spec.rank(); ++i) spread += (big(spec.pots(i)) - 1) * big(spec.pots(i - 1));
  }
  return N / P - N / (P * P) * Rational(spread);
}

AnalyticsReport analyze(Method method, const ExperimentSpec& spec) {
  const Rational av = expected_count(spec);
  const Rational w = w_statistic(method, spec);
  return AnalyticsReport{
      .method = method,
      .spec = spec,
      .outcome_count = outcome_count(method, spec),
      .average = av,
      .w_statistic = w,
      .variance_exact = 2 * w + av - av * av,
      .variance_asymptotic = variance_asymptotic(method, spec),
      .pots_needed = required_pots(method, spec.pot_counts()),
  };
}

ComparisonReport compare_methods(const ExperimentSpec& spec) {
  AnalyticsReport first = analyze(Method::FirstWay, spec);
  AnalyticsReport second = analyze(Method::SecondWay, spec);
  Rational delta_exact = first.variance_exact - second.variance_exact;
  Rational delta_asymptotic = first.variance_asymptotic - second.variance_asymptotic;
  return ComparisonReport{std::move(first), std::move(second), std::move(delta_exact), std::move(delta_asymptotic)};
}

}  // namespace stratalab

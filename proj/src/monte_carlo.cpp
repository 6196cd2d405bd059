#include "stratalab/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "stratalab/assignment.hpp"
#include "stratalab/error.hpp"
#include "stratalab/random_source.hpp"

namespace stratalab {

namespace {

/// Sufficient statistics of a batch of trials. Every field is an exact
/// integer, so merging batches in any order gives the same totals.
struct Tally {
  BigInt sum = 0;
  BigInt sum_squares = 0;
  std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max = 0;
  std::map<LabelVector, std::uint64_t> pooled;

  void merge(const Tally& other) {
    sum += other.sum;
    sum_squares += other.sum_squares;
    min = std::min(min, other.min);
    max = std::max(max, other.max);
    for (const auto& [label, n] : other.pooled) pooled[label] += n;
  }
};

Tally run_trials(Method method, const ExperimentSpec& spec, const LabelVector& target, std::uint64_t seed,
                 std::uint64_t begin, std::uint64_t end) {
  Tally tally;
  for (std::uint64_t t = begin; t < end; ++t) {
    RandomSource rng(seed, trial_stream(method, t));
    const LabelMatrix matrix = assign(method, spec, rng);
    std::uint64_t alpha = 0;
    for (std::size_t ball = 0; ball < matrix.ball_count(); ++ball) {
      LabelVector label = matrix.label_vector(ball);
      if (label == target) ++alpha;
      ++tally.pooled[std::move(label)];
    }
    tally.sum += alpha;
    tally.sum_squares += BigInt(alpha) * alpha;
    tally.min = std::min(tally.min, alpha);
    tally.max = std::max(tally.max, alpha);
  }
  return tally;
}

}  // namespace

std::uint64_t trial_stream(Method method, std::uint64_t trial) noexcept {
  return 2 * trial + (method == Method::FirstWay ? 0 : 1);
}

SimulationReport simulate(Method method, const ExperimentSpec& spec, std::uint64_t trials, std::uint64_t seed,
                          const SimulationOptions& options) {
  if (trials == 0) throw Error(ErrorCode::BadTrials, "at least one trial is required");
  const LabelVector target = options.target.value_or(all_ones(spec));
  check_label(spec, target);

  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  std::vector<Tally> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(trials, w * chunk);
      const std::uint64_t end = std::min(trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] { partial[w] = run_trials(method, spec, target, seed, begin, end); });
    }
  }
  Tally total;
  for (const auto& part : partial) total.merge(part);

  const BigInt T(std::to_string(trials));
  SimulationReport report{
      .method = method,
      .spec = spec,
      .trials = trials,
      .seed = seed,
      .target = target,
      .empirical_mean = make_rational(total.sum, T).get_d(),
      .empirical_variance = std::nullopt,
      .min_count = total.min,
      .max_count = total.max,
      .chi_square_statistic = 0.0,
      .stderr_of_variance = std::nullopt,
  };
  if (trials >= 2) {
    // (sum x^2 - (sum x)^2 / T) / (T - 1), exactly.
    const Rational variance = make_rational(total.sum_squares * T - total.sum * total.sum, T * (T - 1));
    report.empirical_variance = variance.get_d();
    report.stderr_of_variance = std::sqrt(2.0 / static_cast<double>(trials - 1)) * variance.get_d();
  }

  // Labels never observed contribute their full expected count.
  const double labels = Rational(label_space_size(spec)).get_d();
  const double expected = static_cast<double>(trials) * static_cast<double>(spec.ball_count()) / labels;
  double chi_square = (labels - static_cast<double>(total.pooled.size())) * expected;
  for (const auto& [label, observed] : total.pooled) {
    const double deviation = static_cast<double>(observed) - expected;
    chi_square += deviation * deviation / expected;
  }
  report.chi_square_statistic = chi_square;
  return report;
}

bool within_band(const SimulationReport& sim, const Rational& exact_variance) {
  if (!sim.empirical_variance || !sim.stderr_of_variance) return false;
  if (*sim.empirical_variance == 0.0) return exact_variance == 0;
  return std::abs(*sim.empirical_variance - exact_variance.get_d()) <= 3.0 * *sim.stderr_of_variance;
}

PairedReport empirical_vs_exact(const ExperimentSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                const SimulationOptions& options) {
  const ComparisonReport exact = compare_methods(spec);
  auto check = [&](Method method, const AnalyticsReport& analytic) {
    SimulationReport sim = simulate(method, spec, trials, seed, options);
    const bool pass = within_band(sim, analytic.variance_exact);
    return MethodCheck{std::move(sim), analytic, pass};
  };
  MethodCheck first = check(Method::FirstWay, exact.first);
  MethodCheck second = check(Method::SecondWay, exact.second);

  const double lhs = first.simulation.empirical_variance.value_or(0.0);
  const double rhs = second.simulation.empirical_variance.value_or(0.0);
  const int ordering = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return PairedReport{std::move(first), std::move(second), exact.delta_exact, ordering};
}

}  // namespace stratalab

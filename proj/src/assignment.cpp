#include "stratalab/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "stratalab/error.hpp"

namespace stratalab {

LabelMatrix::LabelMatrix(ExperimentSpec spec)
    : spec_(std::move(spec)), data_(spec_.ball_count() * spec_.rank(), 0) {}

LabelVector LabelMatrix::label_vector(std::size_t ball) const {
  const auto row = label(ball);
  return LabelVector{std::vector<std::uint64_t>(row.begin(), row.end())};
}

bool LabelMatrix::has_label(std::size_t ball, const LabelVector& target) const {
  return std::ranges::equal(label(ball), target.components);
}

std::uint64_t CountHistogram::count(const LabelVector& label) const {
  const auto it = counts_.find(label);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CountHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [label, n] : counts_) sum += n;
  return sum;
}

void CountHistogram::add(LabelVector label, std::uint64_t amount) { counts_[std::move(label)] += amount; }

std::vector<std::vector<std::size_t>> shuffle_partition(std::span<const std::size_t> items,
                                                        std::span<const std::uint64_t> capacities,
                                                        RandomSource& rng) {
  const std::uint64_t total = std::accumulate(capacities.begin(), capacities.end(), std::uint64_t{0});
  if (total != items.size()) {
    throw Error(ErrorCode::CapacityMismatch, "capacities do not sum to the number of items",
                {{"items", std::to_string(items.size())}, {"capacity_sum", std::to_string(total)}});
  }

  std::vector<std::size_t> order(items.begin(), items.end());
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform_below(i)]);
  }

  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(capacities.size());
  auto cursor = order.begin();
  for (const auto capacity : capacities) {
    groups.emplace_back(cursor, cursor + static_cast<std::ptrdiff_t>(capacity));
    cursor += static_cast<std::ptrdiff_t>(capacity);
  }
  return groups;
}

namespace {

using Pots = std::vector<std::vector<std::size_t>>;

Pots drop_all(const ExperimentSpec& spec, std::size_t coordinate, LabelMatrix& matrix, RandomSource& rng) {
  std::vector<std::size_t> balls(spec.ball_count());
  std::iota(balls.begin(), balls.end(), std::size_t{0});
  const std::vector<std::uint64_t> capacities(spec.pots(coordinate), spec.capacity(coordinate));
  Pots pots = shuffle_partition(balls, capacities, rng);
  for (std::size_t p = 0; p < pots.size(); ++p) {
    for (const auto ball : pots[p]) matrix.set_component(ball, coordinate, p + 1);
  }
  return pots;
}

}  // namespace

LabelMatrix assign_first_way(const ExperimentSpec& spec, RandomSource& rng) {
  LabelMatrix matrix(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) drop_all(spec, i, matrix, rng);
  return matrix;
}

LabelMatrix assign_second_way(const ExperimentSpec& spec, RandomSource& rng) {
  LabelMatrix matrix(spec);
  Pots previous = drop_all(spec, 0, matrix, rng);
  for (std::size_t i = 1; i < spec.rank(); ++i) {
    const std::vector<std::uint64_t> quotas(spec.pots(i), spec.cell_capacity(i));
    Pots next(spec.pots(i));
    for (const auto& pot : previous) {
      const Pots split = shuffle_partition(pot, quotas, rng);
      for (std::size_t c = 0; c < split.size(); ++c) {
        for (const auto ball : split[c]) matrix.set_component(ball, i, c + 1);
        next[c].insert(next[c].end(), split[c].begin(), split[c].end());
      }
    }
    previous = std::move(next);
  }
  return matrix;
}

LabelMatrix assign(Method method, const ExperimentSpec& spec, RandomSource& rng) {
  return method == Method::FirstWay ? assign_first_way(spec, rng) : assign_second_way(spec, rng);
}

CountHistogram label_counts(const LabelMatrix& matrix) {
  CountHistogram histogram(matrix.spec());
  for (std::size_t ball = 0; ball < matrix.ball_count(); ++ball) histogram.add(matrix.label_vector(ball));
  return histogram;
}

std::uint64_t count_label(const LabelMatrix& matrix, const LabelVector& target) {
  std::uint64_t alpha = 0;
  for (std::size_t ball = 0; ball < matrix.ball_count(); ++ball) alpha += matrix.has_label(ball, target) ? 1 : 0;
  return alpha;
}

bool satisfies_capacities(const LabelMatrix& matrix) {
  const auto& spec = matrix.spec();
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::vector<std::uint64_t> tally(spec.pots(i) + 1, 0);
    for (std::size_t ball = 0; ball < matrix.ball_count(); ++ball) {
      const auto value = matrix.component(ball, i);
      if (value < 1 || value > spec.pots(i)) return false;
      ++tally[value];
    }
    if (std::any_of(tally.begin() + 1, tally.end(), [&](auto n) { return n != spec.capacity(i); })) return false;
  }
  return true;
}

bool satisfies_pair_quotas(const LabelMatrix& matrix) {
  const auto& spec = matrix.spec();
  if (!satisfies_capacities(matrix)) return false;
  for (std::size_t i = 1; i < spec.rank(); ++i) {
    const auto width = spec.pots(i);
    std::vector<std::uint64_t> tally(spec.pots(i - 1) * width, 0);
    for (std::size_t ball = 0; ball < matrix.ball_count(); ++ball) {
      ++tally[(matrix.component(ball, i - 1) - 1) * width + (matrix.component(ball, i) - 1)];
    }
    if (std::any_of(tally.begin(), tally.end(), [&](auto n) { return n != spec.cell_capacity(i); })) return false;
  }
  return true;
}

}  // namespace stratalab

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "stratalab/random_source.hpp"
#include "stratalab/spec.hpp"

namespace stratalab {

/// One outcome of a labelling run: an r-component label for each of the N
/// distinguishable balls, stored row-major (ball, coordinate).
class LabelMatrix {
 public:
  explicit LabelMatrix(ExperimentSpec spec);

  const ExperimentSpec& spec() const noexcept { return spec_; }
  std::size_t ball_count() const noexcept { return spec_.ball_count(); }
  std::size_t rank() const noexcept { return spec_.rank(); }

  std::uint64_t component(std::size_t ball, std::size_t coordinate) const {
    return data_[ball * rank() + coordinate];
  }
  void set_component(std::size_t ball, std::size_t coordinate, std::uint64_t value) {
    data_[ball * rank() + coordinate] = value;
  }

  std::span<const std::uint64_t> label(std::size_t ball) const {
    return std::span<const std::uint64_t>(data_).subspan(ball * rank(), rank());
  }
  LabelVector label_vector(std::size_t ball) const;

  bool has_label(std::size_t ball, const LabelVector& target) const;

  friend bool operator==(const LabelMatrix&, const LabelMatrix&) = default;

 private:
  ExperimentSpec spec_;
  std::vector<std::uint64_t> data_;
};

/// Occupancy of every label in one outcome. Absent labels have count 0.
class CountHistogram {
 public:
  explicit CountHistogram(ExperimentSpec spec) : spec_(std::move(spec)) {}

  const ExperimentSpec& spec() const noexcept { return spec_; }
  const std::map<LabelVector, std::uint64_t>& entries() const noexcept { return counts_; }

  std::uint64_t count(const LabelVector& label) const;
  std::uint64_t total() const;

  void add(LabelVector label, std::uint64_t amount = 1);

 private:
  ExperimentSpec spec_;
  std::map<LabelVector, std::uint64_t> counts_;
};

/// Splits `items` into consecutive groups of the given capacities after an
/// unbiased Fisher-Yates shuffle, so every ordered set partition with those
/// block sizes is equally likely. Throws Error{CapacityMismatch} when the
/// capacities do not sum to the number of items.
std::vector<std::vector<std::size_t>> shuffle_partition(std::span<const std::size_t> items,
                                                        std::span<const std::uint64_t> capacities,
                                                        RandomSource& rng);

/// r independent rounds; round i drops all N balls into n_i pots of N/n_i.
LabelMatrix assign_first_way(const ExperimentSpec& spec, RandomSource& rng);

/// Round 1 as in the first way. For i >= 2 the balls stay in their round
/// i-1 pots, and each of those pots (in increasing label order) is split
/// evenly over n_i new pots, N/(n_{i-1} n_i) balls to each.
LabelMatrix assign_second_way(const ExperimentSpec& spec, RandomSource& rng);

LabelMatrix assign(Method method, const ExperimentSpec& spec, RandomSource& rng);

CountHistogram label_counts(const LabelMatrix& matrix);

/// alpha(s): balls carrying `target` in this outcome.
std::uint64_t count_label(const LabelMatrix& matrix, const LabelVector& target);

/// Every value c of coordinate i appears exactly N/n_i times.
bool satisfies_capacities(const LabelMatrix& matrix);

/// Every adjacent pair (a_{i-1}, a_i) = (b, c) appears exactly N/(n_{i-1} n_i) times.
bool satisfies_pair_quotas(const LabelMatrix& matrix);

}  // namespace stratalab

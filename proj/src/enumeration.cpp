#include "stratalab/enumeration.hpp"

#include <numeric>
#include <vector>

#include "stratalab/analytics.hpp"
#include "stratalab/error.hpp"

namespace stratalab {

namespace {

using Continuation = std::function<void()>;

class OutcomeWalker {
 public:
  OutcomeWalker(Method method, const ExperimentSpec& spec, const OutcomeVisitor& visit)
      : method_(method), spec_(spec), matrix_(spec), visit_(visit) {}

  BigInt run() {
    round(0);
    return visited_;
  }

 private:
  void round(std::size_t coordinate) {
    if (coordinate == spec_.rank()) {
      visit_(matrix_);
      ++visited_;
      return;
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::uint64_t capacity = 0;
    if (method_ == Method::FirstWay || coordinate == 0) {
      blocks.emplace_back(spec_.ball_count());
      std::iota(blocks.back().begin(), blocks.back().end(), std::size_t{0});
      capacity = spec_.capacity(coordinate);
    } else {
      blocks.resize(spec_.pots(coordinate - 1));
      for (std::size_t ball = 0; ball < spec_.ball_count(); ++ball) {
        blocks[matrix_.component(ball, coordinate - 1) - 1].push_back(ball);
      }
      capacity = spec_.cell_capacity(coordinate);
    }
    split_blocks(coordinate, blocks, 0, capacity);
  }

  void split_blocks(std::size_t coordinate, const std::vector<std::vector<std::size_t>>& blocks, std::size_t index,
                    std::uint64_t capacity) {
    if (index == blocks.size()) {
      round(coordinate + 1);
      return;
    }
    partition(coordinate, blocks[index], 1, capacity,
              [&, index] { split_blocks(coordinate, blocks, index + 1, capacity); });
  }

  /// Every ordered partition of `remaining` into consecutive pots pot, pot+1,
  /// ... of `capacity` balls each; the pot's members are chosen as the
  /// lexicographic combinations of `remaining`.
  void partition(std::size_t coordinate, const std::vector<std::size_t>& remaining, std::uint64_t pot,
                 std::uint64_t capacity, const Continuation& next) {
    if (remaining.empty()) {
      next();
      return;
    }
    const std::size_t size = remaining.size();
    const auto take = static_cast<std::size_t>(capacity);
    std::vector<std::size_t> chosen(take);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    std::vector<std::size_t> rest;
    rest.reserve(size - take);
    for (;;) {
      rest.clear();
      std::size_t c = 0;
      for (std::size_t j = 0; j < size; ++j) {
        if (c < take && chosen[c] == j) {
          matrix_.set_component(remaining[j], coordinate, pot);
          ++c;
        } else {
          rest.push_back(remaining[j]);
        }
      }
      partition(coordinate, rest, pot + 1, capacity, next);

      // Advance to the next combination in lexicographic order.
      std::size_t k = take;
      while (k > 0 && chosen[k - 1] == size - take + (k - 1)) --k;
      if (k == 0) break;
      ++chosen[k - 1];
      for (std::size_t j = k; j < take; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }

  Method method_;
  const ExperimentSpec& spec_;
  LabelMatrix matrix_;
  const OutcomeVisitor& visit_;
  BigInt visited_ = 0;
};

}  // namespace

BigInt enumerate_outcomes(Method method, const ExperimentSpec& spec, const BigInt& budget,
                          const OutcomeVisitor& visit) {
  const BigInt total = outcome_count(method, spec);
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "outcome set of " + total.get_str() + " exceeds the enumeration budget of " + budget.get_str(),
                {{"outcome_count", total.get_str()}, {"budget", budget.get_str()}});
  }
  return OutcomeWalker(method, spec, visit).run();
}

AlphaPmf alpha_distribution(Method method, const ExperimentSpec& spec, const LabelVector& target,
                            const BigInt& budget) {
  check_label(spec, target);
  std::map<std::uint64_t, std::uint64_t> tally;
  const BigInt walked =
      enumerate_outcomes(method, spec, budget, [&](const LabelMatrix& m) { ++tally[count_label(m, target)]; });

  Pmf support;
  for (const auto& [alpha, hits] : tally) support.emplace(alpha, make_rational(BigInt(std::to_string(hits)), walked));
  return AlphaPmf{method, spec, target, std::move(support), walked};
}

Moments moments_from_pmf(const Pmf& pmf) {
  Rational mean = 0;
  Rational second = 0;
  for (const auto& [value, probability] : pmf) {
    const Rational k(BigInt(std::to_string(value)));
    mean += k * probability;
    second += k * k * probability;
  }
  return Moments{mean, second - mean * mean};
}

}  // namespace stratalab

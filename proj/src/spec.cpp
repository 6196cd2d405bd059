#include "stratalab/spec.hpp"

#include <algorithm>

#include "stratalab/error.hpp"

namespace stratalab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyPotList: return "EMPTY_POT_LIST";
    case ErrorCode::NonPositive: return "NON_POSITIVE";
    case ErrorCode::Indivisible: return "INDIVISIBLE";
    case ErrorCode::CapacityMismatch: return "CAPACITY_MISMATCH";
    case ErrorCode::BadCommitCount: return "BAD_COMMIT_COUNT";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::BadLabel: return "BAD_LABEL";
    case ErrorCode::BadTrials: return "BAD_TRIALS";
  }
  return "UNKNOWN";
}

std::string_view to_string(Method method) noexcept {
  return method == Method::FirstWay ? "FIRST_WAY" : "SECOND_WAY";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  if (text == "first" || text == "FIRST_WAY") return Method::FirstWay;
  if (text == "second" || text == "SECOND_WAY") return Method::SecondWay;
  return std::nullopt;
}

namespace {

template <typename Int>
void check_pots(std::span<const Int> pot_counts) {
  if (pot_counts.empty()) throw Error(ErrorCode::EmptyPotList, "at least one pot count is required");
  for (std::size_t i = 0; i < pot_counts.size(); ++i) {
    if (pot_counts[i] <= 0) {
      throw Error(ErrorCode::NonPositive, "pot counts must be positive",
                  {{"index", std::to_string(i)}, {"value", std::to_string(pot_counts[i])}});
    }
  }
}

template <typename Int>
BigInt modulus_of(std::span<const Int> pot_counts) {
  check_pots(pot_counts);
  if (pot_counts.size() == 1) return BigInt(std::to_string(pot_counts[0]));
  BigInt modulus = 1;
  for (std::size_t i = 1; i < pot_counts.size(); ++i) {
    const BigInt product = BigInt(std::to_string(pot_counts[i - 1])) * BigInt(std::to_string(pot_counts[i]));
    mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), product.get_mpz_t());
  }
  return modulus;
}

template <typename Int>
std::uint64_t pots_of(Method method, std::span<const Int> pot_counts) {
  check_pots(pot_counts);
  const auto at = [&](std::size_t i) { return static_cast<std::uint64_t>(pot_counts[i]); };
  std::uint64_t needed = 0;
  if (method == Method::FirstWay) {
    for (std::size_t i = 0; i < pot_counts.size(); ++i) needed = std::max(needed, at(i));
    return 1 + needed;
  }
  needed = 1 + at(0);
  for (std::size_t i = 1; i < pot_counts.size(); ++i) needed = std::max(needed, at(i - 1) + at(i));
  return needed;
}

}  // namespace

BigInt divisibility_modulus(std::span<const std::int64_t> pot_counts) { return modulus_of(pot_counts); }
BigInt divisibility_modulus(std::span<const std::uint64_t> pot_counts) { return modulus_of(pot_counts); }

std::uint64_t required_pots(Method method, std::span<const std::int64_t> pot_counts) {
  return pots_of(method, pot_counts);
}
std::uint64_t required_pots(Method method, std::span<const std::uint64_t> pot_counts) {
  return pots_of(method, pot_counts);
}

ExperimentSpec validate_spec(std::int64_t ball_count, std::span<const std::int64_t> pot_counts) {
  if (pot_counts.empty()) throw Error(ErrorCode::EmptyPotList, "at least one pot count is required");
  if (ball_count <= 0) {
    throw Error(ErrorCode::NonPositive, "ball count must be positive", {{"value", std::to_string(ball_count)}});
  }
  const BigInt modulus = divisibility_modulus(pot_counts);
  if (BigInt(std::to_string(ball_count)) % modulus != 0) {
    throw Error(ErrorCode::Indivisible,
                "ball count " + std::to_string(ball_count) + " is not divisible by modulus " + modulus.get_str(),
                {{"ball_count", std::to_string(ball_count)}, {"modulus", modulus.get_str()}});
  }
  return ExperimentSpec(static_cast<std::uint64_t>(ball_count),
                        std::vector<std::uint64_t>(pot_counts.begin(), pot_counts.end()));
}

BigInt label_space_size(const ExperimentSpec& spec) {
  BigInt size = 1;
  for (const auto n : spec.pot_counts()) size *= BigInt(std::to_string(n));
  return size;
}

LabelVector all_ones(const ExperimentSpec& spec) {
  return LabelVector{std::vector<std::uint64_t>(spec.rank(), 1)};
}

void check_label(const ExperimentSpec& spec, const LabelVector& label) {
  if (label.size() != spec.rank()) {
    throw Error(ErrorCode::BadLabel, "label has " + std::to_string(label.size()) + " components, expected " +
                                         std::to_string(spec.rank()));
  }
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] < 1 || label[i] > spec.pots(i)) {
      throw Error(ErrorCode::BadLabel, "label component out of range",
                  {{"index", std::to_string(i)}, {"value", std::to_string(label[i])},
                   {"max", std::to_string(spec.pots(i))}});
    }
  }
}

std::string to_string(const LabelVector& label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(label[i]);
  }
  return out + ")";
}

}  // namespace stratalab

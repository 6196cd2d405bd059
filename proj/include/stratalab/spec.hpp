#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stratalab/numeric.hpp"

namespace stratalab {

enum class Method { FirstWay, SecondWay };

inline constexpr std::array<Method, 2> kMethods{Method::FirstWay, Method::SecondWay};

/// "FIRST_WAY" / "SECOND_WAY".
std::string_view to_string(Method method) noexcept;

/// Accepts the wire names as well as the short forms "first" and "second".
std::optional<Method> parse_method(std::string_view text) noexcept;

/// Validated (N, n_1..n_r). The only way to obtain one is validate_spec, so an
/// instance in hand always satisfies the divisibility requirement: N is a
/// multiple of divisibility_modulus(pot_counts), hence of every n_i and of
/// every adjacent product n_{i-1} n_i.
class ExperimentSpec {
 public:
  std::uint64_t ball_count() const noexcept { return ball_count_; }
  std::span<const std::uint64_t> pot_counts() const noexcept { return pot_counts_; }
  std::size_t rank() const noexcept { return pot_counts_.size(); }
  std::uint64_t pots(std::size_t coordinate) const { return pot_counts_.at(coordinate); }

  /// N / n_i: balls per pot in coordinate i (0-based).
  std::uint64_t capacity(std::size_t coordinate) const { return ball_count_ / pots(coordinate); }

  /// N / (n_{i-1} n_i): balls each previous pot sends to each new pot in a
  /// stratified round. Requires coordinate >= 1.
  std::uint64_t cell_capacity(std::size_t coordinate) const {
    return ball_count_ / (pots(coordinate - 1) * pots(coordinate));
  }

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;

 private:
  friend ExperimentSpec validate_spec(std::int64_t, std::span<const std::int64_t>);

  ExperimentSpec(std::uint64_t ball_count, std::vector<std::uint64_t> pot_counts)
      : ball_count_(ball_count), pot_counts_(std::move(pot_counts)) {}

  std::uint64_t ball_count_;
  std::vector<std::uint64_t> pot_counts_;
};

/// Throws Error{EmptyPotList | NonPositive | Indivisible}. The Indivisible
/// detail carries the modulus.
ExperimentSpec validate_spec(std::int64_t ball_count, std::span<const std::int64_t> pot_counts);

inline ExperimentSpec validate_spec(std::int64_t ball_count,
                                    std::initializer_list<std::int64_t> pot_counts) {
  return validate_spec(ball_count, std::span<const std::int64_t>(pot_counts.begin(), pot_counts.size()));
}

/// lcm(n_1 n_2, ..., n_{r-1} n_r) for r >= 2, n_1 for r = 1.
BigInt divisibility_modulus(std::span<const std::int64_t> pot_counts);
BigInt divisibility_modulus(std::span<const std::uint64_t> pot_counts);

/// prod n_i.
BigInt label_space_size(const ExperimentSpec& spec);

/// Pots that must exist at once when pots are reused between rounds:
/// 1 + max n_i for the first way, max(1 + n_1, n_1 + n_2, ..., n_{r-1} + n_r)
/// for the second.
std::uint64_t required_pots(Method method, std::span<const std::int64_t> pot_counts);
std::uint64_t required_pots(Method method, std::span<const std::uint64_t> pot_counts);

/// An r-component label; component i is a pot label in 1..n_i.
struct LabelVector {
  std::vector<std::uint64_t> components;

  std::size_t size() const noexcept { return components.size(); }
  std::uint64_t operator[](std::size_t i) const { return components[i]; }

  friend auto operator<=>(const LabelVector&, const LabelVector&) = default;
  friend bool operator==(const LabelVector&, const LabelVector&) = default;
};

/// (1, ..., 1).
LabelVector all_ones(const ExperimentSpec& spec);

/// Throws Error{BadLabel} unless the label has length r and 1 <= a_i <= n_i.
void check_label(const ExperimentSpec& spec, const LabelVector& label);

std::string to_string(const LabelVector& label);

}  // namespace stratalab

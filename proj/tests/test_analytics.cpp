#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "stratalab/analytics.hpp"
#include "stratalab/error.hpp"

using namespace stratalab;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

std::vector<std::vector<std::int64_t>> all_pot_lists(std::size_t max_rank, std::int64_t max_pot) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  auto grow = [&](auto& self) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == max_rank) return;
    for (std::int64_t n = 1; n <= max_pot; ++n) {
      current.push_back(n);
      self(self);
      current.pop_back();
    }
  };
  grow(grow);
  return out;
}

bool has_adjacent_pair_at_least_two(const ExperimentSpec& spec) {
  for (std::size_t i = 1; i < spec.rank(); ++i) {
    if (spec.pots(i - 1) >= 2 && spec.pots(i) >= 2) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("outcome_count") {
  CHECK(outcome_count(Method::FirstWay, validate_spec(4, {2, 2})) == 36);
  CHECK(outcome_count(Method::SecondWay, validate_spec(4, {2, 2})) == 24);
  CHECK(outcome_count(Method::FirstWay, validate_spec(8, {2, 2, 2})) == 343000);
  CHECK(outcome_count(Method::SecondWay, validate_spec(8, {2, 2, 2})) == 90720);
  CHECK(outcome_count(Method::FirstWay, validate_spec(12, {2, 3})) == BigInt(924) * 34650);
}

TEST_CASE("committed_outcome_count") {
  const auto small = validate_spec(4, {2, 2});
  CHECK(committed_outcome_count(Method::FirstWay, small, 1) == 9);
  CHECK(make_rational(committed_outcome_count(Method::FirstWay, small, 1), outcome_count(Method::FirstWay, small)) ==
        q(1, 4));
  CHECK(committed_outcome_count(Method::FirstWay, small, 2) == 1);
  CHECK(committed_outcome_count(Method::SecondWay, small, 2) == 0);
  CHECK(committed_outcome_count(Method::SecondWay, small, 1) == 6);
  for (const int bad : {0, 3, -1}) {
    try {
      committed_outcome_count(Method::FirstWay, small, bad);
      FAIL("expected BAD_COMMIT_COUNT");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadCommitCount);
    }
  }
}

TEST_CASE("expected_count") {
  CHECK(expected_count(validate_spec(12, {2, 3})) == 2);
  CHECK(expected_count(validate_spec(4, {2, 2})) == 1);
  CHECK(expected_count(validate_spec(8, {2, 2, 2})) == 1);
  CHECK(expected_count(validate_spec(4, {4, 1, 2, 2})) == q(1, 4));
}

TEST_CASE("w_statistic") {
  CHECK(w_statistic(Method::FirstWay, validate_spec(4, {2, 2})) == q(1, 6));
  CHECK(w_statistic(Method::SecondWay, validate_spec(4, {2, 2})) == 0);
  CHECK(w_statistic(Method::FirstWay, validate_spec(8, {2, 2, 2})) == q(27, 98));
  CHECK(w_statistic(Method::SecondWay, validate_spec(8, {2, 2, 2})) == q(1, 6));
  CHECK(w_statistic(Method::FirstWay, validate_spec(1, {1})) == 0);
  // Parent pot of one ball: the closed form would read 0/0 past a zero factor.
  CHECK(w_statistic(Method::SecondWay, validate_spec(4, {4, 1})) == 0);
}

TEST_CASE("variance_exact pinned values") {
  CHECK(variance_exact(Method::FirstWay, validate_spec(4, {2, 2})) == q(1, 3));
  CHECK(variance_exact(Method::SecondWay, validate_spec(4, {2, 2})) == 0);
  CHECK(variance_exact(Method::SecondWay, validate_spec(8, {2, 2, 2})) == q(1, 3));
  CHECK(variance_exact(Method::FirstWay, validate_spec(8, {2, 2, 2})) == q(27, 49));
}

TEST_CASE("variance_exact: hypergeometric check of |A and B| for 2-subsets of 4") {
  // P(|A & B| = k) = C(2,k) C(2,2-k) / C(4,2).
  const Rational p0 = q(1, 6), p1 = q(4, 6), p2 = q(1, 6);
  const Rational mean = p1 + 2 * p2;
  CHECK(p1 + 4 * p2 - mean * mean == variance_exact(Method::FirstWay, validate_spec(4, {2, 2})));
  CHECK(p0 + p1 + p2 == 1);
}

TEST_CASE("variance_asymptotic") {
  CHECK(variance_asymptotic(Method::FirstWay, validate_spec(8, {2, 2, 2})) == q(1, 2));
  CHECK(variance_asymptotic(Method::SecondWay, validate_spec(8, {2, 2, 2})) == q(1, 4));
  CHECK(variance_asymptotic(Method::FirstWay, validate_spec(4, {2, 2})) == q(1, 4));
}

TEST_CASE("analyze") {
  const auto second = analyze(Method::SecondWay, validate_spec(4, {2, 2}));
  CHECK(second.variance_exact == 0);
  CHECK(second.outcome_count == 24);
  CHECK(second.pots_needed == 4);

  const auto first = analyze(Method::FirstWay, validate_spec(4, {2, 2}));
  CHECK(first.variance_exact == q(1, 3));
  CHECK(first.outcome_count == 36);
  CHECK(first.pots_needed == 3);
  CHECK(first.remainder() == q(1, 3) - q(1, 4));

  const auto flat = analyze(Method::FirstWay, validate_spec(6, {1, 1}));
  CHECK(flat.variance_exact == 0);
  CHECK(flat.average == 6);
}

TEST_CASE("compare_methods") {
  CHECK(compare_methods(validate_spec(8, {2, 2, 2})).delta_exact == q(32, 147));
  CHECK(compare_methods(validate_spec(8, {2, 2, 2})).delta_asymptotic == q(1, 4));
  CHECK(compare_methods(validate_spec(4, {2, 2})).delta_exact == q(1, 3));
  CHECK(compare_methods(validate_spec(6, {1, 6})).delta_exact == 0);
}

TEST_CASE("closed forms agree with the brute-force oracle") {
  struct Case {
    Method method;
    unsigned balls;
    std::vector<unsigned> pots;
  };
  const std::vector<Case> cases = {
      {Method::FirstWay, 4, {2, 2}},     {Method::SecondWay, 4, {2, 2}},    {Method::FirstWay, 6, {2, 3}},
      {Method::FirstWay, 6, {3, 2}},     {Method::SecondWay, 6, {2, 3}},    {Method::SecondWay, 8, {2, 2, 2}},
      {Method::FirstWay, 8, {2, 2, 2}},  {Method::FirstWay, 4, {4}},        {Method::FirstWay, 4, {4, 1, 2, 2}},
      {Method::SecondWay, 4, {4, 1, 2, 2}}, {Method::SecondWay, 6, {1, 6}}, {Method::FirstWay, 6, {6, 1}},
      {Method::SecondWay, 4, {2, 1, 2}},
  };
  for (const auto& c : cases) {
    std::vector<std::int64_t> pots(c.pots.begin(), c.pots.end());
    const auto spec = validate_spec(c.balls, pots);
    const auto truth = oracle::brute_force(c.method == Method::SecondWay, c.balls, c.pots,
                                           std::vector<unsigned>(c.pots.size(), 1));
    const auto m = oracle::moments(truth);
    CAPTURE(to_string(c.method));
    CAPTURE(c.balls);
    CHECK(outcome_count(c.method, spec) == truth.outcomes);
    CHECK(committed_outcome_count(c.method, spec, 1) == truth.ball_hits[0]);
    CHECK(expected_count(spec) == m.mean);
    CHECK(w_statistic(c.method, spec) == m.w);
    CHECK(w_statistic_from_counts(c.method, spec) == m.w);
    CHECK(variance_exact(c.method, spec) == m.variance);
  }
}

TEST_CASE("property sweep: identities, dual routes, domination") {
  for (const auto& pots : all_pot_lists(3, 4)) {
    const auto modulus = divisibility_modulus(pots).get_si();
    for (const auto factor : {1, 2, 5}) {
      const auto spec = validate_spec(modulus * factor, pots);
      const Rational av = expected_count(spec);
      for (const auto method : kMethods) {
        const Rational w = w_statistic(method, spec);
        CHECK(variance_exact(method, spec) == 2 * w + av - av * av);
        CHECK(variance_exact(method, spec) >= 0);
        CHECK(w == w_statistic_from_counts(method, spec));
        CHECK(make_rational(committed_outcome_count(method, spec, 1), outcome_count(method, spec)) ==
              make_rational(1, label_space_size(spec)));
      }
      if (spec.rank() == 1) {
        CHECK(variance_exact(Method::FirstWay, spec) == 0);
        CHECK(variance_exact(Method::SecondWay, spec) == 0);
      }
      if (spec.rank() == 2) CHECK(variance_exact(Method::SecondWay, spec) == 0);

      const auto cmp = compare_methods(spec);
      CHECK(cmp.delta_exact >= 0);
      if (!has_adjacent_pair_at_least_two(spec)) CHECK(cmp.delta_exact == 0);
    }
  }
}

TEST_CASE("per-factor domination witness") {
  // (1 - ab/N)(1 - 1/N) - (1 - b/N)(1 - a/N) = -(a - 1)(b - 1)/N
  for (long N = 1; N <= 60; ++N) {
    for (long a = 1; a <= 6; ++a) {
      for (long b = 1; b <= 6; ++b) {
        const Rational lhs = (1 - q(a * b, N)) * (1 - q(1, N)) - (1 - q(b, N)) * (1 - q(a, N));
        CHECK(lhs == -q((a - 1) * (b - 1), N));
      }
    }
  }
}

TEST_CASE("strict domination fails when some coordinate has a single ball per pot") {
  // n = [4,1,2,2], N = 4: the first coordinate puts one ball in each pot, so
  // alpha is Bernoulli(1/4) under both schemes even though (2,2) is adjacent.
  const auto spec = validate_spec(4, {4, 1, 2, 2});
  const auto cmp = compare_methods(spec);
  CHECK(cmp.first.variance_exact == q(3, 16));
  CHECK(cmp.second.variance_exact == q(3, 16));
  CHECK(cmp.delta_exact == 0);

  // Away from that boundary an adjacent (>=2, >=2) pair does force a strict gap.
  for (const auto& pots : all_pot_lists(4, 5)) {
    const auto modulus = divisibility_modulus(pots).get_si();
    for (const auto factor : {1, 10}) {
      const auto s = validate_spec(modulus * factor, pots);
      bool full_pot = false;
      for (const auto n : s.pot_counts()) full_pot = full_pot || n == s.ball_count();
      if (has_adjacent_pair_at_least_two(s) && !full_pot) CHECK(compare_methods(s).delta_exact > 0);
    }
  }
}

TEST_CASE("asymptotic remainder stays bounded") {
  for (const auto method : kMethods) {
    Rational previous;
    for (int k = 0; k <= 10; ++k) {
      const auto spec = validate_spec(6L << k, {2, 3});
      const Rational remainder = analyze(method, spec).remainder();
      CHECK(abs(remainder) <= 1);
      if (k == 10) CHECK(abs(remainder - previous) < q(1, 1000));
      previous = remainder;
    }
  }
  // Closed form of the first-way remainder for n = [2,3]: N / (18 (N - 1)).
  for (long N : {6L, 12L, 600L}) {
    CHECK(analyze(Method::FirstWay, validate_spec(N, {2, 3})).remainder() == q(N, 18 * (N - 1)));
  }
}

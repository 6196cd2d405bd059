#include <doctest.h>

#include <set>
#include <vector>

#include "oracle.hpp"
#include "stratalab/analytics.hpp"
#include "stratalab/enumeration.hpp"
#include "stratalab/error.hpp"

using namespace stratalab;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

std::vector<std::uint64_t> flatten(const LabelMatrix& m) {
  std::vector<std::uint64_t> out;
  for (std::size_t b = 0; b < m.ball_count(); ++b) {
    const auto row = m.label(b);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<LabelVector> every_label(const ExperimentSpec& spec) {
  std::vector<LabelVector> labels{LabelVector{}};
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::vector<LabelVector> next;
    for (const auto& prefix : labels) {
      for (std::uint64_t c = 1; c <= spec.pots(i); ++c) {
        LabelVector grown = prefix;
        grown.components.push_back(c);
        next.push_back(std::move(grown));
      }
    }
    labels = std::move(next);
  }
  return labels;
}

}  // namespace

TEST_CASE("enumerate_outcomes yields each outcome once") {
  for (const auto method : kMethods) {
    const auto spec = validate_spec(4, {2, 2});
    std::set<std::vector<std::uint64_t>> seen;
    const auto walked = enumerate_outcomes(method, spec, 1'000'000, [&](const LabelMatrix& m) {
      CHECK(satisfies_capacities(m));
      if (method == Method::SecondWay) CHECK(satisfies_pair_quotas(m));
      seen.insert(flatten(m));
    });
    CHECK(walked == (method == Method::FirstWay ? 36 : 24));
    CHECK(seen.size() == walked.get_ui());
  }
}

TEST_CASE("enumeration covers exactly the oracle's outcome set") {
  const auto spec = validate_spec(8, {2, 2, 2});
  std::set<std::vector<std::uint64_t>> seen;
  enumerate_outcomes(Method::SecondWay, spec, kDefaultBudget, [&](const LabelMatrix& m) {
    REQUIRE(satisfies_pair_quotas(m));
    seen.insert(flatten(m));
  });
  CHECK(seen.size() == 90720);
  CHECK(oracle::brute_force(true, 8, {2, 2, 2}, {1, 1, 1}).outcomes == 90720);
}

TEST_CASE("enumeration refuses to exceed its budget") {
  const auto spec = validate_spec(12, {2, 3});
  bool called = false;
  try {
    enumerate_outcomes(Method::FirstWay, spec, 1'000'000, [&](const LabelMatrix&) { called = true; });
    FAIL("expected BUDGET_EXCEEDED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(e.detail().at("outcome_count") == BigInt(BigInt(924) * 34650).get_str());
  }
  CHECK_FALSE(called);
}

TEST_CASE("alpha_distribution examples") {
  const auto small = validate_spec(4, {2, 2});
  const auto first = alpha_distribution(Method::FirstWay, small, LabelVector{{1, 1}});
  CHECK(first.support == Pmf{{0, q(1, 6)}, {1, q(2, 3)}, {2, q(1, 6)}});
  CHECK(first.outcomes == 36);

  const auto second = alpha_distribution(Method::SecondWay, small, LabelVector{{1, 1}});
  CHECK(second.support == Pmf{{1, q(1)}});

  const auto single = alpha_distribution(Method::FirstWay, validate_spec(2, {2}), LabelVector{{1}});
  CHECK(single.support == Pmf{{1, q(1)}});

  CHECK_THROWS_AS(alpha_distribution(Method::FirstWay, small, LabelVector{{3, 1}}), Error);
}

TEST_CASE("moments_from_pmf") {
  CHECK(moments_from_pmf(Pmf{{1, q(1)}}) == Moments{q(1), q(0)});
  CHECK(moments_from_pmf(Pmf{{0, q(1, 6)}, {1, q(4, 6)}, {2, q(1, 6)}}) == Moments{q(1), q(1, 3)});
  CHECK(moments_from_pmf(Pmf{{0, q(1, 2)}, {2, q(1, 2)}}) == Moments{q(1), q(1)});
}

TEST_CASE("pmf is the same for every target label") {
  for (const auto method : kMethods) {
    for (const auto& [balls, pots] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
             {4, {2, 2}}, {6, {2, 3}}, {8, {2, 2, 2}}}) {
      const auto spec = validate_spec(balls, pots);
      const auto reference = alpha_distribution(method, spec, all_ones(spec)).support;
      Rational total = 0;
      for (const auto& [alpha, p] : reference) total += p;
      CHECK(total == 1);
      for (const auto& label : every_label(spec)) {
        CHECK(alpha_distribution(method, spec, label).support == reference);
      }
    }
  }
}

TEST_CASE("hits on the target are the same for every ball") {
  for (const auto method : kMethods) {
    const auto spec = validate_spec(6, {2, 3});
    const auto target = all_ones(spec);
    std::vector<std::uint64_t> hits(6, 0);
    enumerate_outcomes(method, spec, kDefaultBudget, [&](const LabelMatrix& m) {
      for (std::size_t b = 0; b < 6; ++b) hits[b] += m.has_label(b, target) ? 1 : 0;
    });
    for (const auto h : hits) CHECK(h == hits[0]);
    CHECK(hits[0] == committed_outcome_count(method, spec, 1));
  }
}

TEST_CASE("oracle moments equal the closed forms") {
  for (const auto& pots : std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 3}, {3, 2}, {4}, {1, 2}, {2, 1, 2}}) {
    const auto modulus = divisibility_modulus(pots).get_si();
    const auto spec = validate_spec(modulus, pots);
    for (const auto method : kMethods) {
      const auto pmf = alpha_distribution(method, spec, all_ones(spec));
      CHECK(pmf.outcomes == outcome_count(method, spec));
      const auto m = moments_from_pmf(pmf);
      CHECK(m.mean == expected_count(spec));
      CHECK(m.variance == variance_exact(method, spec));
    }
  }
}

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include <gmpxx.h>

namespace stratalab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(std::uint64_t n);
BigInt pow(const BigInt& base, std::uint64_t exponent);

/// C(n, 2) as a big integer.
BigInt choose2(std::uint64_t n);

/// Decimal rendering of an exact rational with `significant` significant
/// digits, rounded half-to-even. Fixed notation for exponents in [-5, 15),
/// scientific otherwise; trailing zeros are dropped ("0.333333333333333",
/// "2", "1.5e+20"). Display only.
std::string to_decimal(const Rational& value, int significant = 15);

/// Factorials keyed by argument, computed once per cache lifetime.
class FactorialCache {
 public:
  const BigInt& operator()(std::uint64_t n);

 private:
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace stratalab

#include "stratalab/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stratalab {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

BigInt choose2(std::uint64_t n) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), 2);
  return result;
}

const BigInt& FactorialCache::operator()(std::uint64_t n) {
  auto it = memo_.find(n);
  if (it == memo_.end()) it = memo_.emplace(n, factorial(n)).first;
  return it->second;
}

namespace {

BigInt pow10(long exponent) { return pow(BigInt(10), static_cast<std::uint64_t>(exponent)); }

Rational pow10_rational(long exponent) {
  return exponent >= 0 ? Rational(pow10(exponent)) : make_rational(1, pow10(-exponent));
}

BigInt round_half_even(const Rational& value) {
  BigInt floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  const Rational twice_fraction = 2 * (value - Rational(floor_part));
  const int cmp_half = cmp(twice_fraction, Rational(1));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(floor_part.get_mpz_t()) != 0)) ++floor_part;
  return floor_part;
}

}  // namespace

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (value == 0) return "0";

  const Rational magnitude = abs(value);
  long exponent = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
  while (magnitude < pow10_rational(exponent)) --exponent;
  while (magnitude >= pow10_rational(exponent + 1)) ++exponent;

  BigInt digits_value = round_half_even(magnitude * pow10_rational(significant - 1 - exponent));
  if (digits_value == pow10(significant)) {
    digits_value = pow10(significant - 1);
    ++exponent;
  }
  std::string digits = digits_value.get_str();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = value < 0 ? "-" : "";
  if (exponent < -4 || exponent >= significant) {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += exponent < 0 ? "e-" : "e+";
    const std::string exp_digits = std::to_string(std::labs(exponent));
    out += (exp_digits.size() < 2 ? "0" : "") + exp_digits;
  } else if (exponent < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  } else {
    const auto int_len = static_cast<std::size_t>(exponent + 1);
    if (digits.size() <= int_len) {
      out += digits + std::string(int_len - digits.size(), '0');
    } else {
      out += digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  }
  return out;
}

}  // namespace stratalab

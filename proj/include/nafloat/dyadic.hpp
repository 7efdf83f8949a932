#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nafloat {

/// Exact value sign * mantissa * 2^exp2.
///
/// Canonical form: the mantissa is odd, or the value is zero and then
/// sign = +1, mantissa = 0, exp2 = 0. Two Dyadics are equal iff their
/// canonical triples are equal. No operation goes through machine floats.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : Dyadic(mpz_class(v), 0) {}  // NOLINT: implicit from small integers
  explicit Dyadic(const mpz_class& integer) : Dyadic(integer, 0) {}
  /// value = m * 2^e for any signed integer m.
  Dyadic(const mpz_class& m, std::int64_t e);

  static Dyadic pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

  /// Parses "104.5", "-3/8", "209*2^-1", "2^1000", "-0.03125" and integers.
  /// Non-dyadic fractions (e.g. "1/3") are rejected with Error("parse").
  static Dyadic parse(std::string_view text);

  int sign() const noexcept { return mantissa_ == 0 ? 0 : sign_; }
  bool is_zero() const noexcept { return mantissa_ == 0; }
  const mpz_class& mantissa() const noexcept { return mantissa_; }
  std::int64_t exp2() const noexcept { return exp2_; }

  /// Signed odd integer part: value = signed_mantissa() * 2^exp2().
  mpz_class signed_mantissa() const { return sign_ < 0 ? mpz_class(-mantissa_) : mantissa_; }

  Dyadic abs() const;
  Dyadic operator-() const;
  /// Multiplies by 2^k.
  Dyadic shifted(std::int64_t k) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.sign_ == b.sign_ && a.exp2_ == b.exp2_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// floor(log2 |x|); x must be nonzero.
  std::int64_t floor_log2() const;
  bool is_integer() const noexcept { return exp2_ >= 0; }
  bool is_power_of_two() const noexcept { return mantissa_ == 1; }
  /// Exact integer value; throws std::domain_error if not an integer.
  mpz_class to_integer() const;
  /// floor(x / 2^k) as an integer.
  mpz_class floor_div_pow2(std::int64_t k) const;

  /// Exact terminating decimal, e.g. "104.5", "-0.03125", "0".
  std::string to_decimal() const;
  /// "209 * 2^-1" with the signed odd mantissa; "0" for zero.
  std::string to_power_form() const;
  /// "p/q" in lowest terms, or "p" for integers.
  std::string to_fraction() const;
  /// "104.5 (= 209 * 2^-1)"; the decimal part is dropped once |exp2| is too
  /// large to print.
  std::string to_display() const;

 private:
  void normalize();

  int sign_ = 1;
  mpz_class mantissa_ = 0;
  std::int64_t exp2_ = 0;
};

}  // namespace nafloat

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nafloat/trit.hpp"

namespace nafloat {

/// An integer in canonical nonadjacent form.
///
/// Digits are most-significant first with no leading zero; zero has no digits.
class NafInteger {
 public:
  NafInteger() = default;

  /// Validates nonadjacency and the no-leading-zero rule.
  static NafInteger from_digits(std::vector<Trit> msb_first);

  const std::vector<Trit>& digits() const noexcept { return digits_; }
  const mpz_class& value() const noexcept { return value_; }
  /// Number of digits: 0 for zero, width + 1 otherwise.
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(digits_.size()); }
  std::size_t weight() const noexcept;

  TritField field() const { return TritField(digits_); }
  std::string str() const;

  friend bool operator==(const NafInteger& a, const NafInteger& b) { return a.digits_ == b.digits_; }

 private:
  std::vector<Trit> digits_;
  mpz_class value_ = 0;
};

/// True iff no two consecutive digits are both nonzero.
bool is_nonadjacent(std::span<const Trit> digits) noexcept;

/// floor(log2(3|x|/2)); nullopt stands for -infinity at x = 0.
std::optional<std::int64_t> naf_width(const mpz_class& x);
/// 0 for x = 0, else naf_width(x) + 1.
std::int64_t naf_size(const mpz_class& x);
inline std::int64_t naf_size(std::int64_t x) { return naf_size(mpz_class(static_cast<long>(x))); }

/// V_N = (2^{N+2} - (-1)^N) / 3, the number of NAF integers of size <= N.
mpz_class jacobsthal_count(std::int64_t N);
/// Largest value of size <= N, (V_N - 1) / 2.
mpz_class max_for_size(std::int64_t N);

struct Ball {
  mpz_class count;   // positive integers of size exactly N
  mpz_class center;  // 2^{N-1}
  mpz_class radius;
};
Ball ball_for_size(std::int64_t N);

struct BatchExtrema {
  mpz_class first;
  mpz_class last;
};
/// Smallest and largest positive integer of size exactly N, from the
/// parity-split closed forms.
BatchExtrema batch_extrema(std::int64_t N);

/// Reference recoding: peel odd digits 2 - (x mod 4) from the bottom.
NafInteger recode_oracle(const mpz_class& x);

/// Lookup tables of the carry chain. Trits are indexed 0 -> 1, 1 -> 0, 2 -> T,
/// the row order of the reference tables.
///
/// kAssistantTable[x_n][x_{n-1}][a_{n-1}] = a_n
/// kJumpTable[x_{n+1}][x_n][a_n]           = j_n
extern const std::array<std::array<std::array<Trit, 3>, 3>, 3> kAssistantTable;
extern const std::array<std::array<std::array<std::uint8_t, 3>, 3>, 3> kJumpTable;

constexpr std::size_t table_index(Trit t) noexcept {
  return t == Trit::Plus ? 0 : t == Trit::Zero ? 1 : 2;
}

/// Assistant values, aligned with x (same width), computed right to left
/// with virtual zeros beyond the field.
TritField assistant_values(const TritField& x);
/// Jump flags j_n (0 or 1), MSB first, aligned with x.
std::vector<std::uint8_t> j_values(const TritField& x);

/// One-pass recoding of any signed-digit field. The result has width
/// x.width() + 1 when the extra top digit is nonzero, else x.width().
TritField recode_chain_field(const TritField& x);
NafInteger recode_chain(const TritField& x);

}  // namespace nafloat

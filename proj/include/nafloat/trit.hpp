#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nafloat {

/// A redundant signed radix-2 digit.
enum class Trit : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr int to_int(Trit t) noexcept { return static_cast<int>(t); }
constexpr Trit negate(Trit t) noexcept { return static_cast<Trit>(-to_int(t)); }
constexpr bool is_nonzero(Trit t) noexcept { return t != Trit::Zero; }

/// Converts -1, 0 or +1 to a trit; any other value is a programming error.
Trit trit_from_int(int v);

/// Text form of a single trit: '1', '0' or 'T'.
char trit_char(Trit t) noexcept;

/// Fixed-width ordered sequence of trits, most-significant first.
///
/// This is the machine word of the system. Index 0 is the leftmost trit.
class TritField {
 public:
  TritField() = default;
  explicit TritField(std::size_t width, Trit fill = Trit::Zero) : digits_(width, fill) {}
  explicit TritField(std::vector<Trit> digits) : digits_(std::move(digits)) {}
  TritField(std::initializer_list<Trit> digits) : digits_(digits) {}

  std::size_t width() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  Trit operator[](std::size_t i) const { return digits_[i]; }
  Trit& operator[](std::size_t i) { return digits_[i]; }

  std::span<const Trit> digits() const noexcept { return digits_; }
  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  bool all_zero() const noexcept;
  bool zero_free() const noexcept;

  TritField negated() const;
  TritField reversed() const;
  TritField slice(std::size_t pos, std::size_t len) const;
  TritField concat(const TritField& right) const;

  friend bool operator==(const TritField&, const TritField&) = default;
  friend auto operator<=>(const TritField&, const TritField&) = default;

 private:
  std::vector<Trit> digits_;
};

/// Parses a field over the alphabet {1, 0, T}, most significant trit first.
/// Throws Error("parse") on an empty string or any other character.
TritField parse_trits(std::string_view text);

/// Inverse of parse_trits.
std::string render_trits(const TritField& f);

/// Display-only rendering with an overbar-style minus: "1 0 ¯1".
std::string render_trits_overbar(const TritField& f);

/// Positional value sum(d_i * 2^i) with i counted from 0 at the right.
mpz_class field_int_value(const TritField& f);
mpz_class digits_int_value(std::span<const Trit> msb_first);

/// Binary container: two little-endian width bytes, then 2 bits per trit
/// MSB-first (00 -> 0, 01 -> +1, 10 -> -1), zero-padded to a whole byte.
std::vector<std::uint8_t> pack_binary(const TritField& f);

/// Inverse of pack_binary. Rejects the bit pattern 11, non-zero padding,
/// truncated and over-long payloads with Error("malformed").
TritField unpack_binary(std::span<const std::uint8_t> bytes);

}  // namespace nafloat

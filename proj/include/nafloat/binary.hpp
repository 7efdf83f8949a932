#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nafloat/dyadic.hpp"

namespace nafloat {

// Binary reference formats for the comparator: a parametric IEEE-754 style
// format and posits. Codes are the low N bits of a uint64, MSB first.

struct BinaryValue {
  enum class Kind { Finite, PlusInf, MinusInf, NaN };
  Kind kind = Kind::Finite;
  Dyadic value;           // finite only
  bool negative = false;  // sign bit; distinguishes -0

  bool finite() const { return kind == Kind::Finite; }
  std::string str() const;
};

struct IeeeFormat {
  int N;
  int s;               // exponent field size
  std::int64_t bias;   // 2^(s-1) - 1
  int fraction_bits;   // N - s - 1

  static IeeeFormat for_width(int N);  // 4 <= N <= 64
  std::int64_t max_exponent() const { return (std::int64_t{1} << s) - 2 - bias; }
  /// Exponent of the smallest subnormal, 2^(-N + s + 1 - b).
  std::int64_t min_exponent() const { return -N + s + 1 - bias; }
};

/// floor(N^(0.611 - N/3200)).
int ieee_exponent_size(int N);

BinaryValue ieee_decode(std::uint64_t bits, const IeeeFormat& fmt);
/// Code of a finite value, or nullopt when x is not representable.
std::optional<std::uint64_t> ieee_encode_exact(const Dyadic& x, const IeeeFormat& fmt);

struct PositFormat {
  int N;
  int es;

  /// es = log2(N) - 3 for N in {8, 16, 32, 64, 128}, clipped to N <= 64.
  static PositFormat standard(int N);
};

/// Negative codes are two's-complement negated before the fields are read.
/// The fraction f of width w reads as 1 + f / 2^w; exponent bits cut off by
/// the end of the field are zero.
BinaryValue posit_decode(std::uint64_t bits, const PositFormat& fmt);
std::optional<std::uint64_t> posit_encode_exact(const Dyadic& x, const PositFormat& fmt);

}  // namespace nafloat

#include <cmath>

#include "nafloat/binary.hpp"
#include "nafloat/error.hpp"

namespace nafloat {

std::string BinaryValue::str() const {
  switch (kind) {
    case Kind::PlusInf: return "+inf";
    case Kind::MinusInf: return "-inf";
    case Kind::NaN: return "NaN";
    case Kind::Finite: break;
  }
  if (value.is_zero()) return negative ? "-0" : "0";
  return value.to_display();
}

int ieee_exponent_size(int N) {
  return static_cast<int>(std::floor(std::pow(static_cast<double>(N), 0.611 - N / 3200.0)));
}

IeeeFormat IeeeFormat::for_width(int N) {
  if (N < 4 || N > 64) throw Error("range", "IEEE widths are 4..64, got " + std::to_string(N));
  IeeeFormat f{};
  f.N = N;
  f.s = ieee_exponent_size(N);
  f.bias = (std::int64_t{1} << (f.s - 1)) - 1;
  f.fraction_bits = N - f.s - 1;
  return f;
}

BinaryValue ieee_decode(std::uint64_t bits, const IeeeFormat& fmt) {
  const int fw = fmt.fraction_bits;
  const std::uint64_t m = bits & ((std::uint64_t{1} << fw) - 1);
  const std::uint64_t n = (bits >> fw) & ((std::uint64_t{1} << fmt.s) - 1);
  const bool neg = (bits >> (fmt.N - 1)) & 1;
  const std::uint64_t top = (std::uint64_t{1} << fmt.s) - 1;
  BinaryValue v;
  v.negative = neg;
  if (n == top) {
    v.kind = m ? BinaryValue::Kind::NaN : neg ? BinaryValue::Kind::MinusInf : BinaryValue::Kind::PlusInf;
    return v;
  }
  Dyadic mag = n == 0 ? Dyadic(mpz_class(static_cast<unsigned long>(m)), fmt.min_exponent())
                      : Dyadic(mpz_class(static_cast<unsigned long>((std::uint64_t{1} << fw) | m)),
                               static_cast<std::int64_t>(n) - fmt.bias - fw);
  v.value = neg ? -mag : mag;
  return v;
}

std::optional<std::uint64_t> ieee_encode_exact(const Dyadic& x, const IeeeFormat& fmt) {
  if (x.is_zero()) return 0;
  const Dyadic target = x.abs();
  // Positive finite codes are ordered like their values.
  std::uint64_t lo = 1, hi = (((std::uint64_t{1} << fmt.s) - 1) << fmt.fraction_bits) - 1;
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    const Dyadic v = ieee_decode(mid, fmt).value;
    if (v == target) return x.sign() < 0 ? mid | (std::uint64_t{1} << (fmt.N - 1)) : mid;
    if (v < target) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

}  // namespace nafloat

#include "nafloat/binary.hpp"
#include "nafloat/error.hpp"

namespace nafloat {

namespace {

std::uint64_t mask(int N) { return N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1; }

}  // namespace

PositFormat PositFormat::standard(int N) {
  switch (N) {
    case 8: return {8, 0};
    case 16: return {16, 1};
    case 32: return {32, 2};
    case 64: return {64, 3};
    default: throw Error("unsupported", "standard posits are 8, 16, 32 or 64 bits, got " + std::to_string(N));
  }
}

BinaryValue posit_decode(std::uint64_t bits, const PositFormat& fmt) {
  const int N = fmt.N;
  if (N < 2 || N > 64 || fmt.es < 0) throw Error("range", "posit needs 2 <= N <= 64 and es >= 0");
  bits &= mask(N);
  const std::uint64_t nar = std::uint64_t{1} << (N - 1);
  BinaryValue v;
  if (bits == 0) return v;
  if (bits == nar) {
    v.kind = BinaryValue::Kind::NaN;
    v.negative = true;
    return v;
  }
  v.negative = bits & nar;
  if (v.negative) bits = (~bits + 1) & mask(N);

  auto bit = [&](int i) { return (bits >> (N - 1 - i)) & 1; };  // i = 0 is the sign
  const auto rs = bit(1);
  int i = 1;
  while (i < N && bit(i) == rs) ++i;
  const std::int64_t r = i - 1;
  if (i < N) ++i;  // stop bit
  const std::int64_t k = rs ? r - 1 : -r;

  std::uint64_t e = 0;
  for (int j = 0; j < fmt.es; ++j) e = 2 * e + (i < N ? bit(i++) : 0);
  const int fw = N - i;
  mpz_class frac = 1;
  for (; i < N; ++i) frac = 2 * frac + static_cast<unsigned long>(bit(i));
  const std::int64_t scale = k * (std::int64_t{1} << fmt.es) + static_cast<std::int64_t>(e);
  Dyadic mag(frac, scale - fw);
  v.value = v.negative ? -mag : mag;
  return v;
}

std::optional<std::uint64_t> posit_encode_exact(const Dyadic& x, const PositFormat& fmt) {
  if (x.is_zero()) return 0;
  const Dyadic target = x.abs();
  std::uint64_t lo = 1, hi = (std::uint64_t{1} << (fmt.N - 1)) - 1;
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    const Dyadic v = posit_decode(mid, fmt).value;
    if (v == target) return x.sign() < 0 ? (~mid + 1) & mask(fmt.N) : mid;
    if (v < target) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

}  // namespace nafloat

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nafloat/dyadic.hpp"
#include "nafloat/naf.hpp"
#include "nafloat/trit.hpp"

namespace nafloat {

// Pure-real tapered format.
//
// A width-N field holds reverse(NAF(n)) followed by NAF(m), where n is the
// exponent and m the significand integer of size p = N - size(n). The two
// leading digits meet in the middle and form the only adjacent nonzero pair
// of the field; with n = 0 there is no pair at all. The value is
//
//   x = m * 2^(n - (p - 1))
//
// so m * 2^(1-p) is the significand, always within 1 +- alpha_p.

constexpr int kMinRealWidth = 2;
constexpr int kMaxRealWidth = 64;

struct CodecParams {
  int N;
  Dyadic alpha;         // X̄_{N-2} * 2^{-(N-1)}
  Dyadic omega;         // 2^{X̄_{N-1}}, the largest finite value
  std::int64_t max_exponent;  // X̄_{N-1}
};
CodecParams codec_params(int N);

struct RealNafDecomposition {
  NafInteger m;
  NafInteger n;
  int N = 0;

  std::int64_t exponent() const { return n.value().get_si(); }
  std::int64_t precision() const { return m.size(); }
  Dyadic value() const { return Dyadic(m.value(), exponent() - (precision() - 1)); }
};

/// Everything representable with exponent n at width N: the significand
/// integers [lo, hi] scaled by ulp. Empty when size(n) >= N.
struct ExponentClass {
  std::int64_t n;
  std::int64_t p;
  std::int64_t ulp_exp2;  // n - p + 1
  mpz_class lo;
  mpz_class hi;

  Dyadic min_value() const { return Dyadic(lo, ulp_exp2); }
  Dyadic max_value() const { return Dyadic(hi, ulp_exp2); }
};
std::optional<ExponentClass> exponent_class(std::int64_t n, int N);

/// floor(log2(3|x|/2)); the stored exponent of x.
std::int64_t real_width(const Dyadic& x);
/// N - size(real_width(x)); x is in range iff the result is positive.
std::int64_t precision(const Dyadic& x, int N);
/// 2^(n + size(n) - N + 1); Error("range") when x is out of range.
Dyadic ulp(const Dyadic& x, int N);

/// Exact encoding; Error("not-representable") unless x is a nonzero
/// representable value at width N.
TritField encode_real(const Dyadic& x, int N);
bool is_real_form(const TritField& f);
/// Splits a pure-real field; Error("malformed") on anything else and
/// Error("zero") on the all-zero field.
RealNafDecomposition decompose_real(const TritField& f);
Dyadic decode_real(const TritField& f);

/// Field of -x: only the significand subfield is negated.
TritField negate_real(const TritField& f);

/// MSB-first nonadjacent expansion of |x|; digit 0 has weight 2^real_width(x).
/// A nonzero digit is emitted when the residual exceeds 2/3 of the current
/// weight, and a zero always follows a nonzero digit.
std::vector<Trit> naf_digit_stream(const Dyadic& x, std::size_t count);

/// Keeps the first p stream digits; out-of-range inputs clamp to
/// sgn(x) * Omega^{+-1}.
Dyadic truncate_value(const Dyadic& x, int N);
TritField truncate_real(const Dyadic& x, int N);

/// Nearest nonzero representable value of the same sign. Ties go to the
/// neighbor with an even significand, then to the one sharing x's exponent.
/// Out-of-range inputs clamp to sgn(x) * Omega^{+-1}.
Dyadic round_value(const Dyadic& x, int N);
TritField round_real(const Dyadic& x, int N);

/// All nonzero representable values with their fields, ascending.
std::vector<std::pair<TritField, Dyadic>> enumerate_reals(int N);

/// Order-preserving integer key: decode(a) < decode(b) iff key(a) < key(b).
/// For x = sgn * m * 2^(n-p+1) it is
///   sgn * (2^(N+1) * (n + X̄_{N-1} + 1) + |m| * 2^(N-p)),
/// and 0 for the all-zero field.
mpz_class comparison_key(const TritField& f);

}  // namespace nafloat

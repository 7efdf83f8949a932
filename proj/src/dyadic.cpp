#include "nafloat/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "nafloat/error.hpp"

namespace nafloat {

namespace {

// Exponent alignment beyond this many bits would need an absurd amount of
// memory; callers never add values whose magnitudes are that far apart.
constexpr std::int64_t kMaxAlignBits = std::int64_t{1} << 28;

mp_bitcnt_t checked_bits(std::int64_t k) {
  if (k < 0 || k > kMaxAlignBits) throw std::length_error("dyadic shift too large");
  return static_cast<mp_bitcnt_t>(k);
}

std::int64_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

std::int64_t add_exp(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dyadic exponent overflow");
  return r;
}

}  // namespace

Dyadic::Dyadic(const mpz_class& m, std::int64_t e) : sign_(m < 0 ? -1 : 1), mantissa_(::abs(m)), exp2_(e) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    sign_ = 1;
    exp2_ = 0;
    return;
  }
  auto tz = static_cast<std::int64_t>(mpz_scan1(mantissa_.get_mpz_t(), 0));
  if (tz > 0) {
    mantissa_ >>= static_cast<mp_bitcnt_t>(tz);
    exp2_ = add_exp(exp2_, tz);
  }
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  r.sign_ = 1;
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  if (r.mantissa_ != 0) r.sign_ = -r.sign_;
  return r;
}

Dyadic Dyadic::shifted(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exp2_ = add_exp(r.exp2_, k);
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exp2_, b.exp2_);
  mpz_class ma = a.signed_mantissa() << checked_bits(a.exp2_ - e);
  mpz_class mb = b.signed_mantissa() << checked_bits(b.exp2_ - e);
  return Dyadic(mpz_class(ma + mb), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(mpz_class(a.signed_mantissa() * b.signed_mantissa()), add_exp(a.exp2_, b.exp2_));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: compare magnitudes, then flip for negatives.
  std::strong_ordering mag = std::strong_ordering::equal;
  std::int64_t la = a.floor_log2(), lb = b.floor_log2();
  if (la != lb) {
    mag = la <=> lb;
  } else {
    // Equal leading bit positions bound the exponent gap by the mantissa lengths.
    std::int64_t e = std::min(a.exp2_, b.exp2_);
    mpz_class ma = a.mantissa_ << checked_bits(a.exp2_ - e);
    mpz_class mb = b.mantissa_ << checked_bits(b.exp2_ - e);
    int c = cmp(ma, mb);
    mag = c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (sa > 0) return mag;
  return 0 <=> mag;
}

std::int64_t Dyadic::floor_log2() const {
  if (is_zero()) throw std::domain_error("floor_log2 of zero");
  return add_exp(bit_length(mantissa_) - 1, exp2_);
}

mpz_class Dyadic::to_integer() const {
  if (exp2_ < 0) throw std::domain_error("dyadic value is not an integer");
  return signed_mantissa() << checked_bits(exp2_);
}

mpz_class Dyadic::floor_div_pow2(std::int64_t k) const {
  std::int64_t e = exp2_ - k;
  mpz_class m = signed_mantissa();
  if (e >= 0) return m << checked_bits(e);
  mpz_class q;
  mp_bitcnt_t s = static_cast<mp_bitcnt_t>(std::min<std::int64_t>(-e, bit_length(mantissa_) + 1));
  mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), s);
  return q;
}

std::string Dyadic::to_decimal() const {
  if (is_zero()) return "0";
  std::string sign = sign_ < 0 ? "-" : "";
  if (exp2_ >= 0) return sign + mpz_class(mantissa_ << checked_bits(exp2_)).get_str();
  // m * 2^-k = m * 5^k / 10^k
  auto k = checked_bits(-exp2_);
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
  std::string digits = mpz_class(mantissa_ * five).get_str();
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  digits.insert(digits.size() - k, ".");
  return sign + digits;
}

std::string Dyadic::to_power_form() const {
  if (is_zero()) return "0";
  return signed_mantissa().get_str() + " * 2^" + std::to_string(exp2_);
}

std::string Dyadic::to_fraction() const {
  if (is_zero()) return "0";
  if (exp2_ >= 0) return to_integer().get_str();
  mpz_class den = mpz_class(1) << checked_bits(-exp2_);
  return signed_mantissa().get_str() + "/" + den.get_str();
}

std::string Dyadic::to_display() const {
  if (is_zero()) return "0";
  constexpr std::int64_t kMaxDecimalExp = 4096;
  if (exp2_ > kMaxDecimalExp || exp2_ < -kMaxDecimalExp) return to_power_form();
  return to_decimal() + " (= " + to_power_form() + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::string str(s);
  if (str.empty()) throw Error("parse", "empty number");
  std::size_t i = (str[0] == '-' || str[0] == '+') ? 1 : 0;
  if (i == str.size() || !std::all_of(str.begin() + static_cast<std::ptrdiff_t>(i), str.end(),
                                      [](unsigned char c) { return std::isdigit(c); })) {
    throw Error("parse", "invalid integer '" + str + "'");
  }
  if (str[0] == '+') str.erase(0, 1);
  return mpz_class(str, 10);
}

std::int64_t parse_int64(std::string_view s) {
  mpz_class v = parse_integer(s);
  if (!v.fits_slong_p()) throw Error("range", "exponent out of range");
  return v.get_si();
}

Dyadic from_fraction(const mpz_class& num, const mpz_class& den, std::string_view text) {
  if (den == 0) throw Error("parse", "zero denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class d = den / g;
  mpz_class n = num / g;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  if (n == 0) return Dyadic();
  if (mpz_popcount(d.get_mpz_t()) != 1) {
    throw Error("parse", "'" + std::string(text) + "' is not a dyadic rational");
  }
  auto k = static_cast<std::int64_t>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
  return Dyadic(n, -k);
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error("parse", "empty number");
  if (auto star = s.find('*'); star != std::string_view::npos) {
    std::string_view tail = trim(s.substr(star + 1));
    if (tail.substr(0, 2) != "2^") throw Error("parse", "expected 'm * 2^e' in '" + std::string(text) + "'");
    return Dyadic(parse_integer(s.substr(0, star)), parse_int64(tail.substr(2)));
  }
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.substr(0, 2) == "2^") {
    Dyadic v = pow2(parse_int64(body.substr(2)));
    return negative ? -v : v;
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return from_fraction(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)), text);
  }
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error("parse", "invalid decimal '" + std::string(text) + "'");
    }
    mpz_class num(digits, 10);
    if (negative) num = -num;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
    return from_fraction(num, den, text);
  }
  return Dyadic(parse_integer(s));
}

}  // namespace nafloat

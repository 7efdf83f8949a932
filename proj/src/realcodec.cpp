#include "nafloat/realcodec.hpp"

#include <algorithm>
#include <string>

#include "nafloat/error.hpp"

namespace nafloat {

namespace {

void check_width(std::int64_t N) {
  if (N < kMinRealWidth || N > kMaxRealWidth) {
    throw Error("range", "real width must be in [2, 64], got " + std::to_string(N));
  }
}

std::int64_t to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error("range", "exponent does not fit in 64 bits");
  return v.get_si();
}

Dyadic clamp_extreme(int sign, std::int64_t n, int N) {
  std::int64_t e = codec_params(N).max_exponent;
  Dyadic v = Dyadic::pow2(n > 0 ? e : -e);
  return sign < 0 ? -v : v;
}

// Position s of the significand, or nullopt when f is not a real form.
std::optional<std::size_t> split_point(const TritField& f) {
  std::optional<std::size_t> pair;
  for (std::size_t i = 0; i + 1 < f.width(); ++i) {
    if (is_nonzero(f[i]) && is_nonzero(f[i + 1])) {
      if (pair) return std::nullopt;
      pair = i;
    }
  }
  if (pair) return *pair + 1;
  if (f.width() == 0 || f[0] == Trit::Zero) return std::nullopt;
  return 0;
}

}  // namespace

CodecParams codec_params(int N) {
  check_width(N);
  std::int64_t e = to_i64(max_for_size(N - 1));
  Dyadic alpha = N > 2 ? Dyadic(max_for_size(N - 2), -(N - 1)) : Dyadic();
  return {N, alpha, Dyadic::pow2(e), e};
}

std::optional<ExponentClass> exponent_class(std::int64_t n, int N) {
  check_width(N);
  std::int64_t s = naf_size(n);
  if (s >= N) return std::nullopt;
  std::int64_t p = N - s;
  Ball b = ball_for_size(p);
  return ExponentClass{n, p, n - p + 1, b.center - b.radius, b.center + b.radius};
}

std::int64_t real_width(const Dyadic& x) {
  if (x.is_zero()) throw Error("range", "width of zero is -infinity");
  mpz_class t = 3 * x.mantissa();
  return static_cast<std::int64_t>(mpz_sizeinbase(t.get_mpz_t(), 2)) - 2 + x.exp2();
}

std::int64_t precision(const Dyadic& x, int N) { return N - naf_size(real_width(x)); }

Dyadic ulp(const Dyadic& x, int N) {
  auto cls = exponent_class(real_width(x), N);
  if (!cls) throw Error("range", x.to_power_form() + " is outside the dynamic range at N=" + std::to_string(N));
  return Dyadic::pow2(cls->ulp_exp2);
}

TritField encode_real(const Dyadic& x, int N) {
  check_width(N);
  if (x.is_zero()) throw Error("not-representable", "zero is the all-zero field, not a real form");
  std::int64_t n = real_width(x);
  auto cls = exponent_class(n, N);
  Dyadic q = cls ? x.shifted(-cls->ulp_exp2) : Dyadic();
  if (!cls || !q.is_integer()) {
    throw Error("not-representable", x.to_power_form() + " is not representable at N=" + std::to_string(N));
  }
  NafInteger m = recode_oracle(q.to_integer());
  NafInteger e = recode_oracle(mpz_class(static_cast<long>(n)));
  std::vector<Trit> digits(e.digits().rbegin(), e.digits().rend());
  digits.insert(digits.end(), m.digits().begin(), m.digits().end());
  return TritField(std::move(digits));
}

bool is_real_form(const TritField& f) {
  return f.width() >= kMinRealWidth && f.width() <= kMaxRealWidth && split_point(f).has_value();
}

RealNafDecomposition decompose_real(const TritField& f) {
  check_width(static_cast<std::int64_t>(f.width()));
  if (f.all_zero()) throw Error("zero", "the all-zero field is zero, not a pure-real form");
  auto s = split_point(f);
  if (!s) throw Error("malformed", "'" + render_trits(f) + "' is not a pure-real form");
  auto first = f.begin() + static_cast<std::ptrdiff_t>(*s);
  std::vector<Trit> n_digits(f.begin(), first);
  std::reverse(n_digits.begin(), n_digits.end());
  return {NafInteger::from_digits(std::vector<Trit>(first, f.end())),
          NafInteger::from_digits(std::move(n_digits)), static_cast<int>(f.width())};
}

Dyadic decode_real(const TritField& f) { return decompose_real(f).value(); }

TritField negate_real(const TritField& f) {
  RealNafDecomposition d = decompose_real(f);
  TritField out = f;
  for (auto i = static_cast<std::size_t>(d.n.size()); i < out.width(); ++i) out[i] = negate(out[i]);
  return out;
}

std::vector<Trit> naf_digit_stream(const Dyadic& x, std::size_t count) {
  Dyadic v = x.abs();
  Dyadic w = Dyadic::pow2(real_width(x));
  std::vector<Trit> out;
  out.reserve(count);
  bool force_zero = false;
  for (std::size_t k = 0; k < count; ++k, w = w.shifted(-1)) {
    if (!force_zero && v.abs() * 3 > w * 2) {
      Trit d = v.sign() > 0 ? Trit::Plus : Trit::Minus;
      v = v - (d == Trit::Plus ? w : -w);
      out.push_back(d);
      force_zero = true;
    } else {
      out.push_back(Trit::Zero);
      force_zero = false;
    }
  }
  return out;
}

Dyadic truncate_value(const Dyadic& x, int N) {
  std::int64_t n = real_width(x);
  auto cls = exponent_class(n, N);
  if (!cls) return clamp_extreme(x.sign(), n, N);
  auto digits = naf_digit_stream(x, static_cast<std::size_t>(cls->p));
  Dyadic v(digits_int_value(digits), cls->ulp_exp2);
  return x.sign() < 0 ? -v : v;
}

TritField truncate_real(const Dyadic& x, int N) { return encode_real(truncate_value(x, N), N); }

namespace {

struct Candidate {
  Dyadic value;
  std::int64_t ulp_exp2;
  std::int64_t n;

  bool even() const { return value.exp2() > ulp_exp2; }
};

}  // namespace

Dyadic round_value(const Dyadic& x, int N) {
  std::int64_t n = real_width(x);
  auto cls = exponent_class(n, N);
  if (!cls) return clamp_extreme(x.sign(), n, N);
  Dyadic y = x.abs();

  std::vector<Candidate> cands;
  mpz_class lo = y.floor_div_pow2(cls->ulp_exp2);
  mpz_class hi = Dyadic(lo, cls->ulp_exp2) == y ? lo : mpz_class(lo + 1);
  for (const mpz_class& q : {lo, hi}) {
    mpz_class c = std::clamp(q, cls->lo, cls->hi);
    cands.push_back({Dyadic(c, cls->ulp_exp2), cls->ulp_exp2, n});
  }
  if (auto below = exponent_class(n - 1, N)) cands.push_back({below->max_value(), below->ulp_exp2, n - 1});
  if (auto above = exponent_class(n + 1, N)) cands.push_back({above->min_value(), above->ulp_exp2, n + 1});

  const Candidate* best = &cands.front();
  Dyadic best_dist = (best->value - y).abs();
  for (const Candidate& c : cands) {
    Dyadic d = (c.value - y).abs();
    auto order = d <=> best_dist;
    bool take = order < 0;
    if (order == 0 && c.value != best->value) {
      if (c.even() != best->even()) {
        take = c.even();
      } else {
        take = c.n == n && best->n != n;
      }
    }
    if (take) {
      best = &c;
      best_dist = d;
    }
  }
  return x.sign() < 0 ? -best->value : best->value;
}

TritField round_real(const Dyadic& x, int N) { return encode_real(round_value(x, N), N); }

std::vector<std::pair<TritField, Dyadic>> enumerate_reals(int N) {
  std::int64_t e = codec_params(N).max_exponent;
  std::vector<std::pair<TritField, Dyadic>> positive;
  for (std::int64_t n = -e; n <= e; ++n) {
    auto cls = exponent_class(n, N);
    for (mpz_class m = cls->lo; m <= cls->hi; ++m) {
      Dyadic v(m, cls->ulp_exp2);
      positive.emplace_back(encode_real(v, N), v);
    }
  }
  std::vector<std::pair<TritField, Dyadic>> out;
  out.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.emplace_back(negate_real(it->first), -it->second);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

mpz_class comparison_key(const TritField& f) {
  if (f.all_zero()) return 0;
  RealNafDecomposition d = decompose_real(f);
  const int N = d.N;
  std::int64_t p = d.precision();
  mpz_class biased = mpz_class(static_cast<long>(d.exponent())) + codec_params(N).max_exponent + 1;
  mpz_class key = (biased << static_cast<mp_bitcnt_t>(N + 1)) + (::abs(d.m.value()) << static_cast<mp_bitcnt_t>(N - p));
  return d.m.value() < 0 ? mpz_class(-key) : key;
}

}  // namespace nafloat

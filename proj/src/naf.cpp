#include "nafloat/naf.hpp"

#include <algorithm>
#include <stdexcept>

#include "nafloat/error.hpp"

namespace nafloat {

namespace {

constexpr Trit P = Trit::Plus;
constexpr Trit O = Trit::Zero;
constexpr Trit M = Trit::Minus;

void require_positive(std::int64_t N, const char* what) {
  if (N < 1) throw Error("range", std::string(what) + ": N must be >= 1");
}

// Valid for N >= -1; V_{-1} = V_0 = 1.
mpz_class jacobsthal_raw(std::int64_t N) {
  mpz_class p = mpz_class(1) << static_cast<mp_bitcnt_t>(N + 2);
  p -= (N % 2 == 0) ? 1 : -1;
  return p / 3;
}

mpz_class max_raw(std::int64_t N) { return (jacobsthal_raw(N) - 1) / 2; }

}  // namespace

bool is_nonadjacent(std::span<const Trit> digits) noexcept {
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (is_nonzero(digits[i]) && is_nonzero(digits[i - 1])) return false;
  }
  return true;
}

NafInteger NafInteger::from_digits(std::vector<Trit> msb_first) {
  if (!msb_first.empty() && msb_first.front() == Trit::Zero) {
    throw Error("malformed", "NAF digits must not start with 0");
  }
  if (!is_nonadjacent(msb_first)) throw Error("malformed", "digits are not nonadjacent");
  NafInteger r;
  r.value_ = digits_int_value(msb_first);
  r.digits_ = std::move(msb_first);
  return r;
}

std::size_t NafInteger::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(digits_.begin(), digits_.end(), is_nonzero));
}

std::string NafInteger::str() const { return digits_.empty() ? "0" : render_trits(field()); }

std::optional<std::int64_t> naf_width(const mpz_class& x) {
  if (x == 0) return std::nullopt;
  mpz_class t = 3 * abs(x);
  return static_cast<std::int64_t>(mpz_sizeinbase(t.get_mpz_t(), 2)) - 2;
}

std::int64_t naf_size(const mpz_class& x) {
  auto w = naf_width(x);
  return w ? *w + 1 : 0;
}

mpz_class jacobsthal_count(std::int64_t N) {
  require_positive(N, "jacobsthal_count");
  return jacobsthal_raw(N);
}

mpz_class max_for_size(std::int64_t N) {
  require_positive(N, "max_for_size");
  return max_raw(N);
}

Ball ball_for_size(std::int64_t N) {
  require_positive(N, "ball_for_size");
  return {jacobsthal_raw(N - 2), mpz_class(1) << static_cast<mp_bitcnt_t>(N - 1), max_raw(N - 2)};
}

namespace {

mpz_class x_last(std::int64_t N) {
  mpz_class two_n = mpz_class(1) << static_cast<mp_bitcnt_t>(N);
  if (N % 2 == 0) return 2 * (two_n - 1) / 3;
  return (2 * two_n - 1) / 3;
}

}  // namespace

BatchExtrema batch_extrema(std::int64_t N) {
  require_positive(N, "batch_extrema");
  return {N == 1 ? mpz_class(1) : mpz_class(x_last(N - 1) + 1), x_last(N)};
}

NafInteger recode_oracle(const mpz_class& x) {
  mpz_class v = abs(x);
  std::vector<Trit> lsb_first;
  while (v > 0) {
    Trit d = Trit::Zero;
    if (mpz_odd_p(v.get_mpz_t())) {
      int z = 2 - static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 4));
      v -= z;
      d = trit_from_int(z);
    }
    lsb_first.push_back(x < 0 ? negate(d) : d);
    v >>= 1;
  }
  std::reverse(lsb_first.begin(), lsb_first.end());
  return NafInteger::from_digits(std::move(lsb_first));
}

// Rows (x_n x_{n-1}) in the order 11 10 1T 01 00 0T T1 T0 TT; columns a_{n-1} = 1 0 T.
const std::array<std::array<std::array<Trit, 3>, 3>, 3> kAssistantTable = {{
    {{{P, P, O}, {P, O, M}, {O, M, M}}},
    {{{P, O, O}, {O, O, O}, {O, O, M}}},
    {{{P, P, O}, {P, O, M}, {O, M, M}}},
}};

// Rows (x_{n+1} x_n); columns a_n = 1 0 T.
const std::array<std::array<std::array<std::uint8_t, 3>, 3>, 3> kJumpTable = {{
    {{{0, 1, 0}, {0, 0, 0}, {0, 1, 0}}},
    {{{0, 0, 0}, {1, 0, 1}, {0, 0, 0}}},
    {{{0, 1, 0}, {0, 0, 0}, {0, 1, 0}}},
}};

namespace {

// Chain state for positions 0..L (LSB-indexed); position L is the virtual
// extension digit that can absorb a final carry.
struct Chain {
  std::vector<Trit> x;  // LSB first, length L + 2 (two virtual zeros on top)
  std::vector<Trit> a;  // length L + 1
  std::vector<std::uint8_t> j;
};

Chain run_chain(const TritField& field) {
  const std::size_t L = field.width();
  Chain c;
  c.x.assign(L + 2, Trit::Zero);
  for (std::size_t n = 0; n < L; ++n) c.x[n] = field[L - 1 - n];
  c.a.resize(L + 1);
  c.j.resize(L + 1);
  Trit prev_a = Trit::Zero;
  for (std::size_t n = 0; n <= L; ++n) {
    Trit below = n ? c.x[n - 1] : Trit::Zero;
    c.a[n] = kAssistantTable[table_index(c.x[n])][table_index(below)][table_index(prev_a)];
    prev_a = c.a[n];
  }
  for (std::size_t n = 0; n <= L; ++n) {
    c.j[n] = kJumpTable[table_index(c.x[n + 1])][table_index(c.x[n])][table_index(c.a[n])];
  }
  return c;
}

Trit chain_digit(Trit x, Trit a, std::uint8_t j) {
  Trit z = a == Trit::Zero ? x : (x == Trit::Zero ? negate(a) : Trit::Zero);
  return j ? negate(z) : z;
}

}  // namespace

TritField assistant_values(const TritField& x) {
  Chain c = run_chain(x);
  std::vector<Trit> out(c.a.begin(), c.a.begin() + static_cast<std::ptrdiff_t>(x.width()));
  std::reverse(out.begin(), out.end());
  return TritField(std::move(out));
}

std::vector<std::uint8_t> j_values(const TritField& x) {
  Chain c = run_chain(x);
  std::vector<std::uint8_t> out(c.j.begin(), c.j.begin() + static_cast<std::ptrdiff_t>(x.width()));
  std::reverse(out.begin(), out.end());
  return out;
}

TritField recode_chain_field(const TritField& x) {
  Chain c = run_chain(x);
  const std::size_t L = x.width();
  std::vector<Trit> z(L + 1);
  for (std::size_t n = 0; n <= L; ++n) z[L - n] = chain_digit(c.x[n], c.a[n], c.j[n]);
  if (z.front() == Trit::Zero) z.erase(z.begin());
  return TritField(std::move(z));
}

NafInteger recode_chain(const TritField& x) {
  TritField z = recode_chain_field(x);
  auto first = std::find_if(z.begin(), z.end(), is_nonzero);
  return NafInteger::from_digits(std::vector<Trit>(first, z.end()));
}

}  // namespace nafloat

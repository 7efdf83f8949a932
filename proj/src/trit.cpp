#include "nafloat/trit.hpp"

#include <algorithm>
#include <stdexcept>

#include "nafloat/error.hpp"

namespace nafloat {

Trit trit_from_int(int v) {
  switch (v) {
    case -1: return Trit::Minus;
    case 0: return Trit::Zero;
    case 1: return Trit::Plus;
    default: throw std::invalid_argument("trit value out of {-1, 0, 1}: " + std::to_string(v));
  }
}

char trit_char(Trit t) noexcept {
  switch (t) {
    case Trit::Minus: return 'T';
    case Trit::Zero: return '0';
    case Trit::Plus: return '1';
  }
  return '?';
}

bool TritField::all_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](Trit t) { return t == Trit::Zero; });
}

bool TritField::zero_free() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), is_nonzero);
}

TritField TritField::negated() const {
  std::vector<Trit> out(digits_.size());
  std::transform(digits_.begin(), digits_.end(), out.begin(), [](Trit t) { return negate(t); });
  return TritField(std::move(out));
}

TritField TritField::reversed() const {
  return TritField(std::vector<Trit>(digits_.rbegin(), digits_.rend()));
}

TritField TritField::slice(std::size_t pos, std::size_t len) const {
  if (pos > digits_.size() || len > digits_.size() - pos) {
    throw std::out_of_range("TritField::slice out of range");
  }
  auto first = digits_.begin() + static_cast<std::ptrdiff_t>(pos);
  return TritField(std::vector<Trit>(first, first + static_cast<std::ptrdiff_t>(len)));
}

TritField TritField::concat(const TritField& right) const {
  std::vector<Trit> out(digits_);
  out.insert(out.end(), right.digits_.begin(), right.digits_.end());
  return TritField(std::move(out));
}

TritField parse_trits(std::string_view text) {
  if (text.empty()) throw Error("parse", "empty trit string");
  std::vector<Trit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '1': digits.push_back(Trit::Plus); break;
      case '0': digits.push_back(Trit::Zero); break;
      case 'T': digits.push_back(Trit::Minus); break;
      default:
        throw Error("parse", std::string("invalid trit character '") + c + "'");
    }
  }
  return TritField(std::move(digits));
}

std::string render_trits(const TritField& f) {
  std::string out;
  out.reserve(f.width());
  for (Trit t : f) out.push_back(trit_char(t));
  return out;
}

std::string render_trits_overbar(const TritField& f) {
  std::string out;
  for (std::size_t i = 0; i < f.width(); ++i) {
    if (i) out.push_back(' ');
    out += f[i] == Trit::Minus ? "\xC2\xAF" "1" : std::string(1, trit_char(f[i]));
  }
  return out;
}

mpz_class digits_int_value(std::span<const Trit> msb_first) {
  mpz_class v = 0;
  for (Trit t : msb_first) {
    v <<= 1;
    v += to_int(t);
  }
  return v;
}

mpz_class field_int_value(const TritField& f) { return digits_int_value(f.digits()); }

namespace {

constexpr unsigned code_of(Trit t) {
  switch (t) {
    case Trit::Zero: return 0b00;
    case Trit::Plus: return 0b01;
    case Trit::Minus: return 0b10;
  }
  return 0b11;
}

}  // namespace

std::vector<std::uint8_t> pack_binary(const TritField& f) {
  if (f.width() > 0xFFFF) throw Error("range", "field wider than 65535 trits cannot be packed");
  std::vector<std::uint8_t> out;
  out.reserve(2 + (f.width() + 3) / 4);
  out.push_back(static_cast<std::uint8_t>(f.width() & 0xFF));
  out.push_back(static_cast<std::uint8_t>(f.width() >> 8));
  std::uint8_t byte = 0;
  for (std::size_t i = 0; i < f.width(); ++i) {
    unsigned shift = 6 - 2 * (i % 4);
    byte |= static_cast<std::uint8_t>(code_of(f[i]) << shift);
    if (i % 4 == 3) {
      out.push_back(byte);
      byte = 0;
    }
  }
  if (f.width() % 4 != 0) out.push_back(byte);
  return out;
}

TritField unpack_binary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) throw Error("malformed", "missing width prefix");
  std::size_t width = bytes[0] | (std::size_t{bytes[1]} << 8);
  std::size_t payload = (width + 3) / 4;
  if (bytes.size() - 2 < payload) throw Error("malformed", "truncated trit payload");
  if (bytes.size() - 2 > payload) throw Error("malformed", "trailing bytes after trit payload");
  std::vector<Trit> digits;
  digits.reserve(width);
  for (std::size_t i = 0; i < payload * 4; ++i) {
    unsigned shift = 6 - 2 * (i % 4);
    unsigned code = (bytes[2 + i / 4] >> shift) & 0b11;
    if (i >= width) {
      if (code != 0) throw Error("malformed", "non-zero padding bits");
      continue;
    }
    switch (code) {
      case 0b00: digits.push_back(Trit::Zero); break;
      case 0b01: digits.push_back(Trit::Plus); break;
      case 0b10: digits.push_back(Trit::Minus); break;
      default: throw Error("malformed", "invalid trit code 11 at position " + std::to_string(i));
    }
  }
  return TritField(std::move(digits));
}

}  // namespace nafloat

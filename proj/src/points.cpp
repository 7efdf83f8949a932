#include "nafloat/points.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nafloat/error.hpp"
#include "nafloat/realcodec.hpp"

namespace nafloat {

namespace {

constexpr Trit P = Trit::Plus;
constexpr Trit O = Trit::Zero;
constexpr Trit M = Trit::Minus;

using Pair = std::array<Trit, 2>;
using Triple = std::array<Trit, 3>;

// PCM1: second and third significand trits of an exponent-zero form.
const std::map<Pair, Pair> kPcm1 = {
    {{O, P}, {M, P}},
    {{O, O}, {M, M}},
    {{O, M}, {P, M}},
};

// PCM3 and PCM4: the nonadjacent pair x1 x2 next to the 0 that bounds an
// edge point, written as a zero-free triple in place of (0, x1, x2) or
// (x1, x2, 0).
const std::map<Pair, Triple> kEdgeTable = {
    {{O, O}, {P, P, P}},
    {{O, P}, {P, P, M}},
    {{O, M}, {P, M, P}},
    {{P, O}, {P, M, M}},
    {{M, O}, {M, P, P}},
};

template <typename K, typename V>
std::map<V, K> inverted(const std::map<K, V>& m) {
  std::map<V, K> out;
  for (const auto& [k, v] : m) out.emplace(v, k);
  return out;
}

const std::map<Pair, Pair>& pcm1_inverse() {
  static const auto inv = inverted(kPcm1);
  return inv;
}

const std::map<Triple, Pair>& edge_inverse() {
  static const auto inv = inverted(kEdgeTable);
  return inv;
}

// PCM5: the 43 nonadjacent 5-trit strings in lexicographic order (T < 0 < 1).
// The index is written as six binary digits with 1 -> 1 and 0 -> T.
const std::vector<std::array<Trit, 5>>& five_strings() {
  static const auto table = [] {
    std::vector<std::array<Trit, 5>> out;
    const Trit order[3] = {M, O, P};
    for (int i = 0; i < 243; ++i) {
      std::array<Trit, 5> s{};
      int v = i;
      for (int k = 4; k >= 0; --k, v /= 3) s[static_cast<std::size_t>(k)] = order[v % 3];
      if (is_nonadjacent(s)) out.push_back(s);
    }
    return out;
  }();
  return table;
}

[[noreturn]] void malformed(int k, const std::string& why) {
  throw Error("malformed", "PCM" + std::to_string(k) + ": " + why);
}

[[noreturn]] void no_meaning(const TritField& f, const std::string& why) {
  throw Error("no-meaning", "'" + render_trits(f) + "' has no assigned meaning (" + why + ")");
}

PointClass class_of(const Point& p) { return {p.placement, p.length}; }

Point single_point(int k, const TritField& f) {
  auto pts = find_points(f);
  if (pts.size() != 1) malformed(k, "expected exactly one point");
  return pts.front();
}

bool has_class(const TritField& f, std::initializer_list<PointClass> allowed) {
  auto pts = find_points(f);
  if (pts.size() != 1 || pts.front().full) return false;
  return std::find(allowed.begin(), allowed.end(), class_of(pts.front())) != allowed.end();
}

bool is_exponent_zero_form(const TritField& f) { return f.width() > 0 && f[0] != O && find_points(f).empty(); }

}  // namespace

std::vector<Point> find_points(const TritField& f) {
  std::vector<Point> out;
  const std::size_t W = f.width();
  std::size_t i = 0;
  while (i < W) {
    if (f[i] == O) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < W && f[j] != O) ++j;
    if (j - i >= 2) {
      Placement pl = i == 0 ? Placement::Left : j == W ? Placement::Right : Placement::Middle;
      out.push_back({i, j - i, pl, i == 0 && j == W});
    }
    i = j;
  }
  return out;
}

std::string PointClass::name() const {
  char c = placement == Placement::Left ? 'L' : placement == Placement::Right ? 'R' : 'M';
  return c + std::to_string(length);
}

std::optional<ClassRow> class_row(PointClass c) {
  using PT = PointType;
  switch (c.placement) {
    case Placement::Left:
      if (c.length == 2) return ClassRow{PT::I, 0};
      if (c.length == 3 || c.length == 4) return ClassRow{PT::I, 1};
      if (c.length == 5 || c.length == 6) return ClassRow{PT::II, 3};
      if (c.length == 7 || c.length == 8) return ClassRow{PT::II, 5};
      break;
    case Placement::Middle:
      if (c.length == 2) return ClassRow{PT::I, 0};
      if (c.length == 3 || c.length == 4) return ClassRow{PT::II, 2};
      break;
    case Placement::Right:
      if (c.length == 2) return ClassRow{PT::I, 0};
      if (c.length == 3 || c.length == 4) return ClassRow{PT::II, 2};
      if (c.length == 5 || c.length == 6) return ClassRow{PT::II, 4};
      break;
  }
  return std::nullopt;
}

std::string PointSignature::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    switch (entries[i]) {
      case SigEntry::TypeI: out += "1"; break;
      case SigEntry::TypeII: out += "2"; break;
      case SigEntry::Full: out += "inf"; break;
      case SigEntry::NoPoint: out += "0"; break;
      case SigEntry::AllZero: out += "-1"; break;
      case SigEntry::Unassigned: out += "?"; break;
    }
  }
  return out + "}";
}

namespace {

// Type of a point seen inside a subfield [offset, offset + width).
SigEntry local_type(const Point& p, std::size_t offset, std::size_t width) {
  std::size_t start = p.start - offset;
  std::size_t end = start + p.length;
  if (start == 0 && end == width) return SigEntry::Unassigned;
  Placement pl = start == 0 ? Placement::Left : end == width ? Placement::Right : Placement::Middle;
  auto row = class_row({pl, p.length});
  if (!row || width < kMinPointWidth) return SigEntry::Unassigned;
  if (row->type == PointType::II) return width >= kMinTypeIIWidth ? SigEntry::TypeII : SigEntry::Unassigned;
  return SigEntry::TypeI;
}

// Subfield width when the points divide evenly, one per part; 0 otherwise.
std::size_t even_split(const std::vector<Point>& pts, std::size_t W) {
  const std::size_t parts = pts.size();
  if (parts != 2 && parts != 4) return 0;
  if (W % parts != 0) return 0;
  const std::size_t w = W / parts;
  for (std::size_t i = 0; i < parts; ++i) {
    if (pts[i].start < i * w || pts[i].start + pts[i].length > (i + 1) * w) return 0;
  }
  return w;
}

}  // namespace

PointSignature point_signature(const TritField& f) {
  if (f.all_zero()) return {{SigEntry::AllZero}};
  auto pts = find_points(f);
  if (pts.empty()) return {{SigEntry::NoPoint}};
  if (pts.size() == 1 && pts.front().full) return {{SigEntry::Full}};
  const std::size_t W = f.width();
  std::size_t w = even_split(pts, W);
  PointSignature sig;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sig.entries.push_back(w ? local_type(pts[i], i * w, w) : local_type(pts[i], 0, W));
  }
  return sig;
}

namespace {

TritField rewrite(int k, const TritField& f) {
  const std::size_t W = f.width();
  TritField out = f;
  switch (k) {
    case 1: {
      if (W < 3 || !is_exponent_zero_form(f)) malformed(k, "needs an exponent-zero form of width >= 3");
      Pair y = kPcm1.at({f[1], f[2]});
      out[1] = y[0];
      out[2] = y[1];
      return out;
    }
    case 2: {
      if (!has_class(f, {{Placement::Middle, 2}})) malformed(k, "needs a single M2 point");
      Point p = single_point(k, f);
      out[p.start + 2] = f[p.start + 1];
      return out;
    }
    case 3: {
      if (W < 5 || !has_class(f, {{Placement::Left, 2}})) malformed(k, "needs a single L2 point, width >= 5");
      Triple y = kEdgeTable.at({f[3], f[4]});
      std::copy(y.begin(), y.end(), &out[2]);
      return out;
    }
    case 4: {
      if (W < 5 || !has_class(f, {{Placement::Right, 2}})) malformed(k, "needs a single R2 point, width >= 5");
      Triple y = kEdgeTable.at({f[W - 5], f[W - 4]});
      std::copy(y.begin(), y.end(), &out[W - 5]);
      return out;
    }
    case 5: {
      if (W < 7 || !is_exponent_zero_form(f)) malformed(k, "needs an exponent-zero form of width >= 7");
      const auto& table = five_strings();
      std::array<Trit, 5> x{f[2], f[3], f[4], f[5], f[6]};
      auto idx = static_cast<std::size_t>(std::find(table.begin(), table.end(), x) - table.begin());
      for (std::size_t b = 0; b < 6; ++b) out[1 + b] = (idx >> (5 - b)) & 1 ? P : M;
      return out;
    }
    default:
      throw Error("range", "PCM index must be 1..5");
  }
}

}  // namespace

TritField apply_pcm(int k, const TritField& f) {
  TritField out = rewrite(k, f);
  auto pts = find_points(out);
  if (pts.size() != 1 || pts.front().full) malformed(k, "image would span the whole field");
  return out;
}

TritField invert_pcm(int k, const TritField& f) {
  const std::size_t W = f.width();
  TritField out = f;
  auto expect = [&](bool ok, const char* why) {
    if (!ok) malformed(k, why);
  };
  switch (k) {
    case 1: {
      expect(has_class(f, {{Placement::Left, 3}, {Placement::Left, 4}}), "needs a single L3/L4 point");
      auto it = pcm1_inverse().find({f[1], f[2]});
      expect(it != pcm1_inverse().end(), "trits 2-3 are not a PCM1 image");
      out[1] = it->second[0];
      out[2] = it->second[1];
      expect(find_points(out).empty(), "inverse leaves a point");
      return out;
    }
    case 2: {
      expect(has_class(f, {{Placement::Middle, 3}, {Placement::Middle, 4}, {Placement::Right, 3}, {Placement::Right, 4}}),
             "needs a single M3/M4/R3/R4 point");
      Point p = single_point(k, f);
      expect(f[p.start + 2] == f[p.start + 1], "trit after the copied pair differs");
      out[p.start + 2] = O;
      expect(has_class(out, {{Placement::Middle, 2}}), "inverse is not an M2 point");
      return out;
    }
    case 3: {
      expect(has_class(f, {{Placement::Left, 5}, {Placement::Left, 6}}), "needs a single L5/L6 point");
      auto it = edge_inverse().find({f[2], f[3], f[4]});
      expect(it != edge_inverse().end(), "trits 3-5 are not a PCM3 image");
      out[2] = O;
      out[3] = it->second[0];
      out[4] = it->second[1];
      expect(has_class(out, {{Placement::Left, 2}}), "inverse is not an L2 point");
      return out;
    }
    case 4: {
      expect(has_class(f, {{Placement::Right, 5}, {Placement::Right, 6}}), "needs a single R5/R6 point");
      auto it = edge_inverse().find({f[W - 5], f[W - 4], f[W - 3]});
      expect(it != edge_inverse().end(), "trits are not a PCM4 image");
      out[W - 5] = it->second[0];
      out[W - 4] = it->second[1];
      out[W - 3] = O;
      expect(has_class(out, {{Placement::Right, 2}}), "inverse is not an R2 point");
      return out;
    }
    case 5: {
      expect(has_class(f, {{Placement::Left, 7}, {Placement::Left, 8}}), "needs a single L7/L8 point");
      std::size_t idx = 0;
      for (std::size_t b = 0; b < 6; ++b) idx = 2 * idx + (f[1 + b] == P ? 1 : 0);
      const auto& table = five_strings();
      expect(idx < table.size(), "index beyond the 43 five-trit strings");
      out[1] = O;
      std::copy(table[idx].begin(), table[idx].end(), &out[2]);
      expect(find_points(out).empty(), "inverse leaves a point");
      return out;
    }
    default:
      throw Error("range", "PCM index must be 1..5");
  }
}

TritField encode_type1(const Dyadic& x, std::size_t width) {
  if (width < kMinPointWidth) throw Error("range", "type-I reals need width >= 5");
  TritField f = encode_real(x, static_cast<int>(width));
  return find_points(f).empty() ? apply_pcm(1, f) : f;
}

TritField encode_type2(const Dyadic& x, std::size_t width) {
  if (width < kMinTypeIIWidth) throw Error("range", "type-II reals need width > 8");
  TritField f = encode_real(x, static_cast<int>(width));
  auto pts = find_points(f);
  if (pts.empty()) return apply_pcm(5, f);
  switch (pts.front().placement) {
    case Placement::Left: return apply_pcm(3, f);
    case Placement::Right: return apply_pcm(4, f);
    case Placement::Middle: return apply_pcm(2, f);
  }
  return f;
}

namespace {

bool starts_with(const TritField& f, Trit a, Trit b, Trit c) {
  return f.width() >= 3 && f[0] == a && f[1] == b && f[2] == c;
}

TritField infinity_field(std::size_t width, bool negative) {
  TritField f(width);
  f[0] = negative ? M : P;
  f[1] = P;
  f[2] = P;
  return f;
}

// A (sub)field with exactly one point that is not full.
DecodedEntity decode_single(const TritField& f) {
  const std::size_t W = f.width();
  if (W < kMinPointWidth) no_meaning(f, "point layer needs width >= 5");
  auto pts = find_points(f);
  auto row = class_row(class_of(pts.front()));
  if (!row) no_meaning(f, "point class " + class_of(pts.front()).name() + " is unassigned");
  try {
    if (row->type == PointType::I) {
      if (row->pcm == 1) {
        if (starts_with(f, P, P, P)) return entity::PlusInf{};
        if (starts_with(f, M, P, P)) return entity::MinusInf{};
      }
      Dyadic x = decode_real(row->pcm == 1 ? invert_pcm(1, f) : f);
      if (encode_type1(x, W) != f) no_meaning(f, "not a canonical real");
      return entity::Real{x};
    }
    if (W < kMinTypeIIWidth) no_meaning(f, "type-II point in a field of width <= 8");
    Dyadic b = decode_real(invert_pcm(row->pcm, f));
    if (encode_type2(b, W) != f) no_meaning(f, "not a canonical imaginary");
    return entity::Complex{Dyadic(), b};
  } catch (const Error& e) {
    if (e.code() == "malformed") no_meaning(f, e.what());
    throw;
  }
}

const Dyadic* finite_real(const DecodedEntity& e) {
  auto* r = std::get_if<entity::Real>(&e);
  return r ? &r->value : nullptr;
}

const Dyadic* imaginary(const DecodedEntity& e) {
  auto* c = std::get_if<entity::Complex>(&e);
  return c && c->re.is_zero() ? &c->im : nullptr;
}

// Builds composite fields without validating that the result reads back.
TritField compose(const DecodedEntity& e, std::size_t N);

}  // namespace

DecodedEntity classify(const TritField& f) {
  const std::size_t W = f.width();
  if (W == 0) throw Error("malformed", "empty field");
  if (f.all_zero()) return entity::Zero{};
  auto pts = find_points(f);
  if (pts.empty()) return entity::Integer{field_int_value(f)};
  if (pts.size() == 1 && pts.front().full) {
    entity::Boolean b;
    for (Trit t : f) b.bits.push_back(t == P);
    return b;
  }
  if (pts.size() == 1) return decode_single(f);

  if (pts.size() == 2 && complex_capable(W) && starts_with(f, P, P, P)) return entity::ComplexInf{};

  const std::size_t w = even_split(pts, W);
  if (w == 0) no_meaning(f, std::to_string(pts.size()) + " points that do not divide evenly");
  if (w < kMinPointWidth) no_meaning(f, "subfields narrower than 5");

  std::vector<SigEntry> types;
  for (std::size_t i = 0; i < pts.size(); ++i) types.push_back(local_type(pts[i], i * w, w));
  using S = SigEntry;
  if (types == std::vector<S>{S::TypeI, S::TypeII, S::TypeI, S::TypeII} ||
      types == std::vector<S>{S::TypeI, S::TypeI, S::TypeI, S::TypeII}) {
    throw Error("reserved", "signature " + PointSignature{types}.str() + " is reserved");
  }

  std::vector<DecodedEntity> parts;
  for (std::size_t i = 0; i < pts.size(); ++i) parts.push_back(decode_single(f.slice(i * w, w)));

  DecodedEntity result = entity::Zero{};
  if (pts.size() == 2) {
    const Dyadic* a = finite_real(parts[0]);
    if (a && imaginary(parts[1])) {
      result = entity::Complex{*a, *imaginary(parts[1])};
    } else if (a && finite_real(parts[1])) {
      result = entity::Vec2{{*a, *finite_real(parts[1])}};
    } else {
      no_meaning(f, "halves are not (real, imaginary) or (real, real)");
    }
  } else {
    entity::Vec4 v;
    for (std::size_t i = 0; i < 4; ++i) {
      const Dyadic* x = finite_real(parts[i]);
      if (!x) no_meaning(f, "quarters are not all finite reals");
      v.items[i] = *x;
    }
    result = v;
  }
  if (compose(result, W) != f) no_meaning(f, "subfields do not re-encode to the field");
  return result;
}

namespace {

void require_width(bool ok, const std::string& what) {
  if (!ok) throw Error("range", what);
}

TritField concat_all(const std::vector<TritField>& parts) {
  TritField out;
  for (const auto& p : parts) out = out.concat(p);
  return out;
}

TritField compose(const DecodedEntity& e, std::size_t N) {
  return std::visit(
      [N](const auto& v) -> TritField {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, entity::Zero>) {
          require_width(N >= 1, "width must be >= 1");
          return TritField(N);
        } else if constexpr (std::is_same_v<T, entity::Real>) {
          if (v.value.is_zero()) return compose(entity::Zero{}, N);
          return encode_type1(v.value, N);
        } else if constexpr (std::is_same_v<T, entity::PlusInf> || std::is_same_v<T, entity::MinusInf>) {
          require_width(N >= kMinPointWidth, "infinities need width >= 5");
          return infinity_field(N, std::is_same_v<T, entity::MinusInf>);
        } else if constexpr (std::is_same_v<T, entity::Integer>) {
          NafInteger z = recode_oracle(v.value);
          if (static_cast<std::size_t>(z.size()) > N) {
            throw Error("range", v.value.get_str() + " needs " + std::to_string(z.size()) + " trits");
          }
          TritField f(N);
          std::copy(z.digits().begin(), z.digits().end(), &f[N - static_cast<std::size_t>(z.size())]);
          return f;
        } else if constexpr (std::is_same_v<T, entity::Boolean>) {
          require_width(v.bits.size() == N && N >= 2, "boolean needs exactly N >= 2 bits");
          TritField f(N);
          for (std::size_t i = 0; i < N; ++i) f[i] = v.bits[i] ? P : M;
          return f;
        } else if constexpr (std::is_same_v<T, entity::Complex>) {
          if (v.im.is_zero()) return compose(entity::Real{v.re}, N);
          if (v.re.is_zero()) return encode_type2(v.im, N);
          require_width(complex_capable(N), "complex a+bi needs even N with N/2 > 8");
          return encode_type1(v.re, N / 2).concat(encode_type2(v.im, N / 2));
        } else if constexpr (std::is_same_v<T, entity::ComplexInf>) {
          require_width(complex_capable(N), "complex infinity needs even N with N/2 > 8");
          return infinity_field(N / 2, false).concat(encode_type2(Dyadic(1), N / 2));
        } else if constexpr (std::is_same_v<T, entity::Vec2>) {
          require_width(N % 2 == 0 && N / 2 >= kMinPointWidth, "vec2 needs even N >= 10");
          for (const Dyadic& x : v.items) {
            if (x.is_zero()) throw Error("unsupported", "vector components must be nonzero");
          }
          return concat_all({encode_type1(v.items[0], N / 2), encode_type1(v.items[1], N / 2)});
        } else {
          require_width(N % 4 == 0 && N / 4 >= kMinPointWidth, "vec4 needs N divisible by 4, N >= 20");
          std::vector<TritField> parts;
          for (const Dyadic& x : v.items) {
            if (x.is_zero()) throw Error("unsupported", "vector components must be nonzero");
            parts.push_back(encode_type1(x, N / 4));
          }
          return concat_all(parts);
        }
      },
      e);
}

DecodedEntity normalized(const DecodedEntity& e) {
  if (auto* c = std::get_if<entity::Complex>(&e)) {
    if (c->im.is_zero()) return c->re.is_zero() ? DecodedEntity{entity::Zero{}} : DecodedEntity{entity::Real{c->re}};
  }
  if (auto* r = std::get_if<entity::Real>(&e); r && r->value.is_zero()) return entity::Zero{};
  if (auto* i = std::get_if<entity::Integer>(&e); i && i->value == 0) return entity::Zero{};
  return e;
}

}  // namespace

TritField encode_entity(const DecodedEntity& e, std::size_t N) {
  TritField f = compose(e, N);
  bool composite = std::holds_alternative<entity::Vec2>(e) || std::holds_alternative<entity::Vec4>(e) ||
                   (std::holds_alternative<entity::Complex>(e) && !std::get<entity::Complex>(e).re.is_zero() &&
                    !std::get<entity::Complex>(e).im.is_zero());
  if (composite) {
    bool ok = false;
    try {
      ok = classify(f) == normalized(e);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) throw Error("not-representable", "subfields merge across the boundary in '" + render_trits(f) + "'");
  }
  return f;
}

std::string entity_tag(const DecodedEntity& e) {
  static const char* names[] = {"zero",    "real",    "+inf",        "-inf", "integer",
                                "boolean", "complex", "complex-inf", "vec2", "vec4"};
  return names[e.index()];
}

std::string describe(const DecodedEntity& e) {
  auto num = [](const Dyadic& x) {
    constexpr std::int64_t kMaxDecimalExp = 4096;
    return x.exp2() > kMaxDecimalExp || x.exp2() < -kMaxDecimalExp ? x.to_power_form() : x.to_decimal();
  };
  return std::visit(
      [&num](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, entity::Zero>) {
          return "0";
        } else if constexpr (std::is_same_v<T, entity::Real>) {
          return v.value.to_display();
        } else if constexpr (std::is_same_v<T, entity::PlusInf>) {
          return "+inf";
        } else if constexpr (std::is_same_v<T, entity::MinusInf>) {
          return "-inf";
        } else if constexpr (std::is_same_v<T, entity::Integer>) {
          return v.value.get_str();
        } else if constexpr (std::is_same_v<T, entity::Boolean>) {
          std::string out = "[";
          for (std::size_t i = 0; i < v.bits.size(); ++i) out += (i ? ", " : "") + std::string(v.bits[i] ? "true" : "false");
          return out + "]";
        } else if constexpr (std::is_same_v<T, entity::Complex>) {
          std::string im = num(v.im.abs());
          if (v.re.is_zero()) return (v.im.sign() < 0 ? "-" : "") + im + "i";
          return num(v.re) + (v.im.sign() < 0 ? " - " : " + ") + im + "i";
        } else if constexpr (std::is_same_v<T, entity::ComplexInf>) {
          return "complex-inf";
        } else {
          std::string out = "(";
          for (std::size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + num(v.items[i]);
          return out + ")";
        }
      },
      e);
}

}  // namespace nafloat

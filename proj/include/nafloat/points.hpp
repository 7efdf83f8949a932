#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "nafloat/dyadic.hpp"
#include "nafloat/trit.hpp"

namespace nafloat {

// Extension layer: a field's meaning is read off its points, i.e. maximal
// runs of two or more nonzero trits.

enum class Placement { Left, Middle, Right };

struct Point {
  std::size_t start = 0;
  std::size_t length = 0;
  Placement placement = Placement::Middle;
  bool full = false;  // spans the whole (sub)field

  friend bool operator==(const Point&, const Point&) = default;
};

/// Maximal nonzero runs of length >= 2, left to right.
std::vector<Point> find_points(const TritField& f);

struct PointClass {
  Placement placement;
  std::size_t length;

  std::string name() const;  // "L3", "M2", ...
  friend bool operator==(const PointClass&, const PointClass&) = default;
};

enum class PointType { I = 1, II = 2 };

struct ClassRow {
  PointType type;
  int pcm;  // 0..5
};

/// Row of the point-type table: L2/M2/R2 -> (I, 0), L3/L4 -> (I, 1),
/// M3/M4/R3/R4 -> (II, 2), L5/L6 -> (II, 3), R5/R6 -> (II, 4),
/// L7/L8 -> (II, 5). Every other class has no row.
std::optional<ClassRow> class_row(PointClass c);

/// Smallest width that carries a point layer at all, and the smallest that
/// may carry type-II points.
constexpr std::size_t kMinPointWidth = 5;
constexpr std::size_t kMinTypeIIWidth = 9;

/// True when a width-N field can hold a complex a + bi with both halves
/// carrying type-II capable reals.
constexpr bool complex_capable(std::size_t N) { return N % 2 == 0 && N / 2 >= kMinTypeIIWidth; }

enum class SigEntry { TypeI, TypeII, Full, NoPoint, AllZero, Unassigned };

struct PointSignature {
  std::vector<SigEntry> entries;

  /// "{1,2}", "{inf}", "{0}", "{-1}"; unassigned points print as "?".
  std::string str() const;
  friend bool operator==(const PointSignature&, const PointSignature&) = default;
};

/// Point types are read in the halves (two points) or quarters (four points)
/// when the points divide evenly among them, else in the whole field.
PointSignature point_signature(const TritField& f);

/// Point correction mappings. apply_pcm(k, f) expects:
///   k = 1: exponent-zero pure-real form (no point)
///   k = 2: pure-real form whose point is M2
///   k = 3: pure-real form whose point is L2
///   k = 4: pure-real form whose point is R2
///   k = 5: exponent-zero pure-real form, width >= 7
/// and throw Error("malformed") on any other shape, or when the image would
/// be a full point. invert_pcm(k, f) is the
/// exact inverse on the image.
TritField apply_pcm(int k, const TritField& f);
TritField invert_pcm(int k, const TritField& f);
inline TritField apply_pcm1(const TritField& f) { return apply_pcm(1, f); }
inline TritField invert_pcm1(const TritField& f) { return invert_pcm(1, f); }

/// Finite nonzero real as a one-point field of the given type.
TritField encode_type1(const Dyadic& x, std::size_t width);
TritField encode_type2(const Dyadic& x, std::size_t width);

namespace entity {
struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct Real {
  Dyadic value;
  friend bool operator==(const Real&, const Real&) = default;
};
struct PlusInf {
  friend bool operator==(const PlusInf&, const PlusInf&) = default;
};
struct MinusInf {
  friend bool operator==(const MinusInf&, const MinusInf&) = default;
};
struct Integer {
  mpz_class value;
  friend bool operator==(const Integer& a, const Integer& b) { return a.value == b.value; }
};
struct Boolean {
  std::vector<bool> bits;
  friend bool operator==(const Boolean&, const Boolean&) = default;
};
struct Complex {
  Dyadic re;
  Dyadic im;
  friend bool operator==(const Complex&, const Complex&) = default;
};
struct ComplexInf {
  friend bool operator==(const ComplexInf&, const ComplexInf&) = default;
};
struct Vec2 {
  std::array<Dyadic, 2> items;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};
struct Vec4 {
  std::array<Dyadic, 4> items;
  friend bool operator==(const Vec4&, const Vec4&) = default;
};
}  // namespace entity

using DecodedEntity = std::variant<entity::Zero, entity::Real, entity::PlusInf, entity::MinusInf, entity::Integer,
                                   entity::Boolean, entity::Complex, entity::ComplexInf, entity::Vec2, entity::Vec4>;

/// "zero", "real", "+inf", "-inf", "integer", "boolean", "complex",
/// "complex-inf", "vec2", "vec4".
std::string entity_tag(const DecodedEntity& e);
/// Human-readable rendering with exact decimal values.
std::string describe(const DecodedEntity& e);

/// Reads a field. Throws Error("no-meaning") for fields without an assigned
/// meaning and Error("reserved") for the reserved four-point signatures.
DecodedEntity classify(const TritField& f);

/// Inverse of classify on its image. Complex(a, 0) encodes as Real(a).
/// Throws Error("range") for widths the entity cannot use,
/// Error("not-representable") for components that need rounding first or
/// whose halves would merge into one point, Error("unsupported") for vector
/// components that are zero or infinite.
TritField encode_entity(const DecodedEntity& e, std::size_t N);

}  // namespace nafloat

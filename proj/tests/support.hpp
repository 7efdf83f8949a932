#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nafloat/trit.hpp"

namespace testsupport {

using nafloat::Trit;
using nafloat::TritField;

// Field number `index` of width w in base-3 order (digit 0 -> 0, 1 -> 1, 2 -> T).
inline TritField nth_field(std::uint64_t index, std::size_t w) {
  std::vector<Trit> d(w);
  for (std::size_t i = 0; i < w; ++i) {
    static constexpr Trit map[3] = {Trit::Zero, Trit::Plus, Trit::Minus};
    d[w - 1 - i] = map[index % 3];
    index /= 3;
  }
  return TritField(std::move(d));
}

inline std::uint64_t pow3(std::size_t w) {
  std::uint64_t r = 1;
  while (w--) r *= 3;
  return r;
}

inline TritField random_field(std::mt19937_64& rng, std::size_t w) {
  std::uniform_int_distribution<int> dist(-1, 1);
  std::vector<Trit> d(w);
  for (auto& t : d) t = static_cast<Trit>(dist(rng));
  return TritField(std::move(d));
}

// Independent NAF enumerator: every nonadjacent digit string of
// exactly `size` digits with a nonzero leading digit, as integer values.
inline void naf_values_of_size(std::size_t size, std::vector<long>& out) {
  auto rec = [&](auto& self, std::size_t i, int prev, long acc) -> void {
    if (i == size) {
      out.push_back(acc);
      return;
    }
    for (int v : {-1, 0, 1}) {
      if (i == 0 && v == 0) continue;
      if (v != 0 && prev != 0) continue;
      self(self, i + 1, v, acc * 2 + v);
    }
  };
  if (size == 0) {
    out.push_back(0);
    return;
  }
  rec(rec, 0, 0, 0);
}

}  // namespace testsupport

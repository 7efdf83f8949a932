#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nafloat/dyadic.hpp"

namespace nafloat {

// Analytic models used to compare the tapered ternary format with IEEE-754,
// posits and Morris' tapered binary format.

enum class System { IEEE, POSIT, MORRIS, NONADJ };

std::string system_name(System s);  // "IEEE", "POSIT", ...
/// Case-insensitive; Error("parse") on unknown names.
System parse_system(const std::string& name);

// Precision by order of magnitude: digits of precision available to values
// with floor(log2 |x|) = n_x. Never negative.
std::int64_t ieee_pbom(int N, std::int64_t n_x);
std::int64_t posit_pbom(int N, int es, std::int64_t n_x);
/// n_x is the stored exponent, so a value x counts under floor(log2(3|x|/2)).
std::int64_t nonadj_pbom(int N, std::int64_t n_x);

struct MorrisModel {
  int N;
  int g;
  int max_g;                      // largest g with g + 2^g + 2 <= N
  std::int64_t range_exponent;    // values lie within 2^(+-2^g)

  /// N - g - 2 - floor(log2 |n_x|); nullopt for the exceptional n_x = 0.
  std::optional<std::int64_t> precision(std::int64_t n_x) const;
};
int morris_max_g(int N);
/// Error("range") unless 1 <= g <= morris_max_g(N).
MorrisModel morris_model(int N, int g);
/// (-1)^sm * (1 + m * 2^(-floor(log2 m) - 1)) * 2^((-1)^sn * n), with 1 for m = 0.
Dyadic morris_value(bool sm, bool sn, std::int64_t n, const mpz_class& m);

/// s_N for IEEE, es_N for posits, 0 for NONADJ; the CSV column es_or_s.
int system_parameter(System s, int N);
/// Largest B over all n_x.
std::int64_t maximum_precision(System s, int N);

struct MeritRecord {
  System system;
  int N;
  std::int64_t LVALOM, LVALOM10;
  std::int64_t SPVALOM, SPVALOM10;
  std::int64_t LNP2OM, LNP2OM10;
  mpz_class LPI;
  std::int64_t LPIOM;
  std::int64_t MP;
};

/// floor(om * log10(2)) in exact integer arithmetic.
std::int64_t om10(std::int64_t om);

/// Largest integer x with x and x - 1 both representable. Found by an outward
/// search from 1 over each system's decoder, striding over runs of equally
/// spaced values.
mpz_class largest_precise_integer(System s, int N);

/// NONADJ for 2 <= N <= 64; IEEE and POSIT for N in {8, 16, 32, 64}.
/// Error("unsupported") otherwise.
MeritRecord merit(System s, int N);

struct PbomSample {
  System system;
  int N;
  int es_or_s;
  std::int64_t n_x;
  std::int64_t B;
};

std::int64_t pbom(System s, int N, std::int64_t n_x);

/// One sample per (system, N, n_x) in that nesting order, lo <= n_x <= hi.
/// Work is split across threads into disjoint slots; the output does not
/// depend on the thread count. threads = 0 picks the hardware concurrency.
/// posit_es replaces the standard es_N for every posit width.
std::vector<PbomSample> pbom_sweep(const std::vector<System>& systems, const std::vector<int>& Ns, std::int64_t lo,
                                   std::int64_t hi, unsigned threads = 0, std::optional<int> posit_es = std::nullopt);

void write_pbom_csv(std::ostream& out, const std::vector<PbomSample>& samples);
void write_merit_csv(std::ostream& out, const std::vector<MeritRecord>& records);

}  // namespace nafloat

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. All thresholds below are exact; the only tunables are the sample
// counts and seeds.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nafloat/binary.hpp"
#include "nafloat/cli.hpp"
#include "nafloat/comparator.hpp"
#include "nafloat/error.hpp"
#include "nafloat/naf.hpp"
#include "nafloat/points.hpp"
#include "nafloat/realcodec.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "width4_pairs.hpp"

using namespace nafloat;

namespace {

constexpr std::size_t kChainExhaustiveWidth = 12;
constexpr int kTableRows = 10;
constexpr int kRecurrenceLimit = 64;
constexpr std::size_t kRandomRoundingProbes = 10000;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::int64_t kHeadlineLo = -150, kHeadlineHi = 127;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

TritField F(const char* s) { return parse_trits(s); }
Dyadic D(const std::string& s) { return Dyadic::parse(s); }
std::string chain(const char* s) { return render_trits(recode_chain_field(parse_trits(s))); }
std::string avals(const char* s) { return render_trits(assistant_values(parse_trits(s))); }

std::string run_cli(const std::vector<std::string>& args, int* status = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (status) *status = rc;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Dyadic> values_of(int N) {
  std::vector<Dyadic> v;
  for (auto& e : enumerate_reals(N)) v.push_back(e.second);
  return v;
}

void carry_chain_vectors(Check& c) {
  struct Vec {
    const char* in;
    const char* a;
    const char* out;
  };
  const Vec vecs[] = {
      {"T0110111", "11111110", "0T00T00T"},
      {"0T110111", "01111110", "0000T00T"},
      {"00110111", "01111110", "0100T00T"},
      {"00111011000T01101110001T1TTT0TT0", "0111111000011111110000T0TTTTTT00", "01000T0T0000T00T00T0000100001010"},
  };
  for (const Vec& v : vecs) {
    c.expect(avals(v.in) == v.a, std::string("a-field of ") + v.in);
    c.expect(chain(v.in) == v.out, std::string("output of ") + v.in);
  }
  c.expect(field_int_value(F(vecs[3].in)) == 989257994, "long vector value");
  for (std::size_t w = 1; w <= kChainExhaustiveWidth && c.ok; ++w) {
    for (std::uint64_t i = 0; i < testsupport::pow3(w); ++i) {
      TritField f = testsupport::nth_field(i, w);
      if (recode_chain(f) != recode_oracle(field_int_value(f))) {
        c.expect(false, "chain differs from oracle on " + render_trits(f));
        break;
      }
    }
  }
}

void jacobsthal_table(Check& c) {
  const long rows[kTableRows][5] = {
      {1, 3, 1, 1, 0},        {2, 5, 1, 2, 0},        {3, 11, 3, 5, 1},      {4, 21, 5, 10, 2},
      {5, 43, 11, 21, 5},     {6, 85, 21, 42, 10},    {7, 171, 43, 85, 21},  {8, 341, 85, 170, 42},
      {9, 683, 171, 341, 85}, {10, 1365, 341, 682, 170},
  };
  for (const auto& r : rows) {
    const std::string at = " at N = " + std::to_string(r[0]);
    Ball b = ball_for_size(r[0]);
    c.expect(jacobsthal_count(r[0]) == r[1], "V" + at);
    c.expect(b.count == r[2], "ball count" + at);
    c.expect(max_for_size(r[0]) == r[3], "max" + at);
    c.expect(b.radius == r[4], "radius" + at);
  }
  mpz_class a = 3, b = 5;
  for (long n = 3; n <= kRecurrenceLimit; ++n) {
    mpz_class v = b + 2 * a;
    c.expect(jacobsthal_count(n) == v, "recurrence at N = " + std::to_string(n));
    a = b;
    b = v;
  }
}

void enumeration_n4(Check& c) {
  std::vector<std::pair<Dyadic, std::string>> expected;
  for (auto [f, v] : kWidth4Pairs) expected.emplace_back(D(v), f);
  expected.emplace_back(Dyadic(), "0000");
  std::sort(expected.begin(), expected.end());
  std::string want = "field,value\n";
  for (const auto& [v, f] : expected) want += f + "," + v.to_fraction() + "\n";
  int rc = -1;
  const std::string got = run_cli({"enumerate", "--N", "4"}, &rc);
  c.expect(rc == 0, "enumerate exit status");
  c.expect(got == want, "enumerate --N 4 differs from the reference list");
  c.expect(expected.size() == 39, "reference list size");
  std::vector<Dyadic> n2 = {D("-2"), D("-1"), D("-1/2"), D("1/2"), D("1"), D("2")};
  c.expect(values_of(2) == n2, "N = 2 values");
}

void worked_example(Check& c) {
  const TritField f = F("T00110T010001");
  c.expect(decode_real(f) == D("104.5"), "decode");
  c.expect(encode_real(D("104.5"), 13) == f, "encode");
  const auto d = decompose_real(f);
  c.expect(d.exponent() == 7, "exponent");
  c.expect(d.m.size() == 9, "significand size");
  c.expect(d.precision() == 9 && 13 - naf_size(mpz_class(7)) == 9, "precision");
  c.expect(ulp(D("104.5"), 13) == D("1/2"), "ulp");
}

// Scans the whole table; ties go to the field ending in 0, then to the
// field whose exponent matches the input's.
Dyadic nearest(const std::vector<std::pair<TritField, Dyadic>>& table, const Dyadic& x) {
  std::vector<const std::pair<TritField, Dyadic>*> best;
  Dyadic best_d;
  for (const auto& e : table) {
    if (e.second.sign() != x.sign()) continue;
    Dyadic d = (e.second - x).abs();
    if (best.empty() || d < best_d) {
      best = {&e};
      best_d = d;
    } else if (d == best_d) {
      best.push_back(&e);
    }
  }
  if (best.size() == 1) return best[0]->second;
  auto even = [](const TritField& f) { return f[f.width() - 1] == Trit::Zero; };
  const bool e0 = even(best[0]->first), e1 = even(best[1]->first);
  if (e0 != e1) return e0 ? best[0]->second : best[1]->second;
  return decompose_real(best[0]->first).exponent() == real_width(x) ? best[0]->second : best[1]->second;
}

void rounding(Check& c) {
  for (int N : {4, 6}) {
    auto table = enumerate_reals(N);
    std::vector<Dyadic> probes;
    for (std::size_t i = 0; i + 1 < table.size(); ++i) {
      const Dyadic& a = table[i].second;
      const Dyadic& b = table[i + 1].second;
      if (a.sign() != b.sign()) continue;
      Dyadic mid = (a + b).shifted(-1), q = (b - a).shifted(-2);
      probes.insert(probes.end(), {mid, mid - q, mid + q, a, b});
    }
    const auto params = codec_params(N);
    for (const Dyadic& e : {params.omega, Dyadic::pow2(-params.max_exponent)}) {
      probes.insert(probes.end(), {e.shifted(1), e.shifted(-1), e * 3, e.shifted(40), e.shifted(-40)});
    }
    std::mt19937_64 rng(kSeed + static_cast<unsigned>(N));
    std::uniform_int_distribution<long> mant(-(1L << 20), 1L << 20);
    std::uniform_int_distribution<std::int64_t> ex(-params.max_exponent - 22, params.max_exponent - 18);
    const std::size_t target = probes.size() + kRandomRoundingProbes;
    while (probes.size() < target) {
      Dyadic x(mpz_class(mant(rng)), ex(rng));
      if (!x.is_zero()) probes.push_back(x);
    }
    for (const Dyadic& x : probes) {
      const Dyadic got = round_value(x, N);
      if (got != nearest(table, x) || decode_real(round_real(x, N)) != got || round_value(-x, N) != -got) {
        c.expect(false, "N = " + std::to_string(N) + " at " + x.to_fraction());
        break;
      }
    }
  }
}

void sterbenz(Check& c) {
  for (int N : {4, 6, 8}) {
    auto vals = values_of(N);
    std::vector<Dyadic> pos;
    std::copy_if(vals.begin(), vals.end(), std::back_inserter(pos), [](const Dyadic& v) { return v.sign() > 0; });
    for (const Dyadic& y : pos) {
      for (auto it = std::lower_bound(pos.begin(), pos.end(), y.shifted(-1)); it != pos.end() && *it <= y.shifted(1);
           ++it) {
        Dyadic diff = *it - y;
        if (!diff.is_zero() && !std::binary_search(vals.begin(), vals.end(), diff)) {
          c.expect(false, "N = " + std::to_string(N) + ": " + it->to_fraction() + " - " + y.to_fraction());
        }
      }
    }
  }
}

void pbom_vs_enumeration(Check& c) {
  const int N = 8;
  auto ifmt = IeeeFormat::for_width(N);
  auto ieee = oracle::binade_precision(
      oracle::positive_values(N, [&](std::uint64_t b) { return ieee_decode(b, ifmt); }));
  for (auto [n, B] : ieee) c.expect(ieee_pbom(N, n) == B, "IEEE binade " + std::to_string(n));

  const PositFormat pfmt = PositFormat::standard(N);
  auto ppos = oracle::positive_values(N, [&](std::uint64_t b) { return posit_decode(b, pfmt); });
  std::map<std::int64_t, int> counts;
  for (const Dyadic& x : ppos) ++counts[x.floor_log2()];
  for (auto [n, B] : oracle::binade_precision(ppos)) {
    if (counts[n] >= 2) c.expect(posit_pbom(N, pfmt.es, n) == B, "posit binade " + std::to_string(n));
  }

  for (auto [n, B] : oracle::nonadj_class_precision(N)) {
    c.expect(nonadj_pbom(N, n) == B, "NONADJ class " + std::to_string(n));
  }
}

void headline(Check& c) {
  auto min_over = [](int N) {
    std::int64_t m = nonadj_pbom(N, kHeadlineLo);
    for (std::int64_t n = kHeadlineLo; n <= kHeadlineHi; ++n) m = std::min(m, nonadj_pbom(N, n));
    return m;
  };
  c.expect(min_over(16) == 8, "min NONADJ(16) PBOM");
  c.expect(min_over(32) == 24, "min NONADJ(32) PBOM");
  c.expect(maximum_precision(System::NONADJ, 32) - maximum_precision(System::POSIT, 32) == 4, "MP vs posit");
  c.expect(maximum_precision(System::NONADJ, 32) - maximum_precision(System::IEEE, 32) == 8, "MP vs IEEE");
}

void dominance(Check& c) {
  for (int N : {16, 32, 64}) {
    auto f = IeeeFormat::for_width(N);
    for (std::int64_t n = f.min_exponent(); n <= f.max_exponent(); ++n) {
      if (nonadj_pbom(N, n) < ieee_pbom(N, n)) c.expect(false, "IEEE N = " + std::to_string(N));
    }
    const int es = PositFormat::standard(N).es;
    const std::int64_t top = (N - 2) * (std::int64_t{1} << es);
    for (std::int64_t n = -top; n <= top; ++n) {
      if (nonadj_pbom(N, n) < posit_pbom(N, es, n)) c.expect(false, "posit N = " + std::to_string(N));
    }
  }
}

void lpi(Check& c) {
  const mpz_class na = largest_precise_integer(System::NONADJ, 32);
  const mpz_class ie = largest_precise_integer(System::IEEE, 32);
  const mpz_class po = largest_precise_integer(System::POSIT, 32);
  c.expect(ie == mpz_class(1) << 24, "IEEE LPI");
  c.expect(na > ie, "NONADJ vs IEEE");
  c.expect(na > po, "NONADJ vs posit");
}

void totality_and_pcm(Check& c) {
  std::map<std::string, std::size_t> tally;
  for (std::uint64_t i = 0; i < testsupport::pow3(8); ++i) {
    try {
      ++tally[entity_tag(classify(testsupport::nth_field(i, 8)))];
    } catch (const Error& e) {
      ++tally[std::string("error:") + e.code()];
    }
  }
  std::size_t total = 0;
  for (const auto& [tag, n] : tally) {
    total += n;
    if (tag.rfind("error:", 0) == 0) c.expect(tag == "error:no-meaning", "unexpected " + tag);
  }
  c.expect(total == 6561, "total");
  c.expect(tally["real"] == enumerate_reals(8).size(), "real count");

  for (std::uint64_t i = 0; i < testsupport::pow3(8); ++i) {
    TritField f = testsupport::nth_field(i, 8);
    for (int k = 1; k <= 5; ++k) {
      TritField g;
      try {
        g = apply_pcm(k, f);
      } catch (const Error&) {
        continue;
      }
      if (invert_pcm(k, g) != f) c.expect(false, "PCM" + std::to_string(k) + " on " + render_trits(f));
    }
  }
}

void merit_table(Check& c) {
  const std::vector<std::string> args = {"merit", "--N", "8,16,32,64", "--systems", "ieee,posit,nonadj"};
  int rc1 = -1, rc2 = -1;
  const std::string first = run_cli(args, &rc1), second = run_cli(args, &rc2);
  c.expect(rc1 == 0 && rc2 == 0, "merit exit status");
  c.expect(first == second, "merit output differs between runs");
  c.expect(first == read_file(std::string(NAFLOAT_SOURCE_DIR) + "/tests/golden/merit.csv"), "merit golden");

  // X̄_k = (V_k - 1) / 2 with V_k = V_{k-1} + 2 V_{k-2}.
  std::vector<mpz_class> V = {1, 3, 5};
  for (int k = 3; k <= 64; ++k) V.push_back(V[k - 1] + 2 * V[k - 2]);
  for (int N : {8, 16, 32, 64}) {
    MeritRecord r = merit(System::NONADJ, N);
    const mpz_class want = (V[N - 1] - 1) / 2;
    c.expect(mpz_class(static_cast<long>(r.LVALOM)) == want, "LVALOM at N = " + std::to_string(N));
    c.expect(r.SPVALOM == -r.LVALOM, "SPVALOM at N = " + std::to_string(N));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"carry-chain vectors and exhaustive chain/oracle agreement", carry_chain_vectors},
      {"Jacobsthal counts, balls and recurrence", jacobsthal_table},
      {"N = 4 enumeration and N = 2 values", enumeration_n4},
      {"T00110T010001 <-> 104.5", worked_example},
      {"round to nearest, ties to even, at N = 4 and 6", rounding},
      {"Sterbenz closure at N = 4, 6, 8", sterbenz},
      {"PBOM formulas match enumeration at N = 8", pbom_vs_enumeration},
      {"minimum precision over [-150, 127] and MP gaps", headline},
      {"NONADJ PBOM dominates IEEE and posit at N = 16, 32, 64", dominance},
      {"largest precise integer ordering at N = 32", lpi},
      {"classify totality and PCM round trips at width 8", totality_and_pcm},
      {"merit table", merit_table},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    ++index;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!c.ok) std::cout << "  (" << c.why.str() << ")";
    std::cout << '\n';
    failures += c.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

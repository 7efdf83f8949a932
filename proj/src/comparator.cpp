#include "nafloat/comparator.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <thread>

#include "nafloat/binary.hpp"
#include "nafloat/error.hpp"
#include "nafloat/naf.hpp"
#include "nafloat/realcodec.hpp"

namespace nafloat {

namespace {

std::int64_t floor_div_pow2(std::int64_t a, int k) {
  const std::int64_t d = std::int64_t{1} << k;
  return a >= 0 ? a / d : -((-a + d - 1) / d);
}

std::int64_t floor_log2(std::uint64_t v) { return 63 - __builtin_clzll(v); }

std::int64_t floor_log2(const mpz_class& v) { return static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1; }

void require_standard_width(System s, int N) {
  if (N != 8 && N != 16 && N != 32 && N != 64) {
    throw Error("unsupported", system_name(s) + " merit is defined for N in {8, 16, 32, 64}, got " + std::to_string(N));
  }
}

}  // namespace

std::string system_name(System s) {
  switch (s) {
    case System::IEEE: return "IEEE";
    case System::POSIT: return "POSIT";
    case System::MORRIS: return "MORRIS";
    case System::NONADJ: return "NONADJ";
  }
  return "?";
}

System parse_system(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (System s : {System::IEEE, System::POSIT, System::MORRIS, System::NONADJ}) {
    if (system_name(s) == up) return s;
  }
  throw Error("parse", "unknown system '" + name + "'");
}

std::int64_t ieee_pbom(int N, std::int64_t n_x) {
  const IeeeFormat f = IeeeFormat::for_width(N);
  const std::int64_t s = f.s, b = f.bias;
  if (n_x <= -N + s - b) return 0;
  if (n_x <= -b) return N - s + b + n_x;
  if (n_x < (std::int64_t{1} << s) - 1 - b) return N - s;
  return 0;
}

std::int64_t posit_pbom(int N, int es, std::int64_t n_x) {
  const std::int64_t rs = n_x >= 0 ? 1 : 0;
  const std::int64_t q = floor_div_pow2(n_x, es);
  const std::int64_t B = N + (rs ? -q : q) - rs - es - 1;
  return std::max<std::int64_t>(0, B);
}

std::int64_t nonadj_pbom(int N, std::int64_t n_x) { return std::max<std::int64_t>(0, N - naf_size(n_x)); }

int morris_max_g(int N) {
  int g = 0;
  while (g + 1 < 62 && (g + 1) + (std::int64_t{1} << (g + 1)) + 2 <= N) ++g;
  return g;
}

MorrisModel morris_model(int N, int g) {
  const int gmax = morris_max_g(N);
  if (g < 1 || g > gmax) {
    throw Error("range", "Morris g must be in 1.." + std::to_string(gmax) + " at N = " + std::to_string(N));
  }
  return {N, g, gmax, std::int64_t{1} << g};
}

std::optional<std::int64_t> MorrisModel::precision(std::int64_t n_x) const {
  if (n_x == 0) return std::nullopt;
  const auto mag = static_cast<std::uint64_t>(n_x < 0 ? -n_x : n_x);
  return N - g - 2 - floor_log2(mag);
}

Dyadic morris_value(bool sm, bool sn, std::int64_t n, const mpz_class& m) {
  if (m < 0 || n < 0) throw Error("range", "Morris fields are unsigned");
  Dyadic sig = 1;
  if (m != 0) {
    const std::int64_t w = floor_log2(m) + 1;
    sig = Dyadic(1) + Dyadic(m, -w);
  }
  Dyadic x = sig * Dyadic::pow2(sn ? -n : n);
  return sm ? -x : x;
}

int system_parameter(System s, int N) {
  switch (s) {
    case System::IEEE: return IeeeFormat::for_width(N).s;
    case System::POSIT: return PositFormat::standard(N).es;
    case System::MORRIS: return morris_max_g(N);
    case System::NONADJ: return 0;
  }
  return 0;
}

std::int64_t maximum_precision(System s, int N) {
  switch (s) {
    case System::IEEE: return N - IeeeFormat::for_width(N).s;
    case System::POSIT: return N - PositFormat::standard(N).es - 2;
    case System::MORRIS: return morris_model(N, morris_max_g(N)).precision(1).value();
    case System::NONADJ: return N;
  }
  return 0;
}

std::int64_t om10(std::int64_t om) {
  // log10(2) to 60 places, bracketed by L and L + 1 in units of 10^-60.
  static const mpz_class L("301029995663981195213738894724493026768189881462108541310427");
  static const mpz_class scale = [] {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, 60);
    return p;
  }();
  auto floor_of = [&](const mpz_class& l) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(mpz_class(om) * l).get_mpz_t(), scale.get_mpz_t());
    return q.get_si();
  };
  const std::int64_t lo = floor_of(L), hi = floor_of(L + 1);
  if (lo != hi) throw Error("range", "om10 bracket too wide for " + std::to_string(om));
  return lo;
}

namespace {

// First positive code c >= start with gap(c) > 1, for codes ordered like
// their values; gallops outward then bisects.
std::uint64_t first_wide_gap(std::uint64_t start, std::uint64_t last,
                             const std::function<Dyadic(std::uint64_t)>& value) {
  auto wide = [&](std::uint64_t c) { return c == last || value(c + 1) - value(c) > Dyadic(1); };
  if (wide(start)) return start;
  std::uint64_t good = start, step = 1;
  std::uint64_t bad = last;
  while (true) {
    const std::uint64_t probe = last - good <= step ? last : good + step;
    if (wide(probe)) {
      bad = probe;
      break;
    }
    good = probe;
    step *= 2;
  }
  while (bad - good > 1) {
    const std::uint64_t mid = good + (bad - good) / 2;
    (wide(mid) ? bad : good) = mid;
  }
  return bad;
}

mpz_class binary_lpi(System s, int N) {
  if (s == System::IEEE) {
    const IeeeFormat f = IeeeFormat::for_width(N);
    auto value = [&f](std::uint64_t c) { return ieee_decode(c, f).value; };
    const std::uint64_t last = (((std::uint64_t{1} << f.s) - 1) << f.fraction_bits) - 1;
    return value(first_wide_gap(*ieee_encode_exact(1, f), last, value)).floor_div_pow2(0);
  }
  const PositFormat f = PositFormat::standard(N);
  auto value = [&f](std::uint64_t c) { return posit_decode(c, f).value; };
  const std::uint64_t last = (std::uint64_t{1} << (N - 1)) - 1;
  return value(first_wide_gap(*posit_encode_exact(1, f), last, value)).floor_div_pow2(0);
}

// Exponent classes are runs of equally spaced values, ascending in n.
mpz_class nonadj_lpi(int N) {
  std::optional<Dyadic> prev;
  for (std::int64_t n = 0;; ++n) {
    auto cls = exponent_class(n, N);
    if (!cls) break;
    const Dyadic a = decode_real(encode_real(cls->min_value(), N));
    const Dyadic b = decode_real(encode_real(cls->max_value(), N));
    if (prev && a - *prev > Dyadic(1)) return prev->floor_div_pow2(0);
    if (a != b && cls->ulp_exp2 > 0) return a.floor_div_pow2(0);
    prev = b;
  }
  return prev->floor_div_pow2(0);
}

}  // namespace

mpz_class largest_precise_integer(System s, int N) {
  switch (s) {
    case System::IEEE:
    case System::POSIT: return binary_lpi(s, N);
    case System::NONADJ:
      if (N < kMinRealWidth || N > kMaxRealWidth) throw Error("range", "NONADJ widths are 2..64");
      return nonadj_lpi(N);
    case System::MORRIS: break;
  }
  throw Error("unsupported", "no LPI search for " + system_name(s));
}

MeritRecord merit(System s, int N) {
  MeritRecord r{};
  r.system = s;
  r.N = N;
  switch (s) {
    case System::NONADJ: {
      if (N < 3 || N > kMaxRealWidth) throw Error("unsupported", "NONADJ merit is defined for 3 <= N <= 64");
      r.LVALOM = codec_params(N).max_exponent;
      r.SPVALOM = -r.LVALOM;
      // Two-digit significands only give powers of two.
      const std::int64_t n = N > 3 ? max_for_size(N - 3).get_si() : 0;
      r.LNP2OM = exponent_class(n, N)->max_value().floor_log2();
      break;
    }
    case System::IEEE: {
      require_standard_width(s, N);
      const IeeeFormat f = IeeeFormat::for_width(N);
      r.LVALOM = f.max_exponent();
      r.SPVALOM = f.min_exponent();
      r.LNP2OM = f.max_exponent();
      break;
    }
    case System::POSIT: {
      require_standard_width(s, N);
      const int es = PositFormat::standard(N).es;
      const std::int64_t useed = std::int64_t{1} << es;
      r.LVALOM = (N - 2) * useed;
      r.SPVALOM = -r.LVALOM;
      // Largest regime that still leaves one fraction bit after es bits.
      r.LNP2OM = (N - es - 4) * useed + useed - 1;
      break;
    }
    case System::MORRIS: throw Error("unsupported", "no merit record for MORRIS");
  }
  r.LVALOM10 = om10(r.LVALOM);
  r.SPVALOM10 = om10(r.SPVALOM);
  r.LNP2OM10 = om10(r.LNP2OM);
  r.LPI = largest_precise_integer(s, N);
  r.LPIOM = floor_log2(r.LPI);
  r.MP = maximum_precision(s, N);
  return r;
}

std::int64_t pbom(System s, int N, std::int64_t n_x) {
  switch (s) {
    case System::IEEE: return ieee_pbom(N, n_x);
    case System::POSIT: return posit_pbom(N, PositFormat::standard(N).es, n_x);
    case System::NONADJ: return nonadj_pbom(N, n_x);
    case System::MORRIS: break;
  }
  throw Error("unsupported", "no PBOM for MORRIS");
}

std::vector<PbomSample> pbom_sweep(const std::vector<System>& systems, const std::vector<int>& Ns, std::int64_t lo,
                                   std::int64_t hi, unsigned threads, std::optional<int> posit_es) {
  if (lo > hi) throw Error("range", "empty n_x range");
  struct Job {
    System s;
    int N;
    int param;
  };
  std::vector<Job> jobs;
  const bool custom_es = posit_es.has_value();
  if (custom_es && *posit_es < 0) throw Error("range", "es must be >= 0");
  for (System s : systems) {
    for (int N : Ns) {
      if (s == System::POSIT && custom_es) {
        if (N < 2) throw Error("range", "posit width must be >= 2");
        jobs.push_back({s, N, *posit_es});
        continue;
      }
      pbom(s, N, 0);  // validates the combination before any thread starts
      jobs.push_back({s, N, system_parameter(s, N)});
    }
  }
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  std::vector<PbomSample> out(jobs.size() * span);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Job& j = jobs[i / span];
      const std::int64_t n_x = lo + static_cast<std::int64_t>(i % span);
      const std::int64_t B = j.s == System::POSIT ? posit_pbom(j.N, j.param, n_x) : pbom(j.s, j.N, n_x);
      out[i] = {j.s, j.N, j.param, n_x, B};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, out.size())));
  std::vector<std::thread> pool;
  const std::size_t chunk = (out.size() + threads - 1) / threads;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(fill, std::min(out.size(), t * chunk), std::min(out.size(), (t + 1) * chunk));
  }
  fill(0, std::min(out.size(), chunk));
  for (auto& th : pool) th.join();
  return out;
}

void write_pbom_csv(std::ostream& out, const std::vector<PbomSample>& samples) {
  out << "system,N,es_or_s,n_x,B\n";
  for (const auto& s : samples) {
    out << system_name(s.system) << ',' << s.N << ',' << s.es_or_s << ',' << s.n_x << ',' << s.B << '\n';
  }
}

void write_merit_csv(std::ostream& out, const std::vector<MeritRecord>& records) {
  out << "system,N,LVALOM,LVALOM10,SPVALOM,SPVALOM10,LNP2OM,LNP2OM10,LPI,LPIOM,MP\n";
  for (const auto& r : records) {
    out << system_name(r.system) << ',' << r.N << ',' << r.LVALOM << ',' << r.LVALOM10 << ',' << r.SPVALOM << ','
        << r.SPVALOM10 << ',' << r.LNP2OM << ',' << r.LNP2OM10 << ',' << r.LPI.get_str() << ',' << r.LPIOM << ','
        << r.MP << '\n';
  }
}

}  // namespace nafloat

#include "nafloat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "nafloat/comparator.hpp"
#include "nafloat/error.hpp"
#include "nafloat/naf.hpp"
#include "nafloat/points.hpp"
#include "nafloat/realcodec.hpp"

namespace nafloat::cli {

namespace {

constexpr int kMaxEnumerateWidth = 16;

struct Options {
  std::vector<int> N;
  std::optional<int> es;
  std::string field;
  std::string integer;
  std::string value;
  std::string systems = "ieee,posit,nonadj";
  std::string range = "-700:700";
  std::string out;
  bool round = false;
};

int single_width(const Options& o) {
  if (o.N.size() != 1) throw Error("range", "this command takes exactly one --N");
  return o.N.front();
}

std::vector<System> parse_systems(const std::string& list) {
  std::vector<System> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    out.push_back(parse_system(list.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':', 1);
  if (colon == std::string::npos) throw Error("parse", "range must be lo:hi, got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const std::int64_t l = std::stoll(lo, &a), h = std::stoll(hi, &b);
    if (a != lo.size() || b != hi.size()) throw std::invalid_argument(text);
    if (l > h) throw Error("range", "range lo exceeds hi");
    return {l, h};
  } catch (const std::logic_error&) {
    throw Error("parse", "range must be lo:hi, got '" + text + "'");
  }
}

mpz_class parse_integer(const std::string& text) {
  mpz_class v;
  const std::string body = !text.empty() && text[0] == '+' ? text.substr(1) : text;
  if (body.empty() || v.set_str(body, 10) != 0) throw Error("parse", "invalid integer '" + text + "'");
  return v;
}

// Writes to --out when given, else to stdout.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (o.out.empty()) {
    body(out);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error("range", "cannot open '" + o.out + "' for writing");
  body(file);
}

void cmd_recode(const Options& o, std::ostream& out) {
  if (!o.integer.empty() == !o.field.empty()) throw Error("parse", "recode takes one of --int or --field");
  if (!o.integer.empty()) {
    out << recode_oracle(parse_integer(o.integer)).str() << '\n';
  } else {
    out << recode_chain(parse_trits(o.field)).str() << '\n';
  }
}

void cmd_encode(const Options& o, std::ostream& out) {
  const int N = single_width(o);
  if (!o.integer.empty() == !o.value.empty()) throw Error("parse", "encode takes one of --value or --int");
  if (N < 1) throw Error("range", "width must be >= 1");
  if (!o.integer.empty()) {
    out << render_trits(encode_entity(entity::Integer{parse_integer(o.integer)}, static_cast<std::size_t>(N))) << '\n';
    return;
  }
  const Dyadic x = Dyadic::parse(o.value);
  if (x.is_zero()) {
    out << render_trits(TritField(static_cast<std::size_t>(N))) << '\n';
    return;
  }
  out << render_trits(o.round ? round_real(x, N) : encode_real(x, N)) << '\n';
}

void cmd_decode(const Options& o, std::ostream& out) { out << describe(classify(parse_trits(o.field))) << '\n'; }

void cmd_inspect(const Options& o, std::ostream& out) {
  const TritField f = parse_trits(o.field);
  const auto W = static_cast<int>(f.width());
  out << "field: " << render_trits(f) << '\n';
  out << "width: " << W << '\n';
  out << "points:";
  const auto pts = find_points(f);
  if (pts.empty()) out << " none";
  for (const Point& p : pts) {
    out << ' ' << (p.full ? "full" : PointClass{p.placement, p.length}.name()) << '@' << p.start;
  }
  out << '\n';
  out << "signature: " << point_signature(f).str() << '\n';
  DecodedEntity e = classify(f);
  out << "entity: " << entity_tag(e) << '\n';
  out << "value: " << describe(e) << '\n';
  if (auto* r = std::get_if<entity::Real>(&e); r && W >= kMinRealWidth && W <= kMaxRealWidth) {
    const RealNafDecomposition d = decompose_real(encode_real(r->value, W));
    out << "exponent: n = " << d.exponent() << " (" << d.n.str() << ", size " << d.n.size() << ")\n";
    out << "significand: m = " << d.m.value().get_str() << " (" << d.m.str() << ", size " << d.m.size() << ")\n";
    out << "precision: p = " << d.precision() << '\n';
    out << "ulp: " << ulp(r->value, W).to_fraction() << '\n';
  }
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  const int N = single_width(o);
  if (N < kMinRealWidth || N > kMaxEnumerateWidth) {
    throw Error("range", "enumerate supports 2 <= N <= " + std::to_string(kMaxEnumerateWidth));
  }
  auto rows = enumerate_reals(N);
  const auto zero = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.second.sign() > 0; });
  rows.insert(zero, {TritField(static_cast<std::size_t>(N)), Dyadic()});
  emit(o, out, [&rows](std::ostream& s) {
    s << "field,value\n";
    for (const auto& [f, x] : rows) s << render_trits(f) << ',' << x.to_fraction() << '\n';
  });
}

void cmd_pbom(const Options& o, std::ostream& out) {
  if (o.N.empty()) throw Error("parse", "pbom needs --N");
  const auto [lo, hi] = parse_range(o.range);
  constexpr std::int64_t kMaxSpan = 1'000'000;
  if (hi - lo >= kMaxSpan) throw Error("range", "n_x range wider than 10^6");
  auto samples = pbom_sweep(parse_systems(o.systems), o.N, lo, hi, 0, o.es);
  emit(o, out, [&samples](std::ostream& s) { write_pbom_csv(s, samples); });
}

void cmd_merit(const Options& o, std::ostream& out) {
  std::vector<MeritRecord> rows;
  const std::vector<int> Ns = o.N.empty() ? std::vector<int>{8, 16, 32, 64} : o.N;
  for (System s : parse_systems(o.systems)) {
    for (int N : Ns) rows.push_back(merit(s, N));
  }
  emit(o, out, [&rows](std::ostream& s) { write_merit_csv(s, rows); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonadjacent-form tapered floating point: recoding, codec and comparator tools.", "nafloat"};
  app.require_subcommand(1);
  Options o;

  auto widths = [&o](CLI::App* c, bool required) {
    auto* opt = c->add_option("--N", o.N, "Field width(s); comma-separated lists allowed")->delimiter(',');
    if (required) opt->required();
  };

  auto* recode = app.add_subcommand("recode", "Nonadjacent form of an integer, or carry-chain recoding of a trit field");
  recode->add_option("--int", o.integer, "Decimal integer");
  recode->add_option("--field", o.field, "Signed-digit field, MSB first (1, 0, T)");

  auto* encode = app.add_subcommand("encode", "Field of a real value (or integer) at width N");
  widths(encode, true);
  encode->add_option("--value", o.value, "Dyadic value: 104.5, -3/8, 209*2^-1");
  encode->add_option("--int", o.integer, "Integer, stored as a point-free NAF field");
  encode->add_flag("--round", o.round, "Round to the nearest representable value instead of failing");

  auto* decode = app.add_subcommand("decode", "Meaning of a field");
  decode->add_option("--field", o.field, "Trit field")->required();

  auto* inspect = app.add_subcommand("inspect", "Points, signature, meaning and real-codec details of a field");
  inspect->add_option("--field", o.field, "Trit field")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Every pure-real field of width N with its value, ascending");
  widths(enumerate, true);
  enumerate->add_option("--out", o.out, "Output path (default stdout)");

  auto* pbom_cmd = app.add_subcommand("pbom", "Precision by order of magnitude, CSV");
  widths(pbom_cmd, true);
  pbom_cmd->add_option("--systems", o.systems, "Comma-separated: ieee, posit, nonadj");
  pbom_cmd->add_option("--range", o.range, "n_x range lo:hi (default -700:700)");
  pbom_cmd->add_option("--es", o.es, "Posit es instead of the standard es_N");
  pbom_cmd->add_option("--out", o.out, "Output path (default stdout)");

  auto* merit_cmd = app.add_subcommand("merit", "Factors of merit, CSV");
  widths(merit_cmd, false);
  merit_cmd->add_option("--systems", o.systems, "Comma-separated: ieee, posit, nonadj");
  merit_cmd->add_option("--out", o.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (recode->parsed()) cmd_recode(o, out);
    else if (encode->parsed()) cmd_encode(o, out);
    else if (decode->parsed()) cmd_decode(o, out);
    else if (inspect->parsed()) cmd_inspect(o, out);
    else if (enumerate->parsed()) cmd_enumerate(o, out);
    else if (pbom_cmd->parsed()) cmd_pbom(o, out);
    else if (merit_cmd->parsed()) cmd_merit(o, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: range: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace nafloat::cli

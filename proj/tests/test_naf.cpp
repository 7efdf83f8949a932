#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "nafloat/error.hpp"
#include "nafloat/naf.hpp"
#include "support.hpp"

using namespace nafloat;

namespace {

constexpr const char* kLongInput = "00111011000T01101110001T1TTT0TT0";
constexpr const char* kLongOutput = "01000T0T0000T00T00T0000100001010";
// The reference a-field for the long vector has 33 digits for a 32-digit
// input; dropping one T from its run of seven gives the aligned field.
constexpr const char* kLongAssistantPrinted = "0111111000011111110000T0TTTTTTT00";
constexpr const char* kLongAssistant = "0111111000011111110000T0TTTTTT00";

std::string chain(const char* s) { return render_trits(recode_chain_field(parse_trits(s))); }
std::string avals(const char* s) { return render_trits(assistant_values(parse_trits(s))); }

}  // namespace

TEST_CASE("width and size") {
  CHECK(naf_width(1) == 0);
  CHECK(naf_width(21) == 4);
  CHECK_FALSE(naf_width(0).has_value());
  CHECK(naf_size(mpz_class(0)) == 0);
  CHECK(naf_size(mpz_class(170)) == 8);
  CHECK(naf_size(mpz_class(-5)) == 3);
  CHECK(recode_oracle(-5).size() == 3);
  CHECK(naf_size(mpz_class(171)) == 9);
}

TEST_CASE("counts, maxima and balls for sizes 1 to 10") {
  const long table[10][5] = {
      {1, 3, 1, 1, 0},        {2, 5, 1, 2, 0},        {3, 11, 3, 5, 1},      {4, 21, 5, 10, 2},
      {5, 43, 11, 21, 5},     {6, 85, 21, 42, 10},    {7, 171, 43, 85, 21},  {8, 341, 85, 170, 42},
      {9, 683, 171, 341, 85}, {10, 1365, 341, 682, 170},
  };
  for (const auto& row : table) {
    CAPTURE(row[0]);
    CHECK(jacobsthal_count(row[0]) == row[1]);
    Ball b = ball_for_size(row[0]);
    CHECK(b.count == row[2]);
    CHECK(max_for_size(row[0]) == row[3]);
    CHECK(b.radius == row[4]);
    CHECK(b.center == mpz_class(1) << (row[0] - 1));
  }
  CHECK(ball_for_size(5).center == 16);
  CHECK(ball_for_size(3).center == 4);
  CHECK_THROWS_AS(jacobsthal_count(0), Error);
  CHECK_THROWS_AS(max_for_size(-1), Error);
  CHECK_THROWS_AS(ball_for_size(0), Error);
  CHECK_THROWS_AS(batch_extrema(0), Error);
}

TEST_CASE("Jacobsthal recurrence to N = 64") {
  CHECK(jacobsthal_count(6) == jacobsthal_count(5) + 2 * jacobsthal_count(4));
  for (long n = 3; n <= 64; ++n) {
    REQUIRE(jacobsthal_count(n) == jacobsthal_count(n - 1) + 2 * jacobsthal_count(n - 2));
  }
}

TEST_CASE("counts and balls against an independent enumerator") {
  long cumulative = 0;
  for (std::size_t N = 0; N <= 16; ++N) {
    std::vector<long> vals;
    testsupport::naf_values_of_size(N, vals);
    cumulative += static_cast<long>(vals.size());
    if (N == 0) continue;
    CAPTURE(N);
    CHECK(jacobsthal_count(static_cast<long>(N)) == cumulative);
    std::vector<long> pos;
    std::copy_if(vals.begin(), vals.end(), std::back_inserter(pos), [](long v) { return v > 0; });
    std::sort(pos.begin(), pos.end());
    Ball b = ball_for_size(static_cast<long>(N));
    CHECK(b.count == static_cast<long>(pos.size()));
    CHECK(pos.front() == b.center - b.radius);
    CHECK(pos.back() == b.center + b.radius);
    CHECK(pos.back() - pos.front() + 1 == static_cast<long>(pos.size()));  // no gaps
    BatchExtrema e = batch_extrema(static_cast<long>(N));
    CHECK(e.first == pos.front());
    CHECK(e.last == pos.back());
  }
}

TEST_CASE("batch extrema closed forms") {
  CHECK(batch_extrema(4).last == 10);
  CHECK(batch_extrema(5).last == 21);
  CHECK(batch_extrema(5).first == 11);
  for (long N = 2; N <= 40; ++N) {
    CHECK(batch_extrema(N).first == batch_extrema(N - 1).last + 1);
    // The reference first-of-batch forms are indexed by the preceding batch.
    mpz_class two = mpz_class(1) << N;
    mpz_class published = N % 2 == 0 ? mpz_class((2 * two + 1) / 3) : mpz_class(2 * (two + 1) / 3);
    CHECK(published == batch_extrema(N + 1).first);
  }
}

TEST_CASE("oracle recoding") {
  CHECK(recode_oracle(0).digits().empty());
  CHECK(recode_oracle(0).str() == "0");
  CHECK(recode_oracle(7).str() == "100T");
  // 0100T00T without its leading zero; the eight-digit "1000T00T" is 119.
  CHECK(recode_oracle(55).str() == "100T00T");
  CHECK(field_int_value(parse_trits("1000T00T")) == 119);
  CHECK(recode_oracle(-55).str() == "T001001");
  CHECK(recode_oracle(mpz_class("989257994")).str() == "1000T0T0000T00T00T0000100001010");
}

TEST_CASE("NafInteger validation") {
  CHECK_THROWS_AS(NafInteger::from_digits({Trit::Plus, Trit::Plus}), Error);
  CHECK_THROWS_AS(NafInteger::from_digits({Trit::Zero, Trit::Plus}), Error);
  CHECK(NafInteger::from_digits({Trit::Plus, Trit::Zero, Trit::Minus}).value() == 3);
}

TEST_CASE("reference carry-chain vectors") {
  CHECK(avals("T0110111") == "11111110");
  CHECK(avals("0T110111") == "01111110");
  CHECK(avals("00110111") == "01111110");
  CHECK(chain("T0110111") == "0T00T00T");
  CHECK(chain("0T110111") == "0000T00T");
  CHECK(chain("00110111") == "0100T00T");

  CHECK(std::string(kLongAssistantPrinted).size() == 33);
  CHECK(avals(kLongInput) == kLongAssistant);
  CHECK(chain(kLongInput) == kLongOutput);
  CHECK(field_int_value(parse_trits(kLongInput)) == 989257994);
  CHECK(recode_chain(parse_trits(kLongInput)) == recode_oracle(989257994));
}

TEST_CASE("table cells") {
  using T = Trit;
  auto a = [](T xn, T xm1, T am1) { return kAssistantTable[table_index(xn)][table_index(xm1)][table_index(am1)]; };
  auto j = [](T x1, T x0, T a0) { return kJumpTable[table_index(x1)][table_index(x0)][table_index(a0)]; };
  CHECK(a(T::Plus, T::Plus, T::Minus) == T::Zero);
  CHECK(a(T::Plus, T::Zero, T::Minus) == T::Minus);
  CHECK(a(T::Zero, T::Plus, T::Plus) == T::Plus);
  CHECK(a(T::Zero, T::Minus, T::Minus) == T::Minus);
  CHECK(a(T::Minus, T::Minus, T::Zero) == T::Minus);
  CHECK(j(T::Zero, T::Zero, T::Plus) == 1);
  CHECK(j(T::Zero, T::Zero, T::Minus) == 1);
  CHECK(j(T::Plus, T::Plus, T::Zero) == 1);
  CHECK(j(T::Plus, T::Zero, T::Zero) == 0);
}

TEST_CASE("chain equals oracle on every field up to width 12") {
  for (std::size_t w = 1; w <= 12; ++w) {
    for (std::uint64_t i = 0; i < testsupport::pow3(w); ++i) {
      TritField f = testsupport::nth_field(i, w);
      TritField z = recode_chain_field(f);
      REQUIRE(z.width() <= w + 1);
      REQUIRE(field_int_value(z) == field_int_value(f));
      REQUIRE(is_nonadjacent(z.digits()));
      REQUIRE(recode_chain(f) == recode_oracle(field_int_value(f)));
    }
  }
}

TEST_CASE("chain equals oracle on random wide fields") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> width(13, 160);
  for (int k = 0; k < 100000; ++k) {
    TritField f = testsupport::random_field(rng, width(rng));
    REQUIRE(recode_chain(f) == recode_oracle(field_int_value(f)));
  }
}

TEST_CASE("uniqueness and minimal weight up to 2^16") {
  std::vector<long> all;
  for (std::size_t s = 0; s <= 17; ++s) testsupport::naf_values_of_size(s, all);
  std::set<long> seen;
  for (long v : all) REQUIRE(seen.insert(v).second);  // no two NAF strings share a value
  for (long x = -(1L << 16); x <= (1L << 16); ++x) {
    NafInteger z = recode_oracle(x);
    REQUIRE(z.value() == x);
    REQUIRE(is_nonadjacent(z.digits()));
    REQUIRE(seen.count(x) == 1);
    REQUIRE(z.weight() <= static_cast<std::size_t>(__builtin_popcountl(static_cast<unsigned long>(std::labs(x)))));
  }
}

TEST_CASE("width formula agrees with oracle length up to 2^20") {
  for (long x = 1; x <= (1L << 20); ++x) {
    auto w = naf_width(x);
    REQUIRE(w.has_value());
    REQUIRE(*w == recode_oracle(x).size() - 1);
    REQUIRE(*naf_width(-x) == *w);
    // floor(log2(3x/2)) = ceil(log2(3x/2)) - 1, i.e. 3x is never a power of two.
    long t = 3 * x;
    long floor_l = 63 - __builtin_clzl(static_cast<unsigned long>(t)) - 1;
    long ceil_l = 64 - __builtin_clzl(static_cast<unsigned long>(t - 1)) - 1;
    REQUIRE(floor_l == ceil_l - 1);
    REQUIRE(floor_l == *w);
  }
}

TEST_CASE("log-value table transitions") {
  // floor of the tabulated log((3x-1)/2) for x = 2..13
  const long floors[] = {1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4};
  for (long x = 2; x <= 13; ++x) {
    long v = 3 * x - 1;
    long fl = 63 - __builtin_clzl(static_cast<unsigned long>(v)) - 1;
    CHECK(fl == floors[x - 2]);
    CHECK(*naf_width(x) == floors[x - 2]);
  }
}

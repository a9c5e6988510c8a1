#include <set>
#include <vector>

#include "doctest.h"
#include "kelc/error.hpp"
#include "kelc/sequence.hpp"

using namespace kelc;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kFormulaError;
}

std::uint64_t CountPatterns(int n, int w, Parity p) {
  ErrorPatternStream stream(n, w, p);
  std::uint64_t count = 0;
  while (stream.Next()) ++count;
  return count;
}

}  // namespace

TEST_CASE("bit string literal puts character j at position j") {
  const auto s = MakeSequence(3, "10100000");
  CHECK(s.period() == 8);
  CHECK(s[0]);
  CHECK_FALSE(s[1]);
  CHECK(s[2]);
  CHECK(s.weight() == 2);
  CHECK(s.ToBitString() == "10100000");
}

TEST_CASE("zero literal") {
  const auto s = MakeSequence(2, "0000");
  CHECK(s.is_zero());
  CHECK(s == PeriodicSequence::Zero(2));
}

TEST_CASE("hex literal expands nibbles most significant bit first") {
  CHECK(MakeSequence(3, "0xA0") == MakeSequence(3, "10100000"));
  CHECK(MakeSequence(3, "0xa0") == MakeSequence(3, "10100000"));
  CHECK(MakeSequence(2, "0x8").ToBitString() == "1000");
  CHECK(MakeSequence(4, "0x0F0F").ToBitString() == "0000111100001111");
}

TEST_CASE("literal errors") {
  CHECK(CodeOf([] { MakeSequence(3, "1010000"); }) == ErrorCode::kInvalidLength);
  CHECK(CodeOf([] { MakeSequence(3, "1012000"); }) == ErrorCode::kInvalidLiteral);
  CHECK(CodeOf([] { MakeSequence(3, "0xA"); }) == ErrorCode::kInvalidLength);
  CHECK(CodeOf([] { MakeSequence(3, "0xG0"); }) == ErrorCode::kInvalidLiteral);
  // Hex needs at least one full nibble.
  CHECK(CodeOf([] { MakeSequence(1, "0x1"); }) == ErrorCode::kInvalidLiteral);
}

TEST_CASE("hamming weight") {
  CHECK(HammingWeight(PeriodicSequence::Zero(3)) == 0);
  CHECK(HammingWeight(MakeSequence(3, "10100000")) == 2);
  CHECK(HammingWeight(PeriodicSequence::AllOnes(2)) == 4);
  CHECK(HammingWeight(PeriodicSequence::AllOnes(8)) == 256);
}

TEST_CASE("multi-word sequences") {
  const std::uint32_t support[] = {0, 63, 64, 200, 200, 255};
  const auto s = PeriodicSequence::FromSupport(8, support);
  CHECK(s.weight() == 4);  // the repeated 200 cancels
  CHECK(s[63]);
  CHECK(s[64]);
  CHECK_FALSE(s[200]);
  CHECK(s.Left().period() == 128);
  CHECK(s.Right()[127]);
  CHECK((s ^ s).is_zero());
}

TEST_CASE("fold") {
  CHECK(PhiFold(MakeSequence(2, "1011")).ToBitString() == "01");
  CHECK(PhiFold(MakeSequence(3, "10111011")).is_zero());
  const auto folded = PhiFold(MakeSequence(3, "10100000"));
  CHECK(folded.weight() == 2);
  CHECK(CodeOf([] { PhiFold(PeriodicSequence::Zero(0)); }) == ErrorCode::kCannotFold);

  // Large periods fold word by word.
  const std::uint32_t support[] = {1, 513};
  CHECK(PhiFold(PeriodicSequence::FromSupport(10, support)).is_zero());
  CHECK(PhiFoldWord(2, 0b1101) == 0b10);
}

TEST_CASE("error pattern counts") {
  CHECK(CountPatterns(5, 4, Parity::kEven) == 36457);
  CHECK(CountPatterns(5, 4, Parity::kAll) == 41449);
  CHECK(CountPatterns(2, 0, Parity::kAll) == 1);
  CHECK(CountPatterns(3, 8, Parity::kAll) == 256);
  CHECK(CountPatterns(3, 8, Parity::kOdd) == 128);
}

TEST_CASE("error pattern stream order and uniqueness") {
  ErrorPatternStream stream(3, 2, Parity::kAll);
  std::vector<std::string> seen;
  std::set<std::string> unique;
  std::uint64_t last_weight = 0;
  while (auto p = stream.Next()) {
    CHECK(p->weight == p->bits.weight());
    CHECK(p->weight >= last_weight);
    last_weight = p->weight;
    seen.push_back(p->bits.ToBitString());
    unique.insert(seen.back());
  }
  CHECK(seen.size() == 1 + 8 + 28);
  CHECK(unique.size() == seen.size());
  CHECK(seen[0] == "00000000");
  CHECK(seen[1] == "10000000");
  // Lexicographic by support: {0,1} comes before {0,2}.
  CHECK(seen[9] == "11000000");
  CHECK(seen[10] == "10100000");
}

TEST_CASE("mask enumeration agrees with the stream") {
  for (int n = 0; n <= 4; ++n) {
    for (int w = 0; w <= (1 << n); ++w) {
      for (auto parity : {Parity::kAll, Parity::kEven, Parity::kOdd}) {
        std::set<std::uint64_t> masks;
        std::uint64_t calls = 0;
        ForEachErrorMask(n, w, parity, [&](std::uint64_t m) {
          masks.insert(m);
          ++calls;
        });
        CHECK(calls == masks.size());
        CHECK(calls == CountPatterns(n, w, parity));
      }
    }
  }
}

TEST_CASE("parity names round trip") {
  for (auto p : {Parity::kAll, Parity::kEven, Parity::kOdd}) CHECK(ParseParity(ParityName(p)) == p);
  CHECK_THROWS_AS(ParseParity("none"), Error);
}

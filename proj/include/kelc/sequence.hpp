#ifndef KELC_SEQUENCE_HPP_
#define KELC_SEQUENCE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kelc {

// Period exponents above this are rejected for in-memory sequences.
inline constexpr int kMaxSequenceExponent = 30;
// Sequences with period <= 64 also fit in a single machine word.
inline constexpr int kMaxWordExponent = 6;

enum class Parity { kAll, kEven, kOdd };

std::string_view ParityName(Parity parity);
Parity ParseParity(std::string_view name);

inline constexpr bool ParityAccepts(Parity parity, std::uint64_t weight) {
  switch (parity) {
    case Parity::kEven:
      return weight % 2 == 0;
    case Parity::kOdd:
      return weight % 2 == 1;
    case Parity::kAll:
      break;
  }
  return true;
}

// Low 2^n bits set, for n <= 6.
inline constexpr std::uint64_t PeriodMask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

/// One period of a 2^n-periodic binary sequence. Bit i holds s_i.
///
/// Storage is packed little-endian into 64-bit words: s_i lives in bit
/// (i % 64) of word i / 64. Values are immutable once built.
class PeriodicSequence {
 public:
  static PeriodicSequence Zero(int n);
  static PeriodicSequence AllOnes(int n);
  // n <= 6; bits above the period are ignored.
  static PeriodicSequence FromWord(int n, std::uint64_t bits);
  // Ones exactly at the given positions (each < 2^n, duplicates cancel).
  static PeriodicSequence FromSupport(int n, std::span<const std::uint32_t> support);
  static PeriodicSequence FromWords(int n, std::vector<std::uint64_t> words);

  int exponent() const { return n_; }
  std::size_t period() const { return std::size_t{1} << n_; }

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const { return bit(i); }

  std::span<const std::uint64_t> words() const { return words_; }
  // Packed period; only meaningful when exponent() <= 6.
  std::uint64_t word() const { return words_[0]; }

  std::uint64_t weight() const;
  bool is_zero() const;
  std::string ToBitString() const;

  PeriodicSequence operator^(const PeriodicSequence& other) const;
  bool operator==(const PeriodicSequence& other) const = default;

  // First and second half of the period as sequences of period 2^(n-1).
  PeriodicSequence Left() const;
  PeriodicSequence Right() const;

 private:
  PeriodicSequence(int n, std::vector<std::uint64_t> words);

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Decodes a bit-string (`[01]{2^n}`, character j is s_j) or a hex literal
/// (`0x` followed by 2^n/4 digits, each nibble expanded MSB first).
PeriodicSequence MakeSequence(int n, std::string_view literal);

std::uint64_t HammingWeight(const PeriodicSequence& s);

/// Folding map: bit i of the result is s_i XOR s_{i + 2^(n-1)}.
PeriodicSequence PhiFold(const PeriodicSequence& s);

inline std::uint64_t PhiFoldWord(int n, std::uint64_t bits) {
  const unsigned half = 1u << (n - 1);
  const std::uint64_t low = PeriodMask(n - 1);
  return (bits & low) ^ ((bits >> half) & low);
}

struct ErrorPattern {
  PeriodicSequence bits;
  std::uint64_t weight = 0;
};

/// Lazily enumerates every error pattern of weight <= max_weight whose weight
/// matches the parity filter. Patterns come weight by weight; within one
/// weight, supports appear in lexicographic order.
class ErrorPatternStream {
 public:
  ErrorPatternStream(int n, int max_weight, Parity parity);

  std::optional<ErrorPattern> Next();
  // The support of the pattern that the last Next() returned.
  std::span<const std::uint32_t> support() const { return support_; }

 private:
  bool Advance();

  int n_;
  int max_weight_;
  Parity parity_;
  std::uint32_t period_;
  std::vector<std::uint32_t> support_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls fn(mask) for each error pattern of period 2^n (n <= 6) with
/// weight <= max_weight passing the parity filter. Order: weight 0 first,
/// then increasing weight; ascending mask value within a weight.
template <class Fn>
void ForEachErrorMask(int n, int max_weight, Parity parity, Fn&& fn) {
  const int period = 1 << n;
  const std::uint64_t limit_mask = PeriodMask(n);
  for (int w = 0; w <= max_weight && w <= period; ++w) {
    if (!ParityAccepts(parity, static_cast<std::uint64_t>(w))) continue;
    if (w == 0) {
      fn(std::uint64_t{0});
      continue;
    }
    std::uint64_t mask = (w == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    for (;;) {
      fn(mask);
      if (mask == (limit_mask & ~((std::uint64_t{1} << (period - w)) - 1))) break;
      // Gosper's hack: next larger integer with the same popcount.
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
}

}  // namespace kelc

#endif  // KELC_SEQUENCE_HPP_

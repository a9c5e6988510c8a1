#ifndef KELC_COUNTING_HPP_
#define KELC_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kelc/counting_terms.hpp"

namespace kelc {

// Largest n accepted by N4Count (2^{L-1} has up to 2^n bits).
inline constexpr int kMaxCountExponent = 24;
// Default cap for FullTable; the table has 2^n rows.
inline constexpr int kDefaultTableExponentCap = 16;

/// L = 2^n - 2^r + c with 2 <= r <= n and 1 <= c <= 2^{r-1} - 1.
struct LDecomposition {
  int r = 0;
  std::uint64_t c = 0;
  bool operator==(const LDecomposition&) const = default;
};

namespace category {

struct Zero {
  bool operator==(const Zero&) const = default;
};
// 1 <= c <= 2^{r-3} - 1, r > 3
struct Generic {
  int r;
  std::uint64_t c;
  bool operator==(const Generic&) const = default;
};
// c = 2^{r-2} - 2^{r-m}
struct F {
  int r, m;
  bool operator==(const F&) const = default;
};
// c = 2^{r-2} - 2^{r-m} + x
struct G {
  int r, m;
  std::uint64_t x;
  bool operator==(const G&) const = default;
};
// c = 2^{r-1} - 2^{r-m}
struct H {
  int r, m;
  bool operator==(const H&) const = default;
};
// c = 2^{r-1} - (2^{r-m} + 2^{r-j})
struct P {
  int r, m, j;
  bool operator==(const P&) const = default;
};
// c = 2^{r-1} - (2^{r-m} + 2^{r-j}) + x
struct Q {
  int r, m, j;
  std::uint64_t x;
  bool operator==(const Q&) const = default;
};
// Decomposition fails or no branch matches; the count is 0.
struct Unreachable {
  bool operator==(const Unreachable&) const = default;
};

}  // namespace category

using Category = std::variant<category::Zero, category::Generic, category::F, category::G,
                              category::H, category::P, category::Q, category::Unreachable>;

std::string Describe(const Category& category);

/// Number of 2^n-periodic sequences with linear complexity exactly L.
BigInt RueppelCount(int n, std::uint64_t L);

std::optional<LDecomposition> Decompose(int n, std::uint64_t L);

/// Tests every branch and throws MultipleMatch if more than one fires.
Category Classify(int n, std::uint64_t L);

BigInt FMultiplier(int r, int m);
BigInt GMultiplier(int r, int m);
BigInt HMultiplier(int r, int m);
BigInt PMultiplier(int r, int m, int j);
BigInt QMultiplier(int r, int m, int j);

/// Per-branch multiplier, so that N_4(L) = 2^{L-1} * Multiplier. Zero and
/// Unreachable have no multiplier and throw InvalidBranch.
BigInt Multiplier(const Category& category);

/// Number of 2^n-periodic sequences with even weight (linear complexity
/// below 2^n) whose 4-error linear complexity is L.
BigInt N4Count(int n, std::uint64_t L);

/// 5-error counterpart on the same population; equals N4Count, since an odd
/// error count always produces odd weight and complexity 2^n.
BigInt N5Count(int n, std::uint64_t L);

/// Weight-8 sequences of period 2^n with complexity 2^{n-1} - (2^{n-m} + 2^{n-j}).
BigInt Weight8Count(int n, int m, int j);

struct CountingTable {
  int n = 0;
  int k = 0;
  // rows[L] for 0 <= L < 2^n
  std::vector<BigInt> rows;

  BigInt Total() const;
  bool operator==(const CountingTable&) const = default;
};

/// Closed-form N_k(L) for every L in [0, 2^n), k in {4, 5}. L-ranges are
/// split across `threads` workers (0 = hardware concurrency); the result does
/// not depend on the split.
CountingTable FullTable(int n, int k, unsigned threads = 1,
                        int max_exponent = kDefaultTableExponentCap);

}  // namespace kelc

#endif  // KELC_COUNTING_HPP_

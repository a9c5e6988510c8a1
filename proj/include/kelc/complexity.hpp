#ifndef KELC_COMPLEXITY_HPP_
#define KELC_COMPLEXITY_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "kelc/sequence.hpp"

namespace kelc {

/// L_0..L_K for one sequence, plus the smallest k with L_k < L_0.
struct ComplexityProfile {
  int n = 0;
  std::vector<std::uint64_t> L;
  // 2^n + 1 for the zero sequence, which never drops.
  std::uint64_t k_min = 0;
};

/// Games-Chan on a packed period (n <= 6).
inline std::uint32_t LinearComplexityWord(int n, std::uint64_t bits) {
  bits &= PeriodMask(n);
  std::uint32_t lc = 0;
  for (int level = n; level > 0; --level) {
    const unsigned half = 1u << (level - 1);
    const std::uint64_t low = PeriodMask(level - 1);
    const std::uint64_t left = bits & low;
    const std::uint64_t right = (bits >> half) & low;
    if (left != right) {
      lc += half;
      bits = left ^ right;
    } else {
      bits = left;
    }
  }
  return lc + static_cast<std::uint32_t>(bits & 1u);
}

/// Stamp-Martin k-error linear complexity on a packed period (n <= 6).
///
/// Each position carries the cost of changing it; at every folding level the
/// cheaper of "force the halves equal" (paid out of k) and "fold and add half
/// the period" is taken, with costs combined alongside the bits.
inline std::uint32_t KErrorComplexityFastWord(int n, std::uint64_t bits, std::uint64_t k) {
  bits &= PeriodMask(n);
  if (k >= static_cast<std::uint64_t>(std::popcount(bits))) return 0;
  std::array<std::uint32_t, 64> cost;
  const unsigned period = 1u << n;
  for (unsigned i = 0; i < period; ++i) cost[i] = 1;

  std::uint32_t lc = 0;
  for (unsigned len = period; len > 1; len >>= 1) {
    const unsigned half = len >> 1;
    const std::uint64_t low = half == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << half) - 1;
    const std::uint64_t left = bits & low;
    const std::uint64_t right = (bits >> half) & low;
    std::uint64_t diff = left ^ right;

    std::uint64_t to_equalize = 0;
    for (std::uint64_t d = diff; d != 0; d &= d - 1) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(d));
      to_equalize += cost[i] < cost[i + half] ? cost[i] : cost[i + half];
    }

    if (to_equalize <= k) {
      k -= to_equalize;
      std::uint64_t merged = left;
      for (unsigned i = 0; i < half; ++i) {
        if (((diff >> i) & 1u) == 0) {
          cost[i] += cost[i + half];
        } else if (cost[i] <= cost[i + half]) {
          merged ^= std::uint64_t{1} << i;  // take the right-hand value
          cost[i] = cost[i + half] - cost[i];
        } else {
          cost[i] -= cost[i + half];
        }
      }
      bits = merged;
    } else {
      lc += half;
      for (unsigned i = 0; i < half; ++i) {
        if (cost[i + half] < cost[i]) cost[i] = cost[i + half];
      }
      bits = diff;
    }
  }
  if ((bits & 1u) != 0 && cost[0] > k) lc += 1;
  return lc;
}

/// Degree of the minimal polynomial, via Games-Chan; linear in 2^n.
std::uint64_t LinearComplexity(const PeriodicSequence& s);

/// Reference k-error complexity: minimum of LinearComplexity(s ^ e) over every
/// error pattern e with weight <= k. Cost grows as sum_i C(2^n, i).
std::uint64_t KErrorComplexityExhaustive(const PeriodicSequence& s, std::uint64_t k);

/// L_0..L_max_k by exhaustive search, sharing one pass over the patterns.
std::vector<std::uint64_t> KErrorProfileExhaustive(const PeriodicSequence& s, int max_k);

/// Same value as KErrorComplexityExhaustive, in time linear in 2^n.
std::uint64_t KErrorComplexityFast(const PeriodicSequence& s, std::uint64_t k);

/// 2^{W_H(2^n - L(s))}. Throws UndefinedForZero for the zero sequence.
std::uint64_t KMin(const PeriodicSequence& s);

ComplexityProfile Profile(const PeriodicSequence& s, int max_k);

}  // namespace kelc

#endif  // KELC_COMPLEXITY_HPP_

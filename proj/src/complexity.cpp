#include "kelc/complexity.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kelc/error.hpp"

namespace kelc {

namespace {

std::vector<std::uint8_t> Unpack(const PeriodicSequence& s) {
  std::vector<std::uint8_t> bits(s.period());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = s.bit(i) ? 1 : 0;
  return bits;
}

void CheckErrorBound(const PeriodicSequence& s, std::uint64_t k) {
  if (k > s.period()) {
    throw Error(ErrorCode::kOutOfRange,
                "k = " + std::to_string(k) + " exceeds the period " + std::to_string(s.period()));
  }
}

}  // namespace

std::uint64_t LinearComplexity(const PeriodicSequence& s) {
  if (s.exponent() <= kMaxWordExponent) return LinearComplexityWord(s.exponent(), s.word());

  // Fold whole words until one word (period 64) remains.
  std::vector<std::uint64_t> words(s.words().begin(), s.words().end());
  std::uint64_t lc = 0;
  for (std::size_t len = words.size(); len > 1; len >>= 1) {
    const std::size_t half = len >> 1;
    const bool equal = std::equal(words.begin(), words.begin() + half, words.begin() + half);
    if (!equal) {
      lc += std::uint64_t{64} * half;
      for (std::size_t i = 0; i < half; ++i) words[i] ^= words[i + half];
    }
  }
  return lc + LinearComplexityWord(kMaxWordExponent, words[0]);
}

std::vector<std::uint64_t> KErrorProfileExhaustive(const PeriodicSequence& s, int max_k) {
  if (max_k < 0) throw Error(ErrorCode::kOutOfRange, "max_k must be non-negative");
  CheckErrorBound(s, static_cast<std::uint64_t>(max_k));

  std::vector<std::uint64_t> best(static_cast<std::size_t>(max_k) + 1,
                                  std::numeric_limits<std::uint64_t>::max());
  if (s.exponent() <= kMaxWordExponent) {
    const int n = s.exponent();
    const std::uint64_t bits = s.word();
    std::uint64_t current_weight = 0;
    std::uint64_t current_best = std::numeric_limits<std::uint64_t>::max();
    ForEachErrorMask(n, max_k, Parity::kAll, [&](std::uint64_t mask) {
      const auto w = static_cast<std::uint64_t>(std::popcount(mask));
      if (w != current_weight) {
        best[current_weight] = current_best;
        current_weight = w;
        current_best = std::numeric_limits<std::uint64_t>::max();
      }
      current_best = std::min<std::uint64_t>(current_best, LinearComplexityWord(n, bits ^ mask));
    });
    best[current_weight] = std::min(best[current_weight], current_best);
  } else {
    ErrorPatternStream stream(s.exponent(), max_k, Parity::kAll);
    while (auto pattern = stream.Next()) {
      std::uint64_t& slot = best[pattern->weight];
      slot = std::min(slot, LinearComplexity(s ^ pattern->bits));
    }
  }
  for (std::size_t k = 1; k < best.size(); ++k) best[k] = std::min(best[k], best[k - 1]);
  return best;
}

std::uint64_t KErrorComplexityExhaustive(const PeriodicSequence& s, std::uint64_t k) {
  CheckErrorBound(s, k);
  return KErrorProfileExhaustive(s, static_cast<int>(k)).back();
}

std::uint64_t KErrorComplexityFast(const PeriodicSequence& s, std::uint64_t k) {
  CheckErrorBound(s, k);
  if (s.exponent() <= kMaxWordExponent) return KErrorComplexityFastWord(s.exponent(), s.word(), k);
  if (k >= s.weight()) return 0;

  std::vector<std::uint8_t> bits = Unpack(s);
  std::vector<std::uint64_t> cost(bits.size(), 1);
  std::uint64_t lc = 0;
  for (std::size_t len = bits.size(); len > 1; len >>= 1) {
    const std::size_t half = len >> 1;
    std::uint64_t to_equalize = 0;
    for (std::size_t i = 0; i < half; ++i) {
      if (bits[i] != bits[i + half]) to_equalize += std::min(cost[i], cost[i + half]);
    }
    if (to_equalize <= k) {
      k -= to_equalize;
      for (std::size_t i = 0; i < half; ++i) {
        if (bits[i] == bits[i + half]) {
          cost[i] += cost[i + half];
        } else if (cost[i] <= cost[i + half]) {
          bits[i] = bits[i + half];
          cost[i] = cost[i + half] - cost[i];
        } else {
          cost[i] -= cost[i + half];
        }
      }
    } else {
      lc += half;
      for (std::size_t i = 0; i < half; ++i) {
        bits[i] ^= bits[i + half];
        cost[i] = std::min(cost[i], cost[i + half]);
      }
    }
  }
  if (bits[0] != 0 && cost[0] > k) lc += 1;
  return lc;
}

std::uint64_t KMin(const PeriodicSequence& s) {
  if (s.is_zero()) {
    throw Error(ErrorCode::kUndefinedForZero, "k_min is undefined for the zero sequence");
  }
  const std::uint64_t gap = s.period() - LinearComplexity(s);
  return std::uint64_t{1} << std::popcount(gap);
}

ComplexityProfile Profile(const PeriodicSequence& s, int max_k) {
  if (max_k < 0) throw Error(ErrorCode::kOutOfRange, "K must be non-negative");
  CheckErrorBound(s, static_cast<std::uint64_t>(max_k));

  ComplexityProfile profile;
  profile.n = s.exponent();
  profile.L.assign(static_cast<std::size_t>(max_k) + 1, 0);
  const std::uint64_t weight = s.weight();
  const auto computed = static_cast<int>(std::min<std::uint64_t>(max_k, weight));
  for (int k = 0; k <= computed; ++k) {
    profile.L[static_cast<std::size_t>(k)] = KErrorComplexityFast(s, static_cast<std::uint64_t>(k));
  }

  if (s.is_zero()) {
    profile.k_min = s.period() + 1;
    return profile;
  }
  const std::uint64_t formula = KMin(s);
  const auto drop = std::find_if(profile.L.begin(), profile.L.end(),
                                 [&](std::uint64_t v) { return v < profile.L[0]; });
  if (drop == profile.L.end()) {
    profile.k_min = formula;
    return profile;
  }
  profile.k_min = static_cast<std::uint64_t>(drop - profile.L.begin());
  if (profile.k_min != formula) {
    throw Error(ErrorCode::kFormulaError,
                "profile drop at k = " + std::to_string(profile.k_min) +
                    " disagrees with 2^{W_H(2^n - L)} = " + std::to_string(formula));
  }
  return profile;
}

}  // namespace kelc

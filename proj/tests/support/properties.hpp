#ifndef KELC_TESTS_PROPERTIES_HPP_
#define KELC_TESTS_PROPERTIES_HPP_

// Exhaustive and sampled property checks. Each returns the first
// counterexample it finds, so unit tests and the acceptance runner can share
// them.

#include <cstdint>
#include <string>

namespace kelc::testing {

struct CheckResult {
  bool ok = true;
  std::string detail;
  std::uint64_t cases = 0;

  static CheckResult Fail(std::string why) { return {false, std::move(why), 0}; }
};

// Folding map: weight never grows, parity kept (n >= 2).
CheckResult CheckFoldWeights(int n);
// Every period-2^n sequence has exactly 2^{2^n} preimages of period 2^{n+1}.
CheckResult CheckFoldPreimages(int n);

// Games-Chan against Berlekamp-Massey for every sequence of period 2^n.
CheckResult CheckGamesChanReference(int n);
// Games-Chan recursion step as stated on Left/Right halves.
CheckResult CheckGamesChanRecursion(int n);
// L(s) = 2^n iff the weight is odd.
CheckResult CheckOddWeightIffFull(int n);
// L(a ^ b) = max when L(a) != L(b), strictly smaller otherwise.
CheckResult CheckSuperposition(int n);
// L(E_i + E_j) = 2^n - 2^r for j - i = 2^r * odd.
CheckResult CheckTwoPointComplexity(int n);
// Weight-4 sequences have L = 2^n - 2^{n-m} or 2^n - (2^{n-m} + 2^{n-j}).
CheckResult CheckWeightFourForms(int n);

// L_k >= L_{k+1}. Exhaustive when samples == 0, otherwise seeded sampling.
CheckResult CheckMonotonicity(int n, std::uint64_t samples, std::uint64_t seed);
// Odd weight, odd k and even weight, even k: L_k = L_{k+1}.
CheckResult CheckParityDualities(int n);
// First drop in the profile happens at 2^{W_H(2^n - L)}.
CheckResult CheckKMinAgainstProfiles(int n);
// Fast k-error complexity equals the exhaustive one for k = 0..max_k.
// Exhaustive over the whole space when samples == 0.
CheckResult CheckFastAgainstExhaustive(int n, int max_k, std::uint64_t samples, std::uint64_t seed);
// Fast k-error complexity against a brute force over Berlekamp-Massey.
CheckResult CheckFastAgainstReference(int n, int max_k);

// s ^ u distinct over all s with L(s) = c and all u of weight 0, 2 or 4.
CheckResult CheckSieveInjectivity(int n, std::uint64_t c);
// 4-error complexity of s ^ u stays c for every admissible c at period 2^n.
CheckResult CheckStability(int n);

// Enumerated spectrum at k = 0 equals Rueppel's count.
CheckResult CheckRueppelSpectrum(int n);
// even + odd = all, bin by bin, for k = 0..max_k.
CheckResult CheckParitySplit(int n, int max_k);
// Even-weight spectrum is the same for k and k + 1 when k is even.
CheckResult CheckEvenDuality(int n, int max_k);
// Spectrum identical for 1 and `threads` workers.
CheckResult CheckShardedSpectrum(int n, int k, unsigned threads);

// Classify never reports more than one branch for n <= max_n.
CheckResult CheckBranchDisjointness(int max_n);
// Every multiplier is non-negative for r <= max_r (divisions are checked
// internally).
CheckResult CheckMultipliersNonNegative(int max_r);
// N_4(n, L) / 2^{L-1} depends only on the branch parameters.
CheckResult CheckLiftingConsistency(int max_n);
// Sum over L of N_4(n, L) equals 2^{2^n - 1}.
CheckResult CheckSumIdentity(int n);

}  // namespace kelc::testing

#endif  // KELC_TESTS_PROPERTIES_HPP_

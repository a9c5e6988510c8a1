#ifndef KELC_COUNTING_TERMS_HPP_
#define KELC_COUNTING_TERMS_HPP_

// Intermediate sieve constants behind the 4-error multipliers f, g, h, p, q.
//
// Every constant is its own function so a transcription error shows up in one
// place. Arguments follow one convention throughout: `r` is the period
// exponent of the folded subsequence the multiplier is evaluated at, `m` and
// `j` are the branch parameters, and `k` is the summation index of the
// k-dependent terms (m < k <= j).
//
// Binomials use C(a, b) = 0 whenever a < b or b < 0.

#include <cstdint>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kelc {

using BigInt = boost::multiprecision::cpp_int;

BigInt Pow2(int exponent);
BigInt Binomial(const BigInt& a, int b);
BigInt Binomial(std::int64_t a, int b);

// value / divisor, throwing FormulaError when the division is not exact.
BigInt ExactDiv(const BigInt& value, const BigInt& divisor, std::string_view what);
// value * (2^a - 1) / 2^a, evaluated as (value / 2^a) * (2^a - 1).
BigInt ScaleByFraction(const BigInt& value, int a, std::string_view what);

// 1 + C(2^r, 2) + C(2^r, 4): error patterns of weight 0, 2 or 4.
BigInt EvenErrorPatternCount(int r);

namespace terms {

// f(r, m): weight-8 supports of complexity 2^{r-2} - 2^{r-m} and below.
BigInt C1(int r, int m);
BigInt C2(int r, int m);

// g(r, m).
BigInt D1(int r);
BigInt D2(int r, int m);

// h(r, m): weight-4 patterns split over the 2^{r-m} residue classes.
BigInt E1(int r, int m);
BigInt E2(int r, int m);
BigInt E3(int r, int m);
BigInt E4(int r, int m);
BigInt E5(int r, int m);
BigInt E6(int r, int m);
BigInt E7(int r, int m);
BigInt E8(int r, int m);

// p(r, m, j).
BigInt F1(int r, int j);
BigInt F2(int r, int m);
BigInt F3(int r, int m, int j);
BigInt F4(int r, int m, int j);
// Closed simplification of F4, kept for cross-checking the long form.
BigInt F4Simplified(int r, int m, int j);
BigInt F5(int r, int m);
BigInt F6(int r, int k);
BigInt F7(int r, int m, int k);
BigInt F8(int r, int m, int k);
BigInt F9(int r, int m);
BigInt F10(int r);
BigInt F11(int r, int m);
BigInt F12(int r, int m);
BigInt F13(int r, int m);
BigInt F14(int r, int m);
BigInt F15(int r, int m);
BigInt F16(int r, int m, int j);
BigInt F17(int r, int m);
BigInt F18(int r, int m);
BigInt F19(int r, int m, int j);
BigInt F20(int r, int m);
BigInt F21(int r, int m, int j);
BigInt F22(int r, int m);
BigInt F23(int r, int m, int j);
BigInt F24(int r, int m);
BigInt F25(int r, int m);
BigInt F26(int r, int m);
BigInt F27(int r, int m);

// q(r, m, j).
BigInt G0(int r, int m, int k);
BigInt G1(int r, int m);
BigInt G2(int r, int m, int k);
BigInt G3(int r, int m, int k);
BigInt G4(int r, int m, int k);
BigInt G5(int r, int m);
BigInt G6(int r);
BigInt G7(int r, int m);
BigInt G8(int r, int m);
BigInt G9(int r, int m);
BigInt G10(int r, int m);
BigInt G11(int r, int m);
BigInt G12(int r, int m, int j);
BigInt G13(int r, int m);
BigInt G14(int r, int m);
BigInt G15(int r, int m, int j);
BigInt G16(int r, int m);
BigInt G17(int r, int m, int j);
BigInt G18(int r, int m);
BigInt G19(int r, int m, int j);
BigInt G20(int r, int m);
BigInt G21(int r, int m);
BigInt G22(int r, int m);
BigInt G23(int r, int m);

}  // namespace terms
}  // namespace kelc

#endif  // KELC_COUNTING_TERMS_HPP_

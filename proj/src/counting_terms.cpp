#include "kelc/counting_terms.hpp"

#include <string>

#include "kelc/error.hpp"

namespace kelc {

BigInt Pow2(int exponent) {
  if (exponent < 0) {
    throw Error(ErrorCode::kFormulaError, "negative power of two 2^" + std::to_string(exponent));
  }
  BigInt v = 1;
  v <<= exponent;
  return v;
}

BigInt Binomial(const BigInt& a, int b) {
  if (b < 0 || a < b) return 0;
  BigInt result = 1;
  // Each partial product is itself a binomial, so every division is exact.
  for (int i = 0; i < b; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

BigInt Binomial(std::int64_t a, int b) { return Binomial(BigInt(a), b); }

BigInt ExactDiv(const BigInt& value, const BigInt& divisor, std::string_view what) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorCode::kFormulaError, std::string(what) + ": " + value.str() +
                                              " is not divisible by " + divisor.str());
  }
  return quotient;
}

BigInt ScaleByFraction(const BigInt& value, int a, std::string_view what) {
  const BigInt denom = Pow2(a);
  return ExactDiv(value, denom, what) * (denom - 1);
}

BigInt EvenErrorPatternCount(int r) {
  const BigInt period = Pow2(r);
  return 1 + Binomial(period, 2) + Binomial(period, 4);
}

namespace terms {

namespace {

// C(2^e, b)
BigInt BinomPow2(int e, int b) { return Binomial(Pow2(e), b); }

const BigInt kChoose84 = 70;

}  // namespace

// ---- f ---------------------------------------------------------------------

BigInt C1(int r, int m) { return Pow2(r + m - 6) * kChoose84 - Pow2(r - 2) * (Pow2(m - 3) - 1); }

BigInt C2(int r, int m) { return (Pow2(r + m - 6) - Pow2(r - 3)) * (kChoose84 - 2); }

// ---- g ---------------------------------------------------------------------

BigInt D1(int r) { return Pow2(r - 2); }

BigInt D2(int r, int m) { return (Pow2(r + m - 5) - Pow2(r - 3)) * (kChoose84 - 2); }

// ---- h ---------------------------------------------------------------------

BigInt E1(int r, int m) {
  const BigInt pair = BinomPow2(m, 2);
  return BinomPow2(r - m, 2) * pair * pair;
}

BigInt E2(int r, int m) {
  const BigInt classes = BinomPow2(r - m, 2);
  const BigInt half_pair = BinomPow2(m - 1, 2);
  return 4 * classes * half_pair * half_pair -
         classes * (Pow2(2 * m - 2) + Pow2(m + 1) * (half_pair - Pow2(m - 2)));
}

BigInt E3(int r, int m) {
  return BinomPow2(r - m, 3) * 3 * BinomPow2(m, 2) * Pow2(m) * Pow2(m);
}

BigInt E4(int r, int m) {
  const BigInt triples = BinomPow2(r - m, 3);
  return triples * 3 * BinomPow2(m - 1, 2) * Pow2(2 * m + 1) - triples * 3 * Pow2(3 * m - 1);
}

BigInt E5(int r, int m) { return BinomPow2(r - m, 2) * 2 * BinomPow2(m, 3) * Pow2(m); }

BigInt E6(int r, int m) {
  const BigInt classes = BinomPow2(r - m, 2);
  return Pow2(m + 2) * classes * BinomPow2(m - 1, 3) - classes * (Pow2(m - 1) - 2) * Pow2(2 * m);
}

BigInt E7(int r, int m) { return Pow2(r - m) * BinomPow2(m, 4); }

BigInt E8(int r, int m) {
  return Pow2(r - m + 1) * BinomPow2(m - 1, 4) -
         (Pow2(r - 1) * Binomial(Pow2(m - 1) - 2, 2) - Pow2(r - m + 1) * BinomPow2(m - 2, 2));
}

// ---- p ---------------------------------------------------------------------

BigInt F1(int r, int j) {
  return Pow2(r - j) * BinomPow2(j - 1, 2) - Pow2(r - j + 1) * BinomPow2(j - 2, 2);
}

BigInt F2(int r, int m) {
  return Pow2(r - m) * BinomPow2(m - 1, 2) - Pow2(r - m + 1) * BinomPow2(m - 2, 2);
}

BigInt F3(int r, int m, int j) {
  return ExactDiv(3 * Pow2(r + 2 * m + j - 6), Pow2(m - 2), "F3");
}

BigInt F4(int r, int m, int j) {
  return Pow2(r + 2 * m + j - 10) * kChoose84 - (Pow2(2 * (m - 2)) - 1) * F1(r, j) -
         (Pow2(m + j - 5) - 1) * F2(r, m) - (Pow2(m - 2) - 1) * F3(r, m, j);
}

BigInt F4Simplified(int r, int m, int j) {
  return Pow2(r + 2 * m + j - 6) + Pow2(r + m - 4) + Pow2(r + j - 4) + 3 * Pow2(r + m + j - 4);
}

BigInt F5(int r, int m) { return Pow2(r + m - 4); }

BigInt F6(int r, int k) { return Pow2(r + k - 4); }

BigInt F7(int r, int m, int k) { return 3 * Pow2(r + m + k - 4); }

BigInt F8(int r, int m, int k) {
  // C(4,0) + C(4,1) + ... + C(4,4) = 16
  return Pow2(r + 2 * m + k - 10) * 16;
}

BigInt F9(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 1, 2); }

BigInt F10(int r) { return Pow2(r - 1); }

BigInt F11(int r, int m) { return F9(r, m) - F10(r); }

BigInt F12(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * BinomPow2(m - 1, 3) * Pow2(m - 1);
}

BigInt F13(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * Pow2(m - 2) * (Pow2(m - 1) - 2) * Pow2(m - 1);
}

BigInt F14(int r, int m) { return F12(r, m) - F13(r, m); }

BigInt F15(int r, int m) {
  const BigInt pair = BinomPow2(m - 1, 2);
  return BinomPow2(r - m + 1, 2) * pair * pair;
}

BigInt F16(int r, int m, int j) {
  BigInt lifted = 0;
  for (int k = m + 1; k <= j; ++k) lifted += Pow2(r + k - 4);
  return F15(r, m) - F2(r, m) - lifted;
}

BigInt F17(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * Pow2(m - 2) * (BinomPow2(m - 1, 2) - Pow2(m - 2));
}

BigInt F18(int r, int m) {
  const BigInt spread = BinomPow2(m - 1, 2) - Pow2(m - 2);
  return BinomPow2(r - m + 1, 2) * spread * spread;
}

BigInt F19(int r, int m, int j) { return F16(r, m, j) - F17(r, m) - F18(r, m); }

BigInt F20(int r, int m) {
  return BinomPow2(r - m + 1, 3) * 3 * BinomPow2(m - 1, 2) * Pow2(m - 1) * Pow2(m - 1);
}

BigInt F21(int r, int m, int j) {
  BigInt lifted = 0;
  for (int k = m + 1; k <= j; ++k) lifted += Pow2(r + m + k - 4);
  return F20(r, m) - 3 * lifted;
}

BigInt F22(int r, int m) {
  return BinomPow2(r - m + 1, 3) * 3 * (BinomPow2(m - 1, 2) - Pow2(m - 2)) * Pow2(m - 1) *
         Pow2(m - 1);
}

BigInt F23(int r, int m, int j) { return F21(r, m, j) - F22(r, m); }

BigInt F24(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 1, 4); }

BigInt F25(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 2, 2); }

BigInt F26(int r, int m) {
  return Pow2(r - m + 1) * Pow2(m - 2) * (Binomial(Pow2(m - 1) - 2, 2) - (Pow2(m - 2) - 1));
}

BigInt F27(int r, int m) { return F24(r, m) - F25(r, m) - F26(r, m); }

// ---- q ---------------------------------------------------------------------

BigInt G0(int r, int m, int k) { return Pow2(r + m - 4) + Pow2(r + k - 4); }

BigInt G1(int r, int m) { return Pow2(r + m - 4); }

BigInt G2(int r, int m, int k) { return G0(r, m, k) - G1(r, m); }

BigInt G3(int r, int m, int k) { return 3 * Pow2(r + m + k - 4); }

BigInt G4(int r, int m, int k) { return Pow2(r + 2 * m + k - 10) * 16; }

BigInt G5(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 1, 2); }

BigInt G6(int r) { return Pow2(r - 1); }

BigInt G7(int r, int m) { return G5(r, m) - G6(r); }

BigInt G8(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * BinomPow2(m - 1, 3) * Pow2(m - 1);
}

BigInt G9(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * Pow2(m - 2) * (Pow2(m - 1) - 2) * Pow2(m - 1);
}

BigInt G10(int r, int m) { return G8(r, m) - G9(r, m); }

BigInt G11(int r, int m) {
  const BigInt pair = BinomPow2(m - 1, 2);
  return BinomPow2(r - m + 1, 2) * pair * pair;
}

BigInt G12(int r, int m, int j) {
  BigInt covered = G1(r, m);
  for (int k = m + 1; k <= j; ++k) covered += G2(r, m, k);
  return G11(r, m) - covered;
}

BigInt G13(int r, int m) {
  return BinomPow2(r - m + 1, 2) * 2 * Pow2(m - 2) * (BinomPow2(m - 1, 2) - Pow2(m - 2));
}

BigInt G14(int r, int m) {
  const BigInt spread = BinomPow2(m - 1, 2) - Pow2(m - 2);
  return BinomPow2(r - m + 1, 2) * spread * spread;
}

BigInt G15(int r, int m, int j) { return G12(r, m, j) - G13(r, m) - G14(r, m); }

BigInt G16(int r, int m) {
  return BinomPow2(r - m + 1, 3) * 3 * BinomPow2(m - 1, 2) * Pow2(m - 1) * Pow2(m - 1);
}

BigInt G17(int r, int m, int j) {
  BigInt lifted = 0;
  for (int k = m + 1; k <= j; ++k) lifted += Pow2(r + m + k - 4);
  return G16(r, m) - 3 * lifted;
}

BigInt G18(int r, int m) {
  return BinomPow2(r - m + 1, 3) * 3 * (BinomPow2(m - 1, 2) - Pow2(m - 2)) * Pow2(m - 1) *
         Pow2(m - 1);
}

BigInt G19(int r, int m, int j) { return G17(r, m, j) - G18(r, m); }

BigInt G20(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 1, 4); }

BigInt G21(int r, int m) { return Pow2(r - m + 1) * BinomPow2(m - 2, 2); }

BigInt G22(int r, int m) {
  return Pow2(r - m + 1) * Pow2(m - 2) * (Binomial(Pow2(m - 1) - 2, 2) - (Pow2(m - 2) - 1));
}

BigInt G23(int r, int m) { return G20(r, m) - G21(r, m) - G22(r, m); }

}  // namespace terms
}  // namespace kelc

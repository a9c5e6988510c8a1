#include "kelc/counting.hpp"

#include <sstream>
#include <type_traits>

#include "kelc/error.hpp"
#include "parallel.hpp"

namespace kelc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t U64Pow2(int e) { return std::uint64_t{1} << e; }

void RequireBranch(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidBranch, what);
}

std::string Params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [name, value] : kv) {
    if (!first) out << ", ";
    out << name << "=" << value;
    first = false;
  }
  out << ")";
  return out.str();
}

BigInt CheckedNonNegative(BigInt value, const std::string& what) {
  if (value < 0) throw Error(ErrorCode::kFormulaError, what + " evaluated to " + value.str());
  return value;
}

void CheckCountArgs(int n, std::uint64_t L) {
  if (n < 2 || n > kMaxCountExponent) {
    throw Error(ErrorCode::kOutOfRange,
                "n = " + std::to_string(n) + " outside [2, " + std::to_string(kMaxCountExponent) + "]");
  }
  if (L >= U64Pow2(n)) {
    throw Error(ErrorCode::kOutOfRange,
                "L = " + std::to_string(L) + " outside [0, 2^" + std::to_string(n) + ")");
  }
}

}  // namespace

std::string Describe(const Category& cat) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const category::Zero&) { out << "Zero"; },
                 [&](const category::Generic& g) { out << "Generic{r=" << g.r << ",c=" << g.c << "}"; },
                 [&](const category::F& f) { out << "F{r=" << f.r << ",m=" << f.m << "}"; },
                 [&](const category::G& g) {
                   out << "G{r=" << g.r << ",m=" << g.m << ",x=" << g.x << "}";
                 },
                 [&](const category::H& h) { out << "H{r=" << h.r << ",m=" << h.m << "}"; },
                 [&](const category::P& p) {
                   out << "P{r=" << p.r << ",m=" << p.m << ",j=" << p.j << "}";
                 },
                 [&](const category::Q& q) {
                   out << "Q{r=" << q.r << ",m=" << q.m << ",j=" << q.j << ",x=" << q.x << "}";
                 },
                 [&](const category::Unreachable&) { out << "Unreachable"; },
             },
             cat);
  return out.str();
}

BigInt RueppelCount(int n, std::uint64_t L) {
  if (n < 0 || n > kMaxCountExponent) {
    throw Error(ErrorCode::kOutOfRange, "n = " + std::to_string(n) + " out of range");
  }
  if (L > U64Pow2(n)) {
    throw Error(ErrorCode::kOutOfRange,
                "L = " + std::to_string(L) + " exceeds the period 2^" + std::to_string(n));
  }
  if (L == 0) return 1;
  return Pow2(static_cast<int>(L - 1));
}

std::optional<LDecomposition> Decompose(int n, std::uint64_t L) {
  if (n < 1 || n > 63 || L < 1 || L >= U64Pow2(n)) {
    throw Error(ErrorCode::kOutOfRange,
                "L = " + std::to_string(L) + " outside [1, 2^" + std::to_string(n) + ")");
  }
  // The windows (2^n - 2^r, 2^n - 2^{r-1}) are disjoint, so at most one r fits.
  for (int r = 2; r <= n; ++r) {
    const std::uint64_t base = U64Pow2(n) - U64Pow2(r);
    if (L > base && L - base <= U64Pow2(r - 1) - 1) return LDecomposition{r, L - base};
  }
  return std::nullopt;
}

Category Classify(int n, std::uint64_t L) {
  if (n < 1 || n > 63 || L >= U64Pow2(n)) {
    throw Error(ErrorCode::kOutOfRange,
                "L = " + std::to_string(L) + " outside [0, 2^" + std::to_string(n) + ")");
  }
  if (L == 0) return category::Zero{};
  const auto dec = Decompose(n, L);
  if (!dec) return category::Unreachable{};

  const int r = dec->r;
  const std::uint64_t c = dec->c;
  std::vector<Category> hits;

  if (r > 3 && c <= U64Pow2(r - 3) - 1) hits.emplace_back(category::Generic{r, c});
  if (r > 2) {
    for (int m = 3; m <= r; ++m) {
      if (c == U64Pow2(r - 2) - U64Pow2(r - m)) hits.emplace_back(category::F{r, m});
    }
  }
  if (r > 4) {
    for (int m = 3; m < r - 1; ++m) {
      const std::uint64_t base = U64Pow2(r - 2) - U64Pow2(r - m);
      if (c > base && c - base < U64Pow2(r - m - 1)) {
        hits.emplace_back(category::G{r, m, c - base});
      }
    }
  }
  for (int m = 2; m <= r; ++m) {
    if (c == U64Pow2(r - 1) - U64Pow2(r - m)) hits.emplace_back(category::H{r, m});
  }
  if (r > 3) {
    for (int m = 3; m <= r; ++m) {
      for (int j = m + 1; j <= r; ++j) {
        if (c == U64Pow2(r - 1) - (U64Pow2(r - m) + U64Pow2(r - j))) {
          hits.emplace_back(category::P{r, m, j});
        }
      }
    }
  }
  if (r > 5) {
    for (int m = 3; m < r - 1; ++m) {
      for (int j = m + 1; j < r - 1; ++j) {
        const std::uint64_t base = U64Pow2(r - 1) - (U64Pow2(r - m) + U64Pow2(r - j));
        if (c > base && c - base < U64Pow2(r - j - 1)) {
          hits.emplace_back(category::Q{r, m, j, c - base});
        }
      }
    }
  }

  if (hits.empty()) return category::Unreachable{};
  if (hits.size() > 1) {
    std::string names;
    for (const auto& h : hits) names += " " + Describe(h);
    throw Error(ErrorCode::kMultipleMatch,
                "n=" + std::to_string(n) + " L=" + std::to_string(L) + " matches" + names);
  }
  return hits.front();
}

BigInt FMultiplier(int r, int m) {
  RequireBranch(r > 2 && m > 2 && m <= r, "f" + Params({{"r", r}, {"m", m}}));
  const BigInt value =
      EvenErrorPatternCount(r) - terms::C1(r, m) - ExactDiv(terms::C2(r, m), 2, "C2/2");
  return CheckedNonNegative(value, "f" + Params({{"r", r}, {"m", m}}));
}

BigInt GMultiplier(int r, int m) {
  RequireBranch(r > 4 && m > 2 && m < r - 1, "g" + Params({{"r", r}, {"m", m}}));
  const BigInt value = EvenErrorPatternCount(r) - ScaleByFraction(terms::D1(r), m - 2, "D1") -
                       ExactDiv(terms::D2(r, m), 2, "D2/2");
  return CheckedNonNegative(value, "g" + Params({{"r", r}, {"m", m}}));
}

BigInt HMultiplier(int r, int m) {
  RequireBranch(r >= 2 && m >= 2 && m <= r, "h" + Params({{"r", r}, {"m", m}}));
  using namespace terms;
  const BigInt value = Binomial(Pow2(r), 4) - E1(r, m) + ExactDiv(E2(r, m), 4, "E2/4") -
                       E3(r, m) + ExactDiv(E4(r, m), 2, "E4/2") - E5(r, m) +
                       ExactDiv(E6(r, m), 4, "E6/4") - E7(r, m) + ExactDiv(E8(r, m), 8, "E8/8");
  return CheckedNonNegative(value, "h" + Params({{"r", r}, {"m", m}}));
}

BigInt PMultiplier(int r, int m, int j) {
  const std::string label = "p" + Params({{"r", r}, {"m", m}, {"j", j}});
  RequireBranch(r > 3 && m > 2 && m < j && j <= r, label);
  using namespace terms;

  BigInt value = EvenErrorPatternCount(r) - F4(r, m, j);
  for (int k = m + 1; k <= j - 1; ++k) {
    value -= ScaleByFraction(F6(r, k), 2 * m - 3, "F6") +
             ScaleByFraction(F7(r, m, k), m - 1, "F7") + ExactDiv(F8(r, m, k), 2, "F8/2");
  }
  value -= ScaleByFraction(F10(r), m - 2, "F10");
  value -= ExactDiv(F11(r, m), 2, "F11/2");
  value -= F13(r, m);
  value -= ExactDiv(F14(r, m), 4, "3/4 F14") * 3;
  value -= ScaleByFraction(F17(r, m), m - 1, "F17");
  value -= ExactDiv(F18(r, m), 4, "3/4 F18") * 3;
  value -= ScaleByFraction(F19(r, m, j), 2 * m - 4, "F19");
  value -= ExactDiv(F22(r, m), 2, "F22/2");
  value -= ScaleByFraction(F23(r, m, j), m - 2, "F23");
  value -= F25(r, m);
  value -= F26(r, m);
  value -= ExactDiv(F27(r, m), 8, "7/8 F27") * 7;
  return CheckedNonNegative(value, label);
}

BigInt QMultiplier(int r, int m, int j) {
  const std::string label = "q" + Params({{"r", r}, {"m", m}, {"j", j}});
  RequireBranch(r > 5 && m > 2 && m < j && j < r - 1, label);
  using namespace terms;

  BigInt value = EvenErrorPatternCount(r) - ScaleByFraction(G1(r, m), m + j - 4, "G1");
  for (int k = m + 1; k <= j; ++k) {
    value -= ScaleByFraction(G2(r, m, k), 2 * m - 3, "G2") +
             ScaleByFraction(G3(r, m, k), m - 1, "G3") + ExactDiv(G4(r, m, k), 2, "G4/2");
  }
  value -= ScaleByFraction(G6(r), m - 2, "G6");
  value -= ExactDiv(G7(r, m), 2, "G7/2");
  value -= G9(r, m);
  value -= ExactDiv(G10(r, m), 4, "3/4 G10") * 3;
  value -= ScaleByFraction(G13(r, m), m - 1, "G13");
  value -= ExactDiv(G14(r, m), 4, "3/4 G14") * 3;
  value -= ScaleByFraction(G15(r, m, j), 2 * m - 4, "G15");
  value -= ExactDiv(G18(r, m), 2, "G18/2");
  value -= ScaleByFraction(G19(r, m, j), m - 2, "G19");
  value -= G21(r, m);
  value -= G22(r, m);
  value -= ExactDiv(G23(r, m), 8, "7/8 G23") * 7;
  return CheckedNonNegative(value, label);
}

BigInt Multiplier(const Category& cat) {
  return std::visit(
      Overloaded{
          [](const category::Generic& g) { return EvenErrorPatternCount(g.r); },
          [](const category::F& f) { return FMultiplier(f.r, f.m); },
          [](const category::G& g) { return GMultiplier(g.r, g.m); },
          [](const category::H& h) { return HMultiplier(h.r, h.m); },
          [](const category::P& p) { return PMultiplier(p.r, p.m, p.j); },
          [](const category::Q& q) { return QMultiplier(q.r, q.m, q.j); },
          [&](const auto&) -> BigInt {
            throw Error(ErrorCode::kInvalidBranch, Describe(cat) + " has no multiplier");
          },
      },
      cat);
}

BigInt N4Count(int n, std::uint64_t L) {
  CheckCountArgs(n, L);
  const Category cat = Classify(n, L);
  if (std::holds_alternative<category::Zero>(cat)) return EvenErrorPatternCount(n);
  if (std::holds_alternative<category::Unreachable>(cat)) return 0;
  return Pow2(static_cast<int>(L - 1)) * Multiplier(cat);
}

BigInt N5Count(int n, std::uint64_t L) { return N4Count(n, L); }

BigInt Weight8Count(int n, int m, int j) {
  RequireBranch(n > 3 && m > 2 && m < j && j <= n,
                "weight-8 census" + Params({{"n", n}, {"m", m}, {"j", j}}));
  return Pow2(n + 2 * m + j - 10);
}

BigInt CountingTable::Total() const {
  BigInt total = 0;
  for (const auto& v : rows) total += v;
  return total;
}

CountingTable FullTable(int n, int k, unsigned threads, int max_exponent) {
  if (k != 4 && k != 5) {
    throw Error(ErrorCode::kOutOfRange, "closed forms exist for k = 4 and k = 5 only");
  }
  if (n < 2 || n > max_exponent || n > kMaxCountExponent) {
    throw Error(ErrorCode::kTooLarge, "table exponent n = " + std::to_string(n) +
                                          " outside [2, " + std::to_string(max_exponent) + "]");
  }
  CountingTable table;
  table.n = n;
  table.k = k;
  const std::uint64_t rows = U64Pow2(n);
  table.rows.resize(rows);

  constexpr std::uint64_t kRowsPerShard = 64;
  const std::uint64_t shards = (rows + kRowsPerShard - 1) / kRowsPerShard;
  detail::RunShards(shards, threads, [&](std::uint64_t shard, unsigned) {
    const std::uint64_t begin = shard * kRowsPerShard;
    const std::uint64_t end = std::min(rows, begin + kRowsPerShard);
    for (std::uint64_t L = begin; L < end; ++L) {
      table.rows[L] = k == 4 ? N4Count(n, L) : N5Count(n, L);
    }
  });
  return table;
}

}  // namespace kelc

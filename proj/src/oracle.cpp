#include "kelc/oracle.hpp"

#include <bit>
#include <mutex>
#include <random>

#include "kelc/complexity.hpp"
#include "kelc/error.hpp"
#include "parallel.hpp"

namespace kelc {

namespace {

// Rough single-core throughput, measured on the reference container.
constexpr double kWordLcPerSecond = 1.5e8;
constexpr double kFastSequencesPerSecond = 1.5e7;

void CheckedAdd(std::uint64_t& into, std::uint64_t add) {
  if (__builtin_add_overflow(into, add, &into)) {
    throw Error(ErrorCode::kOutOfRange, "histogram counter overflow");
  }
}

int MaxExponent(Method method) {
  return method == Method::kExhaustive ? kMaxExhaustiveExponent : kMaxFastExponent;
}

void CheckScan(int n, int k, Method method, const ScanOptions& options) {
  if (n < 0 || n > MaxExponent(method)) {
    throw Error(ErrorCode::kTooLarge, std::string(MethodName(method)) + " scans support n <= " +
                                          std::to_string(MaxExponent(method)));
  }
  // k above the period is allowed; it behaves like k = 2^n.
  if (k < 0) throw Error(ErrorCode::kOutOfRange, "k must be non-negative");
  if (IsLongScan(n) && !options.allow_long) {
    throw Error(ErrorCode::kTooLarge, "the n = " + std::to_string(n) +
                                          " scan is long-running and must be explicitly allowed");
  }
}

std::vector<std::uint64_t> CollectMasks(int n, int k, Parity parity) {
  std::vector<std::uint64_t> masks;
  ForEachErrorMask(n, k, parity, [&](std::uint64_t m) { masks.push_back(m); });
  return masks;
}

}  // namespace

std::string_view MethodName(Method method) {
  return method == Method::kExhaustive ? "exhaustive" : "fast";
}

Method ParseMethod(std::string_view name) {
  if (name == "exhaustive") return Method::kExhaustive;
  if (name == "fast") return Method::kFast;
  throw Error(ErrorCode::kOutOfRange, "unknown method '" + std::string(name) + "'");
}

BigInt SpectrumHistogram::Total() const {
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

bool IsLongScan(int n) { return n >= kLongRunExponent; }

ScanCost EstimateScan(int n, int k, Parity filter, Method method) {
  ScanCost cost;
  if (n < 0 || n > 5) {
    cost.sequences = ~std::uint64_t{0};
  } else {
    const std::uint64_t space = std::uint64_t{1} << (1u << n);
    cost.sequences = filter == Parity::kAll ? space : space / 2;
  }
  if (method == Method::kFast) {
    cost.evaluations_per_sequence = 1;
    cost.estimated_seconds = static_cast<double>(cost.sequences) / kFastSequencesPerSecond;
    return cost;
  }
  BigInt patterns = 0;
  const BigInt period = Pow2(n);
  for (int w = 0; w <= k; w += 2) patterns += Binomial(period, w);
  cost.evaluations_per_sequence = patterns > 1'000'000'000'000ull
                                      ? 1'000'000'000'000ull
                                      : static_cast<std::uint64_t>(patterns);
  cost.estimated_seconds = static_cast<double>(cost.sequences) *
                           static_cast<double>(cost.evaluations_per_sequence) / kWordLcPerSecond;
  return cost;
}

SpectrumHistogram Spectrum(int n, int k, Parity filter, Method method,
                           const ScanOptions& options) {
  CheckScan(n, k, method, options);

  const std::uint64_t period = std::uint64_t{1} << n;
  const std::uint64_t space = std::uint64_t{1} << period;
  const std::uint64_t shards = std::min(space, kLongRunShards);
  const std::uint64_t shard_size = space / shards;

  // A pattern of the wrong parity flips the weight parity and lands on
  // complexity 2^n, which the unmodified sequence never beats; only patterns
  // of the sequence's own parity can lower the minimum below 2^n.
  std::vector<std::uint64_t> even_masks;
  std::vector<std::uint64_t> odd_masks;
  if (method == Method::kExhaustive) {
    even_masks = CollectMasks(n, k, Parity::kEven);
    odd_masks = CollectMasks(n, k, Parity::kOdd);
  }

  auto klc = [&](std::uint64_t s) -> std::uint64_t {
    if (method == Method::kFast) return KErrorComplexityFastWord(n, s, static_cast<std::uint64_t>(k));
    const bool odd = std::popcount(s) % 2 == 1;
    std::uint64_t best = period;
    for (std::uint64_t m : odd ? odd_masks : even_masks) {
      const std::uint64_t lc = LinearComplexityWord(n, s ^ m);
      if (lc < best) best = lc;
    }
    return best;
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(detail::ResolveThreads(options.threads), shards));
  std::vector<std::vector<std::uint64_t>> partial(threads,
                                                  std::vector<std::uint64_t>(period + 1, 0));
  std::mutex progress_mutex;
  std::uint64_t scanned = 0;

  detail::RunShards(shards, threads, [&](std::uint64_t shard, unsigned worker) {
    auto& hist = partial[worker];
    const std::uint64_t begin = shard * shard_size;
    const std::uint64_t end = begin + shard_size;
    for (std::uint64_t s = begin; s < end; ++s) {
      if (!ParityAccepts(filter, static_cast<std::uint64_t>(std::popcount(s)))) continue;
      ++hist[klc(s)];
    }
    if (options.progress) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      scanned += shard_size;
      options.progress(scanned, space);
    }
  });

  SpectrumHistogram result;
  result.n = n;
  result.k = k;
  result.filter = filter;
  result.counts.assign(period + 1, 0);
  for (const auto& hist : partial) {
    for (std::size_t L = 0; L < hist.size(); ++L) CheckedAdd(result.counts[L], hist[L]);
  }
  return result;
}

VerifyReport VerifyCounts(int n, int k, Method method, const ScanOptions& options) {
  if (k != 4 && k != 5) throw Error(ErrorCode::kOutOfRange, "verification covers k = 4 and k = 5");
  CheckScan(n, k, method, options);
  if (n < 2) throw Error(ErrorCode::kOutOfRange, "closed forms need n >= 2");

  const CountingTable table = FullTable(n, k, options.threads);
  const SpectrumHistogram hist = Spectrum(n, k, Parity::kEven, method, options);

  VerifyReport report;
  report.n = n;
  report.k = k;
  report.method = method;
  report.all_match = true;
  for (std::size_t L = 0; L < hist.counts.size(); ++L) {
    VerifyRow row;
    row.L = L;
    row.closed_form = L < table.rows.size() ? table.rows[L] : BigInt(0);
    row.empirical = hist.counts[L];
    row.match = row.closed_form == row.empirical;
    // The table has no L = 2^n row; report it only if the scan disagrees.
    if (L == table.rows.size() && row.match) continue;
    report.all_match = report.all_match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::map<std::uint64_t, std::uint64_t> WeightCensus(int n, int weight) {
  if (n < 0 || n > kMaxSequenceExponent) {
    throw Error(ErrorCode::kOutOfRange, "n = " + std::to_string(n) + " out of range");
  }
  const BigInt period = Pow2(n);
  if (weight < 0 || weight > period) {
    throw Error(ErrorCode::kOutOfRange, "weight = " + std::to_string(weight) + " out of range");
  }
  if (Binomial(period, weight) > kMaxCensusPatterns) {
    throw Error(ErrorCode::kTooLarge, "C(2^" + std::to_string(n) + ", " + std::to_string(weight) +
                                          ") = " + Binomial(period, weight).str() +
                                          " exceeds the census cap");
  }

  std::map<std::uint64_t, std::uint64_t> census;
  if (n <= kMaxWordExponent) {
    ForEachErrorMask(n, weight, Parity::kAll, [&](std::uint64_t mask) {
      if (std::popcount(mask) == weight) ++census[LinearComplexityWord(n, mask)];
    });
    return census;
  }
  ErrorPatternStream stream(n, weight, Parity::kAll);
  while (auto pattern = stream.Next()) {
    if (pattern->weight == static_cast<std::uint64_t>(weight)) {
      ++census[LinearComplexity(pattern->bits)];
    }
  }
  return census;
}

PeriodicSequence SampleWithLc(int n, std::uint64_t L, std::uint64_t seed) {
  if (n < 0 || n > kMaxSequenceExponent) {
    throw Error(ErrorCode::kOutOfRange, "n = " + std::to_string(n) + " out of range");
  }
  if (L > (std::uint64_t{1} << n)) {
    throw Error(ErrorCode::kOutOfRange,
                "L = " + std::to_string(L) + " exceeds the period 2^" + std::to_string(n));
  }

  // Top-down: level i folds (adds 2^{i-1}) exactly when the remaining L
  // exceeds 2^{i-1}. A folded level is (a, a ^ t) with a uniform, an
  // unfolded one is (t, t); both maps are injective, so uniform choices at
  // each level give a uniform sample.
  std::vector<bool> folds(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t rest = L;
  for (int level = n; level >= 1; --level) {
    const std::uint64_t half = std::uint64_t{1} << (level - 1);
    if (rest > half) {
      folds[static_cast<std::size_t>(level)] = true;
      rest -= half;
    }
  }
  // rest is now 0 or 1: the constant core of period 1.

  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits{static_cast<std::uint8_t>(rest)};
  for (int level = 1; level <= n; ++level) {
    const std::size_t half = bits.size();
    std::vector<std::uint8_t> next(2 * half);
    if (folds[static_cast<std::size_t>(level)]) {
      std::uint64_t pool = 0;
      for (std::size_t i = 0; i < half; ++i) {
        if (i % 64 == 0) pool = rng();
        const auto a = static_cast<std::uint8_t>((pool >> (i % 64)) & 1u);
        next[i] = a;
        next[i + half] = a ^ bits[i];
      }
    } else {
      for (std::size_t i = 0; i < half; ++i) next[i] = next[i + half] = bits[i];
    }
    bits = std::move(next);
  }

  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return PeriodicSequence::FromWords(n, std::move(words));
}

}  // namespace kelc

#ifndef KELC_ORACLE_HPP_
#define KELC_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kelc/counting.hpp"
#include "kelc/sequence.hpp"

namespace kelc {

enum class Method { kExhaustive, kFast };

std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

// Largest n each method will scan.
inline constexpr int kMaxExhaustiveExponent = 4;
inline constexpr int kMaxFastExponent = 5;
// Scans at this n or above need ScanOptions::allow_long.
inline constexpr int kLongRunExponent = 5;
// The n = 5 space is cut into this many contiguous shards.
inline constexpr std::uint64_t kLongRunShards = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kMaxCensusPatterns = 100'000'000;

struct ScanOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
  bool allow_long = false;
  // Called with (sequences scanned, population size) after each shard.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SpectrumHistogram {
  int n = 0;
  int k = 0;
  Parity filter = Parity::kAll;
  // counts[L] for 0 <= L <= 2^n
  std::vector<std::uint64_t> counts;

  BigInt Total() const;
  bool operator==(const SpectrumHistogram&) const = default;
};

/// Rough cost of a spectrum scan, used for refusal messages.
struct ScanCost {
  std::uint64_t sequences = 0;
  // Games-Chan evaluations per sequence (1 for the fast method).
  std::uint64_t evaluations_per_sequence = 0;
  double estimated_seconds = 0;
};

ScanCost EstimateScan(int n, int k, Parity filter, Method method);
bool IsLongScan(int n);

/// Histogram of k-error linear complexity over every period-2^n sequence
/// passing the weight-parity filter. Sequences are visited in integer order
/// (s_0 is the least significant bit) in contiguous shards; the result does
/// not depend on the thread count.
SpectrumHistogram Spectrum(int n, int k, Parity filter, Method method,
                           const ScanOptions& options = {});

struct VerifyRow {
  std::uint64_t L = 0;
  BigInt closed_form;
  std::uint64_t empirical = 0;
  bool match = false;
};

struct VerifyReport {
  int n = 0;
  int k = 0;
  Method method = Method::kExhaustive;
  std::vector<VerifyRow> rows;
  bool all_match = false;
};

/// Closed-form table against the even-weight spectrum, row by row.
VerifyReport VerifyCounts(int n, int k, Method method, const ScanOptions& options = {});

/// Linear complexity -> number of weight-`weight` sequences of period 2^n.
std::map<std::uint64_t, std::uint64_t> WeightCensus(int n, int weight);

/// Uniform draw from the 2^{L-1} sequences with linear complexity L, by
/// running the Games-Chan recursion backwards. Reproducible for a fixed seed.
PeriodicSequence SampleWithLc(int n, std::uint64_t L, std::uint64_t seed);

}  // namespace kelc

#endif  // KELC_ORACLE_HPP_

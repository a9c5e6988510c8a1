#include "kelc/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "kelc/error.hpp"

namespace kelc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidLength: return "InvalidLength";
    case ErrorCode::kInvalidLiteral: return "InvalidLiteral";
    case ErrorCode::kCannotFold: return "CannotFold";
    case ErrorCode::kUndefinedForZero: return "UndefinedForZero";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidBranch: return "InvalidBranch";
    case ErrorCode::kFormulaError: return "FormulaError";
    case ErrorCode::kMultipleMatch: return "MultipleMatch";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

std::string_view ParityName(Parity parity) {
  switch (parity) {
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    case Parity::kAll: break;
  }
  return "all";
}

Parity ParseParity(std::string_view name) {
  if (name == "all") return Parity::kAll;
  if (name == "even") return Parity::kEven;
  if (name == "odd") return Parity::kOdd;
  throw Error(ErrorCode::kInvalidLiteral, "unknown parity filter '" + std::string(name) + "'");
}

namespace {

void CheckExponent(int n) {
  if (n < 0 || n > kMaxSequenceExponent) {
    throw Error(ErrorCode::kOutOfRange,
                "period exponent " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxSequenceExponent) + "]");
  }
}

std::size_t WordCount(int n) { return ((std::size_t{1} << n) + 63) / 64; }

}  // namespace

PeriodicSequence::PeriodicSequence(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (n_ < kMaxWordExponent) words_[0] &= PeriodMask(n_);
}

PeriodicSequence PeriodicSequence::Zero(int n) {
  CheckExponent(n);
  return PeriodicSequence(n, std::vector<std::uint64_t>(WordCount(n), 0));
}

PeriodicSequence PeriodicSequence::AllOnes(int n) {
  CheckExponent(n);
  return PeriodicSequence(n, std::vector<std::uint64_t>(WordCount(n), ~std::uint64_t{0}));
}

PeriodicSequence PeriodicSequence::FromWord(int n, std::uint64_t bits) {
  if (n < 0 || n > kMaxWordExponent) {
    throw Error(ErrorCode::kOutOfRange, "FromWord needs 0 <= n <= 6");
  }
  return PeriodicSequence(n, {bits});
}

PeriodicSequence PeriodicSequence::FromSupport(int n, std::span<const std::uint32_t> support) {
  CheckExponent(n);
  std::vector<std::uint64_t> words(WordCount(n), 0);
  const std::size_t period = std::size_t{1} << n;
  for (std::uint32_t pos : support) {
    if (pos >= period) {
      throw Error(ErrorCode::kOutOfRange, "support position " + std::to_string(pos) +
                                              " >= period " + std::to_string(period));
    }
    words[pos >> 6] ^= std::uint64_t{1} << (pos & 63);
  }
  return PeriodicSequence(n, std::move(words));
}

PeriodicSequence PeriodicSequence::FromWords(int n, std::vector<std::uint64_t> words) {
  CheckExponent(n);
  if (words.size() != WordCount(n)) {
    throw Error(ErrorCode::kInvalidLength, "expected " + std::to_string(WordCount(n)) +
                                               " words, got " + std::to_string(words.size()));
  }
  return PeriodicSequence(n, std::move(words));
}

std::uint64_t PeriodicSequence::weight() const {
  std::uint64_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

bool PeriodicSequence::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string PeriodicSequence::ToBitString() const {
  std::string out(period(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

PeriodicSequence PeriodicSequence::operator^(const PeriodicSequence& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorCode::kInvalidLength, "cannot add sequences of different period");
  }
  std::vector<std::uint64_t> words(words_);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= other.words_[i];
  return PeriodicSequence(n_, std::move(words));
}

PeriodicSequence PeriodicSequence::Left() const {
  if (n_ == 0) throw Error(ErrorCode::kCannotFold, "period 1 has no halves");
  if (n_ <= kMaxWordExponent) return PeriodicSequence(n_ - 1, {words_[0] & PeriodMask(n_ - 1)});
  const std::size_t half = words_.size() / 2;
  return PeriodicSequence(n_ - 1, std::vector<std::uint64_t>(words_.begin(), words_.begin() + half));
}

PeriodicSequence PeriodicSequence::Right() const {
  if (n_ == 0) throw Error(ErrorCode::kCannotFold, "period 1 has no halves");
  if (n_ <= kMaxWordExponent) {
    return PeriodicSequence(n_ - 1, {(words_[0] >> (1u << (n_ - 1))) & PeriodMask(n_ - 1)});
  }
  const std::size_t half = words_.size() / 2;
  return PeriodicSequence(n_ - 1, std::vector<std::uint64_t>(words_.begin() + half, words_.end()));
}

PeriodicSequence MakeSequence(int n, std::string_view literal) {
  CheckExponent(n);
  const std::size_t period = std::size_t{1} << n;
  std::vector<std::uint64_t> words(WordCount(n), 0);

  if (literal.size() >= 2 && literal[0] == '0' && (literal[1] == 'x' || literal[1] == 'X')) {
    const std::string_view digits = literal.substr(2);
    for (char ch : digits) {
      if (!std::isxdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::kInvalidLiteral,
                    std::string("non-hex character '") + ch + "' in literal");
      }
    }
    if (period < 4) {
      throw Error(ErrorCode::kInvalidLiteral, "hex literals need a period of at least 4");
    }
    if (digits.size() != period / 4) {
      throw Error(ErrorCode::kInvalidLength, "expected " + std::to_string(period / 4) +
                                                 " hex digits, got " +
                                                 std::to_string(digits.size()));
    }
    for (std::size_t d = 0; d < digits.size(); ++d) {
      const char ch = digits[d];
      const unsigned nibble = static_cast<unsigned>(
          std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0'
                                                       : std::tolower(ch) - 'a' + 10);
      for (unsigned b = 0; b < 4; ++b) {
        if ((nibble >> (3 - b)) & 1u) {
          const std::size_t pos = 4 * d + b;
          words[pos >> 6] |= std::uint64_t{1} << (pos & 63);
        }
      }
    }
    return PeriodicSequence::FromWords(n, std::move(words));
  }

  for (char ch : literal) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kInvalidLiteral,
                  std::string("non-binary character '") + ch + "' in literal");
    }
  }
  if (literal.size() != period) {
    throw Error(ErrorCode::kInvalidLength, "expected " + std::to_string(period) +
                                               " bits, got " + std::to_string(literal.size()));
  }
  for (std::size_t i = 0; i < period; ++i) {
    if (literal[i] == '1') words[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return PeriodicSequence::FromWords(n, std::move(words));
}

std::uint64_t HammingWeight(const PeriodicSequence& s) { return s.weight(); }

PeriodicSequence PhiFold(const PeriodicSequence& s) {
  if (s.exponent() == 0) throw Error(ErrorCode::kCannotFold, "cannot fold a period-1 sequence");
  if (s.exponent() <= kMaxWordExponent) {
    return PeriodicSequence::FromWord(s.exponent() - 1, PhiFoldWord(s.exponent(), s.word()));
  }
  return s.Left() ^ s.Right();
}

ErrorPatternStream::ErrorPatternStream(int n, int max_weight, Parity parity)
    : n_(n), max_weight_(max_weight), parity_(parity) {
  CheckExponent(n);
  period_ = std::uint32_t{1} << n;
  if (max_weight < 0 || static_cast<std::uint64_t>(max_weight) > period_) {
    throw Error(ErrorCode::kOutOfRange, "max_weight must lie in [0, 2^n]");
  }
}

// Moves support_ to the next combination of the same size, or to the first
// combination of the next size. Returns false past the last pattern.
bool ErrorPatternStream::Advance() {
  const std::size_t w = support_.size();
  for (std::size_t i = w; i-- > 0;) {
    if (support_[i] < period_ - (w - i)) {
      ++support_[i];
      for (std::size_t j = i + 1; j < w; ++j) support_[j] = support_[j - 1] + 1;
      return true;
    }
  }
  if (static_cast<int>(w) >= max_weight_) return false;
  support_.resize(w + 1);
  for (std::size_t j = 0; j <= w; ++j) support_[j] = static_cast<std::uint32_t>(j);
  return true;
}

std::optional<ErrorPattern> ErrorPatternStream::Next() {
  if (done_) return std::nullopt;
  for (;;) {
    if (!started_) {
      started_ = true;
    } else if (!Advance()) {
      done_ = true;
      return std::nullopt;
    }
    if (ParityAccepts(parity_, support_.size())) break;
    // Skip a whole weight class that fails the filter.
    if (static_cast<int>(support_.size()) >= max_weight_) {
      done_ = true;
      return std::nullopt;
    }
    const std::size_t w = support_.size() + 1;
    support_.resize(w);
    for (std::size_t j = 0; j < w; ++j) support_[j] = static_cast<std::uint32_t>(j);
    if (ParityAccepts(parity_, w)) break;
  }
  return ErrorPattern{PeriodicSequence::FromSupport(n_, support_), support_.size()};
}

}  // namespace kelc

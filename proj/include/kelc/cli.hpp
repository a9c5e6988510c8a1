#ifndef KELC_CLI_HPP_
#define KELC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kelc/counting.hpp"
#include "kelc/oracle.hpp"
#include "kelc/sequence.hpp"

namespace kelc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kText, kJson, kCsv };

Format ParseFormat(std::string_view name);

/// CSV: `L,count` header then ascending rows. JSON: counts as decimal strings
/// keyed by L. Text: two aligned columns.
void EmitTable(const CountingTable& table, Format format, std::ostream& out);
void EmitHistogram(const SpectrumHistogram& hist, Format format, std::ostream& out);

/// Inverse of EmitTable for the JSON format.
CountingTable TableFromJson(std::string_view json);

/// Sequence literal as accepted by MakeSequence, or `@path` to read it from a
/// file (one trailing newline allowed).
PeriodicSequence ParseSequenceLiteral(int n, std::string_view literal);

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Progress lines go to `err` only when `err_is_tty` is set.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool err_is_tty = false);

}  // namespace kelc::cli

#endif  // KELC_CLI_HPP_

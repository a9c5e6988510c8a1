#include "kelc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kelc/complexity.hpp"
#include "kelc/error.hpp"

namespace kelc::cli {

namespace {

using nlohmann::json;

struct Config {
  int n = -1;
  int k = 4;
  std::uint64_t L = 0;
  std::string seq;
  std::string method = "auto";
  std::string filter = "even";
  int threads = 0;
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  bool allow_long = false;
  int weight = 0;
};

// Thrown for argument combinations that CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void WriteAligned(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
}

std::string CountsLabel(int k) { return "N_" + std::to_string(k) + "(L)"; }

void EmitCensus(int n, int weight, const std::map<std::uint64_t, std::uint64_t>& census,
                Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      out << "LC,count\n";
      for (const auto& [lc, count] : census) out << lc << ',' << count << '\n';
      return;
    case Format::kJson: {
      json counts = json::object();
      for (const auto& [lc, count] : census) counts[std::to_string(lc)] = std::to_string(count);
      out << json{{"n", n}, {"weight", weight}, {"counts", counts}}.dump() << '\n';
      return;
    }
    case Format::kText: {
      std::vector<std::vector<std::string>> rows{{"LC", "count"}};
      for (const auto& [lc, count] : census) rows.push_back({std::to_string(lc), std::to_string(count)});
      WriteAligned(rows, out);
      return;
    }
  }
}

void EmitReport(const VerifyReport& report, Format format, std::ostream& out) {
  std::size_t matched = 0;
  for (const auto& row : report.rows) matched += row.match ? 1 : 0;
  switch (format) {
    case Format::kCsv:
      out << "L,closed_form,empirical,match\n";
      for (const auto& row : report.rows) {
        out << row.L << ',' << row.closed_form << ',' << row.empirical << ','
            << (row.match ? "true" : "false") << '\n';
      }
      return;
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"L", row.L},
                        {"closed_form", row.closed_form.str()},
                        {"empirical", std::to_string(row.empirical)},
                        {"match", row.match}});
      }
      out << json{{"n", report.n},
                  {"k", report.k},
                  {"method", MethodName(report.method)},
                  {"rows", rows},
                  {"match", report.all_match}}
                 .dump()
          << '\n';
      return;
    }
    case Format::kText: {
      std::vector<std::vector<std::string>> rows{{"L", "closed form", "enumerated", ""}};
      for (const auto& row : report.rows) {
        rows.push_back({std::to_string(row.L), row.closed_form.str(),
                        std::to_string(row.empirical), row.match ? "ok" : "MISMATCH"});
      }
      WriteAligned(rows, out);
      out << (report.all_match ? "match" : "mismatch") << ": " << matched << " of "
          << report.rows.size() << " rows agree\n";
      return;
    }
  }
}

unsigned ResolveThreadFlag(const Config& cfg, bool given) {
  if (given) {
    if (cfg.threads < 0) throw UsageError("--threads must be non-negative");
    return static_cast<unsigned>(cfg.threads);
  }
  const char* env = std::getenv("KELC_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) throw UsageError("KELC_THREADS must be a non-negative integer");
  return static_cast<unsigned>(value);
}

Method ResolveMethod(const Config& cfg) {
  if (cfg.method == "auto") return cfg.n <= kMaxExhaustiveExponent ? Method::kExhaustive : Method::kFast;
  return ParseMethod(cfg.method);
}

std::string DescribeCost(const ScanCost& cost, unsigned threads) {
  std::ostringstream msg;
  msg << cost.sequences << " sequences x " << cost.evaluations_per_sequence
      << " complexity evaluations each, roughly " << std::fixed << std::setprecision(1)
      << cost.estimated_seconds / 60.0 << " min on one core";
  const unsigned resolved = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  if (resolved > 1) msg << " (" << cost.estimated_seconds / 60.0 / resolved << " min on " << resolved << ")";
  return msg.str();
}

// Command bodies write to `out`; a non-zero return is the exit code.
class Commands {
 public:
  Commands(const Config& cfg, Format format, unsigned threads, std::ostream& err, bool err_is_tty)
      : cfg_(cfg), format_(format), threads_(threads), err_(err), err_is_tty_(err_is_tty) {}

  int Lc(std::ostream& out) {
    const auto s = ParseSequenceLiteral(cfg_.n, cfg_.seq);
    const auto lc = LinearComplexity(s);
    Scalar(out, {{"n", std::to_string(cfg_.n)}, {"lc", std::to_string(lc)}}, "lc");
    return kExitOk;
  }

  int Klc(std::ostream& out) {
    const auto s = ParseSequenceLiteral(cfg_.n, cfg_.seq);
    if (cfg_.k < 0) throw Error(ErrorCode::kOutOfRange, "k must be non-negative");
    const auto k = static_cast<std::uint64_t>(cfg_.k);
    const Method method = cfg_.method == "auto" ? Method::kFast : ParseMethod(cfg_.method);
    const auto value =
        method == Method::kFast ? KErrorComplexityFast(s, k) : KErrorComplexityExhaustive(s, k);
    Scalar(out, {{"n", std::to_string(cfg_.n)}, {"k", std::to_string(cfg_.k)}, {"klc", std::to_string(value)}},
           "klc");
    return kExitOk;
  }

  int Profile(std::ostream& out) {
    const auto s = ParseSequenceLiteral(cfg_.n, cfg_.seq);
    const ComplexityProfile p = kelc::Profile(s, cfg_.k);
    switch (format_) {
      case Format::kCsv:
        out << "k,L\n";
        for (std::size_t k = 0; k < p.L.size(); ++k) out << k << ',' << p.L[k] << '\n';
        break;
      case Format::kJson:
        out << json{{"n", p.n}, {"L", p.L}, {"k_min", p.k_min}}.dump() << '\n';
        break;
      case Format::kText: {
        std::vector<std::vector<std::string>> rows{{"k", "L_k"}};
        for (std::size_t k = 0; k < p.L.size(); ++k) rows.push_back({std::to_string(k), std::to_string(p.L[k])});
        WriteAligned(rows, out);
        out << "k_min " << p.k_min << '\n';
        break;
      }
    }
    return kExitOk;
  }

  int Count(std::ostream& out) {
    const BigInt value = CountFor(cfg_.n, cfg_.L);
    const std::string category = Describe(Classify(cfg_.n, cfg_.L));
    switch (format_) {
      case Format::kCsv:
        out << "L,count\n" << cfg_.L << ',' << value << '\n';
        break;
      case Format::kJson:
        out << json{{"n", cfg_.n}, {"k", cfg_.k}, {"L", cfg_.L}, {"category", category}, {"count", value.str()}}
                   .dump()
            << '\n';
        break;
      case Format::kText:
        out << value << '\n';
        break;
    }
    return kExitOk;
  }

  int Table(std::ostream& out) {
    RequireClosedFormK();
    EmitTable(FullTable(cfg_.n, cfg_.k, threads_), format_, out);
    return kExitOk;
  }

  int Spectrum(std::ostream& out) {
    const Method method = ResolveMethod(cfg_);
    const Parity filter = ParseParity(cfg_.filter);
    if (int code = RefuseLong(method, filter); code != kExitOk) return code;
    const SpectrumHistogram hist = kelc::Spectrum(cfg_.n, cfg_.k, filter, method, ScanOpts());
    EmitHistogram(hist, format_, out);
    return kExitOk;
  }

  int Verify(std::ostream& out) {
    RequireClosedFormK();
    const Method method = ResolveMethod(cfg_);
    if (int code = RefuseLong(method, Parity::kEven); code != kExitOk) return code;
    const VerifyReport report = VerifyCounts(cfg_.n, cfg_.k, method, ScanOpts());
    EmitReport(report, format_, out);
    return report.all_match ? kExitOk : kExitMismatch;
  }

  int SumCheck(std::ostream& out) {
    RequireClosedFormK();
    const CountingTable table = FullTable(cfg_.n, cfg_.k, threads_);
    const BigInt total = table.Total();
    const BigInt expected = Pow2((1 << cfg_.n) - 1);
    const bool match = total == expected;
    switch (format_) {
      case Format::kCsv:
        out << "n,k,sum,expected,match\n"
            << cfg_.n << ',' << cfg_.k << ',' << total << ',' << expected << ','
            << (match ? "true" : "false") << '\n';
        break;
      case Format::kJson:
        out << json{{"n", cfg_.n}, {"k", cfg_.k}, {"sum", total.str()}, {"expected", expected.str()},
                    {"match", match}}
                   .dump()
            << '\n';
        break;
      case Format::kText:
        out << "sum      " << total << '\n' << "expected " << expected << '\n';
        if (match) {
          out << "match\n";
        } else {
          out << "mismatch: difference " << BigInt(expected - total) << '\n';
        }
        break;
    }
    return match ? kExitOk : kExitMismatch;
  }

  int Census(std::ostream& out) {
    EmitCensus(cfg_.n, cfg_.weight, WeightCensus(cfg_.n, cfg_.weight), format_, out);
    return kExitOk;
  }

  int Sample(std::ostream& out) {
    const auto s = SampleWithLc(cfg_.n, cfg_.L, cfg_.seed);
    switch (format_) {
      case Format::kCsv:
        out << "n,L,seed,seq\n" << cfg_.n << ',' << cfg_.L << ',' << cfg_.seed << ',' << s.ToBitString() << '\n';
        break;
      case Format::kJson:
        out << json{{"n", cfg_.n}, {"L", cfg_.L}, {"seed", cfg_.seed}, {"seq", s.ToBitString()}}.dump() << '\n';
        break;
      case Format::kText:
        out << s.ToBitString() << '\n';
        break;
    }
    return kExitOk;
  }

 private:
  void Scalar(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields,
              const std::string& primary) {
    switch (format_) {
      case Format::kCsv: {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
        out << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
        out << '\n';
        break;
      }
      case Format::kJson: {
        json obj = json::object();
        for (const auto& [key, value] : fields) obj[key] = std::stoull(value);
        out << obj.dump() << '\n';
        break;
      }
      case Format::kText:
        for (const auto& [key, value] : fields) {
          if (key == primary) out << value << '\n';
        }
        break;
    }
  }

  BigInt CountFor(int n, std::uint64_t L) const {
    RequireClosedFormK();
    return cfg_.k == 4 ? N4Count(n, L) : N5Count(n, L);
  }

  void RequireClosedFormK() const {
    if (cfg_.k != 4 && cfg_.k != 5) throw UsageError("closed forms exist for --k 4 and --k 5 only");
  }

  int RefuseLong(Method method, Parity filter) {
    if (!IsLongScan(cfg_.n) || cfg_.allow_long) return kExitOk;
    const ScanCost cost = EstimateScan(cfg_.n, cfg_.k, filter, method);
    err_ << "refusing the n=" << cfg_.n << " enumeration without --allow-long: "
         << DescribeCost(cost, threads_) << '\n';
    return kExitUsage;
  }

  ScanOptions ScanOpts() {
    ScanOptions opts;
    opts.threads = threads_;
    opts.allow_long = cfg_.allow_long;
    if (err_is_tty_) {
      opts.progress = [this](std::uint64_t done, std::uint64_t total) {
        err_ << "\rscanned " << done << " of " << total << " sequences ("
             << (100 * done / std::max<std::uint64_t>(total, 1)) << "%)";
        if (done == total) err_ << '\n';
        err_.flush();
      };
    }
    return opts;
  }

  const Config& cfg_;
  Format format_;
  unsigned threads_;
  std::ostream& err_;
  bool err_is_tty_;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormulaError:
    case ErrorCode::kMultipleMatch:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

}  // namespace

Format ParseFormat(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw Error(ErrorCode::kOutOfRange, "unknown format '" + std::string(name) + "'");
}

void EmitTable(const CountingTable& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      out << "L,count\n";
      for (std::size_t L = 0; L < table.rows.size(); ++L) out << L << ',' << table.rows[L] << '\n';
      return;
    case Format::kJson: {
      json counts = json::object();
      for (std::size_t L = 0; L < table.rows.size(); ++L) counts[std::to_string(L)] = table.rows[L].str();
      out << json{{"n", table.n}, {"k", table.k}, {"counts", counts}}.dump() << '\n';
      return;
    }
    case Format::kText: {
      std::vector<std::vector<std::string>> rows{{"L", CountsLabel(table.k)}};
      for (std::size_t L = 0; L < table.rows.size(); ++L) {
        rows.push_back({std::to_string(L), table.rows[L].str()});
      }
      WriteAligned(rows, out);
      return;
    }
  }
}

void EmitHistogram(const SpectrumHistogram& hist, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      out << "L,count\n";
      for (std::size_t L = 0; L < hist.counts.size(); ++L) out << L << ',' << hist.counts[L] << '\n';
      return;
    case Format::kJson: {
      json counts = json::object();
      for (std::size_t L = 0; L < hist.counts.size(); ++L) {
        counts[std::to_string(L)] = std::to_string(hist.counts[L]);
      }
      out << json{{"n", hist.n}, {"k", hist.k}, {"filter", ParityName(hist.filter)}, {"counts", counts}}.dump()
          << '\n';
      return;
    }
    case Format::kText: {
      std::vector<std::vector<std::string>> rows{{"L", "count"}};
      for (std::size_t L = 0; L < hist.counts.size(); ++L) {
        rows.push_back({std::to_string(L), std::to_string(hist.counts[L])});
      }
      WriteAligned(rows, out);
      return;
    }
  }
}

CountingTable TableFromJson(std::string_view text) {
  const json doc = json::parse(text);
  CountingTable table;
  table.n = doc.at("n").get<int>();
  table.k = doc.at("k").get<int>();
  const auto& counts = doc.at("counts");
  table.rows.assign(counts.size(), 0);
  for (const auto& [key, value] : counts.items()) {
    const auto L = std::stoull(key);
    if (L >= table.rows.size()) throw Error(ErrorCode::kOutOfRange, "row key " + key + " out of range");
    table.rows[L] = BigInt(value.get<std::string>());
  }
  return table;
}

PeriodicSequence ParseSequenceLiteral(int n, std::string_view literal) {
  if (literal.empty() || literal.front() != '@') return MakeSequence(n, literal);
  const std::string path(literal.substr(1));
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read sequence file '" + path + "'");
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!body.empty() && body.back() == '\n') body.pop_back();
  if (!body.empty() && body.back() == '\r') body.pop_back();
  return MakeSequence(n, body);
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool err_is_tty) {
  Config cfg;
  CLI::App app{"Linear complexity and k-error linear complexity of 2^n-periodic binary sequences",
               "kelc"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "period exponent (period 2^n)")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", cfg.seq, "bit string, 0x hex literal, or @file")->required();
  };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", cfg.k, "error bound");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write the result to this file");
  };
  CLI::Option* threads_opt = nullptr;
  std::vector<CLI::Option*> thread_opts;
  auto add_threads = [&](CLI::App* sub) {
    thread_opts.push_back(sub->add_option("--threads", cfg.threads, "worker threads, 0 = auto"));
  };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "exhaustive, fast, or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "fast"}));
    sub->add_flag("--allow-long", cfg.allow_long, "permit the long-running n = 5 enumeration");
    add_threads(sub);
  };

  auto* lc = app.add_subcommand("lc", "linear complexity of one sequence");
  add_n(lc);
  add_seq(lc);
  add_format(lc);

  auto* klc = app.add_subcommand("klc", "k-error linear complexity of one sequence");
  add_n(klc);
  add_seq(klc);
  add_k(klc, true);
  klc->add_option("--method", cfg.method, "fast or exhaustive")
      ->check(CLI::IsMember({"auto", "exhaustive", "fast"}));
  add_format(klc);

  auto* profile = app.add_subcommand("profile", "L_0..L_K and k_min of one sequence");
  add_n(profile);
  add_seq(profile);
  add_k(profile, true);
  add_format(profile);

  auto* count = app.add_subcommand("count", "closed-form N_k(L)");
  add_n(count);
  add_k(count, false);
  count->add_option("--L", cfg.L, "linear complexity value")->required();
  add_format(count);

  auto* table = app.add_subcommand("table", "closed-form N_k(L) for every L");
  add_n(table);
  add_k(table, false);
  add_threads(table);
  add_format(table);

  auto* spectrum = app.add_subcommand("spectrum", "enumerated k-error complexity histogram");
  add_n(spectrum);
  add_k(spectrum, true);
  spectrum->add_option("--filter", cfg.filter, "weight parity filter")
      ->check(CLI::IsMember({"even", "odd", "all"}));
  add_scan(spectrum);
  add_format(spectrum);

  auto* verify = app.add_subcommand("verify", "compare the closed form with enumeration");
  add_n(verify);
  add_k(verify, false);
  add_scan(verify);
  add_format(verify);

  auto* sum_check = app.add_subcommand("sum-check", "check that the closed-form table sums to 2^(2^n-1)");
  add_n(sum_check);
  add_k(sum_check, false);
  add_threads(sum_check);
  add_format(sum_check);

  auto* census = app.add_subcommand("census", "linear complexities of all sequences of one weight");
  add_n(census);
  census->add_option("--weight", cfg.weight, "Hamming weight")->required();
  add_format(census);

  auto* sample = app.add_subcommand("sample", "uniform random sequence with a given linear complexity");
  add_n(sample);
  sample->add_option("--L", cfg.L, "linear complexity value")->required();
  sample->add_option("--seed", cfg.seed, "random seed");
  add_format(sample);

  std::vector<const char*> argv{"kelc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kExitUsage;
  }

  for (auto* opt : thread_opts) {
    if (opt->count() > 0) threads_opt = opt;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  try {
    const Format format = ParseFormat(cfg.format);
    const unsigned threads = ResolveThreadFlag(cfg, threads_opt != nullptr);
    Commands commands(cfg, format, threads, err, err_is_tty);

    std::ostringstream buffer;
    int code = kExitOk;
    if (name == "lc") code = commands.Lc(buffer);
    else if (name == "klc") code = commands.Klc(buffer);
    else if (name == "profile") code = commands.Profile(buffer);
    else if (name == "count") code = commands.Count(buffer);
    else if (name == "table") code = commands.Table(buffer);
    else if (name == "spectrum") code = commands.Spectrum(buffer);
    else if (name == "verify") code = commands.Verify(buffer);
    else if (name == "sum-check") code = commands.SumCheck(buffer);
    else if (name == "census") code = commands.Census(buffer);
    else if (name == "sample") code = commands.Sample(buffer);

    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      file << buffer.str();
      file.close();
      if (!file) {
        err << "error: cannot write '" << cfg.out_path << "'\n";
        return kExitMismatch;
      }
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace kelc::cli

#pragma once

// Command-line front end. parse_args turns argv into a fully validated and
// defaulted CommandPlan; execute runs it and writes one report table.
//
//   simulate  --algo A --list-size L <sequence source> [--trace] [--include-setup]
//   ratio     --list-size L [--mode closed-form|limit|dynamic-opt|empirical] ...
//   table     [--sizes 4,6,10] [--check-reference]
//   generate  --generator G [--list-size L] [--length N] [--seed S] [-k K] [--file F]
//   opt       --list-size L (<= 6) <sequence source> [--max-length N] [--trace]
//   corpus    --file F [--algos mtf,mflp,...]
//
// Sequence sources (mutually exclusive): --sequence 2,4,1 | --sequence-file F |
// --generator G. Every command accepts --format csv|json, --out PATH and
// --precision N (fixed decimals; default is 6 significant digits).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "listupdate/analysis.hpp"
#include "listupdate/policies.hpp"
#include "listupdate/report.hpp"

namespace listupdate::cli {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Carries the rendered help text for --help.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Command { simulate, ratio, table, generate, opt, corpus };

enum class GeneratorKind { uniform, zipf, cruel_mtf, cruel_mfm, cruel_mflp_stat, cruel_mflp_opt, corpus };

enum class SourceKind { none, inline_list, file, generator };

struct SequenceSource {
  SourceKind kind = SourceKind::none;
  std::vector<std::uint32_t> ids;
  std::filesystem::path file;
  GeneratorKind generator = GeneratorKind::uniform;
  std::size_t length = 0;
  double zipf_s = 1.0;
  std::uint64_t seed = 0;
  std::size_t repeat = 1;
};

enum class RatioMode { closed_form, limit, dynamic_opt, empirical };

// Simulated algorithm: one of the online policies, or the static optimum.
struct AlgoChoice {
  bool is_stat = false;
  PolicyKind policy = PolicyKind::mtf;
};

struct CommandPlan {
  Command command = Command::table;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> out;
  std::optional<int> precision;

  AlgoChoice algo;
  std::size_t list_size = 0;
  SequenceSource sequence;
  bool trace = false;
  bool include_setup = false;

  RatioMode ratio_mode = RatioMode::closed_form;
  Baseline baseline = Baseline::stat;
  CostMode cost_mode = CostMode::access_only;
  std::uint64_t repeat_k = 1;

  std::vector<std::uint64_t> sizes;
  bool check_reference = false;

  std::size_t max_requests = 20;

  std::filesystem::path corpus_file;
  std::vector<PolicyKind> algos;
};

// `args` excludes the program name. Throws UsageError, CapacityError or
// HelpRequested.
CommandPlan parse_args(std::span<const std::string> args);

// Resolves the request sequence a plan describes, over the plan's universe.
RequestSequence resolve_sequence(const SequenceSource& source, std::size_t list_size);

// Builds the report for a plan without writing it anywhere.
ReportTable build_report(const CommandPlan& plan);

// Writes the report to plan.out (or `out`). Returns the exit status; errors
// are reported on `err`.
int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err);

// parse_args + execute with error-to-exit-status mapping:
// 0 success, 1 runtime failure, 2 usage error, 3 capacity exceeded.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace listupdate::cli

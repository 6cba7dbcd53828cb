#include "listupdate/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <future>
#include <sstream>

#include "listupdate/adversary.hpp"
#include "listupdate/offline.hpp"

namespace listupdate::cli {

namespace {

constexpr std::size_t kMaxSimulatedListSize = 1'000'000;
constexpr std::uint64_t kMaxRatioListSize = std::uint64_t{1} << 61;

const std::map<std::string, GeneratorKind> kGenerators{
    {"uniform", GeneratorKind::uniform},
    {"zipf", GeneratorKind::zipf},
    {"cruel-mtf", GeneratorKind::cruel_mtf},
    {"cruel-mfm", GeneratorKind::cruel_mfm},
    {"cruel-mflp-stat", GeneratorKind::cruel_mflp_stat},
    {"cruel-mflp-opt", GeneratorKind::cruel_mflp_opt},
    {"corpus", GeneratorKind::corpus},
};

const std::map<std::string, RatioMode> kRatioModes{
    {"closed-form", RatioMode::closed_form},
    {"limit", RatioMode::limit},
    {"dynamic-opt", RatioMode::dynamic_opt},
    {"empirical", RatioMode::empirical},
};

const std::map<std::string, Baseline> kBaselines{
    {"stat", Baseline::stat},
    {"opt", Baseline::brute_opt},
    {"cycle-opt", Baseline::cycle_opt_form},
};

std::vector<std::string> keys_of(const auto& map) {
  std::vector<std::string> keys;
  for (const auto& [key, value] : map) keys.push_back(key);
  return keys;
}

std::uint32_t parse_id(std::string_view token, std::string_view where) {
  std::uint32_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw UsageError(fmt::format("{}: '{}' is not a non-negative item id", where, token));
  return value;
}

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::uint32_t> parse_id_list(std::string_view text, std::string_view where) {
  std::vector<std::uint32_t> ids;
  if (trim(text).empty()) return ids;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    ids.push_back(parse_id(trim(text.substr(start, comma - start)), where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ids;
}

// Tokens separated by commas and/or whitespace; a leading "item" header is skipped.
std::vector<std::uint32_t> read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  for (char& c : text)
    if (c == ',') c = ' ';

  std::vector<std::uint32_t> ids;
  std::istringstream tokens(text);
  std::string token;
  bool first = true;
  while (tokens >> token) {
    if (first && token == "item") {
      first = false;
      continue;
    }
    first = false;
    try {
      ids.push_back(parse_id(token, path.string()));
    } catch (const UsageError& e) {
      throw std::runtime_error(e.what());
    }
  }
  return ids;
}

struct RawOptions {
  std::string format = "csv";
  std::string out;
  int precision = -1;

  std::string algo;
  std::size_t list_size = 0;
  std::string sequence;
  std::string sequence_file;
  std::string generator;
  std::size_t length = 0;
  double zipf_s = 1.0;
  std::uint64_t seed = 0;
  std::size_t repeat = 1;
  bool trace = false;
  bool include_setup = false;

  std::string mode = "closed-form";
  std::string baseline = "stat";
  bool total_cost = false;

  std::vector<std::uint64_t> sizes;
  bool check_reference = false;

  std::size_t max_length = 20;

  std::string file;
  std::vector<std::string> algos;
};

struct SourceOptions {
  CLI::Option* sequence = nullptr;
  CLI::Option* sequence_file = nullptr;
  CLI::Option* generator = nullptr;
  CLI::Option* length = nullptr;
  CLI::Option* repeat = nullptr;
};

void add_common(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", raw.out, "Write the report to this file instead of stdout");
  sub->add_option("--precision", raw.precision,
                  "Fixed number of decimals for ratios (default: 6 significant digits)")
      ->check(CLI::Range(0, 18));
}

SourceOptions add_sequence_source(CLI::App* sub, RawOptions& raw) {
  SourceOptions o;
  o.sequence = sub->add_option("--sequence", raw.sequence, "Comma-separated item ids, e.g. 2,4,1");
  o.sequence_file = sub->add_option("--sequence-file", raw.sequence_file,
                                    "File of item ids, comma- or line-separated");
  o.generator = sub->add_option("--generator", raw.generator, "Sequence generator")
                    ->check(CLI::IsMember(keys_of(kGenerators)));
  o.sequence->excludes(o.sequence_file)->excludes(o.generator);
  o.sequence_file->excludes(o.generator);
  o.length = sub->add_option("--length", raw.length, "Length of a stochastic sequence");
  sub->add_option("--zipf-s", raw.zipf_s, "Zipf exponent (> 0)")->check(CLI::PositiveNumber);
  sub->add_option("--seed", raw.seed, "Seed for stochastic generators");
  o.repeat = sub->add_option("-k,--repeat", raw.repeat, "Cruel block repetitions")
                 ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
  return o;
}

SequenceSource make_source(const RawOptions& raw, const SourceOptions& o) {
  SequenceSource source;
  source.zipf_s = raw.zipf_s;
  source.seed = raw.seed;
  source.repeat = raw.repeat;
  source.length = raw.length;
  if (o.sequence->count() > 0) {
    source.kind = SourceKind::inline_list;
    source.ids = parse_id_list(raw.sequence, "--sequence");
  } else if (o.sequence_file->count() > 0) {
    source.kind = SourceKind::file;
    source.file = raw.sequence_file;
  } else if (o.generator->count() > 0) {
    source.kind = SourceKind::generator;
    source.generator = kGenerators.at(raw.generator);
  }
  return source;
}

void validate_generator(const SequenceSource& source, const SourceOptions& o,
                        std::size_t list_size, bool corpus_allowed) {
  if (source.kind != SourceKind::generator) return;
  switch (source.generator) {
  case GeneratorKind::uniform:
  case GeneratorKind::zipf:
    if (o.length->count() == 0)
      throw UsageError("--length is required for the uniform and zipf generators");
    break;
  case GeneratorKind::cruel_mtf:
    if (list_size < 2) throw UsageError("--generator cruel-mtf needs --list-size >= 2");
    break;
  case GeneratorKind::cruel_mfm:
  case GeneratorKind::cruel_mflp_stat:
  case GeneratorKind::cruel_mflp_opt:
    if (list_size < 4) throw UsageError("cruel MFM/MFLP generators need --list-size >= 4");
    break;
  case GeneratorKind::corpus:
    if (!corpus_allowed) throw UsageError("--generator corpus is only valid for 'generate'");
    break;
  }
}

void require_source(const SequenceSource& source, std::string_view command) {
  if (source.kind == SourceKind::none)
    throw UsageError(fmt::format(
        "{}: one of --sequence, --sequence-file or --generator is required", command));
}

void forbid_source(const SourceOptions& o, std::string_view why) {
  for (CLI::Option* opt : {o.sequence, o.sequence_file, o.generator})
    if (opt->count() > 0) throw UsageError(fmt::format("{} {}", opt->get_name(), why));
}

AlgoChoice parse_algo(const std::string& name) {
  if (name == "stat") return {true, PolicyKind::mtf};
  return {false, parse_policy(name)};
}

std::string render(const Rational& value, const CommandPlan& plan) {
  return plan.precision ? to_fixed(value, *plan.precision) : to_significant(value, 6);
}

std::string render_list(const ListState& list) {
  std::string text;
  for (Item item : list.items()) {
    if (!text.empty()) text += ' ';
    text += std::to_string(item.id);
  }
  return text;
}

Rational per_request(std::uint64_t total, std::size_t n) {
  if (n == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(total), static_cast<std::int64_t>(n));
}

ReportTable simulate_report(const CommandPlan& plan) {
  const ListState initial = ListState::identity(plan.list_size);
  const RequestSequence seq = resolve_sequence(plan.sequence, plan.list_size);
  const CostLedger ledger = plan.algo.is_stat
                                ? run_stat(initial, seq, plan.include_setup)
                                : run_policy(plan.algo.policy, initial, seq);
  const std::string algo_name =
      plan.algo.is_stat ? "stat" : std::string(to_string(plan.algo.policy));

  if (plan.trace) {
    ReportTable table({"step", "item", "position", "access_cost", "paid_cost"});
    std::size_t step = 0;
    for (const StepRecord& s : ledger.steps())
      table.add_row({number_cell(++step), number_cell(s.item.id), number_cell(s.position),
                     number_cell(s.access_cost), number_cell(s.paid_cost)});
    table.add_row({text_cell("total"), text_cell(""), text_cell(""),
                   number_cell(ledger.access_total()), number_cell(ledger.paid_total())});
    return table;
  }
  ReportTable table({"algo", "list_size", "requests", "access_total", "paid_total", "total_cost"});
  table.add_row({text_cell(algo_name), number_cell(plan.list_size), number_cell(seq.size()),
                 number_cell(ledger.access_total()), number_cell(ledger.paid_total()),
                 number_cell(ledger.total())});
  return table;
}

ReportTable ratio_report(const CommandPlan& plan) {
  const std::uint64_t l = plan.list_size;
  switch (plan.ratio_mode) {
  case RatioMode::closed_form: {
    ReportTable table({"l", "mflp", "mfm", "mtf", "source"});
    const std::uint64_t sizes[] = {l};
    for (const RatioRecord& r : table1(sizes))
      table.add_row({number_cell(r.l), number_cell(render(r.mflp, plan)),
                     number_cell(render(r.mfm, plan)), number_cell(render(r.mtf, plan)),
                     text_cell("closed_form")});
    return table;
  }
  case RatioMode::limit: {
    const LimitEvaluation e = limit_ratio_mflp(l);
    ReportTable table({"l", "closed_form", "limit_form"});
    const int places = plan.precision.value_or(12);
    table.add_row({number_cell(l), number_cell(render(e.closed_form, plan)),
                   number_cell(fmt::format("{:.{}f}", e.limit_form, places))});
    return table;
  }
  case RatioMode::dynamic_opt: {
    const DynamicOptRatio r = dynamic_opt_ratio(l, plan.repeat_k);
    ReportTable table({"l", "k", "online_cost", "opt_cost", "ratio", "bound", "limit",
                       "within_bound"});
    table.add_row({number_cell(r.l), number_cell(r.k), number_cell(r.online_cost),
                   number_cell(r.opt_cost), number_cell(render(r.ratio, plan)),
                   number_cell(render(r.bound, plan)), number_cell(render(r.limit, plan)),
                   number_cell(r.within_bound ? "true" : "false")});
    return table;
  }
  case RatioMode::empirical: {
    const ListState initial = ListState::identity(plan.list_size);
    const RequestSequence seq = resolve_sequence(plan.sequence, plan.list_size);
    const EmpiricalRatio r =
        empirical_ratio(plan.algo.policy, plan.baseline, initial, seq, plan.cost_mode);
    ReportTable table({"algo", "baseline", "l", "n", "algo_cost", "baseline_cost", "ratio",
                       "beta"});
    table.add_row({text_cell(std::string(to_string(plan.algo.policy))),
                   text_cell(std::string(to_string(plan.baseline))), number_cell(l),
                   number_cell(seq.size()), number_cell(r.algo_cost),
                   number_cell(r.baseline_cost), number_cell(render(r.ratio, plan)),
                   number_cell(render(r.beta, plan))});
    return table;
  }
  }
  throw std::logic_error("unhandled ratio mode");
}

ReportTable table_report(const CommandPlan& plan) {
  if (plan.check_reference) {
    ReportTable table({"l", "algo", "computed", "printed", "rounded", "deviation",
                       "within_tolerance", "anomaly"});
    for (const CellCheck& c : check_reference_table()) {
      if (std::ranges::find(plan.sizes, c.l) == plan.sizes.end()) continue;
      table.add_row({number_cell(c.l), text_cell(std::string(to_string(c.algo))),
                     number_cell(render(c.computed, plan)), number_cell(render(c.printed, plan)),
                     number_cell(render(c.rounded, plan)), number_cell(render(c.deviation, plan)),
                     number_cell(c.within_tolerance ? "true" : "false"),
                     number_cell(c.known_anomaly ? "true" : "false")});
    }
    return table;
  }
  ReportTable table({"l", "mflp", "mfm", "mtf"});
  for (const RatioRecord& r : table1(plan.sizes))
    table.add_row({number_cell(r.l), number_cell(render(r.mflp, plan)),
                   number_cell(render(r.mfm, plan)), number_cell(render(r.mtf, plan))});
  return table;
}

ReportTable generate_report(const CommandPlan& plan) {
  ReportTable table({"item"});
  for (Item item : resolve_sequence(plan.sequence, plan.list_size))
    table.add_row({number_cell(item.id)});
  return table;
}

ReportTable opt_report(const CommandPlan& plan) {
  const ListState initial = ListState::identity(plan.list_size);
  const RequestSequence seq = resolve_sequence(plan.sequence, plan.list_size);
  const OptResult result = brute_force_opt(initial, seq, {6, plan.max_requests});

  if (plan.trace) {
    ReportTable table({"step", "item", "served_from", "position", "paid_cost", "after"});
    std::size_t step = 0;
    for (const OptStep& s : result.steps)
      table.add_row({number_cell(++step), number_cell(s.item.id),
                     text_cell(render_list(s.served_from)), number_cell(s.position),
                     number_cell(s.paid_cost), text_cell(render_list(s.after))});
    table.add_row({text_cell("total"), text_cell(""), text_cell(""),
                   number_cell(result.access_total), number_cell(result.paid_total),
                   text_cell("")});
    return table;
  }
  ReportTable table({"list_size", "requests", "opt_cost", "access_total", "paid_total"});
  table.add_row({number_cell(plan.list_size), number_cell(seq.size()),
                 number_cell(result.total_cost), number_cell(result.access_total),
                 number_cell(result.paid_total)});
  return table;
}

ReportTable corpus_report(const CommandPlan& plan) {
  const RequestSequence seq = corpus_sequence(plan.corpus_file);
  const ListState initial = ListState::byte_universe();

  std::vector<std::future<std::uint64_t>> runs;
  runs.reserve(plan.algos.size());
  for (PolicyKind kind : plan.algos)
    runs.push_back(std::async(std::launch::async, [&seq, &initial, kind] {
      return run_policy(kind, initial, seq, LedgerMode::totals_only).total();
    }));

  ReportTable table({"algo", "total_cost", "cost_per_request"});
  for (std::size_t i = 0; i < plan.algos.size(); ++i) {
    const std::uint64_t total = runs[i].get();
    table.add_row({text_cell(std::string(to_string(plan.algos[i]))), number_cell(total),
                   number_cell(render(per_request(total, seq.size()), plan))});
  }
  return table;
}

} // namespace

CommandPlan parse_args(std::span<const std::string> args) {
  RawOptions raw;
  CLI::App app{"Online list-update simulator and competitive-ratio calculator", "listupdate"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> policy_names{"mtf", "trans", "fc", "mfm", "mflp"};
  std::vector<std::string> simulate_names = policy_names;
  simulate_names.push_back("stat");

  auto* simulate = app.add_subcommand("simulate", "Run one algorithm over a request sequence");
  add_common(simulate, raw);
  simulate->add_option("--algo", raw.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember(simulate_names));
  simulate->add_option("--list-size", raw.list_size, "Items in the list (ids 1..l)")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxSimulatedListSize));
  const SourceOptions simulate_src = add_sequence_source(simulate, raw);
  simulate->add_flag("--trace", raw.trace, "Emit one row per request plus a total row");
  simulate->add_flag("--include-setup", raw.include_setup,
                     "Charge STAT's initial rearrangement as paid exchanges");

  auto* ratio = app.add_subcommand("ratio", "Closed-form or empirical competitive ratios");
  add_common(ratio, raw);
  ratio->add_option("--list-size", raw.list_size, "List size l")
      ->required()
      ->check(CLI::Range(std::size_t{2}, static_cast<std::size_t>(kMaxRatioListSize)));
  ratio->add_option("--mode", raw.mode, "closed-form, limit, dynamic-opt or empirical")
      ->check(CLI::IsMember(keys_of(kRatioModes)));
  auto* ratio_algo =
      ratio->add_option("--algo", raw.algo, "Online policy (empirical mode)")
          ->check(CLI::IsMember(policy_names));
  ratio->add_option("--baseline", raw.baseline, "stat, opt or cycle-opt (empirical mode)")
      ->check(CLI::IsMember(keys_of(kBaselines)));
  ratio->add_flag("--total-cost", raw.total_cost, "Include STAT setup cost in the baseline");
  const SourceOptions ratio_src = add_sequence_source(ratio, raw);

  auto* table = app.add_subcommand("table", "Closed-form ratio table for several list sizes");
  add_common(table, raw);
  table->add_option("--sizes", raw.sizes, "Comma-separated list sizes (each >= 4)")
      ->delimiter(',')
      ->check(CLI::Range(std::uint64_t{4}, kMaxRatioListSize));
  table->add_flag("--check-reference", raw.check_reference,
                  "Compare against the published reference cells");

  auto* generate = app.add_subcommand("generate", "Emit a request sequence");
  add_common(generate, raw);
  generate->add_option("--list-size", raw.list_size, "Items in the list (ids 1..l)")
      ->check(CLI::Range(std::size_t{1}, kMaxSimulatedListSize));
  const SourceOptions generate_src = add_sequence_source(generate, raw);
  generate->add_option("--file", raw.file, "Corpus file (corpus generator)");

  auto* opt = app.add_subcommand("opt", "Exact dynamic offline optimum for small lists");
  add_common(opt, raw);
  auto* opt_size = opt->add_option("--list-size", raw.list_size, "Items in the list (<= 6)")
                       ->required()
                       ->check(CLI::PositiveNumber);
  const SourceOptions opt_src = add_sequence_source(opt, raw);
  opt->add_option("--max-length", raw.max_length, "Maximum number of requests")
      ->check(CLI::Range(std::size_t{0}, std::size_t{1000}));
  opt->add_flag("--trace", raw.trace, "Emit the optimal trajectory");
  (void)opt_size;

  auto* corpus = app.add_subcommand("corpus", "Replay a file's bytes as requests over 0..255");
  add_common(corpus, raw);
  corpus->add_option("--file", raw.file, "Input file, read verbatim")->required();
  corpus->add_option("--algos", raw.algos, "Comma-separated policies (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(policy_names));

  std::vector<const char*> argv{"listupdate"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    throw HelpRequested(help.str());
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    throw HelpRequested(help.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandPlan plan;
  plan.format = parse_output_format(raw.format);
  if (!raw.out.empty()) plan.out = raw.out;
  if (raw.precision >= 0) plan.precision = raw.precision;
  plan.list_size = raw.list_size;
  plan.trace = raw.trace;

  if (simulate->parsed()) {
    plan.command = Command::simulate;
    plan.algo = parse_algo(raw.algo);
    plan.include_setup = raw.include_setup;
    if (plan.include_setup && !plan.algo.is_stat)
      throw UsageError("--include-setup only applies to --algo stat");
    plan.sequence = make_source(raw, simulate_src);
    require_source(plan.sequence, "simulate");
    validate_generator(plan.sequence, simulate_src, plan.list_size, false);
  } else if (ratio->parsed()) {
    plan.command = Command::ratio;
    plan.ratio_mode = kRatioModes.at(raw.mode);
    plan.repeat_k = raw.repeat;
    if (plan.ratio_mode == RatioMode::empirical) {
      if (ratio_algo->count() == 0) throw UsageError("--mode empirical requires --algo");
      plan.algo = parse_algo(raw.algo);
      plan.baseline = kBaselines.at(raw.baseline);
      plan.cost_mode = raw.total_cost ? CostMode::total : CostMode::access_only;
      plan.sequence = make_source(raw, ratio_src);
      require_source(plan.sequence, "ratio --mode empirical");
      validate_generator(plan.sequence, ratio_src, plan.list_size, false);
      if (plan.baseline == Baseline::brute_opt && plan.list_size > 6)
        throw CapacityError(fmt::format(
            "exact optimum supports lists of at most 6 items, got {}", plan.list_size));
    } else {
      forbid_source(ratio_src, "is only valid with --mode empirical");
      if (ratio_algo->count() > 0) throw UsageError("--algo is only valid with --mode empirical");
      if (plan.list_size < 4) throw UsageError("--list-size must be >= 4 for this mode");
    }
  } else if (table->parsed()) {
    plan.command = Command::table;
    plan.sizes = raw.sizes.empty() ? reference_sizes() : raw.sizes;
    plan.check_reference = raw.check_reference;
  } else if (generate->parsed()) {
    plan.command = Command::generate;
    plan.sequence = make_source(raw, generate_src);
    if (plan.sequence.kind != SourceKind::generator)
      throw UsageError("generate: --generator is required");
    validate_generator(plan.sequence, generate_src, plan.list_size, true);
    if (plan.sequence.generator == GeneratorKind::corpus) {
      if (raw.file.empty()) throw UsageError("--generator corpus requires --file");
      plan.sequence.file = raw.file;
    } else {
      if (!raw.file.empty()) throw UsageError("--file is only valid with --generator corpus");
      if (plan.list_size == 0) throw UsageError("generate: --list-size is required");
    }
  } else if (opt->parsed()) {
    plan.command = Command::opt;
    if (plan.list_size > 6)
      throw CapacityError(fmt::format(
          "exact optimum supports lists of at most 6 items, got {}", plan.list_size));
    plan.max_requests = raw.max_length;
    plan.sequence = make_source(raw, opt_src);
    require_source(plan.sequence, "opt");
    validate_generator(plan.sequence, opt_src, plan.list_size, false);
  } else if (corpus->parsed()) {
    plan.command = Command::corpus;
    plan.corpus_file = raw.file;
    if (raw.algos.empty()) {
      plan.algos.assign(all_policies.begin(), all_policies.end());
    } else {
      for (const auto& name : raw.algos) plan.algos.push_back(parse_policy(name));
    }
  }
  return plan;
}

RequestSequence resolve_sequence(const SequenceSource& source, std::size_t list_size) {
  switch (source.kind) {
  case SourceKind::none: return {};
  case SourceKind::inline_list: {
    RequestSequence seq;
    for (auto id : source.ids) seq.push_back(Item{id});
    return seq;
  }
  case SourceKind::file: {
    RequestSequence seq;
    for (auto id : read_sequence_file(source.file)) seq.push_back(Item{id});
    return seq;
  }
  case SourceKind::generator: break;
  }
  switch (source.generator) {
  case GeneratorKind::uniform: return uniform_sequence(list_size, source.length, source.seed);
  case GeneratorKind::zipf:
    return zipf_sequence(list_size, source.length, source.zipf_s, source.seed);
  case GeneratorKind::cruel_mtf: return cruel_mtf(list_size, source.repeat);
  case GeneratorKind::cruel_mfm: return cruel_mfm(list_size, source.repeat);
  case GeneratorKind::cruel_mflp_stat:
    return cruel_mflp(list_size, source.repeat, MflpVariant::stat);
  case GeneratorKind::cruel_mflp_opt:
    return cruel_mflp(list_size, source.repeat, MflpVariant::opt);
  case GeneratorKind::corpus: return corpus_sequence(source.file);
  }
  throw std::logic_error("unhandled generator");
}

ReportTable build_report(const CommandPlan& plan) {
  switch (plan.command) {
  case Command::simulate: return simulate_report(plan);
  case Command::ratio: return ratio_report(plan);
  case Command::table: return table_report(plan);
  case Command::generate: return generate_report(plan);
  case Command::opt: return opt_report(plan);
  case Command::corpus: return corpus_report(plan);
  }
  throw std::logic_error("unhandled command");
}

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  try {
    const ReportTable report = build_report(plan);
    if (plan.out) {
      std::ofstream file(*plan.out, std::ios::binary);
      if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", plan.out->string()));
      write_report(report, plan.format, file);
      if (!file.flush())
        throw std::runtime_error(fmt::format("error writing '{}'", plan.out->string()));
    } else {
      write_report(report, plan.format, out);
    }
    return 0;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CommandPlan plan;
  try {
    plan = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return execute(plan, out, err);
}

} // namespace listupdate::cli

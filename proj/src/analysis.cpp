#include "listupdate/analysis.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <fmt/format.h>
#include <stdexcept>

#include "listupdate/adversary.hpp"
#include "listupdate/offline.hpp"

namespace listupdate {

namespace {

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("value exceeds 64-bit signed range");
  return static_cast<std::int64_t>(v);
}

Rational ratio_of(std::uint64_t num, std::uint64_t den) {
  return Rational(as_signed(num), as_signed(den));
}

void require_size(std::uint64_t l, std::uint64_t minimum, std::string_view what) {
  if (l < minimum)
    throw std::invalid_argument(fmt::format("{} ratio needs l >= {}, got {}", what, minimum, l));
}

constexpr std::array<ReferenceRow, 17> kReferenceRows{{
    {4, "2", "2", "1.6"},
    {6, "2.4", "2.4", "1.714"},
    {10, "2.5", "2.85", "1.81"},
    {20, "2.35", "3.33", "1.90"},
    {30, "2.22", "3.52", "1.93"},
    {40, "2.22", "3.63", "1.95"},
    {50, "2.17", "3.70", "1.96"},
    {100, "2.105", "3.84", "1.98"},
    {500, "2.0285", "3.968", "1.996"},
    {1000, "2.016", "3.99", "1.998"},
    {2000, "2.0090", "3.992", "1.999"},
    {5000, "2.0044", "3.996", "1.9996"},
    {10000, "2.0024", "3.998", "1.9998"},
    {50000, "2.00056", "3.99968", "1.99996"},
    {100000, "2.0003", "3.99984", "1.99998"},
    {1000000, "2.000036", "3.999984", "1.999998"},
    {100000000, "2.000001", "4", "2"},
}};

int printed_places(std::string_view cell) {
  const auto dot = cell.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(cell.size() - dot - 1);
}

} // namespace

std::string_view to_string(RatioAlgo algo) noexcept {
  switch (algo) {
  case RatioAlgo::mtf: return "mtf";
  case RatioAlgo::mfm: return "mfm";
  case RatioAlgo::mflp: return "mflp";
  }
  return "?";
}

std::string_view to_string(Baseline baseline) noexcept {
  switch (baseline) {
  case Baseline::stat: return "stat";
  case Baseline::brute_opt: return "opt";
  case Baseline::cycle_opt_form: return "cycle-opt";
  }
  return "?";
}

Rational closed_form_ratio(RatioAlgo algo, std::uint64_t l) {
  switch (algo) {
  case RatioAlgo::mtf:
    require_size(l, 2, "MTF");
    return ratio_of(2 * l, l + 1);
  case RatioAlgo::mfm:
    require_size(l, 4, "MFM");
    return ratio_of(2 * l, l - middle_position(l) + 2);
  case RatioAlgo::mflp:
    require_size(l, 4, "MFLP");
    return ratio_of(2 * l, l - log_position(l) + 2);
  }
  throw std::logic_error("unhandled ratio algorithm");
}

std::vector<RatioRecord> table1(std::span<const std::uint64_t> sizes) {
  std::vector<RatioRecord> records;
  records.reserve(sizes.size());
  for (std::uint64_t l : sizes) {
    require_size(l, 4, "table");
    records.push_back({l, closed_form_ratio(RatioAlgo::mflp, l),
                       closed_form_ratio(RatioAlgo::mfm, l), closed_form_ratio(RatioAlgo::mtf, l),
                       RatioSource::closed_form, Rational(0)});
  }
  return records;
}

std::span<const ReferenceRow> reference_table() noexcept { return kReferenceRows; }

std::vector<std::uint64_t> reference_sizes() {
  std::vector<std::uint64_t> sizes;
  for (const auto& row : kReferenceRows) sizes.push_back(row.l);
  return sizes;
}

std::vector<CellCheck> check_reference_table(const Rational& tolerance) {
  std::vector<CellCheck> checks;
  for (const auto& row : kReferenceRows) {
    const std::array<std::pair<RatioAlgo, std::string_view>, 3> cells{
        {{RatioAlgo::mflp, row.mflp}, {RatioAlgo::mfm, row.mfm}, {RatioAlgo::mtf, row.mtf}}};
    for (const auto& [algo, text] : cells) {
      CellCheck check;
      check.l = row.l;
      check.algo = algo;
      check.computed = closed_form_ratio(algo, row.l);
      check.printed = Rational::from_decimal(text);
      check.rounded = round_to_places(check.computed, printed_places(text));
      check.deviation = abs(check.rounded - check.printed);
      // Printed 3.99 for 4000/1004 = 3.98406...
      check.known_anomaly = algo == RatioAlgo::mfm && row.l == 1000;
      check.within_tolerance = check.deviation <= tolerance &&
                               (!check.known_anomaly ||
                                abs(check.computed - check.printed) <= tolerance);
      checks.push_back(check);
    }
  }
  return checks;
}

LimitEvaluation limit_ratio_mflp(std::uint64_t l) {
  require_size(l, 4, "MFLP limit");
  const double x = static_cast<double>(l);
  return {l, 2.0 / (1.0 - std::log2(x) / x + 2.0 / x), closed_form_ratio(RatioAlgo::mflp, l)};
}

DynamicOptRatio dynamic_opt_ratio(std::uint64_t l, std::uint64_t k) {
  require_size(l, 4, "dynamic optimum");
  if (k < 1) throw std::invalid_argument("repetition count must be at least 1");
  const std::uint64_t p = log_position(l);
  const std::uint64_t block = l - p + 1;

  DynamicOptRatio r;
  r.l = l;
  r.k = k;
  r.online_cost = p * (p - 1) + k * l * block;
  r.opt_cost = cycle_opt_cost(l, k);
  r.ratio = ratio_of(r.online_cost, r.opt_cost);
  r.bound = Rational(2) - (Rational(as_signed(2 * block)) - Rational(as_signed(l))) /
                              Rational(as_signed(block));
  r.limit = ratio_of(l * block, block * block);
  r.within_bound = r.ratio <= r.bound;
  return r;
}

EmpiricalRatio empirical_ratio(PolicyKind algo, Baseline baseline, const ListState& initial,
                               const RequestSequence& seq, CostMode mode) {
  const CostLedger online = run_policy(algo, initial, seq, LedgerMode::totals_only);

  std::uint64_t baseline_cost = 0;
  switch (baseline) {
  case Baseline::stat: {
    const CostLedger stat = run_stat(initial, seq, mode == CostMode::total);
    baseline_cost = stat.total();
    break;
  }
  case Baseline::brute_opt:
    baseline_cost = brute_force_opt(initial, seq).total_cost;
    break;
  case Baseline::cycle_opt_form: {
    const std::size_t l = initial.size();
    if (initial != ListState::identity(l) || l < 4)
      throw std::invalid_argument("cycle-opt baseline needs the identity list with l >= 4");
    const CruelSpec probe{CruelTarget::mflp_opt, l, 1};
    const std::size_t prefix = cruel_prefix_length(probe);
    const std::size_t block = cruel_block_length(probe);
    if (seq.size() < prefix + block || (seq.size() - prefix) % block != 0)
      throw std::invalid_argument("cycle-opt baseline needs an opt-variant cruel sequence");
    const std::size_t k = (seq.size() - prefix) / block;
    if (seq != cruel_mflp(l, k, MflpVariant::opt))
      throw std::invalid_argument("cycle-opt baseline needs an opt-variant cruel sequence");
    baseline_cost = cycle_opt_cost(l, k);
    break;
  }
  }

  if (baseline_cost == 0)
    throw std::domain_error(
        fmt::format("baseline '{}' has zero cost; ratio undefined", to_string(baseline)));
  return {online.total(), baseline_cost, ratio_of(online.total(), baseline_cost), Rational(0)};
}

} // namespace listupdate

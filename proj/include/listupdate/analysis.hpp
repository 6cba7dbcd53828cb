#pragma once

// Competitive-ratio computations: exact closed forms on the cruel sequences,
// the published reference table they reproduce, the large-list limit of
// MFLP, the ratio against the dynamic optimum, and empirical ratios from
// simulation ledgers.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "listupdate/core.hpp"
#include "listupdate/policies.hpp"
#include "listupdate/rational.hpp"

namespace listupdate {

enum class RatioAlgo { mtf, mfm, mflp };

std::string_view to_string(RatioAlgo algo) noexcept;

// Cruel-sequence cost over STAT, simplified:
//   MTF  2l/(l+1)      (l >= 2)
//   MFM  2l/(l-m+2)    (l >= 4)
//   MFLP 2l/(l-p+2)    (l >= 4)
Rational closed_form_ratio(RatioAlgo algo, std::uint64_t l);

enum class RatioSource { closed_form, empirical };

struct RatioRecord {
  std::uint64_t l = 0;
  Rational mflp;
  Rational mfm;
  Rational mtf;
  RatioSource source = RatioSource::closed_form;
  Rational beta; // additive constant; always 0 here
};

// One closed-form record per size, in input order. Every size must be >= 4.
std::vector<RatioRecord> table1(std::span<const std::uint64_t> sizes);

// A published cell, kept as its printed decimal text.
struct ReferenceRow {
  std::uint64_t l;
  std::string_view mflp;
  std::string_view mfm;
  std::string_view mtf;
};

std::span<const ReferenceRow> reference_table() noexcept;
std::vector<std::uint64_t> reference_sizes();

struct CellCheck {
  std::uint64_t l = 0;
  RatioAlgo algo = RatioAlgo::mtf;
  Rational computed;
  Rational printed;
  Rational rounded; // computed, rounded half-up to the printed precision
  Rational deviation; // |rounded - printed|
  bool within_tolerance = false;
  bool known_anomaly = false;
};

// Compares every reference cell against closed_form_ratio at `tolerance`.
std::vector<CellCheck> check_reference_table(const Rational& tolerance = Rational(1, 100));

struct LimitEvaluation {
  std::uint64_t l = 0;
  // 2 / (1 - log2(l)/l + 2/l), real-valued log2.
  double limit_form = 0.0;
  // 2l/(l-p+2) with integral p.
  Rational closed_form;
};

LimitEvaluation limit_ratio_mflp(std::uint64_t l);

struct DynamicOptRatio {
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  std::uint64_t online_cost = 0; // p(p-1) + k l (l-p+1)
  std::uint64_t opt_cost = 0;    // p(p-1) + l(l-p+1) + (k-1)(l-p+1)^2
  Rational ratio;
  Rational bound; // 2 - (2(l-p+1) - l)/(l-p+1) = l/(l-p+1)
  Rational limit; // k -> infinity
  bool within_bound = false;
};

// MFLP on the opt-variant cruel sequence against the closed-form optimum.
DynamicOptRatio dynamic_opt_ratio(std::uint64_t l, std::uint64_t k);

enum class Baseline { stat, brute_opt, cycle_opt_form };
enum class CostMode { access_only, total };

std::string_view to_string(Baseline baseline) noexcept;

struct EmpiricalRatio {
  std::uint64_t algo_cost = 0;
  std::uint64_t baseline_cost = 0;
  Rational ratio;
  Rational beta;
};

// Ratio of the policy's cost to the baseline's on one instance.
//  - stat: access cost only, or access + setup in CostMode::total.
//  - brute_opt: the oracle's full cost (l <= 6, n <= 20).
//  - cycle_opt_form: seq must be cruel_mflp(l, k, opt) over the identity list;
//    k is recovered from its length.
// Throws std::domain_error when the baseline cost is 0.
EmpiricalRatio empirical_ratio(PolicyKind algo, Baseline baseline, const ListState& initial,
                               const RequestSequence& seq,
                               CostMode mode = CostMode::access_only);

} // namespace listupdate

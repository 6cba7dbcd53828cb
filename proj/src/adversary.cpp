#include "listupdate/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iterator>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "listupdate/policies.hpp"

namespace listupdate {

namespace {

void require_repetitions(std::size_t k) {
  if (k < 1) throw std::invalid_argument("repetition count k must be at least 1");
}

void require_min_size(std::size_t l, std::size_t minimum, std::string_view what) {
  if (l < minimum)
    throw std::invalid_argument(
        fmt::format("{} cruel sequence needs l >= {}, got {}", what, minimum, l));
}

Item item(std::size_t id) { return Item{static_cast<std::uint32_t>(id)}; }

// <pivot, ..., 2, (l, ..., pivot+1, 1)^k>
RequestSequence prefix_then_cycle(std::size_t l, std::size_t k, std::size_t pivot) {
  RequestSequence seq;
  seq.reserve((pivot - 1) + k * (l - pivot + 1));
  for (std::size_t i = pivot; i >= 2; --i) seq.push_back(item(i));
  for (std::size_t rep = 0; rep < k; ++rep) {
    for (std::size_t i = l; i > pivot; --i) seq.push_back(item(i));
    seq.push_back(item(1));
  }
  return seq;
}

// Uniform integer in [0, bound) by rejecting the biased tail of the 64-bit range.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::string_view to_string(CruelTarget target) noexcept {
  switch (target) {
  case CruelTarget::mtf: return "cruel-mtf";
  case CruelTarget::mfm: return "cruel-mfm";
  case CruelTarget::mflp_stat: return "cruel-mflp-stat";
  case CruelTarget::mflp_opt: return "cruel-mflp-opt";
  }
  return "?";
}

RequestSequence cruel_mtf(std::size_t l, std::size_t k) {
  require_min_size(l, 2, "MTF");
  require_repetitions(k);
  RequestSequence seq;
  seq.reserve(l * k);
  for (std::size_t rep = 0; rep < k; ++rep)
    for (std::size_t i = l; i >= 1; --i) seq.push_back(item(i));
  return seq;
}

RequestSequence cruel_mfm(std::size_t l, std::size_t k) {
  require_min_size(l, 4, "MFM");
  require_repetitions(k);
  return prefix_then_cycle(l, k, middle_position(l));
}

RequestSequence cruel_mflp(std::size_t l, std::size_t k, MflpVariant variant) {
  require_min_size(l, 4, "MFLP");
  require_repetitions(k);
  const std::size_t p = log_position(l);
  if (variant == MflpVariant::opt) return prefix_then_cycle(l, k, p);

  RequestSequence seq;
  seq.reserve(k * (l - p + 1));
  for (std::size_t rep = 0; rep < k; ++rep)
    for (std::size_t i = l; i >= p; --i) seq.push_back(item(i));
  return seq;
}

RequestSequence cruel_sequence(const CruelSpec& spec) {
  switch (spec.target) {
  case CruelTarget::mtf: return cruel_mtf(spec.l, spec.k);
  case CruelTarget::mfm: return cruel_mfm(spec.l, spec.k);
  case CruelTarget::mflp_stat: return cruel_mflp(spec.l, spec.k, MflpVariant::stat);
  case CruelTarget::mflp_opt: return cruel_mflp(spec.l, spec.k, MflpVariant::opt);
  }
  throw std::logic_error("unhandled cruel target");
}

std::size_t cruel_prefix_length(const CruelSpec& spec) {
  switch (spec.target) {
  case CruelTarget::mtf:
  case CruelTarget::mflp_stat: return 0;
  case CruelTarget::mfm: return middle_position(spec.l) - 1;
  case CruelTarget::mflp_opt: return log_position(spec.l) - 1;
  }
  throw std::logic_error("unhandled cruel target");
}

std::size_t cruel_block_length(const CruelSpec& spec) {
  switch (spec.target) {
  case CruelTarget::mtf: return spec.l;
  case CruelTarget::mfm: return spec.l - middle_position(spec.l) + 1;
  case CruelTarget::mflp_stat:
  case CruelTarget::mflp_opt: return spec.l - log_position(spec.l) + 1;
  }
  throw std::logic_error("unhandled cruel target");
}

RequestSequence uniform_sequence(std::size_t l, std::size_t n, std::uint64_t seed) {
  if (l == 0) throw std::invalid_argument("universe size must be at least 1");
  std::mt19937_64 rng(seed);
  RequestSequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) seq.push_back(item(bounded(rng, l) + 1));
  return seq;
}

RequestSequence zipf_sequence(std::size_t l, std::size_t n, double s, std::uint64_t seed) {
  if (l == 0) throw std::invalid_argument("universe size must be at least 1");
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument(fmt::format("zipf exponent must be positive, got {}", s));

  std::vector<double> cdf(l);
  double acc = 0.0;
  for (std::size_t r = 1; r <= l; ++r) {
    acc += std::pow(static_cast<double>(r), -s);
    cdf[r - 1] = acc;
  }
  for (double& c : cdf) c /= acc;
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  RequestSequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit_interval(rng);
    const auto rank = static_cast<std::size_t>(std::ranges::upper_bound(cdf, u) - cdf.begin());
    seq.push_back(item(std::min(rank, l - 1) + 1));
  }
  return seq;
}

RequestSequence corpus_sequence(std::span<const std::uint8_t> bytes) {
  RequestSequence seq;
  seq.reserve(bytes.size());
  for (std::uint8_t b : bytes) seq.push_back(Item{b});
  return seq;
}

RequestSequence corpus_sequence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error(fmt::format("error reading '{}'", path.string()));
  return corpus_sequence(std::span<const std::uint8_t>(bytes));
}

RequestSequence generate_workload(const WorkloadSpec& spec) {
  switch (spec.kind) {
  case WorkloadKind::uniform: return uniform_sequence(spec.l, spec.n, spec.seed);
  case WorkloadKind::zipf: return zipf_sequence(spec.l, spec.n, spec.s, spec.seed);
  case WorkloadKind::corpus: return corpus_sequence(spec.path);
  }
  throw std::logic_error("unhandled workload kind");
}

} // namespace listupdate

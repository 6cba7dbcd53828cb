#pragma once

// Request-sequence generators: the adversarial ("cruel") constructions that
// force a policy to pay the full list length on every block access, plus
// seeded stochastic workloads and raw byte corpora.
//
// Cruel sequences assume the identity initial list <1, 2, ..., l>.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>

#include "listupdate/core.hpp"

namespace listupdate {

enum class CruelTarget { mtf, mfm, mflp_stat, mflp_opt };

std::string_view to_string(CruelTarget target) noexcept;

struct CruelSpec {
  CruelTarget target = CruelTarget::mtf;
  std::size_t l = 0;
  std::size_t k = 1;
};

// (<l, l-1, ..., 1>)^k
RequestSequence cruel_mtf(std::size_t l, std::size_t k);
// <m, ..., 2, (l, l-1, ..., m+1, 1)^k>, m = middle_position(l)
RequestSequence cruel_mfm(std::size_t l, std::size_t k);

enum class MflpVariant { stat, opt };
// stat: (<l, ..., p+1, p>)^k
// opt:  <p, ..., 2, (l, ..., p+1, 1)^k>, p = log_position(l)
RequestSequence cruel_mflp(std::size_t l, std::size_t k, MflpVariant variant);

RequestSequence cruel_sequence(const CruelSpec& spec);

// Number of leading requests before the first repeated block.
std::size_t cruel_prefix_length(const CruelSpec& spec);
// Length of one repeated block.
std::size_t cruel_block_length(const CruelSpec& spec);

// Both generators use std::mt19937_64 seeded with `seed`. Items are drawn by
// rejection sampling on the raw 64-bit output (uniform) or by inverse-CDF
// lookup of a 53-bit uniform double (Zipf, rank r has weight r^-s).
RequestSequence uniform_sequence(std::size_t l, std::size_t n, std::uint64_t seed);
RequestSequence zipf_sequence(std::size_t l, std::size_t n, double s, std::uint64_t seed);

// Byte v requests item v over the universe <0, 1, ..., 255>.
RequestSequence corpus_sequence(std::span<const std::uint8_t> bytes);
// Reads the file verbatim; throws std::runtime_error naming the path.
RequestSequence corpus_sequence(const std::filesystem::path& path);

enum class WorkloadKind { uniform, zipf, corpus };

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::uniform;
  std::size_t l = 0;
  std::size_t n = 0;
  double s = 1.0;          // zipf only
  std::uint64_t seed = 0;
  std::filesystem::path path; // corpus only
};

RequestSequence generate_workload(const WorkloadSpec& spec);

} // namespace listupdate

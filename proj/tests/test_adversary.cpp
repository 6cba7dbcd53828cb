#include <doctest.h>

#include <cmath>
#include <array>
#include <filesystem>
#include <fstream>

#include "listupdate/adversary.hpp"
#include "listupdate/policies.hpp"

using namespace listupdate;

TEST_CASE("cruel_mtf") {
  CHECK(cruel_mtf(3, 2) == make_sequence({3, 2, 1, 3, 2, 1}));
  CHECK(cruel_mtf(6, 1) == make_sequence({6, 5, 4, 3, 2, 1}));
  CHECK(cruel_mtf(2, 1) == make_sequence({2, 1}));
  CHECK_THROWS_AS(cruel_mtf(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cruel_mtf(3, 0), std::invalid_argument);
}

TEST_CASE("cruel_mfm") {
  CHECK(cruel_mfm(6, 1) == make_sequence({3, 2, 6, 5, 4, 1}));
  CHECK(cruel_mfm(6, 2) == make_sequence({3, 2, 6, 5, 4, 1, 6, 5, 4, 1}));
  CHECK(cruel_mfm(4, 1) == make_sequence({2, 4, 3, 1}));
  CHECK_THROWS_AS(cruel_mfm(3, 1), std::invalid_argument);
}

TEST_CASE("cruel_mflp variants") {
  CHECK(cruel_mflp(6, 1, MflpVariant::opt) == make_sequence({3, 2, 6, 5, 4, 1}));
  CHECK(cruel_mflp(6, 1, MflpVariant::stat) == make_sequence({6, 5, 4, 3}));
  CHECK(cruel_mflp(8, 2, MflpVariant::stat) ==
        make_sequence({8, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 3}));
  CHECK(8 - log_position(8) + 1 == 6);
  CHECK_THROWS_AS(cruel_mflp(3, 1, MflpVariant::stat), std::invalid_argument);
  CHECK_THROWS_AS(cruel_mflp(8, 0, MflpVariant::opt), std::invalid_argument);
}

TEST_CASE("cruel prefix and block lengths describe the sequences") {
  for (std::size_t l = 4; l <= 20; ++l)
    for (CruelTarget target :
         {CruelTarget::mtf, CruelTarget::mfm, CruelTarget::mflp_stat, CruelTarget::mflp_opt}) {
      const CruelSpec spec{target, l, 3};
      CHECK(cruel_sequence(spec).size() ==
            cruel_prefix_length(spec) + 3 * cruel_block_length(spec));
    }
}

TEST_CASE("cruel sequences make every block access cost l") {
  for (std::size_t l = 4; l <= 24; ++l) {
    const std::uint64_t L = l;
    const std::uint64_t p = log_position(l);
    const std::uint64_t m = middle_position(l);
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const ListState id = ListState::identity(l);
      CHECK(run_policy(PolicyKind::mtf, id, cruel_mtf(l, k)).access_total() == k * L * L);
      CHECK(run_policy(PolicyKind::mflp, id, cruel_mflp(l, k, MflpVariant::stat)).access_total() ==
            k * L * (L - p + 1));
      CHECK(run_policy(PolicyKind::mflp, id, cruel_mflp(l, k, MflpVariant::opt)).access_total() ==
            p * (p - 1) + k * L * (L - p + 1));
      const auto mfm = run_policy(PolicyKind::mfm, id, cruel_mfm(l, k));
      std::uint64_t block_cost = 0;
      for (std::size_t i = m - 1; i < mfm.steps().size(); ++i) block_cost += mfm.steps()[i].access_cost;
      CHECK(block_cost == k * L * (L - m + 1));
    }
  }
}

TEST_CASE("uniform generator") {
  CHECK(uniform_sequence(1, 5, 123) == make_sequence({1, 1, 1, 1, 1}));
  CHECK(uniform_sequence(9, 50, 4) == uniform_sequence(9, 50, 4));
  CHECK(uniform_sequence(9, 50, 4) != uniform_sequence(9, 50, 5));
  CHECK_THROWS_AS(uniform_sequence(0, 5, 1), std::invalid_argument);

  const auto seq = uniform_sequence(4, 100'000, 2024);
  std::array<std::size_t, 4> hist{};
  for (auto item : seq) {
    REQUIRE(item.id >= 1);
    REQUIRE(item.id <= 4);
    ++hist[item.id - 1];
  }
  for (auto h : hist) CHECK(std::abs(static_cast<double>(h) / 100'000 - 0.25) <= 0.03 * 0.25);
}

TEST_CASE("zipf generator matches the analytic rank-1 mass") {
  double harmonic = 0.0;
  for (int r = 1; r <= 10; ++r) harmonic += 1.0 / r;
  const double expected = 1.0 / harmonic; // 0.3414...
  CHECK(expected == doctest::Approx(0.3414).epsilon(1e-3));

  const auto seq = zipf_sequence(10, 100'000, 1.0, 99);
  std::size_t front = 0;
  for (auto item : seq) {
    REQUIRE(item.id >= 1);
    REQUIRE(item.id <= 10);
    front += item.id == 1;
  }
  CHECK(std::abs(static_cast<double>(front) / 100'000 - expected) <= 0.03 * expected);
  CHECK(zipf_sequence(10, 200, 1.2, 7) == zipf_sequence(10, 200, 1.2, 7));
  CHECK_THROWS_AS(zipf_sequence(10, 5, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(zipf_sequence(10, 5, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(zipf_sequence(0, 5, 1.0, 1), std::invalid_argument);
}

TEST_CASE("corpus_sequence maps bytes to items") {
  const std::uint8_t abc[] = {0x61, 0x62, 0x63};
  CHECK(corpus_sequence(std::span<const std::uint8_t>(abc)) == make_sequence({97, 98, 99}));
  CHECK(corpus_sequence(std::span<const std::uint8_t>()).empty());
  const std::uint8_t zeros[] = {0, 0};
  CHECK(corpus_sequence(std::span<const std::uint8_t>(zeros)) == make_sequence({0, 0}));
}

TEST_CASE("corpus_sequence reads files verbatim") {
  const auto path = std::filesystem::temp_directory_path() / "listupdate_corpus_test.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out.write("a\r\n\0\xff", 5);
  }
  CHECK(corpus_sequence(path) == make_sequence({97, 13, 10, 0, 255}));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(corpus_sequence(path), std::runtime_error);
}

TEST_CASE("generate_workload dispatches on kind") {
  WorkloadSpec spec;
  spec.kind = WorkloadKind::zipf;
  spec.l = 5;
  spec.n = 30;
  spec.s = 0.8;
  spec.seed = 42;
  CHECK(generate_workload(spec) == zipf_sequence(5, 30, 0.8, 42));
  spec.kind = WorkloadKind::uniform;
  CHECK(generate_workload(spec) == uniform_sequence(5, 30, 42));
}

#include <doctest.h>

#include <cmath>

#include "listupdate/adversary.hpp"
#include "listupdate/analysis.hpp"
#include "listupdate/offline.hpp"

using namespace listupdate;

TEST_CASE("closed_form_ratio examples") {
  CHECK(closed_form_ratio(RatioAlgo::mtf, 4) == Rational(8, 5));
  CHECK(to_fixed(closed_form_ratio(RatioAlgo::mflp, 100), 3) == "2.105");
  CHECK(to_fixed(closed_form_ratio(RatioAlgo::mfm, 50), 2) == "3.70");
  CHECK_THROWS_AS(closed_form_ratio(RatioAlgo::mtf, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_ratio(RatioAlgo::mflp, 3), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_ratio(RatioAlgo::mfm, 3), std::invalid_argument);
}

TEST_CASE("closed forms equal cruel cost over STAT cost") {
  for (std::uint64_t l = 4; l <= 40; ++l) {
    const std::uint64_t p = log_position(l);
    const std::uint64_t m = middle_position(l);
    const auto tri = [](std::uint64_t n) { return n * (n + 1) / 2; };
    CHECK(closed_form_ratio(RatioAlgo::mtf, l) ==
          Rational(static_cast<std::int64_t>(l * l), static_cast<std::int64_t>(tri(l))));
    CHECK(closed_form_ratio(RatioAlgo::mflp, l) ==
          Rational(static_cast<std::int64_t>(l * (l - p + 1)),
                   static_cast<std::int64_t>(tri(l - p + 1))));
    CHECK(closed_form_ratio(RatioAlgo::mfm, l) ==
          Rational(static_cast<std::int64_t>(l * (l - m + 1)),
                   static_cast<std::int64_t>(tri(l - m + 1))));
  }
}

TEST_CASE("closed_form_ratio for MFLP is exact for large l") {
  for (std::uint64_t l : {4ull, 5ull, 1000ull, 123456789ull, 999999937ull, 1000000000ull}) {
    const Rational r = closed_form_ratio(RatioAlgo::mflp, l);
    const auto p = static_cast<std::int64_t>(log_position(l));
    CHECK(r * Rational(static_cast<std::int64_t>(l) - p + 2) == Rational(2 * static_cast<std::int64_t>(l)));
  }
}

TEST_CASE("table1 rows") {
  const std::uint64_t sizes[] = {10};
  const auto rows = table1(sizes);
  REQUIRE(rows.size() == 1);
  CHECK(to_fixed(rows[0].mflp, 3) == "2.500");
  CHECK(to_fixed(rows[0].mfm, 3) == "2.857");
  CHECK(to_fixed(rows[0].mtf, 3) == "1.818");
  CHECK(rows[0].source == RatioSource::closed_form);
  CHECK(rows[0].beta == Rational(0));

  const std::uint64_t big[] = {100'000'000};
  const auto last = table1(big).front();
  CHECK(to_fixed(last.mflp, 6) == "2.000001");
  CHECK(to_fixed(last.mfm, 0) == "4");
  CHECK(to_fixed(last.mtf, 0) == "2");

  const std::uint64_t bad[] = {4, 3};
  CHECK_THROWS_AS(table1(bad), std::invalid_argument);
}

TEST_CASE("reference table congruence") {
  const auto checks = check_reference_table();
  CHECK(checks.size() == 17 * 3);
  std::size_t anomalies = 0;
  for (const auto& c : checks) {
    INFO("l=" << c.l << " algo=" << to_string(c.algo));
    CHECK(c.within_tolerance);
    anomalies += c.known_anomaly;
  }
  CHECK(anomalies == 1);
}

TEST_CASE("limit_ratio_mflp") {
  const auto far = limit_ratio_mflp(std::uint64_t{1} << 50);
  CHECK(std::abs(far.limit_form - 2.0) < 1e-10);
  CHECK(closed_form_ratio(RatioAlgo::mflp, 4) == Rational(2));
  CHECK(limit_ratio_mflp(4).closed_form == Rational(2));

  // Closed form decreases strictly from 2^4 onward.
  Rational previous = closed_form_ratio(RatioAlgo::mflp, 16);
  for (int j = 5; j <= 20; ++j) {
    const Rational r = closed_form_ratio(RatioAlgo::mflp, std::uint64_t{1} << j);
    CHECK(r < previous);
    CHECK(r > Rational(2));
    previous = r;
  }
  // At powers of two log2 l is integral, so both forms agree.
  for (int j = 2; j <= 30; ++j) {
    const auto e = limit_ratio_mflp(std::uint64_t{1} << j);
    CHECK(e.limit_form == doctest::Approx(e.closed_form.to_double()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(limit_ratio_mflp(3), std::invalid_argument);
}

TEST_CASE("threshold behaviour of the closed forms") {
  for (std::uint64_t l = 5; l <= 5000; ++l) CHECK(closed_form_ratio(RatioAlgo::mflp, l) > Rational(2));
  CHECK(closed_form_ratio(RatioAlgo::mfm, 1'000'000'000) < Rational(4));
  CHECK(Rational(4) - closed_form_ratio(RatioAlgo::mfm, 1'000'000'000) < Rational(1, 10'000'000));
}

TEST_CASE("dynamic_opt_ratio examples") {
  auto r = dynamic_opt_ratio(6, 1);
  CHECK(r.online_cost == 30);
  CHECK(r.opt_cost == 30);
  CHECK(r.ratio == Rational(1));
  CHECK(r.bound == Rational(3, 2));
  CHECK(r.limit == Rational(3, 2));

  r = dynamic_opt_ratio(4, 10);
  CHECK(r.online_cost == 122);
  CHECK(r.opt_cost == 95);
  CHECK(r.ratio == Rational(122, 95));
  CHECK(r.bound == Rational(4, 3));
  CHECK(r.within_bound);
  CHECK_THROWS_AS(dynamic_opt_ratio(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(dynamic_opt_ratio(6, 0), std::invalid_argument);
}

TEST_CASE("dynamic_opt_ratio matches simulated MFLP cost") {
  for (std::size_t l = 4; l <= 16; ++l)
    for (std::uint64_t k = 1; k <= 5; ++k)
      CHECK(dynamic_opt_ratio(l, k).online_cost ==
            run_policy(PolicyKind::mflp, ListState::identity(l), cruel_mflp(l, k, MflpVariant::opt))
                .access_total());
}

TEST_CASE("empirical_ratio against STAT") {
  const auto mtf = empirical_ratio(PolicyKind::mtf, Baseline::stat, ListState::identity(6),
                                   cruel_mtf(6, 100));
  CHECK(mtf.ratio == Rational(12, 7));
  CHECK(mtf.beta == Rational(0));

  const auto mflp = empirical_ratio(PolicyKind::mflp, Baseline::stat, ListState::identity(20),
                                    cruel_mflp(20, 1000, MflpVariant::stat));
  const double target = closed_form_ratio(RatioAlgo::mflp, 20).to_double();
  CHECK(std::abs(mflp.ratio.to_double() - target) <= 0.02 * target);

  // total mode adds STAT's rearrangement
  const auto seq = make_sequence({2, 2});
  CHECK(empirical_ratio(PolicyKind::mtf, Baseline::stat, ListState{1, 2}, seq).baseline_cost == 2);
  CHECK(empirical_ratio(PolicyKind::mtf, Baseline::stat, ListState{1, 2}, seq, CostMode::total)
            .baseline_cost == 3);
}

TEST_CASE("empirical_ratio against the exact optimum and the closed-form optimum") {
  const auto seq = cruel_mflp(6, 2, MflpVariant::opt);
  const auto opt = empirical_ratio(PolicyKind::mflp, Baseline::brute_opt, ListState::identity(6), seq);
  CHECK(opt.baseline_cost == brute_force_opt(ListState::identity(6), seq).total_cost);
  CHECK(opt.ratio >= Rational(1));

  const auto form =
      empirical_ratio(PolicyKind::mflp, Baseline::cycle_opt_form, ListState::identity(6), seq);
  CHECK(form.baseline_cost == cycle_opt_cost(6, 2));
  CHECK(form.ratio == dynamic_opt_ratio(6, 2).ratio);

  CHECK_THROWS_AS(empirical_ratio(PolicyKind::mflp, Baseline::cycle_opt_form,
                                  ListState::identity(6), cruel_mtf(6, 1)),
                  std::invalid_argument);
}

TEST_CASE("empirical_ratio rejects a zero-cost baseline") {
  CHECK_THROWS_AS(empirical_ratio(PolicyKind::mtf, Baseline::stat, ListState::identity(3), {}),
                  std::domain_error);
  CHECK_THROWS_AS(empirical_ratio(PolicyKind::mtf, Baseline::brute_opt, ListState::identity(3), {}),
                  std::domain_error);
}

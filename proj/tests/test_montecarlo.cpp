#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curvecomm/codebook.hpp"
#include "curvecomm/montecarlo.hpp"

using namespace curvecomm;

namespace {

bool within_sigmas(const PepEstimate& e, double target, double sigmas) {
  return std::abs(e.value - target) <= sigmas * wilson_standard_error(e);
}

}  // namespace

TEST_CASE("wilson interval brackets the raw frequency") {
  for (const std::uint64_t n : {std::uint64_t{1}, std::uint64_t{10}, std::uint64_t{1000},
                                std::uint64_t{50000}}) {
    for (const std::uint64_t s : {std::uint64_t{0}, std::uint64_t{1}, n / 2, n}) {
      if (s > n) continue;
      const WilsonInterval ci = wilson_interval(s, n);
      const double p = static_cast<double>(s) / static_cast<double>(n);
      CHECK(ci.low >= 0.0);
      CHECK(ci.high <= 1.0);
      CHECK(ci.low <= p + 1e-15);
      CHECK(ci.high >= p - 1e-15);
    }
  }
  CHECK(wilson_interval(0, 100).low == 0.0);
  CHECK(wilson_interval(100, 100).high == 1.0);
}

TEST_CASE("wilson interval calibration near a known probability") {
  // Bernoulli(p) with p from the analytic tail; ~95% of nominal-95% intervals
  // should cover p, so 100 replications clear 90 with margin.
  const double p = q_function(1.0);
  int covered = 0;
  const int reps = 100;
  const std::uint64_t n = 2000;
  for (int r = 0; r < reps; ++r) {
    CounterRng rng(777 + static_cast<std::uint64_t>(r), 0);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i)
      if (rng.next_double() < p) ++hits;
    const WilsonInterval ci = wilson_interval(hits, n);
    if (ci.low <= p && p <= ci.high) ++covered;
  }
  CHECK(covered >= 90);
}

TEST_CASE("pairwise estimates are deterministic and worker-invariant") {
  const Constellation c = build_uniform_codebook(5, 8);
  const NoiseParams n(0.4, 0.4);
  const PepEstimate a = estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 4000, 99, 1);
  const PepEstimate b = estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 4000, 99, 1);
  const PepEstimate d = estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 4000, 99, 4);
  const PepEstimate e = estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 4000, 99, 16);
  CHECK(a.value == b.value);
  CHECK(a.value == d.value);
  CHECK(a.value == e.value);
  CHECK(a.ci_low == d.ci_low);
  CHECK(a.ci_high == e.ci_high);

  const PepEstimate other = estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 4000, 100, 1);
  CHECK(other.value != a.value);  // different master seed, different draws

  CHECK_THROWS_AS(estimate_pairwise_pep(c, 2, 2, DecoderKind::Matched, n, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_pairwise_pep(c, 0, 4, DecoderKind::Matched, n, 0, 1), std::invalid_argument);
}

TEST_CASE("matched and Euclidean pairwise counts coincide at beta = 0 on shared streams") {
  const Constellation c = build_uniform_codebook(20, 2);
  const NoiseParams n(0.0, 0.3);
  const PepEstimate m = estimate_pairwise_pep(c, 0, 1, DecoderKind::Matched, n, 20000, 5, 2);
  const PepEstimate e = estimate_pairwise_pep(c, 0, 1, DecoderKind::Euclidean, n, 20000, 5, 2);
  CHECK(m.value == e.value);
}

TEST_CASE("normal tail frequencies agree with q_function") {
  for (const double x : {0.5, 1.0, 2.0}) {
    CounterRng rng(60 + static_cast<std::uint64_t>(10 * x), 0);
    const std::uint64_t trials = 50000;
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t)
      if (rng.next_normal() > x) ++hits;
    PepEstimate e;
    e.value = static_cast<double>(hits) / static_cast<double>(trials);
    const WilsonInterval ci = wilson_interval(hits, trials);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    e.trials = trials;
    CHECK(within_sigmas(e, q_function(x), 3.0));
  }
}

TEST_CASE("pairwise estimates agree with the analytic formulas") {
  const Constellation c = build_uniform_codebook(20, 2);
  const std::uint64_t trials = 50000;

  // antipodal pair, three beta points per decoder
  int idx = 0;
  for (const double beta : {0.2, 0.5, 0.8}) {
    const NoiseParams n(beta, 0.3);
    const PepEstimate e =
        estimate_pairwise_pep(c, 0, 1, DecoderKind::Euclidean, n, trials, 300 + idx, 4);
    CHECK(within_sigmas(e, antipodal_pep_euclidean(20, n), 3.0));
    const PepEstimate m =
        estimate_pairwise_pep(c, 0, 1, DecoderKind::Matched, n, trials, 300 + idx, 4);
    CHECK(within_sigmas(m, antipodal_pep_matched(20, n), 3.0));
    ++idx;
  }

  // non-phantom pairs: the general Euclidean expression
  const Constellation cb = build_uniform_codebook(3, 12);
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {2, 7}}) {
    const NoiseParams n(0.45, 0.35);
    const PepEstimate e = estimate_pairwise_pep(cb, i, j, DecoderKind::Euclidean, n, trials,
                                                900 + static_cast<std::uint64_t>(i + j), 4);
    CHECK(within_sigmas(e, euclidean_pep(pair_geometry(cb, i, j), n), 3.0));
  }
}

TEST_CASE("symbol error rate: uniform guessing limit and determinism") {
  const Constellation c = build_uniform_codebook(2, 4);
  const NoiseParams loud(0.0, 100.0);
  const PepEstimate e = estimate_ser(c, DecoderKind::Euclidean, loud, 20000, 31, 4);
  CHECK(within_sigmas(e, 3.0 / 4.0, 3.0));

  const PepEstimate a = estimate_ser(c, DecoderKind::Matched, NoiseParams(0.5, 0.4), 3000, 17, 1);
  const PepEstimate b = estimate_ser(c, DecoderKind::Matched, NoiseParams(0.5, 0.4), 3000, 17, 8);
  CHECK(a.value == b.value);
}

TEST_CASE("symbol error rate sits between the analytic bounds") {
  const Constellation c = build_uniform_codebook(20, 12);
  const NoiseParams n(0.4, 0.3);
  const SerBounds bounds = euclidean_ser_bounds(20, 12, n);
  const PepEstimate e = estimate_ser(c, DecoderKind::Euclidean, n, 20000, 1234, 4);
  const double slack = 3.0 * wilson_standard_error(e);
  CHECK(e.value >= bounds.lower - slack);
  CHECK(e.value <= std::min(bounds.upper_raw, 1.0) + slack);

  const PepEstimate m = estimate_ser(c, DecoderKind::Matched, n, 20000, 1234, 4);
  CHECK(m.value >= bounds.matched_lower - 3.0 * wilson_standard_error(m));
}

TEST_CASE("paired decoder comparison") {
  const Constellation c = build_uniform_codebook(20, 12);

  // beta = 0: identical rules, zero discordance
  const PairedSerComparison same = compare_decoders_ser(c, NoiseParams(0.0, 0.3), 5000, 8, 4);
  CHECK(same.only_matched_errors == 0);
  CHECK(same.only_euclidean_errors == 0);
  CHECK(same.matched_errors == same.euclidean_errors);

  // strong tangent noise: the rules measurably disagree and matched wins
  const PairedSerComparison diff = compare_decoders_ser(c, NoiseParams(0.8, 0.3), 10000, 8, 4);
  CHECK(diff.only_matched_errors + diff.only_euclidean_errors > 0);
  CHECK(diff.gap() > 0.0);
  CHECK(diff.matched_ser() < diff.euclidean_ser());
  CHECK(diff.gap_stderr() > 0.0);

  // worker invariance of the paired counters
  const PairedSerComparison w1 = compare_decoders_ser(c, NoiseParams(0.8, 0.3), 3000, 21, 1);
  const PairedSerComparison w8 = compare_decoders_ser(c, NoiseParams(0.8, 0.3), 3000, 21, 8);
  CHECK(w1.matched_errors == w8.matched_errors);
  CHECK(w1.euclidean_errors == w8.euclidean_errors);
  CHECK(w1.only_matched_errors == w8.only_matched_errors);
  CHECK(w1.only_euclidean_errors == w8.only_euclidean_errors);
}

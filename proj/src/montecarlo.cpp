#include "curvecomm/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace curvecomm {
namespace {

// Runs fn(trial, counters) for every trial in [0, trials), statically
// partitioned over workers. Counters are per-worker and summed at the end;
// since every trial owns its substream, the totals do not depend on the
// partition.
template <std::size_t N, typename Fn>
std::array<std::uint64_t, N> tally_trials(std::uint64_t trials, unsigned workers, Fn fn) {
  std::array<std::uint64_t, N> total{};
  if (trials == 0) return total;
  const std::uint64_t nworkers = std::clamp<std::uint64_t>(workers, 1, trials);

  std::vector<std::array<std::uint64_t, N>> partial(nworkers);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  const std::uint64_t chunk = trials / nworkers;
  const std::uint64_t rem = trials % nworkers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < nworkers; ++w) {
    const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
    pool.emplace_back([&fn, &partial, w, begin, end] {
      std::array<std::uint64_t, N> local{};
      for (std::uint64_t t = begin; t < end; ++t) fn(t, local);
      partial[w] = local;
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
  for (const auto& p : partial)
    for (std::size_t i = 0; i < N; ++i) total[i] += p[i];
  return total;
}

PepEstimate make_estimate(std::uint64_t errors, std::uint64_t trials,
                          std::uint64_t seed, DecoderKind decoder) {
  PepEstimate e;
  e.value = static_cast<double>(errors) / static_cast<double>(trials);
  e.trials = trials;
  const WilsonInterval ci = wilson_interval(errors, trials);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  e.seed = seed;
  e.decoder = decoder;
  return e;
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double radius = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // center - radius = 0 holds exactly at p = 0 (likewise at p = 1); keep the
  // endpoints exact instead of leaving rounding residue
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - radius);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + radius);
  return {low, high};
}

double wilson_standard_error(const PepEstimate& e, double z) {
  return (e.ci_high - e.ci_low) / (2.0 * z);
}

PepEstimate estimate_pairwise_pep(const Constellation& c, std::size_t i, std::size_t j,
                                  DecoderKind decoder, const NoiseParams& n,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers) {
  if (i == j) throw std::invalid_argument("pairwise estimate needs two distinct indices");
  if (i >= c.size() || j >= c.size()) throw std::invalid_argument("pair index out of range");
  if (trials == 0) throw std::invalid_argument("trial count must be >= 1");

  const auto counts = tally_trials<1>(trials, workers, [&](std::uint64_t t, auto& acc) {
    CounterRng rng(seed, t);
    const Observation obs = sample_observation(c, i, n, rng);
    double score_i, score_j;
    if (decoder == DecoderKind::Euclidean) {
      score_i = euclidean_score(c, obs.y, i, n);
      score_j = euclidean_score(c, obs.y, j, n);
    } else {
      score_i = matched_score_scaled(c, obs.y, i, n);
      score_j = matched_score_scaled(c, obs.y, j, n);
    }
    if (score_j <= score_i) ++acc[0];
  });
  return make_estimate(counts[0], trials, seed, decoder);
}

PepEstimate estimate_ser(const Constellation& c, DecoderKind decoder,
                         const NoiseParams& n, std::uint64_t trials,
                         std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trial count must be >= 1");

  const auto counts = tally_trials<1>(trials, workers, [&](std::uint64_t t, auto& acc) {
    CounterRng rng(seed, t);
    const std::size_t sym = rng.next_index(c.size());
    const Observation obs = sample_observation(c, sym, n, rng);
    const std::size_t decoded = decoder == DecoderKind::Euclidean
                                    ? euclidean_decode(c, obs.y, n)
                                    : matched_decode(c, obs.y, n);
    if (decoded != sym) ++acc[0];
  });
  return make_estimate(counts[0], trials, seed, decoder);
}

double PairedSerComparison::matched_ser() const {
  return static_cast<double>(matched_errors) / static_cast<double>(trials);
}

double PairedSerComparison::euclidean_ser() const {
  return static_cast<double>(euclidean_errors) / static_cast<double>(trials);
}

double PairedSerComparison::gap() const { return euclidean_ser() - matched_ser(); }

double PairedSerComparison::gap_stderr() const {
  // Per-trial difference d in {-1, 0, 1}: Var(d) = E[d^2] - E[d]^2 with
  // E[d^2] the discordant fraction.
  const double n = static_cast<double>(trials);
  const double disc =
      static_cast<double>(only_matched_errors + only_euclidean_errors) / n;
  const double mean = gap();
  const double var = std::max(0.0, disc - mean * mean);
  return std::sqrt(var / n);
}

PairedSerComparison compare_decoders_ser(const Constellation& c, const NoiseParams& n,
                                         std::uint64_t trials, std::uint64_t seed,
                                         unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trial count must be >= 1");

  // acc: {matched errors, euclidean errors, only-matched, only-euclidean}
  const auto counts = tally_trials<4>(trials, workers, [&](std::uint64_t t, auto& acc) {
    CounterRng rng(seed, t);
    const std::size_t sym = rng.next_index(c.size());
    const Observation obs = sample_observation(c, sym, n, rng);
    const bool err_m = matched_decode(c, obs.y, n) != sym;
    const bool err_e = euclidean_decode(c, obs.y, n) != sym;
    if (err_m) ++acc[0];
    if (err_e) ++acc[1];
    if (err_m && !err_e) ++acc[2];
    if (err_e && !err_m) ++acc[3];
  });

  PairedSerComparison out;
  out.trials = trials;
  out.matched_errors = counts[0];
  out.euclidean_errors = counts[1];
  out.only_matched_errors = counts[2];
  out.only_euclidean_errors = counts[3];
  out.seed = seed;
  return out;
}

}  // namespace curvecomm

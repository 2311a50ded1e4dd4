#pragma once

#include <cstdint>

#include "curvecomm/channel.hpp"

namespace curvecomm {

/// z for the nominal 95% level.
inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
  double low;
  double high;
};

/// Wilson score interval for a binomial proportion. Well behaved near 0 and
/// 1, where pairwise error probabilities live; always contains successes/trials.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = kWilsonZ95);

/// Monte Carlo estimate of a probability with its 95% Wilson interval.
struct PepEstimate {
  double value = 0.0;  ///< raw frequency
  std::uint64_t trials = 0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;
  DecoderKind decoder = DecoderKind::Euclidean;
};

/// Interval half-width divided by z: the "Wilson standard error" used when
/// checking agreement against analytic values.
double wilson_standard_error(const PepEstimate& e, double z = kWilsonZ95);

/// Pairwise error estimate: transmit i and count the binary comparison event
/// that hypothesis j scores no worse than i under the chosen metric (not a
/// full-codebook decode). Streams are keyed by (seed, trial), so results are
/// identical for any worker count, and the two decoder kinds see the same
/// observations when called with the same seed.
PepEstimate estimate_pairwise_pep(const Constellation& c, std::size_t i, std::size_t j,
                                  DecoderKind decoder, const NoiseParams& n,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers = 1);

/// Full-codebook symbol error rate with equiprobable symbols. Same stream
/// discipline as estimate_pairwise_pep.
PepEstimate estimate_ser(const Constellation& c, DecoderKind decoder,
                         const NoiseParams& n, std::uint64_t trials,
                         std::uint64_t seed, unsigned workers = 1);

/// Paired decoder comparison on common random numbers: every observation is
/// decoded by both rules. The discordant counts give the paired standard
/// error of the SER gap, which is much sharper than differencing two
/// independent runs.
struct PairedSerComparison {
  std::uint64_t trials = 0;
  std::uint64_t matched_errors = 0;
  std::uint64_t euclidean_errors = 0;
  std::uint64_t only_matched_errors = 0;    ///< matched wrong, Euclidean right
  std::uint64_t only_euclidean_errors = 0;  ///< Euclidean wrong, matched right
  std::uint64_t seed = 0;

  double matched_ser() const;
  double euclidean_ser() const;
  double gap() const;         ///< euclidean_ser - matched_ser
  double gap_stderr() const;  ///< paired standard error of the gap
};

PairedSerComparison compare_decoders_ser(const Constellation& c, const NoiseParams& n,
                                         std::uint64_t trials, std::uint64_t seed,
                                         unsigned workers = 1);

}  // namespace curvecomm

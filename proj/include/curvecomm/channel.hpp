#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curvecomm/pairwise.hpp"
#include "curvecomm/rng.hpp"

namespace curvecomm {

/// Identifies the random substream an observation was drawn from.
struct StreamInfo {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// One channel output y = sqrt(1-beta) x_i + sqrt(beta) xi t_i + N, with
/// xi ~ N(0,1) along the transmit tangent and N ~ N(0, sigma_c^2 I).
struct Observation {
  std::vector<double> y;
  std::size_t true_index = 0;
  StreamInfo seed_info;
};

enum class DecoderKind { Matched, Euclidean };

/// Draws one observation for transmit symbol i. Consumes 2k+1 normals from
/// the stream in a fixed order (tangent coefficient first, then the ambient
/// components).
Observation sample_observation(const Constellation& c, std::size_t i,
                               const NoiseParams& n, CounterRng& rng);

/// Squared distance to the shrunken mean, |y - sqrt(1-beta) x_i|^2. With
/// mean_aware = false the unshrunken point x_i is used instead (a decoder
/// that does not know beta at all).
double euclidean_score(const Constellation& c, std::span<const double> y,
                       std::size_t i, const NoiseParams& n, bool mean_aware = true);

/// Matched quadratic metric scaled by sigma_c^2:
/// |y - x_i|^2 - beta/(beta+sigma^2) ((y - x_i) . t_i)^2 with shrunken means.
/// Same ordering as the full metric, and identical to euclidean_score at
/// beta = 0, so decisions of the two rules agree bitwise there.
double matched_score_scaled(const Constellation& c, std::span<const double> y,
                            std::size_t i, const NoiseParams& n);

/// Matched decoding metric per candidate: |y - x_i|^2 / sigma^2 minus the
/// rank-one tangent correction. One inner product with t_i and one scalar
/// quadratic term beyond the squared distance.
double matched_score(const Constellation& c, std::span<const double> y,
                     std::size_t i, const NoiseParams& n);

/// Arg-min of the matched metric; ties break to the lowest index.
std::size_t matched_decode(const Constellation& c, std::span<const double> y,
                           const NoiseParams& n);

/// Euclidean nearest-neighbor rule against the shrunken means; ties break to
/// the lowest index.
std::size_t euclidean_decode(const Constellation& c, std::span<const double> y,
                             const NoiseParams& n, bool mean_aware = true);

}  // namespace curvecomm

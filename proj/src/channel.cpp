#include "curvecomm/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace curvecomm {
namespace {

void require_index(const Constellation& c, std::size_t i) {
  if (i >= c.size()) throw std::invalid_argument("symbol index out of range");
}

}  // namespace

Observation sample_observation(const Constellation& c, std::size_t i,
                               const NoiseParams& n, CounterRng& rng) {
  require_index(c, i);
  const auto x = c.point(i);
  const auto t = c.tangent(i);
  const double shrink = std::sqrt(1.0 - n.beta);
  const double an_scale = std::sqrt(n.beta);

  Observation obs;
  obs.true_index = i;
  obs.seed_info = {rng.seed(), rng.stream()};
  obs.y.resize(c.dim());

  const double xi = rng.next_normal();
  for (std::size_t d = 0; d < obs.y.size(); ++d)
    obs.y[d] = shrink * x[d] + an_scale * xi * t[d] + n.sigma_c * rng.next_normal();
  return obs;
}

double euclidean_score(const Constellation& c, std::span<const double> y,
                       std::size_t i, const NoiseParams& n, bool mean_aware) {
  require_index(c, i);
  if (y.size() != c.dim()) throw std::invalid_argument("observation dimension mismatch");
  const auto x = c.point(i);
  const double shrink = mean_aware ? std::sqrt(1.0 - n.beta) : 1.0;
  double d2 = 0.0;
  for (std::size_t d = 0; d < y.size(); ++d) {
    const double r = y[d] - shrink * x[d];
    d2 += r * r;
  }
  return d2;
}

double matched_score_scaled(const Constellation& c, std::span<const double> y,
                            std::size_t i, const NoiseParams& n) {
  require_index(c, i);
  if (y.size() != c.dim()) throw std::invalid_argument("observation dimension mismatch");
  const auto x = c.point(i);
  const auto t = c.tangent(i);
  const double shrink = std::sqrt(1.0 - n.beta);
  const double coef = n.beta / (n.beta + n.sigma_c * n.sigma_c);
  double d2 = 0.0;
  double proj = 0.0;
  for (std::size_t d = 0; d < y.size(); ++d) {
    const double r = y[d] - shrink * x[d];
    d2 += r * r;
    proj += r * t[d];
  }
  return d2 - coef * proj * proj;
}

double matched_score(const Constellation& c, std::span<const double> y,
                     std::size_t i, const NoiseParams& n) {
  return matched_score_scaled(c, y, i, n) / (n.sigma_c * n.sigma_c);
}

std::size_t matched_decode(const Constellation& c, std::span<const double> y,
                           const NoiseParams& n) {
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double s = matched_score_scaled(c, y, i, n);
    if (s < best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

std::size_t euclidean_decode(const Constellation& c, std::span<const double> y,
                             const NoiseParams& n, bool mean_aware) {
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double s = euclidean_score(c, y, i, n, mean_aware);
    if (s < best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

}  // namespace curvecomm

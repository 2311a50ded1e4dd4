#include "curvecomm/pairwise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "curvecomm/gauss_hermite.hpp"

namespace curvecomm {

NoiseParams::NoiseParams(double beta_, double sigma_c_) : beta(beta_), sigma_c(sigma_c_) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("artificial-noise fraction beta must lie in [0, 1)");
  if (!(sigma_c >= kMinSigmaC))
    throw std::invalid_argument("ambient noise sigma_c must be at least 1e-6");
}

double q_function(double x) {
  if (std::isnan(x)) throw std::invalid_argument("q_function: NaN argument");
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double euclidean_pep(double delta, double cos_alpha, const NoiseParams& n) {
  if (!(delta > 0.0)) throw std::invalid_argument("pairwise distance delta must be positive");
  const double denom = 2.0 * std::sqrt(n.beta * cos_alpha * cos_alpha + n.sigma_c * n.sigma_c);
  return q_function(std::sqrt(1.0 - n.beta) * delta / denom);
}

double euclidean_pep(const PairGeometry& g, const NoiseParams& n) {
  return euclidean_pep(g.delta, g.cos_alpha, n);
}

MatchedPepParams matched_pep_params(double delta, double gamma, const NoiseParams& n) {
  if (!(delta > 0.0)) throw std::invalid_argument("pairwise distance delta must be positive");
  if (!(std::abs(gamma) <= 1.0))
    throw std::invalid_argument("tangent correlation gamma must lie in [-1, 1]");

  const double beta = n.beta;
  const double sigma = n.sigma_c;
  const double sigma2 = sigma * sigma;
  const double one_minus_g2 = (1.0 - gamma) * (1.0 + gamma);
  const double denom = 2.0 * sigma * (beta + sigma2) * delta * std::sqrt(1.0 - beta);

  MatchedPepParams p;
  p.eta_e = std::sqrt(1.0 - beta) * delta / (2.0 * sigma);
  p.b = beta * sigma2 / denom;
  p.a = p.b + beta * beta * one_minus_g2 / denom;
  p.rho_uv = gamma * sigma / std::sqrt(one_minus_g2 * beta + sigma2);
  p.degenerate = std::abs(gamma) >= 1.0 - kDegenerateGammaTol;
  return p;
}

double matched_phantom_pep(double delta, double gamma, const NoiseParams& n, int quad_order) {
  if (quad_order < 8) throw std::invalid_argument("quadrature order must be at least 8");
  const MatchedPepParams p = matched_pep_params(delta, gamma, n);

  // Parallel tangents or no tangent noise: the quadratic correction vanishes
  // and the expectation is Q(eta_e) exactly.
  if (p.degenerate || (p.a == 0.0 && p.b == 0.0)) return q_function(p.eta_e);

  // Rotate the correlated quadratic form a U^2 - b V^2 into l1 X^2 - mu Y^2
  // over independent standard normals. The diagonal form turns each axis
  // into a half-line integral of Q with a *linear* argument, which the
  // even-order Gauss-Hermite rule integrates far faster than the raw
  // whitened tensor product (that one stalls near 1e-4 for beta >= 0.8).
  const double rho = p.rho_uv;
  const double s2 = std::max(0.0, (1.0 - rho) * (1.0 + rho));
  const double a11 = p.a - p.b * rho * rho;
  const double a22 = -p.b * s2;
  const double a12 = -p.b * rho * std::sqrt(s2);
  const double tr = a11 + a22;
  const double disc = std::hypot(a11 - a22, 2.0 * a12);
  const double l1 = std::max(0.0, (tr + disc) / 2.0);
  const double mu = std::max(0.0, (disc - tr) / 2.0);

  // E[g(X^2)] = (1/sqrt(pi)) int_0^inf s^{-1/2} e^{-s} g(2s) ds; the positive
  // half of the order-2q Hermite rule is exactly the alpha = -1/2 Laguerre
  // rule under s = x^2. Each axis is additionally contracted by p or q so
  // that the transition region of Q keeps O(1) width in node space; the
  // exp((1-p)s) reweighting uses the premultiplied weights to stay finite.
  const GaussHermiteTable& gh = gauss_hermite(2 * quad_order);
  const std::size_t m = static_cast<std::size_t>(quad_order);
  const double ps = std::min(1.0, 1.0 / l1);
  const double qs = std::min(1.0, 1.0 / mu);
  const double root_ps = std::sqrt(ps);
  const double root_qs = std::sqrt(qs);

  std::vector<double> arg_pos(m), w_pos(m), arg_neg(m), w_neg(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = gh.nodes[m + i];  // positive half, ascending
    const double s = x * x;
    arg_pos[i] = 2.0 * l1 * ps * s;
    arg_neg[i] = 2.0 * mu * qs * s;
    w_pos[i] = 2.0 * root_ps * gh.weights_exp[m + i] * std::exp(-ps * s);
    w_neg[i] = 2.0 * root_qs * gh.weights_exp[m + i] * std::exp(-qs * s);
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double shift = p.eta_e + arg_pos[i];
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) row += w_neg[j] * q_function(shift - arg_neg[j]);
    sum += w_pos[i] * row;
  }
  const double value = sum / std::numbers::pi;
  if (!std::isfinite(value))
    throw std::runtime_error("matched_phantom_pep: quadrature produced a non-finite value");
  return value;
}

double matched_phantom_pep(const Constellation& c, std::size_t i, std::size_t j,
                           const NoiseParams& n, int quad_order, double tol) {
  const PairGeometry g = pair_geometry(c, i, j, tol);
  if (!g.phantom)
    throw std::invalid_argument(
        "matched pairwise formula needs a phantom pair: the chord must be "
        "orthogonal to the tangents at both endpoints");
  return matched_phantom_pep(g.delta, g.gamma, n, quad_order);
}

double antipodal_pep_euclidean(int k, const NoiseParams& n) {
  const AntipodalGeometry g = antipodal_geometry(k);
  // Antipodal pairs are phantom, so the alignment term drops out.
  return q_function(std::sqrt(1.0 - n.beta) * g.delta_k / (2.0 * n.sigma_c));
}

double antipodal_pep_matched(int k, const NoiseParams& n, int quad_order) {
  const AntipodalGeometry g = antipodal_geometry(k);
  return matched_phantom_pep(g.delta_k, g.gamma_k, n, quad_order);
}

}  // namespace curvecomm

#pragma once

#include <cstddef>

#include "curvecomm/geometry.hpp"

namespace curvecomm {

/// Smallest accepted ambient noise level; the matched metric divides by
/// sigma_c^2, so a zero noise floor is rejected at construction.
inline constexpr double kMinSigmaC = 1e-6;

/// Tensor-product Gauss-Hermite order used when callers do not override it.
/// 64 nodes per axis converges past 1e-10 on desk-scale parameters.
inline constexpr int kDefaultQuadOrder = 64;

/// |gamma| at or above 1 - this threshold routes to the degenerate
/// (parallel-tangent) branch, where the matched and Euclidean tests coincide.
inline constexpr double kDegenerateGammaTol = 1e-12;

/// Artificial-noise fraction and ambient noise level of the channel.
struct NoiseParams {
  double beta;     ///< artificial-noise power fraction, in [0, 1)
  double sigma_c;  ///< ambient noise standard deviation, >= kMinSigmaC

  NoiseParams(double beta, double sigma_c);
};

/// Upper tail of the standard normal, 0.5 erfc(x / sqrt 2). Stable for |x|
/// up to about 38; rejects NaN.
double q_function(double x);

/// Exact pairwise error of the Euclidean nearest-neighbor rule for an
/// arbitrary pair: Q(sqrt(1-beta) delta / (2 sqrt(beta cos^2 alpha + sigma^2))).
double euclidean_pep(double delta, double cos_alpha, const NoiseParams& n);
double euclidean_pep(const PairGeometry& g, const NoiseParams& n);

/// Parameters of the matched phantom-pair error representation
/// E[Q(eta_e + a U^2 - b V^2)] over a correlated standard-normal pair (U, V).
struct MatchedPepParams {
  double eta_e;     ///< sqrt(1-beta) delta / (2 sigma_c)
  double a;         ///< quadratic coefficient on U^2
  double b;         ///< quadratic coefficient on V^2
  double rho_uv;    ///< corr(U, V) = gamma sigma_c / sqrt((1-gamma^2) beta + sigma_c^2)
  bool degenerate;  ///< |gamma| = 1 within kDegenerateGammaTol
};

/// Computes (eta_e, a, b, rho_uv). a is assembled as b plus the closed form
/// of a - b, so a - b is nonnegative by construction with a - b = 0 exactly
/// iff beta = 0 or |gamma| = 1.
MatchedPepParams matched_pep_params(double delta, double gamma, const NoiseParams& n);

/// Matched-decoder pairwise error for a phantom pair (chord orthogonal to
/// both endpoint tangents). The caller is responsible for the phantom
/// property when passing raw scalars; use the Constellation overload for a
/// checked evaluation. Degenerate |gamma| = 1 (and beta = 0) return
/// Q(eta_e) exactly; otherwise the two-dimensional Gaussian expectation is
/// evaluated by a tensor product of half-range rules of the given order per
/// axis, after rotating the quadratic form onto independent normals.
double matched_phantom_pep(double delta, double gamma, const NoiseParams& n,
                           int quad_order = kDefaultQuadOrder);

/// Checked variant: verifies the bilateral tangent-orthogonality of (i, j)
/// and refuses non-phantom pairs, for which no analytic matched expression
/// exists here.
double matched_phantom_pep(const Constellation& c, std::size_t i, std::size_t j,
                           const NoiseParams& n, int quad_order = kDefaultQuadOrder,
                           double tol = kDefaultPhantomTol);

/// Antipodal specializations; independent of the codebook size.
double antipodal_pep_euclidean(int k, const NoiseParams& n);
double antipodal_pep_matched(int k, const NoiseParams& n, int quad_order = kDefaultQuadOrder);

}  // namespace curvecomm

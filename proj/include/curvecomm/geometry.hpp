#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace curvecomm {

/// Default absolute tolerance on |d.t| for declaring a chord orthogonal to an
/// endpoint tangent; double-precision trig roundoff grows with the harmonic
/// order, so this is deliberately loose relative to machine epsilon.
inline constexpr double kDefaultPhantomTol = 1e-9;

/// Squared speed of the order-k curve, (k+1)(2k+1)/6; independent of phase.
double speed_squared(int k);

/// Constant speed v_k of the order-k curve.
double speed(int k);

/// Point on the unit-power harmonic curve in R^{2k}:
/// (1/sqrt(k)) (cos t, sin t, cos 2t, sin 2t, ..., cos kt, sin kt).
std::vector<double> curve_point(double theta, int k);

/// Unit tangent of the curve at theta, i.e. the derivative divided by v_k.
/// Orthogonal to curve_point(theta, k) for every theta.
std::vector<double> curve_tangent_unit(double theta, int k);

/// Geometry of an ordered codeword pair (i, j), with i the transmit endpoint.
struct PairGeometry {
  double delta;      ///< chord length |x_i - x_j|
  double cos_alpha;  ///< |d . t_i| / delta, alignment at the transmit endpoint
  double gamma;      ///< tangent correlation <t_i, t_j>
  bool phantom;      ///< chord orthogonal to both endpoint tangents
};

/// Closed-form geometry of a phase-offset-pi pair, valid for every phase.
struct AntipodalGeometry {
  double delta_k;  ///< chord 2 sqrt(ceil(k/2)/k)
  double gamma_k;  ///< tangent correlation 3 (-1)^k / (2k+1)
  double v_k;      ///< curve speed
  double rho_k;    ///< arclength-to-chord distortion pi v_k / delta_k
};

/// Closed-form chord / alignment for one offset class of a uniform codebook.
struct OffsetGeometry {
  double delta;
  double cos_alpha;
};

/// Finite codebook on the order-k curve: phases with precomputed points and
/// unit tangents. Immutable after construction; concurrent reads are safe.
class Constellation {
 public:
  /// Builds from an explicit phase list. Phases must be strictly increasing,
  /// pairwise distinct and lie in [0, 2pi).
  Constellation(int k, std::vector<double> phases);

  int k() const { return k_; }
  std::size_t size() const { return phases_.size(); }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(k_); }

  double phase(std::size_t i) const { return phases_[i]; }
  std::span<const double> point(std::size_t i) const {
    return {points_.data() + i * dim(), dim()};
  }
  std::span<const double> tangent(std::size_t i) const {
    return {tangents_.data() + i * dim(), dim()};
  }

  /// Single-line text record (k, M, phases) for reproducibility logs.
  std::string to_record() const;

 private:
  int k_;
  std::vector<double> phases_;
  std::vector<double> points_;    // M x 2k, row-major
  std::vector<double> tangents_;  // M x 2k, row-major
};

/// Uniform codebook with phases 2 pi m / M, m = 0..M-1.
Constellation build_uniform_codebook(int k, int M);

/// Chord, transmit-endpoint alignment, tangent correlation and phantom flag
/// for the ordered pair (i, j). cos_alpha uses the tangent at i; swapping the
/// endpoints can change it for non-uniform codebooks.
PairGeometry pair_geometry(const Constellation& c, std::size_t i,
                           std::size_t j, double tol = kDefaultPhantomTol);

/// Closed-form antipodal geometry; agrees with direct vector computation at
/// any phase.
AntipodalGeometry antipodal_geometry(int k);

/// Closed-form distance spectrum entry for offset q of the uniform (k, M)
/// codebook, 1 <= q <= M-1. Independent of the transmit phase by rotational
/// symmetry; symmetric under q <-> M-q.
OffsetGeometry offset_spectrum(int k, int M, int q);

/// Small-offset cubic expansion of the chord, v_k D - v_k (3k^2+3k-1)/120 D^3
/// with D = 2 pi q / M.
double local_spacing_approx(int k, int M, int q);

}  // namespace curvecomm

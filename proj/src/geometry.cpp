#include "curvecomm/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace curvecomm {
namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

void require_order(int k) {
  if (k < 1) throw std::invalid_argument("harmonic order k must be >= 1");
}

double clamp_unit_interval(double x) { return std::clamp(x, 0.0, 1.0); }

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += a[d] * b[d];
  return s;
}

std::string shortest_repr(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

double speed_squared(int k) {
  require_order(k);
  // (k+1)(2k+1)/6; exact in double well past any practical order
  return static_cast<double>(k + 1) * static_cast<double>(2 * k + 1) / 6.0;
}

double speed(int k) { return std::sqrt(speed_squared(k)); }

// Harmonic arguments m*theta are formed in long double before the trig calls.
// Point/tangent orthogonality and the antipodal identities then hold at the
// 1e-13 level even at k = 64, instead of degrading with k*theta.
std::vector<double> curve_point(double theta, int k) {
  require_order(k);
  std::vector<double> x(2 * static_cast<std::size_t>(k));
  const long double scale = 1.0L / sqrtl(static_cast<long double>(k));
  for (int m = 1; m <= k; ++m) {
    const long double ang = static_cast<long double>(m) * static_cast<long double>(theta);
    x[2 * static_cast<std::size_t>(m) - 2] = static_cast<double>(cosl(ang) * scale);
    x[2 * static_cast<std::size_t>(m) - 1] = static_cast<double>(sinl(ang) * scale);
  }
  return x;
}

std::vector<double> curve_tangent_unit(double theta, int k) {
  require_order(k);
  std::vector<double> t(2 * static_cast<std::size_t>(k));
  const long double norm =
      1.0L / (sqrtl(static_cast<long double>(k)) *
              sqrtl(static_cast<long double>(k + 1) * static_cast<long double>(2 * k + 1) / 6.0L));
  for (int m = 1; m <= k; ++m) {
    const long double ang = static_cast<long double>(m) * static_cast<long double>(theta);
    const long double mm = static_cast<long double>(m);
    t[2 * static_cast<std::size_t>(m) - 2] = static_cast<double>(-mm * sinl(ang) * norm);
    t[2 * static_cast<std::size_t>(m) - 1] = static_cast<double>(mm * cosl(ang) * norm);
  }
  return t;
}

Constellation::Constellation(int k, std::vector<double> phases) : k_(k), phases_(std::move(phases)) {
  require_order(k_);
  if (phases_.empty()) throw std::invalid_argument("constellation needs at least one phase");
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (!(phases_[i] >= 0.0 && phases_[i] < two_pi))
      throw std::invalid_argument("phases must lie in [0, 2pi)");
    if (i > 0 && !(phases_[i] > phases_[i - 1]))
      throw std::invalid_argument("phases must be strictly increasing");
  }
  points_.reserve(phases_.size() * dim());
  tangents_.reserve(phases_.size() * dim());
  for (const double th : phases_) {
    const auto x = curve_point(th, k_);
    const auto t = curve_tangent_unit(th, k_);
    points_.insert(points_.end(), x.begin(), x.end());
    tangents_.insert(tangents_.end(), t.begin(), t.end());
  }
}

std::string Constellation::to_record() const {
  std::string rec = "constellation k=" + std::to_string(k_) + " M=" + std::to_string(size()) + " phases=";
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (i > 0) rec += ',';
    rec += shortest_repr(phases_[i]);
  }
  return rec;
}

Constellation build_uniform_codebook(int k, int M) {
  require_order(k);
  if (M < 2) throw std::invalid_argument("uniform codebook needs M >= 2");
  std::vector<double> phases(static_cast<std::size_t>(M));
  for (int m = 0; m < M; ++m)
    phases[static_cast<std::size_t>(m)] =
        static_cast<double>(2.0L * kPiL * static_cast<long double>(m) / static_cast<long double>(M));
  return Constellation(k, std::move(phases));
}

PairGeometry pair_geometry(const Constellation& c, std::size_t i, std::size_t j, double tol) {
  if (i == j) throw std::invalid_argument("pair_geometry needs two distinct indices");
  if (i >= c.size() || j >= c.size()) throw std::invalid_argument("pair index out of range");
  if (!(tol > 0.0)) throw std::invalid_argument("phantom tolerance must be positive");

  const auto xi = c.point(i);
  const auto xj = c.point(j);
  const auto ti = c.tangent(i);
  const auto tj = c.tangent(j);

  std::vector<double> d(c.dim());
  for (std::size_t m = 0; m < d.size(); ++m) d[m] = xi[m] - xj[m];

  const double delta = std::sqrt(dot(d, d));
  const double proj_i = dot(d, ti);
  const double proj_j = dot(d, tj);

  PairGeometry g;
  g.delta = delta;
  g.cos_alpha = clamp_unit_interval(std::abs(proj_i) / delta);
  g.gamma = std::clamp(dot(ti, tj), -1.0, 1.0);
  g.phantom = std::abs(proj_i) <= tol && std::abs(proj_j) <= tol;
  return g;
}

AntipodalGeometry antipodal_geometry(int k) {
  require_order(k);
  AntipodalGeometry g;
  const double half_up = static_cast<double>((k + 1) / 2);  // ceil(k/2)
  g.delta_k = 2.0 * std::sqrt(half_up / static_cast<double>(k));
  g.gamma_k = (k % 2 == 0 ? 3.0 : -3.0) / static_cast<double>(2 * k + 1);
  g.v_k = speed(k);
  g.rho_k = std::numbers::pi * g.v_k / g.delta_k;
  return g;
}

OffsetGeometry offset_spectrum(int k, int M, int q) {
  require_order(k);
  if (M < 2) throw std::invalid_argument("offset spectrum needs M >= 2");
  if (q < 1 || q > M - 1) throw std::invalid_argument("offset q must satisfy 1 <= q <= M-1");

  // Finite trig-sum identities, evaluated in long double: the alignment
  // numerator cancels to O(Delta^3) at small offsets and would otherwise lose
  // digits exactly where the spectrum is most useful.
  const long double kl = static_cast<long double>(k);
  const long double delta_q = 2.0L * kPiL * static_cast<long double>(q) / static_cast<long double>(M);
  const long double h = delta_q / 2.0L;
  const long double sin_h = sinl(h);

  const long double chord2 = 2.0L - (2.0L / kl) * sinl(kl * h) * cosl((kl + 1.0L) * h) / sin_h;
  const long double chord = sqrtl(chord2 > 0.0L ? chord2 : 0.0L);

  const long double vk = sqrtl((kl + 1.0L) * (2.0L * kl + 1.0L) / 6.0L);
  const long double numer = fabsl((kl + 1.0L) * sinl(kl * delta_q) - kl * sinl((kl + 1.0L) * delta_q));
  const long double align = numer / (4.0L * kl * vk * chord * sin_h * sin_h);

  OffsetGeometry g;
  g.delta = static_cast<double>(chord);
  g.cos_alpha = clamp_unit_interval(static_cast<double>(align));
  return g;
}

double local_spacing_approx(int k, int M, int q) {
  require_order(k);
  if (M < 2) throw std::invalid_argument("local spacing needs M >= 2");
  if (q < 1 || q > M - 1) throw std::invalid_argument("offset q must satisfy 1 <= q <= M-1");
  const double delta_q = 2.0 * std::numbers::pi * q / M;
  const double vk = speed(k);
  const double kk = static_cast<double>(k);
  return vk * delta_q - vk * (3.0 * kk * kk + 3.0 * kk - 1.0) / 120.0 * delta_q * delta_q * delta_q;
}

}  // namespace curvecomm

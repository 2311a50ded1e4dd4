#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "curvecomm/geometry.hpp"
#include "support/oracles.hpp"

using namespace curvecomm;
using doctest::Approx;

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return dot(std::span<const double>(a), std::span<const double>(b));
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

TEST_CASE("curve_point at the phase origin and at pi") {
  const auto p = curve_point(0.0, 2);
  const double s = 1.0 / std::sqrt(2.0);
  REQUIRE(p.size() == 4);
  CHECK(p[0] == Approx(s).epsilon(1e-15));
  CHECK(p[1] == 0.0);
  CHECK(p[2] == Approx(s).epsilon(1e-15));
  CHECK(std::abs(p[3]) < 1e-15);

  const auto q = curve_point(std::numbers::pi, 1);
  CHECK(q[0] == Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(q[1]) < 1e-15);
}

TEST_CASE("curve_tangent_unit at the origin for k=1") {
  const auto t = curve_tangent_unit(0.0, 1);
  CHECK(std::abs(t[0]) < 1e-15);
  CHECK(t[1] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("speed_squared closed form vs direct sums") {
  CHECK(speed_squared(2) == 2.5);
  CHECK(speed_squared(20) == 143.5);
  for (int k = 1; k <= 64; ++k)
    CHECK(speed_squared(k) == Approx(oracles::speed_squared_direct(k)).epsilon(1e-14));
  CHECK_THROWS_AS(speed_squared(0), std::invalid_argument);
}

TEST_CASE("point and tangent stay unit-norm and orthogonal") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (const int k : {1, 2, 3, 5, 8, 13, 21, 34, 55, 64}) {
    for (int rep = 0; rep < 256; ++rep) {
      const double th = phase(gen);
      const auto x = curve_point(th, k);
      const auto t = curve_tangent_unit(th, k);
      CHECK(std::abs(norm(x) - 1.0) <= 1e-12);
      CHECK(std::abs(norm(t) - 1.0) <= 1e-12);
      CHECK(std::abs(dot(x, t)) <= 1e-12);
    }
  }
}

TEST_CASE("antipodal difference is orthogonal to both tangents") {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> phase(0.0, std::numbers::pi);
  for (int k = 1; k <= 64; ++k) {
    const double vk = speed(k);
    for (int rep = 0; rep < 8; ++rep) {
      const double th = phase(gen);
      const auto x0 = curve_point(th, k);
      const auto x1 = curve_point(th + std::numbers::pi, k);
      std::vector<double> d(x0.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = x0[i] - x1[i];
      // tolerance is stated against the raw derivative x' = v_k * t
      CHECK(std::abs(vk * dot(d, curve_tangent_unit(th, k))) <= 1e-12);
      CHECK(std::abs(vk * dot(d, curve_tangent_unit(th + std::numbers::pi, k))) <= 1e-12);
    }
  }
}

TEST_CASE("uniform codebook phases and invariants") {
  const Constellation c = build_uniform_codebook(1, 4);
  REQUIRE(c.size() == 4);
  CHECK(c.phase(0) == 0.0);
  CHECK(c.phase(1) == Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(c.phase(2) == Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(c.phase(3) == Approx(3 * std::numbers::pi / 2).epsilon(1e-15));

  const Constellation big = build_uniform_codebook(20, 12);
  REQUIRE(big.size() == 12);
  REQUIRE(big.dim() == 40);
  for (std::size_t i = 0; i < big.size(); ++i) {
    CHECK(std::abs(dot(big.point(i), big.point(i)) - 1.0) <= 2e-12);
    CHECK(std::abs(dot(big.tangent(i), big.tangent(i)) - 1.0) <= 2e-12);
    CHECK(std::abs(dot(big.point(i), big.tangent(i))) <= 1e-12);
  }

  CHECK_THROWS_AS(build_uniform_codebook(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_uniform_codebook(0, 4), std::invalid_argument);
}

TEST_CASE("explicit phase lists are validated") {
  CHECK_NOTHROW(Constellation(2, {0.1, 0.5, 2.0}));
  CHECK_THROWS_AS(Constellation(2, {0.5, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(Constellation(2, {0.1, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(Constellation(2, {-0.1, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Constellation(2, {0.1, 2.0 * std::numbers::pi}), std::invalid_argument);
  CHECK_THROWS_AS(Constellation(2, std::vector<double>{}), std::invalid_argument);

  const Constellation c(3, {0.0, 1.0, 4.0});
  const std::string rec = c.to_record();
  CHECK(rec.find("k=3") != std::string::npos);
  CHECK(rec.find("M=3") != std::string::npos);
  CHECK(rec.find("phases=0,1,4") != std::string::npos);
}

TEST_CASE("pair geometry on antipodal pairs") {
  const Constellation c1 = build_uniform_codebook(1, 2);
  const PairGeometry g1 = pair_geometry(c1, 0, 1);
  CHECK(g1.delta == Approx(2.0).epsilon(1e-14));
  CHECK(g1.gamma == Approx(-1.0).epsilon(1e-14));
  CHECK(g1.phantom);

  const Constellation c2 = build_uniform_codebook(2, 4);
  const PairGeometry g2 = pair_geometry(c2, 0, 2);
  CHECK(g2.delta == Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(g2.gamma == Approx(0.6).epsilon(1e-14));
  CHECK(g2.phantom);

  // offset M/2 in any even uniform codebook is bilaterally orthogonal
  for (const auto& [k, M] : {std::pair{3, 6}, {5, 10}, {20, 12}}) {
    const Constellation c = build_uniform_codebook(k, M);
    const PairGeometry g = pair_geometry(c, 1, 1 + static_cast<std::size_t>(M) / 2);
    CHECK(g.cos_alpha <= 1e-12);
    CHECK(g.phantom);
  }

  CHECK_THROWS_AS(pair_geometry(c1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(pair_geometry(c1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(pair_geometry(c1, 0, 1, 0.0), std::invalid_argument);
}

TEST_CASE("rotational symmetry: offset geometry does not depend on the base index") {
  const Constellation c = build_uniform_codebook(3, 12);
  const PairGeometry a = pair_geometry(c, 0, 3);
  const PairGeometry b = pair_geometry(c, 5, 8);
  CHECK(std::abs(a.delta - b.delta) <= 1e-12);
  CHECK(std::abs(a.cos_alpha - b.cos_alpha) <= 1e-12);
  CHECK(std::abs(a.gamma - b.gamma) <= 1e-12);
}

TEST_CASE("antipodal closed forms") {
  const AntipodalGeometry g1 = antipodal_geometry(1);
  CHECK(g1.delta_k == Approx(2.0).epsilon(1e-15));
  CHECK(g1.gamma_k == Approx(-1.0).epsilon(1e-15));
  CHECK(g1.rho_k == Approx(std::numbers::pi / 2).epsilon(1e-15));

  const AntipodalGeometry g20 = antipodal_geometry(20);
  CHECK(g20.delta_k == Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(g20.gamma_k == Approx(3.0 / 41.0).epsilon(1e-15));

  // rho_k cross-check against the explicit closed form
  for (int k = 1; k <= 64; ++k) {
    const AntipodalGeometry g = antipodal_geometry(k);
    const double half_up = std::ceil(k / 2.0);
    const double rho_ref =
        std::numbers::pi / 2.0 * std::sqrt(k * (k + 1.0) * (2.0 * k + 1.0) / (6.0 * half_up));
    CHECK(std::abs(g.rho_k - rho_ref) / rho_ref <= 1e-12);
    CHECK(g.delta_k > std::numbers::sqrt2 - 1e-12);
    CHECK(g.delta_k <= 2.0);
    if (k > 1)
      CHECK(std::abs(g.gamma_k) < std::abs(antipodal_geometry(k - 1).gamma_k));
  }
}

TEST_CASE("antipodal closed forms agree with direct vectors") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> phase(0.0, std::numbers::pi);
  for (int k = 1; k <= 32; ++k) {
    const AntipodalGeometry g = antipodal_geometry(k);
    const double th = phase(gen);
    const auto x0 = curve_point(th, k);
    const auto x1 = curve_point(th + std::numbers::pi, k);
    std::vector<double> d(x0.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = x0[i] - x1[i];
    CHECK(std::abs(norm(d) - g.delta_k) <= 1e-12);
    const auto t0 = curve_tangent_unit(th, k);
    const auto t1 = curve_tangent_unit(th + std::numbers::pi, k);
    CHECK(std::abs(dot(t0, t1) - g.gamma_k) <= 1e-12);
  }
}

TEST_CASE("alternating square-sum identity for the tangent correlation") {
  for (int k = 1; k <= 64; ++k) {
    const double lhs = std::abs(oracles::alternating_square_sum(k)) / (k * speed_squared(k));
    CHECK(std::abs(lhs - 3.0 / (2.0 * k + 1.0)) <= 1e-12);
  }
}

TEST_CASE("offset spectrum matches the direct sums") {
  for (int k = 1; k <= 12; ++k) {
    for (int M = 2; M <= 32; ++M) {
      for (int q = 1; q <= M - 1; ++q) {
        const OffsetGeometry og = offset_spectrum(k, M, q);
        CHECK(std::abs(og.delta - oracles::delta_direct(k, M, q)) <= 1e-10);
        CHECK(std::abs(og.cos_alpha - oracles::cos_alpha_direct(k, M, q)) <= 1e-10);
      }
    }
  }
  // the reference constellation's nearest-neighbor offset
  const OffsetGeometry og = offset_spectrum(20, 12, 1);
  CHECK(std::abs(og.delta - oracles::delta_direct(20, 12, 1)) <= 1e-10);
  CHECK(std::abs(og.cos_alpha - oracles::cos_alpha_direct(20, 12, 1)) <= 1e-10);
}

TEST_CASE("offset spectrum edge cases and symmetry") {
  // q = M/2 is the antipodal pair
  for (const auto& [k, M] : {std::pair{20, 12}, {3, 6}, {7, 16}}) {
    const OffsetGeometry og = offset_spectrum(k, M, M / 2);
    const AntipodalGeometry ag = antipodal_geometry(k);
    CHECK(std::abs(og.delta - ag.delta_k) <= 1e-12);
    CHECK(og.cos_alpha <= 1e-12);
  }

  // vector-level oracle at (k=3, M=6, q=3)
  const Constellation c = build_uniform_codebook(3, 6);
  const PairGeometry pg = pair_geometry(c, 0, 3);
  const OffsetGeometry og = offset_spectrum(3, 6, 3);
  CHECK(std::abs(og.delta - pg.delta) <= 1e-12);
  CHECK(std::abs(og.cos_alpha - pg.cos_alpha) <= 1e-12);

  // q <-> M-q relabeling symmetry
  for (int q = 1; q <= 11; ++q) {
    const OffsetGeometry a = offset_spectrum(20, 12, q);
    const OffsetGeometry b = offset_spectrum(20, 12, 12 - q);
    CHECK(std::abs(a.delta - b.delta) <= 1e-12);
    CHECK(std::abs(a.cos_alpha - b.cos_alpha) <= 1e-12);
  }

  CHECK_THROWS_AS(offset_spectrum(3, 12, 0), std::invalid_argument);
  CHECK_THROWS_AS(offset_spectrum(3, 12, 12), std::invalid_argument);
}

TEST_CASE("local spacing expansion") {
  // cubic expansion vs the closed form at a dense codebook
  const double exact = offset_spectrum(5, 512, 1).delta;
  const double approx = local_spacing_approx(5, 512, 1);
  CHECK(std::abs(approx - exact) / exact < 1e-3);

  // leading order: approx / Delta_q -> v_k
  const double delta_q = 2.0 * std::numbers::pi / (1 << 20);
  CHECK(local_spacing_approx(7, 1 << 20, 1) / delta_q == Approx(speed(7)).epsilon(1e-9));

  // delta_{k,M}(1) ~ (2 pi / sqrt 3) k / M at k=20, M=240
  const double asym = 2.0 * std::numbers::pi / std::sqrt(3.0) * 20.0 / 240.0;
  CHECK(std::abs(offset_spectrum(20, 240, 1).delta - asym) / asym < 0.05);
  CHECK(std::abs(local_spacing_approx(20, 240, 1) - asym) / asym < 0.05);

  CHECK_THROWS_AS(local_spacing_approx(5, 8, 8), std::invalid_argument);
}

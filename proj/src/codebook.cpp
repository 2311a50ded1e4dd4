#include "curvecomm/codebook.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecomm {
namespace {

void require_even_codebook(int k, int M) {
  if (k < 1) throw std::invalid_argument("harmonic order k must be >= 1");
  if (M < 2) throw std::invalid_argument("codebook size M must be >= 2");
  if (M % 2 != 0)
    throw std::invalid_argument(
        "SER bounds need an even M: each symbol must have a unique antipodal partner");
}

}  // namespace

SerBounds euclidean_ser_bounds(int k, int M, const NoiseParams& n, int quad_order) {
  require_even_codebook(k, M);

  SerBounds out;
  out.per_offset.reserve(static_cast<std::size_t>(M / 2));
  for (int q = 1; q <= M / 2; ++q) {
    double p;
    if (q == M / 2) {
      p = antipodal_pep_euclidean(k, n);
    } else {
      const OffsetGeometry og = offset_spectrum(k, M, q);
      p = euclidean_pep(og.delta, og.cos_alpha, n);
    }
    out.per_offset.emplace_back(q, p);
  }

  out.lower = 0.0;
  double paired_sum = 0.0;
  for (const auto& [q, p] : out.per_offset) {
    out.lower = std::max(out.lower, p);
    if (q < M / 2) paired_sum += p;
  }
  out.upper_raw = 2.0 * paired_sum + out.per_offset.back().second;
  out.upper_clamped = std::min(out.upper_raw, 1.0);
  out.matched_lower = matched_ser_lower_bound(k, M, n, quad_order);
  return out;
}

double matched_ser_lower_bound(int k, int M, const NoiseParams& n, int quad_order) {
  require_even_codebook(k, M);
  return antipodal_pep_matched(k, n, quad_order);
}

}  // namespace curvecomm

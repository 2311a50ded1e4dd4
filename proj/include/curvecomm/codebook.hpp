#pragma once

#include <utility>
#include <vector>

#include "curvecomm/pairwise.hpp"

namespace curvecomm {

/// Symbol-error-rate bounds for a uniform even codebook under the Euclidean
/// decoder, plus the matched antipodal lower bound. The union-type upper
/// bound can exceed 1 at large beta, so it is carried both raw and clamped.
struct SerBounds {
  double lower;          ///< max over offset classes of the pairwise error
  double upper_raw;      ///< 2 sum_{q<M/2} P(q) + P(M/2); may exceed 1
  double upper_clamped;  ///< min(upper_raw, 1)
  double matched_lower;  ///< matched antipodal pairwise error
  std::vector<std::pair<int, double>> per_offset;  ///< (q, P(q)), q = 1..M/2
};

/// Assembles the per-offset Euclidean pairwise errors of the uniform (k, M)
/// codebook into lower/upper SER bounds. Requires even M so that each symbol
/// has a unique antipodal partner; the q = M/2 term is the antipodal error.
/// Equiprobable symbols are assumed. quad_order only affects matched_lower.
SerBounds euclidean_ser_bounds(int k, int M, const NoiseParams& n,
                               int quad_order = kDefaultQuadOrder);

/// Matched-decoder SER lower bound: the antipodal pairwise error, covering
/// one offset class out of the M-1 comparisons seen by each symbol.
double matched_ser_lower_bound(int k, int M, const NoiseParams& n,
                               int quad_order = kDefaultQuadOrder);

}  // namespace curvecomm

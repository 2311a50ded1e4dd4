#pragma once

#include <vector>

namespace curvecomm {

/// Nodes and weights for the physicists' Gauss-Hermite rule of a given order
/// (weight function exp(-x^2) on the real line), nodes ascending.
/// sum(weights) = sqrt(pi).
///
/// weights_exp holds w_i * exp(x_i^2), computed without overflow; use these
/// when the exp(-x^2) factor is carried explicitly in a transformed
/// integrand. The raw weights underflow at very high orders, the
/// premultiplied ones never do.
struct GaussHermiteTable {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> weights_exp;
};

/// Returns the cached rule of the requested order, computing it on first use.
/// Tables are immutable once built; lookup is thread-safe.
const GaussHermiteTable& gauss_hermite(int order);

}  // namespace curvecomm

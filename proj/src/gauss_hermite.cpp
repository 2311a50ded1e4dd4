#include "curvecomm/gauss_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace curvecomm {
namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// orthonormal Hermite recurrence (zero diagonal, off-diagonal sqrt(j/2));
// weights are sqrt(pi) times the squared first eigenvector components.
// Implicit-shift QL on the tridiagonal matrix, tracking only the first row
// of the accumulated rotations. Long double keeps the premultiplied weights
// w * exp(x^2) finite at any practical order.
void tridiagonal_ql(std::vector<long double>& d, std::vector<long double>& e,
                    std::vector<long double>& first_row) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.push_back(0.0L);  // e[n-1] sentinel

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const long double dd = fabsl(d[m]) + fabsl(d[m + 1]);
        if (fabsl(e[m]) <= 1e-19L * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("Gauss-Hermite eigen iteration failed");
        long double g = (d[l + 1] - d[l]) / (2.0L * e[l]);
        long double r = hypotl(g, 1.0L);
        g = d[m] - d[l] + e[l] / (g + copysignl(r, g));
        long double s = 1.0L, c = 1.0L, p = 0.0L;
        bool underflow = false;
        for (std::size_t ip1 = m; ip1 > l; --ip1) {
          const std::size_t i = ip1 - 1;
          long double f = s * e[i];
          const long double b = c * e[i];
          r = hypotl(f, g);
          e[i + 1] = r;
          if (r == 0.0L) {
            d[i + 1] -= p;
            e[m] = 0.0L;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0L * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = first_row[i + 1];
          first_row[i + 1] = s * first_row[i] + c * f;
          first_row[i] = c * first_row[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0L;
      }
    } while (m != l);
  }
}

GaussHermiteTable compute_table(int n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<long double> diag(nn, 0.0L);
  std::vector<long double> off(nn > 1 ? nn - 1 : 0);
  for (std::size_t j = 1; j < nn; ++j)
    off[j - 1] = sqrtl(static_cast<long double>(j) / 2.0L);
  std::vector<long double> first(nn, 0.0L);
  first[0] = 1.0L;

  tridiagonal_ql(diag, off, first);

  std::vector<std::size_t> order(nn);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  constexpr long double kSqrtPi = 1.7724538509055160272981674833411451828L;
  std::vector<long double> x(nn), w(nn), we(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    const std::size_t k = order[i];
    x[i] = diag[k];
    w[i] = kSqrtPi * first[k] * first[k];
    const long double scaled = first[k] * expl(x[i] * x[i] / 2.0L);
    we[i] = kSqrtPi * scaled * scaled;
  }
  // enforce the exact +/- symmetry of the rule
  for (std::size_t i = 0; i < nn / 2; ++i) {
    const std::size_t j = nn - 1 - i;
    const long double node = (x[j] - x[i]) / 2.0L;
    x[i] = -node;
    x[j] = node;
    const long double wm = (w[i] + w[j]) / 2.0L;
    w[i] = w[j] = wm;
    const long double wem = (we[i] + we[j]) / 2.0L;
    we[i] = we[j] = wem;
  }
  if (nn % 2 == 1) x[nn / 2] = 0.0L;

  GaussHermiteTable t;
  t.nodes.resize(nn);
  t.weights.resize(nn);
  t.weights_exp.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    t.nodes[i] = static_cast<double>(x[i]);
    t.weights[i] = static_cast<double>(w[i]);
    t.weights_exp[i] = static_cast<double>(we[i]);
  }
  return t;
}

}  // namespace

const GaussHermiteTable& gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const GaussHermiteTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::make_unique<const GaussHermiteTable>(compute_table(order))).first;
  }
  return *it->second;
}

}  // namespace curvecomm

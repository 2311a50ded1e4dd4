#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "curvecomm/montecarlo.hpp"

namespace curvecomm {

/// Master seed used when neither a flag nor CURVECOMM_SEED supplies one.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Quantities a sweep can emit per grid point. The pep/ser kinds are Monte
/// Carlo estimates; the bound kinds are analytic and carry trials = 0 with a
/// degenerate confidence interval.
enum class QuantityKind {
  PepAntiMatched,
  PepAntiEuclidean,
  SerMatched,
  SerEuclidean,
  BoundLower,
  BoundUpper,
  BoundMatchedLower,
};

/// All kinds in canonical emission order.
extern const std::vector<QuantityKind> kAllQuantityKinds;

std::string_view to_string(QuantityKind kind);
std::optional<QuantityKind> parse_quantity_kind(std::string_view name);

struct SweepConfig {
  int k = 20;
  int m = 12;
  std::vector<double> beta_grid;
  std::vector<double> sigma_c_grid;
  std::vector<QuantityKind> quantities;  // deduplicated, canonical order
  std::uint64_t trials_pairwise = 50000;
  std::uint64_t trials_ser = 20000;
  int quad_order = kDefaultQuadOrder;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

/// The reference validation sweep: (k, M) = (20, 12), sigma_c = 0.3, beta on
/// {0, 0.1, ..., 0.9}, all seven quantities, 5e4 pairwise / 2e4 SER trials.
SweepConfig figure1_preset();

struct SweepRow {
  int k;
  int m;
  double beta;
  double sigma_c;
  QuantityKind kind;
  double value;
  double ci_low;
  double ci_high;
  std::uint64_t trials;
};

/// Evaluates all requested quantities on the (sigma_c x beta) grid, one row
/// per (grid point, kind), rows in grid order with kinds in canonical order.
/// Deterministic for a fixed seed, independent of the worker count. Matched
/// and Euclidean estimates at the same point share observation streams.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kSweepCsvHeader =
    "k,M,beta,sigma_c,kind,value,ci_low,ci_high,trials";

/// Decimal, 12 significant digits, locale-independent.
std::string csv_number(double v);

/// One schema row; kind is free-form so one-off CLI commands can reuse it.
std::string csv_row(int k, int m, double beta, double sigma_c, std::string_view kind,
                    double value, double ci_low, double ci_high, std::uint64_t trials);

/// Header plus all rows, newline-terminated.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

}  // namespace curvecomm

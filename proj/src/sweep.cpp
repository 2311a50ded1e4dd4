#include "curvecomm/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <system_error>

#include "curvecomm/codebook.hpp"

namespace curvecomm {

const std::vector<QuantityKind> kAllQuantityKinds = {
    QuantityKind::PepAntiMatched,  QuantityKind::PepAntiEuclidean,
    QuantityKind::SerMatched,      QuantityKind::SerEuclidean,
    QuantityKind::BoundLower,      QuantityKind::BoundUpper,
    QuantityKind::BoundMatchedLower,
};

std::string_view to_string(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::PepAntiMatched: return "pep-anti-matched";
    case QuantityKind::PepAntiEuclidean: return "pep-anti-euclidean";
    case QuantityKind::SerMatched: return "ser-matched";
    case QuantityKind::SerEuclidean: return "ser-euclidean";
    case QuantityKind::BoundLower: return "bound-lower";
    case QuantityKind::BoundUpper: return "bound-upper";
    case QuantityKind::BoundMatchedLower: return "bound-matched-lower";
  }
  return "unknown";
}

std::optional<QuantityKind> parse_quantity_kind(std::string_view name) {
  for (const QuantityKind kind : kAllQuantityKinds)
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

SweepConfig figure1_preset() {
  SweepConfig cfg;
  cfg.k = 20;
  cfg.m = 12;
  cfg.beta_grid.resize(10);
  for (int i = 0; i < 10; ++i) cfg.beta_grid[static_cast<std::size_t>(i)] = i / 10.0;
  cfg.sigma_c_grid = {0.3};
  cfg.quantities = kAllQuantityKinds;
  cfg.trials_pairwise = 50000;
  cfg.trials_ser = 20000;
  return cfg;
}

namespace {

bool requested(const SweepConfig& cfg, QuantityKind kind) {
  return std::find(cfg.quantities.begin(), cfg.quantities.end(), kind) != cfg.quantities.end();
}

SweepRow analytic_row(const SweepConfig& cfg, double beta, double sigma, QuantityKind kind,
                      double value) {
  return {cfg.k, cfg.m, beta, sigma, kind, value, value, value, 0};
}

SweepRow mc_row(const SweepConfig& cfg, double beta, double sigma, QuantityKind kind,
                const PepEstimate& e) {
  return {cfg.k, cfg.m, beta, sigma, kind, e.value, e.ci_low, e.ci_high, e.trials};
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("sweep config: k must be >= 1");
  if (cfg.m < 2) throw std::invalid_argument("sweep config: M must be >= 2");
  if (cfg.quad_order < 8) throw std::invalid_argument("sweep config: quad order must be >= 8");
  if (!cfg.quantities.empty() && cfg.m % 2 != 0)
    throw std::invalid_argument(
        "sweep config: the antipodal and SER quantities need an even M");

  const bool any_pairwise = requested(cfg, QuantityKind::PepAntiMatched) ||
                            requested(cfg, QuantityKind::PepAntiEuclidean);
  const bool any_ser = requested(cfg, QuantityKind::SerMatched) ||
                       requested(cfg, QuantityKind::SerEuclidean);
  const bool any_bound = requested(cfg, QuantityKind::BoundLower) ||
                         requested(cfg, QuantityKind::BoundUpper) ||
                         requested(cfg, QuantityKind::BoundMatchedLower);
  if (any_pairwise && cfg.trials_pairwise == 0)
    throw std::invalid_argument("sweep config: pairwise trial count must be >= 1");
  if (any_ser && cfg.trials_ser == 0)
    throw std::invalid_argument("sweep config: SER trial count must be >= 1");

  std::vector<SweepRow> rows;
  if (cfg.quantities.empty() || cfg.beta_grid.empty() || cfg.sigma_c_grid.empty()) return rows;

  const Constellation cb = build_uniform_codebook(cfg.k, cfg.m);
  const std::size_t anti = static_cast<std::size_t>(cfg.m) / 2;

  std::uint64_t point = 0;
  for (const double sigma : cfg.sigma_c_grid) {
    for (const double beta : cfg.beta_grid) {
      const NoiseParams n(beta, sigma);
      // Decoder kinds at one grid point share a seed, hence observation
      // streams: common random numbers for the matched/Euclidean comparison.
      const std::uint64_t pairwise_seed = derive_seed(cfg.seed, point, 1);
      const std::uint64_t ser_seed = derive_seed(cfg.seed, point, 2);

      SerBounds bounds{};
      if (any_bound) bounds = euclidean_ser_bounds(cfg.k, cfg.m, n, cfg.quad_order);

      for (const QuantityKind kind : kAllQuantityKinds) {
        if (!requested(cfg, kind)) continue;
        switch (kind) {
          case QuantityKind::PepAntiMatched:
            rows.push_back(mc_row(cfg, beta, sigma, kind,
                                  estimate_pairwise_pep(cb, 0, anti, DecoderKind::Matched, n,
                                                        cfg.trials_pairwise, pairwise_seed,
                                                        cfg.workers)));
            break;
          case QuantityKind::PepAntiEuclidean:
            rows.push_back(mc_row(cfg, beta, sigma, kind,
                                  estimate_pairwise_pep(cb, 0, anti, DecoderKind::Euclidean, n,
                                                        cfg.trials_pairwise, pairwise_seed,
                                                        cfg.workers)));
            break;
          case QuantityKind::SerMatched:
            rows.push_back(mc_row(cfg, beta, sigma, kind,
                                  estimate_ser(cb, DecoderKind::Matched, n, cfg.trials_ser,
                                               ser_seed, cfg.workers)));
            break;
          case QuantityKind::SerEuclidean:
            rows.push_back(mc_row(cfg, beta, sigma, kind,
                                  estimate_ser(cb, DecoderKind::Euclidean, n, cfg.trials_ser,
                                               ser_seed, cfg.workers)));
            break;
          case QuantityKind::BoundLower:
            rows.push_back(analytic_row(cfg, beta, sigma, kind, bounds.lower));
            break;
          case QuantityKind::BoundUpper:
            rows.push_back(analytic_row(cfg, beta, sigma, kind, bounds.upper_raw));
            break;
          case QuantityKind::BoundMatchedLower:
            rows.push_back(analytic_row(cfg, beta, sigma, kind, bounds.matched_lower));
            break;
        }
      }
      ++point;
    }
  }
  return rows;
}

std::string csv_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (res.ec != std::errc()) throw std::runtime_error("csv_number: formatting failed");
  return std::string(buf, res.ptr);
}

std::string csv_row(int k, int m, double beta, double sigma_c, std::string_view kind,
                    double value, double ci_low, double ci_high, std::uint64_t trials) {
  std::string line;
  line.reserve(96);
  line += std::to_string(k);
  line += ',';
  line += std::to_string(m);
  line += ',';
  line += csv_number(beta);
  line += ',';
  line += csv_number(sigma_c);
  line += ',';
  line += kind;
  line += ',';
  line += csv_number(value);
  line += ',';
  line += csv_number(ci_low);
  line += ',';
  line += csv_number(ci_high);
  line += ',';
  line += std::to_string(trials);
  line += '\n';
  return line;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows)
    os << csv_row(r.k, r.m, r.beta, r.sigma_c, to_string(r.kind), r.value, r.ci_low, r.ci_high,
                  r.trials);
}

}  // namespace curvecomm

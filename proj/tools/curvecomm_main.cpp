// curvecomm: matched vs Euclidean-mismatched decoding on Fourier-curve
// constellations with tangent-space artificial noise. Thin front end over the
// library; every number printed here comes from a single library call.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvecomm/codebook.hpp"
#include "curvecomm/sweep.hpp"

namespace {

using namespace curvecomm;

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "not an unsigned integer: " + text);
  }
  if (pos != text.size()) throw CLI::ValidationError(what, "not an unsigned integer: " + text);
  return static_cast<std::uint64_t>(v);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CURVECOMM_SEED")) return parse_u64(env, "CURVECOMM_SEED");
  return kDefaultSeed;
}

DecoderKind parse_decoder(const std::string& name) {
  if (name == "matched") return DecoderKind::Matched;
  if (name == "euclidean") return DecoderKind::Euclidean;
  throw CLI::ValidationError("--decoder", "must be 'matched' or 'euclidean'");
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "not a number: " + item);
    }
    if (pos != item.size()) throw CLI::ValidationError(what, "not a number: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

std::vector<QuantityKind> parse_quantities(const std::string& text) {
  if (text == "all") return kAllQuantityKinds;
  if (text == "none") return {};
  std::vector<QuantityKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto kind = parse_quantity_kind(item);
    if (!kind) {
      std::string valid;
      for (const QuantityKind q : kAllQuantityKinds) {
        if (!valid.empty()) valid += ", ";
        valid += to_string(q);
      }
      throw CLI::ValidationError("quantities", "unknown quantity '" + item + "' (expected: all, none, " + valid + ")");
    }
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output path: " + path);
  return os;
}

// ---------------------------------------------------------------------------
// sweep config file: `key = value` lines, '#' comments, keys matching the
// long flags. Flags given on the command line override file values.

void apply_config_line(SweepConfig& cfg, std::string& out_path, const std::string& key,
                       const std::string& value) {
  if (key == "k") {
    cfg.k = static_cast<int>(parse_u64(value, key));
  } else if (key == "m") {
    cfg.m = static_cast<int>(parse_u64(value, key));
  } else if (key == "beta") {
    cfg.beta_grid = parse_double_list(value, key);
  } else if (key == "sigma_c") {
    cfg.sigma_c_grid = parse_double_list(value, key);
  } else if (key == "quantities") {
    cfg.quantities = parse_quantities(value);
  } else if (key == "trials_pairwise") {
    cfg.trials_pairwise = parse_u64(value, key);
  } else if (key == "trials_ser") {
    cfg.trials_ser = parse_u64(value, key);
  } else if (key == "quad_order") {
    cfg.quad_order = static_cast<int>(parse_u64(value, key));
  } else if (key == "seed") {
    cfg.seed = parse_u64(value, key);
  } else if (key == "workers") {
    cfg.workers = static_cast<unsigned>(parse_u64(value, key));
  } else if (key == "out") {
    out_path = value;
  } else {
    throw std::runtime_error("unknown key '" + key + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void load_config_file(const std::string& path, SweepConfig& cfg, std::string& out_path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    try {
      apply_config_line(cfg, out_path, key, value);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------

int cmd_geometry(int k, int m, const std::string& out_path) {
  const AntipodalGeometry ag = antipodal_geometry(k);
  std::cout << "k=" << k << " M=" << m << '\n';
  std::cout << "v_k=" << csv_number(ag.v_k) << '\n';
  std::cout << "delta_k=" << csv_number(ag.delta_k) << '\n';
  std::cout << "gamma_k=" << csv_number(ag.gamma_k) << '\n';
  std::cout << "rho_k=" << csv_number(ag.rho_k) << '\n';

  std::ostringstream table;
  table << "q,Delta_q,delta,cos_alpha\n";
  for (int q = 1; q <= m - 1; ++q) {
    const OffsetGeometry og = offset_spectrum(k, m, q);
    const double delta_q = 2.0 * std::numbers::pi * q / m;
    table << q << ',' << csv_number(delta_q) << ',' << csv_number(og.delta) << ','
          << csv_number(og.cos_alpha) << '\n';
  }
  std::cout << table.str();
  if (!out_path.empty()) {
    auto os = open_output(out_path);
    os << table.str();
  }
  return 0;
}

struct PepArgs {
  std::string decoder;
  double beta = 0.0;
  double sigma_c = 0.0;
  int quad_order = kDefaultQuadOrder;
  int k = 0, m = 0;
  long long i = -1, j = -1;
  std::optional<double> delta, gamma, cos_alpha;
  bool assume_phantom = false;
  std::string out_path;
};

int cmd_pep(const PepArgs& a) {
  const DecoderKind decoder = parse_decoder(a.decoder);
  const NoiseParams n(a.beta, a.sigma_c);
  const bool pair_spec = a.k > 0 || a.m > 0 || a.i >= 0 || a.j >= 0;
  double value = 0.0;

  if (pair_spec) {
    if (a.delta || a.gamma || a.cos_alpha)
      throw std::runtime_error("give either a pair spec (--k --m --i --j) or raw scalars, not both");
    if (a.k < 1 || a.m < 2 || a.i < 0 || a.j < 0)
      throw std::runtime_error("pair spec needs --k, --m, --i and --j");
    const Constellation cb = build_uniform_codebook(a.k, a.m);
    if (decoder == DecoderKind::Matched) {
      // refuses non-phantom pairs
      value = matched_phantom_pep(cb, static_cast<std::size_t>(a.i),
                                  static_cast<std::size_t>(a.j), n, a.quad_order);
    } else {
      value = euclidean_pep(pair_geometry(cb, static_cast<std::size_t>(a.i),
                                          static_cast<std::size_t>(a.j)),
                            n);
    }
  } else {
    if (!a.delta) throw std::runtime_error("raw mode needs --delta");
    if (decoder == DecoderKind::Matched) {
      if (!a.gamma) throw std::runtime_error("matched raw mode needs --gamma");
      if (!a.assume_phantom)
        throw std::runtime_error(
            "the matched pairwise formula is only valid for phantom pairs "
            "(chord orthogonal to both endpoint tangents); pass "
            "--assume-phantom to acknowledge, or use a pair spec for a "
            "checked evaluation");
      value = matched_phantom_pep(*a.delta, *a.gamma, n, a.quad_order);
    } else {
      if (!a.cos_alpha) throw std::runtime_error("euclidean raw mode needs --cos-alpha");
      value = euclidean_pep(*a.delta, *a.cos_alpha, n);
    }
  }

  std::cout << csv_number(value) << '\n';
  if (!a.out_path.empty()) {
    auto os = open_output(a.out_path);
    os << kSweepCsvHeader << '\n'
       << csv_row(a.k, a.m, a.beta, a.sigma_c,
                  decoder == DecoderKind::Matched ? "pep-matched" : "pep-euclidean", value,
                  value, value, 0);
  }
  return 0;
}

int cmd_ser_bounds(int k, int m, double beta, double sigma_c, int quad_order,
                   const std::string& out_path) {
  const NoiseParams n(beta, sigma_c);
  const SerBounds b = euclidean_ser_bounds(k, m, n, quad_order);
  std::cout << "lower=" << csv_number(b.lower) << '\n';
  std::cout << "upper_raw=" << csv_number(b.upper_raw) << '\n';
  std::cout << "upper=" << csv_number(b.upper_clamped) << '\n';
  std::cout << "matched_lower=" << csv_number(b.matched_lower) << '\n';
  std::cout << "q,pep\n";
  for (const auto& [q, p] : b.per_offset) std::cout << q << ',' << csv_number(p) << '\n';
  if (!out_path.empty()) {
    auto os = open_output(out_path);
    os << kSweepCsvHeader << '\n'
       << csv_row(k, m, beta, sigma_c, "bound-lower", b.lower, b.lower, b.lower, 0)
       << csv_row(k, m, beta, sigma_c, "bound-upper", b.upper_raw, b.upper_raw, b.upper_raw, 0)
       << csv_row(k, m, beta, sigma_c, "bound-matched-lower", b.matched_lower, b.matched_lower,
                  b.matched_lower, 0);
  }
  return 0;
}

void print_estimate(const PepEstimate& e) {
  std::cout << csv_number(e.value) << " ci95=[" << csv_number(e.ci_low) << ','
            << csv_number(e.ci_high) << "] trials=" << e.trials << '\n';
}

int cmd_mc_pep(int k, int m, long long i, long long j, const std::string& decoder, double beta,
               double sigma_c, std::uint64_t trials, const std::optional<std::uint64_t>& seed,
               unsigned workers, const std::string& out_path) {
  const DecoderKind d = parse_decoder(decoder);
  const NoiseParams n(beta, sigma_c);
  const Constellation cb = build_uniform_codebook(k, m);
  const std::size_t ii = i < 0 ? 0 : static_cast<std::size_t>(i);
  const std::size_t jj = j < 0 ? static_cast<std::size_t>(m) / 2 : static_cast<std::size_t>(j);
  const PepEstimate e =
      estimate_pairwise_pep(cb, ii, jj, d, n, trials, resolve_seed(seed), workers);
  print_estimate(e);
  if (!out_path.empty()) {
    auto os = open_output(out_path);
    os << kSweepCsvHeader << '\n'
       << csv_row(k, m, beta, sigma_c,
                  d == DecoderKind::Matched ? "mc-pep-matched" : "mc-pep-euclidean", e.value,
                  e.ci_low, e.ci_high, e.trials);
  }
  return 0;
}

int cmd_mc_ser(int k, int m, const std::string& decoder, double beta, double sigma_c,
               std::uint64_t trials, const std::optional<std::uint64_t>& seed, unsigned workers,
               const std::string& out_path) {
  const DecoderKind d = parse_decoder(decoder);
  const NoiseParams n(beta, sigma_c);
  const Constellation cb = build_uniform_codebook(k, m);
  const PepEstimate e = estimate_ser(cb, d, n, trials, resolve_seed(seed), workers);
  print_estimate(e);
  if (!out_path.empty()) {
    auto os = open_output(out_path);
    os << kSweepCsvHeader << '\n'
       << csv_row(k, m, beta, sigma_c,
                  d == DecoderKind::Matched ? "mc-ser-matched" : "mc-ser-euclidean", e.value,
                  e.ci_low, e.ci_high, e.trials);
  }
  return 0;
}

struct SweepArgs {
  std::string preset;
  std::string config_path;
  std::optional<std::uint64_t> k, m;
  std::optional<std::string> beta, sigma_c, quantities;
  std::optional<std::uint64_t> trials_pairwise, trials_ser, quad_order, seed, workers;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a) {
  SweepConfig cfg;
  std::string out_path;

  if (!a.preset.empty()) {
    if (a.preset != "figure1") throw std::runtime_error("unknown preset: " + a.preset);
    cfg = figure1_preset();
  }
  if (!a.config_path.empty()) load_config_file(a.config_path, cfg, out_path);

  if (a.k) cfg.k = static_cast<int>(*a.k);
  if (a.m) cfg.m = static_cast<int>(*a.m);
  if (a.beta) cfg.beta_grid = parse_double_list(*a.beta, "--beta");
  if (a.sigma_c) cfg.sigma_c_grid = parse_double_list(*a.sigma_c, "--sigma-c");
  if (a.quantities) cfg.quantities = parse_quantities(*a.quantities);
  if (a.trials_pairwise) cfg.trials_pairwise = *a.trials_pairwise;
  if (a.trials_ser) cfg.trials_ser = *a.trials_ser;
  if (a.quad_order) cfg.quad_order = static_cast<int>(*a.quad_order);
  if (a.workers) cfg.workers = static_cast<unsigned>(*a.workers);
  if (a.seed) {
    cfg.seed = *a.seed;
  } else if (const char* env = std::getenv("CURVECOMM_SEED")) {
    cfg.seed = parse_u64(env, "CURVECOMM_SEED");
  }
  if (!a.out_path.empty()) out_path = a.out_path;

  const std::vector<SweepRow> rows = run_sweep(cfg);
  if (out_path.empty()) {
    write_sweep_csv(rows, std::cout);
  } else {
    auto os = open_output(out_path);
    write_sweep_csv(rows, os);
    if (!os) throw std::runtime_error("write failed: " + out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matched and Euclidean-mismatched decoding on Fourier-curve "
      "constellations with tangent-space artificial noise"};
  app.require_subcommand(1);

  // geometry
  auto* geo = app.add_subcommand("geometry", "antipodal geometry and the offset distance spectrum");
  int geo_k = 1, geo_m = 2;
  std::string geo_out;
  geo->add_option("--k", geo_k, "harmonic order")->required();
  geo->add_option("--m", geo_m, "codebook size")->required();
  geo->add_option("--out", geo_out, "write the offset table as CSV");

  // pep
  auto* pep = app.add_subcommand("pep", "analytic pairwise error probability");
  PepArgs pep_args;
  pep->add_option("--decoder", pep_args.decoder, "matched | euclidean")->required();
  pep->add_option("--beta", pep_args.beta, "artificial-noise fraction")->required();
  pep->add_option("--sigma-c", pep_args.sigma_c, "ambient noise level")->required();
  pep->add_option("--quad-order", pep_args.quad_order, "Gauss-Hermite order (matched)");
  pep->add_option("--k", pep_args.k, "pair spec: harmonic order");
  pep->add_option("--m", pep_args.m, "pair spec: codebook size");
  pep->add_option("--i", pep_args.i, "pair spec: transmit index");
  pep->add_option("--j", pep_args.j, "pair spec: competing index");
  pep->add_option("--delta", pep_args.delta, "raw: chord length");
  pep->add_option("--gamma", pep_args.gamma, "raw: tangent correlation (matched)");
  pep->add_option("--cos-alpha", pep_args.cos_alpha, "raw: chord-tangent alignment (euclidean)");
  pep->add_flag("--assume-phantom", pep_args.assume_phantom,
                "acknowledge that raw (delta, gamma) describe a phantom pair");
  pep->add_option("--out", pep_args.out_path, "write the value as a CSV row");

  // ser-bounds
  auto* bounds = app.add_subcommand("ser-bounds", "analytic SER bounds for a uniform even codebook");
  int sb_k = 1, sb_m = 2, sb_quad = kDefaultQuadOrder;
  double sb_beta = 0.0, sb_sigma = 0.0;
  std::string sb_out;
  bounds->add_option("--k", sb_k, "harmonic order")->required();
  bounds->add_option("--m", sb_m, "codebook size (even)")->required();
  bounds->add_option("--beta", sb_beta, "artificial-noise fraction")->required();
  bounds->add_option("--sigma-c", sb_sigma, "ambient noise level")->required();
  bounds->add_option("--quad-order", sb_quad, "Gauss-Hermite order");
  bounds->add_option("--out", sb_out, "write the bounds as CSV rows");

  // mc-pep
  auto* mcp = app.add_subcommand("mc-pep", "Monte Carlo pairwise error estimate");
  int mp_k = 1, mp_m = 2;
  long long mp_i = -1, mp_j = -1;
  std::string mp_decoder, mp_out;
  double mp_beta = 0.0, mp_sigma = 0.0;
  std::uint64_t mp_trials = 50000;
  std::optional<std::uint64_t> mp_seed;
  unsigned mp_workers = 1;
  mcp->add_option("--k", mp_k, "harmonic order")->required();
  mcp->add_option("--m", mp_m, "codebook size")->required();
  mcp->add_option("--i", mp_i, "transmit index (default 0)");
  mcp->add_option("--j", mp_j, "competing index (default M/2)");
  mcp->add_option("--decoder", mp_decoder, "matched | euclidean")->required();
  mcp->add_option("--beta", mp_beta, "artificial-noise fraction")->required();
  mcp->add_option("--sigma-c", mp_sigma, "ambient noise level")->required();
  mcp->add_option("--trials", mp_trials, "trial count (default 50000)");
  mcp->add_option("--seed", mp_seed, "master seed (fallback: CURVECOMM_SEED, then 1)");
  mcp->add_option("--workers", mp_workers, "worker thread bound");
  mcp->add_option("--out", mp_out, "write the estimate as a CSV row");

  // mc-ser
  auto* mcs = app.add_subcommand("mc-ser", "Monte Carlo symbol-error-rate estimate");
  int ms_k = 1, ms_m = 2;
  std::string ms_decoder, ms_out;
  double ms_beta = 0.0, ms_sigma = 0.0;
  std::uint64_t ms_trials = 20000;
  std::optional<std::uint64_t> ms_seed;
  unsigned ms_workers = 1;
  mcs->add_option("--k", ms_k, "harmonic order")->required();
  mcs->add_option("--m", ms_m, "codebook size")->required();
  mcs->add_option("--decoder", ms_decoder, "matched | euclidean")->required();
  mcs->add_option("--beta", ms_beta, "artificial-noise fraction")->required();
  mcs->add_option("--sigma-c", ms_sigma, "ambient noise level")->required();
  mcs->add_option("--trials", ms_trials, "transmission count (default 20000)");
  mcs->add_option("--seed", ms_seed, "master seed (fallback: CURVECOMM_SEED, then 1)");
  mcs->add_option("--workers", ms_workers, "worker thread bound");
  mcs->add_option("--out", ms_out, "write the estimate as a CSV row");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid sweep over beta and sigma_c, CSV output");
  SweepArgs sw;
  sweep->add_option("--preset", sw.preset, "named preset: figure1");
  sweep->add_option("--config", sw.config_path, "key = value config file");
  sweep->add_option("--k", sw.k, "harmonic order");
  sweep->add_option("--m", sw.m, "codebook size (even)");
  sweep->add_option("--beta", sw.beta, "comma-separated beta grid");
  sweep->add_option("--sigma-c", sw.sigma_c, "comma-separated sigma_c grid");
  sweep->add_option("--quantities", sw.quantities, "all | none | comma-separated kinds");
  sweep->add_option("--trials-pairwise", sw.trials_pairwise, "pairwise trials per point");
  sweep->add_option("--trials-ser", sw.trials_ser, "SER transmissions per point");
  sweep->add_option("--quad-order", sw.quad_order, "Gauss-Hermite order");
  sweep->add_option("--seed", sw.seed, "master seed (fallback: CURVECOMM_SEED, then 1)");
  sweep->add_option("--workers", sw.workers, "worker thread bound");
  sweep->add_option("--out", sw.out_path, "output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (geo->parsed()) return cmd_geometry(geo_k, geo_m, geo_out);
    if (pep->parsed()) return cmd_pep(pep_args);
    if (bounds->parsed()) return cmd_ser_bounds(sb_k, sb_m, sb_beta, sb_sigma, sb_quad, sb_out);
    if (mcp->parsed())
      return cmd_mc_pep(mp_k, mp_m, mp_i, mp_j, mp_decoder, mp_beta, mp_sigma, mp_trials,
                        mp_seed, mp_workers, mp_out);
    if (mcs->parsed())
      return cmd_mc_ser(ms_k, ms_m, ms_decoder, ms_beta, ms_sigma, ms_trials, ms_seed,
                        ms_workers, ms_out);
    if (sweep->parsed()) return cmd_sweep(sw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

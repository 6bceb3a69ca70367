#include "centralspin/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"
#include "centralspin/parallel.hpp"
#include "centralspin/qfi.hpp"
#include "centralspin/reduced_state.hpp"

namespace cspin::scenario {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "kind",   "Nb",     "Nc",      "lambda",       "gamma",        "h",
      "eta",    "beta",   "vartheta", "varphi",      "t_start",      "t_end",
      "n_points", "omega0", "omega_a", "g",            "nbar",         "fock_cutoff",
      "h0",     "theta",  "phi",     "zeta",         "eff_variant",  "boundary",
      "h_scan_start", "h_scan_end", "h_scan_points", "horizon_periods", "seed", "out",
      "zeta_points", "draws", "sector"};
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads typed values out of a scenario and remembers what was used, so the
// CSV header lists the resolved parameter set.
class Reader {
 public:
  explicit Reader(const Scenario& s) : values_(s.values()) {}

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    const auto it = values_.find(key);
    double value = 0.0;
    if (it != values_.end()) {
      value = parse_number(it->second);
    } else if (fallback) {
      value = *fallback;
    } else {
      throw ValidationError("missing key '" + key + "'");
    }
    if (!std::isfinite(value)) throw ValidationError("key '" + key + "' is not finite");
    resolved_[key] = format_double(value);
    return value;
  }

  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) {
    const auto it = values_.find(key);
    long long value = 0;
    if (it != values_.end()) {
      const std::string_view text = trim(it->second);
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size()) {
        throw ParseError("key '" + key + "' needs an integer, got '" + it->second + "'");
      }
    } else if (fallback) {
      value = *fallback;
    } else {
      throw ValidationError("missing key '" + key + "'");
    }
    resolved_[key] = std::to_string(value);
    return value;
  }

  std::string word(const std::string& key, const std::vector<std::string>& allowed) {
    const auto it = values_.find(key);
    const std::string value = it != values_.end() ? it->second : allowed.front();
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      throw ValidationError("key '" + key + "' has unsupported value '" + value + "'");
    }
    resolved_[key] = value;
    return value;
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string header() const {
    std::map<std::string, std::string> all = resolved_;
    all["kind"] = values_.at("kind");
    all["version"] = kVersion;
    std::string out = "# params:";
    for (const auto& [k, v] : all) out += " " + k + "=" + v;
    return out + "\n";
  }

 private:
  const std::map<std::string, std::string>& values_;
  std::map<std::string, std::string> resolved_;
};

std::vector<double> linspace(double start, double end, long long n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = start + (end - start) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

long long grid_points(Reader& r, const std::string& key) {
  const long long n = r.integer(key);
  if (n < 2) throw ValidationError("'" + key + "' must be >= 2");
  return n;
}

std::string row(std::initializer_list<double> fields) {
  std::string out;
  for (double f : fields) {
    if (!out.empty()) out += ',';
    out += format_double(f);
  }
  return out + "\n";
}

xychain::ChainParams read_chain(Reader& r, double field) {
  xychain::ChainParams chain{static_cast<int>(r.integer("Nb")), r.number("lambda", 1.0),
                             r.number("gamma", 0.0), field};
  chain.validate();
  return chain;
}

dicke::CentralParams read_central(Reader& r) {
  dicke::CentralParams central{static_cast<int>(r.integer("Nc")), r.number("eta"), r.number("beta"),
                               r.number("vartheta", std::numbers::pi / 2), r.number("varphi", 0.0)};
  central.validate();
  return central;
}

// Uniform time grid, either explicit or as horizon_periods * 2 pi / |eta|.
std::vector<double> read_time_grid(Reader& r, double eta, std::optional<double> default_periods) {
  double start = 0.0;
  double end = 0.0;
  if (r.has("t_end") || !default_periods) {
    start = r.number("t_start", 0.0);
    end = r.number("t_end");
  } else {
    if (eta == 0.0) throw ValidationError("horizon_periods needs eta != 0");
    end = r.number("horizon_periods", *default_periods) * 2.0 * std::numbers::pi / std::abs(eta);
  }
  if (!(end > start)) throw ValidationError("time grid needs t_end > t_start");
  return linspace(start, end, grid_points(r, "n_points"));
}

std::vector<double> read_field_grid(Reader& r) {
  const double start = r.number("h_scan_start");
  const double end = r.number("h_scan_end");
  const long long n = r.integer("h_scan_points");
  if (n < 1) throw ValidationError("h_scan_points must be >= 1");
  if (n == 1) return {start};
  if (!(end > start)) throw ValidationError("h grid must be ascending");
  return linspace(start, end, n);
}

Output run_dynamics(Reader& r, int jobs) {
  const double h = r.number("h", 0.0);
  const xychain::ChainParams chain = read_chain(r, h);
  const dicke::CentralParams central = read_central(r);
  const std::vector<double> times = read_time_grid(r, central.coupling, std::nullopt);
  const reduced_state::ReducedStateModel model(chain, central);
  const dicke::CollectiveOps ops = dicke::collective_ops(central.n_central);

  std::vector<qfi::EntanglementReport> reports(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t i) { reports[i] = qfi::analyze(model.at(times[i]), ops); });

  const auto& bounds = reports.front().thresholds;
  const double genuine = bounds[static_cast<std::size_t>(std::max(central.n_central - 2, 0))].bound;
  Output out;
  out.csv = r.header() + "t,F,depth,bound_2partite,bound_genuine,bound_max,nx,ny,nz\n";
  double max_f = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& rep = reports[i];
    max_f = std::max(max_f, rep.qfi);
    out.csv += row({times[i], rep.qfi, static_cast<double>(rep.depth), bounds.front().bound, genuine,
                    bounds.back().bound, rep.direction.x(), rep.direction.y(), rep.direction.z()});
  }
  out.summary = "max_F=" + format_double(max_f);
  return out;
}

// Field scans: every h gets its own model; h values run in parallel.
Output run_field_scan(Reader& r, int jobs, bool averaged) {
  const std::vector<double> fields = read_field_grid(r);
  const xychain::ChainParams base = read_chain(r, fields.front());
  const dicke::CentralParams central = read_central(r);
  const std::vector<double> times =
      read_time_grid(r, central.coupling, averaged ? std::optional<double>(1e4) : std::nullopt);
  const dicke::CollectiveOps ops = dicke::collective_ops(central.n_central);

  std::vector<std::vector<qfi::EntanglementReport>> reports(fields.size());
  parallel_for(fields.size(), jobs, [&](std::size_t f) {
    const reduced_state::ReducedStateModel model(base.with_field(fields[f]), central);
    reports[f].reserve(times.size());
    for (double t : times) reports[f].push_back(qfi::analyze(model.at(t), ops));
  });

  Output out;
  out.csv = r.header();
  double best = 0.0;
  if (averaged) {
    out.csv += "h,F_bar\n";
    for (std::size_t f = 0; f < fields.size(); ++f) {
      std::vector<std::pair<double, double>> series;
      series.reserve(times.size());
      for (std::size_t i = 0; i < times.size(); ++i) series.emplace_back(times[i], reports[f][i].qfi);
      const double mean = qfi::time_average(series);
      best = std::max(best, mean);
      out.csv += row({fields[f], mean});
    }
    out.summary = "max_F_bar=" + format_double(best);
  } else {
    out.csv += "h,t,F,depth\n";
    for (std::size_t f = 0; f < fields.size(); ++f) {
      for (std::size_t i = 0; i < times.size(); ++i) {
        best = std::max(best, reports[f][i].qfi);
        out.csv += row({fields[f], times[i], reports[f][i].qfi, static_cast<double>(reports[f][i].depth)});
      }
    }
    out.summary = "max_F=" + format_double(best);
  }
  return out;
}

Output run_k_ratio(Reader& r, int jobs) {
  CavityParams p;
  p.omega0 = r.number("omega0");
  p.omega_a = r.number("omega_a");
  p.g = r.number("g");
  p.nbar = r.number("nbar");
  p.fock_cutoff = static_cast<int>(r.integer("fock_cutoff"));
  p.h0 = r.number("h0", 0.0);
  p.coupling = r.number("lambda", 1.0);
  p.anisotropy = r.number("gamma", 0.0);
  p.n_sites = static_cast<int>(r.integer("Nb"));
  p.theta = r.number("theta", std::numbers::pi / 2);
  p.phi = r.number("phi", 0.0);
  p.validate();
  const auto model = r.word("eff_variant", {"eff3", "eff2"}) == "eff3" ? oracles::CavityModel::Effective3
                                                                     : oracles::CavityModel::Effective2;
  const auto sector = r.word("sector", {"full", "symmetric"}) == "full" ? oracles::SpinSector::Full
                                                                        : oracles::SpinSector::Symmetric;

  // Default window: three periods of the dispersive precession 2 g^2 nbar / Delta.
  const double dispersive = 2.0 * p.g * p.g * p.nbar / std::abs(p.detuning());
  std::optional<double> default_end;
  if (dispersive > 0.0) default_end = 3.0 * 2.0 * std::numbers::pi / dispersive * p.omega0;
  const double start = r.number("t_start", 0.0);
  const double end = r.number("t_end", default_end);
  if (!(end > start)) throw ValidationError("time grid needs t_end > t_start");
  const std::vector<double> times = linspace(start, end, grid_points(r, "n_points"));

  const long long zeta_points = r.integer("zeta_points", 1);
  std::vector<double> zetas;
  if (zeta_points == 1) {
    zetas = {r.number("zeta", std::numbers::pi / 6)};
  } else if (zeta_points >= 2) {
    for (long long i = 0; i < zeta_points; ++i) {
      zetas.push_back(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(zeta_points));
    }
  } else {
    throw ValidationError("zeta_points must be >= 1");
  }

  const oracles::DifferenceRatio ratio = oracles::difference_ratio(p, times, zetas, model, sector, jobs);
  Output out;
  out.csv = r.header() + "omega0_t,zeta,K\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::size_t z = 0; z < zetas.size(); ++z) {
      out.csv += row({times[i], zetas[z], ratio.k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(z))});
    }
  }
  out.summary = "max_abs_K=" + format_double(ratio.max_abs_k) +
                " max_fock_leakage=" + format_double(ratio.max_leakage) +
                " truncated_weight=" + format_double(ratio.truncated_weight);
  return out;
}

struct Draw {
  xychain::ChainParams chain;
  dicke::CentralParams central;
  double t = 0.0;
};

constexpr double kRhoTolerance = 1e-8;
constexpr double kSpectrumTolerance = 1e-9;

Output run_oracle_check(Reader& r, int jobs) {
  const auto seed = static_cast<std::uint64_t>(r.integer("seed", 1));
  const long long draws = r.integer("draws", 20);
  if (draws < 1) throw ValidationError("draws must be >= 1");
  const bool fermion = r.word("boundary", {"periodic-fermion", "periodic-spin"}) == "periodic-fermion";
  const auto boundary = fermion ? oracles::Boundary::PeriodicFermion : oracles::Boundary::PeriodicSpin;

  // Draws are generated serially so they do not depend on the worker count.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
  };
  std::vector<Draw> plan(static_cast<std::size_t>(draws));
  for (Draw& d : plan) {
    const int nb = 2 * (1 + static_cast<int>(rng() % 4));
    const int nc = 1 + static_cast<int>(rng() % 4);
    d.chain = {nb, uniform(0.2, 1.5), uniform(0.0, 1.0), uniform(-2.0, 2.0)};
    d.central = {nc, uniform(-1.0, 1.0), uniform(0.0, 5.0), uniform(0.0, std::numbers::pi),
                 uniform(0.0, 2.0 * std::numbers::pi)};
    d.t = uniform(0.0, 10.0);
  }

  std::vector<double> rho_dev(plan.size());
  std::vector<double> spectrum_dev(plan.size());
  parallel_for(plan.size(), jobs, [&](std::size_t i) {
    const Draw& d = plan[i];
    const auto analytic = reduced_state::reduced_density(d.chain, d.central, d.t);
    const auto dense = oracles::CentralOracle(d.chain, d.central, boundary).at(d.t);
    rho_dev[i] = numkit::max_abs(analytic.matrix() - dense.matrix());

    const numkit::RealVector dense_spectrum =
        numkit::herm_eig(oracles::spin_chain_matrix(d.chain, boundary)).eigenvalues;
    const std::vector<double> sums = xychain::mode_sum_spectrum(d.chain);
    double worst = 0.0;
    for (std::size_t n = 0; n < sums.size(); ++n) {
      worst = std::max(worst, std::abs(sums[n] - dense_spectrum(static_cast<Eigen::Index>(n))));
    }
    spectrum_dev[i] = worst;
  });

  Output out;
  out.csv = r.header() + "draw,Nb,Nc,lambda,gamma,h,eta,beta,vartheta,varphi,t,rho_deviation,spectrum_deviation\n";
  double worst_rho = 0.0;
  double worst_spectrum = 0.0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const Draw& d = plan[i];
    worst_rho = std::max(worst_rho, rho_dev[i]);
    worst_spectrum = std::max(worst_spectrum, spectrum_dev[i]);
    out.csv += row({static_cast<double>(i), static_cast<double>(d.chain.n_sites),
                    static_cast<double>(d.central.n_central), d.chain.coupling, d.chain.anisotropy,
                    d.chain.field, d.central.coupling, d.central.beta, d.central.polar,
                    d.central.azimuth, d.t, rho_dev[i], spectrum_dev[i]});
  }
  out.summary = "max_rho_deviation=" + format_double(worst_rho) +
                " max_spectrum_deviation=" + format_double(worst_spectrum);
  // The spin boundary is a measurement of the boundary-term effect, not a check.
  out.tolerance_failed = fermion && (worst_rho > kRhoTolerance || worst_spectrum > kSpectrumTolerance);
  return out;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buffer[32];
  // shortest text that parses back to the same double
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  double sign = 1.0;
  if (text.front() == '-' || text.front() == '+') {
    if (text.front() == '-') sign = -1.0;
    text.remove_prefix(1);
  }
  double value = 1.0;
  char op = '*';
  while (true) {
    const auto cut = text.find_first_of("*/");
    const std::string_view token = trim(text.substr(0, cut));
    double factor = 0.0;
    if (token == "pi") {
      factor = std::numbers::pi;
    } else {
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), factor);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("cannot parse number '" + std::string(token) + "'");
      }
    }
    value = op == '*' ? value * factor : value / factor;
    if (cut == std::string_view::npos) break;
    op = text[cut];
    text.remove_prefix(cut + 1);
  }
  return sign * value;
}

Scenario Scenario::parse(std::string_view text) {
  Scenario s;
  int line_number = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_number) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (s.values_.count(key)) {
      throw ParseError("line " + std::to_string(line_number) + ": duplicate key '" + key + "'");
    }
    s.set(key, std::string(trim(line.substr(eq + 1))));
  }
  return s;
}

void Scenario::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw ParseError("unknown key '" + key + "'");
  if (value.empty()) throw ParseError("key '" + key + "' has an empty value");
  values_[key] = value;
}

void Scenario::apply_override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ParseError("override must be key=value");
  set(std::string(trim(assignment.substr(0, eq))), std::string(trim(assignment.substr(eq + 1))));
}

Output run(const Scenario& scenario, int jobs) {
  const auto kind_it = scenario.values().find("kind");
  if (kind_it == scenario.values().end()) throw ParseError("missing key 'kind'");
  const std::string& kind = kind_it->second;
  Reader reader(scenario);
  Output out;
  if (kind == "dynamics") {
    out = run_dynamics(reader, jobs);
  } else if (kind == "field-scan") {
    out = run_field_scan(reader, jobs, false);
  } else if (kind == "time-average-scan") {
    out = run_field_scan(reader, jobs, true);
  } else if (kind == "k-ratio") {
    out = run_k_ratio(reader, jobs);
  } else if (kind == "oracle-check") {
    out = run_oracle_check(reader, jobs);
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  if (const auto it = scenario.values().find("out"); it != scenario.values().end()) out.out_path = it->second;
  return out;
}

Output run_check(std::uint64_t seed, int draws, int jobs) {
  Scenario s;
  s.set("kind", "oracle-check");
  s.set("seed", std::to_string(seed));
  s.set("draws", std::to_string(draws));
  return run(s, jobs);
}

}  // namespace cspin::scenario

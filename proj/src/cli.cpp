#include "fdd/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdd/common.hpp"
#include "fdd/dispersion.hpp"
#include "fdd/entropy.hpp"
#include "fdd/geometry.hpp"
#include "fdd/momentum.hpp"
#include "fdd/parallel.hpp"
#include "fdd/spectra.hpp"
#include "fdd/states.hpp"
#include "fdd/table_io.hpp"
#include "fdd/validation.hpp"

namespace fdd::cli {

namespace {

using table_io::Cell;
using table_io::Row;
using table_io::Table;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

bool full_parse_double(const std::string& s, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

double parse_scalar_token(const std::string& tok) {
  const size_t slash = tok.find('/');
  if (slash != std::string::npos) {
    double num = 0.0, den = 0.0;
    if (!full_parse_double(tok.substr(0, slash), num) ||
        !full_parse_double(tok.substr(slash + 1), den) || den == 0.0)
      throw std::invalid_argument("grid token '" + tok + "' is not a valid fraction");
    return num / den;
  }
  double v = 0.0;
  if (!full_parse_double(tok, v))
    throw std::invalid_argument("grid token '" + tok + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

template <typename F>
auto named(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw std::invalid_argument(field + ": " + e.what());
  }
}

int parse_single_int(const std::string& field, const std::string& s) {
  return named(field, [&] {
    const double v = parse_scalar_token(s);
    const long long r = std::llround(v);
    if (std::fabs(v - r) > 1e-9) throw std::invalid_argument("'" + s + "' is not an integer");
    return (int)r;
  });
}

double parse_single_double(const std::string& field, const std::string& s) {
  return named(field, [&] { return parse_scalar_token(s); });
}

struct RationalToken {
  long long num = 0;
  long long den = 1;
  std::string text;
};

std::vector<RationalToken> parse_rationals(const std::string& field, const std::string& s) {
  return named(field, [&] {
    std::vector<RationalToken> out;
    for (const std::string& tok : split(s, ',')) {
      if (tok.empty()) continue;
      RationalToken r;
      r.text = tok;
      const size_t slash = tok.find('/');
      try {
        size_t pos = 0;
        if (slash == std::string::npos) {
          r.num = std::stoll(tok, &pos);
          if (pos != tok.size()) throw std::invalid_argument(tok);
          r.den = 1;
        } else {
          r.num = std::stoll(tok.substr(0, slash), &pos);
          if (pos != slash) throw std::invalid_argument(tok);
          const std::string den = tok.substr(slash + 1);
          r.den = std::stoll(den, &pos);
          if (pos != den.size() || r.den == 0) throw std::invalid_argument(tok);
        }
      } catch (...) {
        throw std::invalid_argument("'" + tok + "' is not a rational p/q");
      }
      out.push_back(std::move(r));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
  });
}

// ---------------------------------------------------------------------------
// config-aware option registry: every option is a string slot; values from a
// --config JSON file fill slots the user left untouched
// ---------------------------------------------------------------------------

struct OptionBag {
  CLI::App* cmd = nullptr;
  std::string config_path;
  std::vector<std::string> keys;
  std::map<std::string, std::string*> targets;
  std::map<std::string, bool*> flag_targets;
  std::map<std::string, CLI::Option*> options;
  std::vector<std::unique_ptr<std::string>> storage;
  std::vector<std::unique_ptr<bool>> flag_storage;

  explicit OptionBag(CLI::App* c) : cmd(c) {
    cmd->add_option("--config", config_path,
                    "JSON file with the same keys as the long flags; explicit flags win");
  }

  std::string* add(const std::string& key, const std::string& def, const std::string& desc) {
    storage.push_back(std::make_unique<std::string>(def));
    std::string* slot = storage.back().get();
    options[key] = cmd->add_option("--" + key, *slot, desc);
    targets[key] = slot;
    keys.push_back(key);
    return slot;
  }

  bool* add_flag(const std::string& key, const std::string& desc) {
    flag_storage.push_back(std::make_unique<bool>(false));
    bool* slot = flag_storage.back().get();
    options[key] = cmd->add_flag("--" + key, *slot, desc);
    flag_targets[key] = slot;
    keys.push_back(key);
    return slot;
  }

  const std::string& get(const std::string& key) const { return *targets.at(key); }

  void apply_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("config: cannot open '" + config_path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const std::exception& e) {
      throw std::invalid_argument("config: parse failure in '" + config_path + "': " + e.what());
    }
    if (!doc.is_object())
      throw std::invalid_argument("config: top level of '" + config_path + "' must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string& key = it.key();
      auto opt = options.find(key);
      if (opt == options.end())
        throw std::invalid_argument("config: unknown field '" + key + "' for command '" +
                                    cmd->get_name() + "'");
      if (opt->second->count() > 0) continue;
      const auto& v = it.value();
      if (flag_targets.count(key)) {
        if (!v.is_boolean())
          throw std::invalid_argument("config: field '" + key + "' expects true or false");
        *flag_targets[key] = v.get<bool>();
        continue;
      }
      if (v.is_string()) {
        *targets[key] = v.get<std::string>();
      } else if (v.is_number() || v.is_boolean()) {
        *targets[key] = v.dump();
      } else if (v.is_array()) {
        std::string joined;
        for (const auto& e : v) {
          if (!e.is_number() && !e.is_string())
            throw std::invalid_argument("config: field '" + key + "' has a non-scalar entry");
          if (!joined.empty()) joined += ',';
          joined += e.is_string() ? e.get<std::string>() : e.dump();
        }
        *targets[key] = joined;
      } else {
        throw std::invalid_argument("config: field '" + key + "' has an unsupported type");
      }
    }
  }

  // one-line record of the effective run parameters, registration order;
  // the output path is location, not configuration, so it stays out
  std::string echo() const {
    nlohmann::ordered_json j;
    for (const auto& k : keys) {
      if (k == "output") continue;
      if (flag_targets.count(k))
        j[k] = *flag_targets.at(k);
      else
        j[k] = *targets.at(k);
    }
    return j.dump();
  }
};

Table make_table(const std::string& command, const OptionBag& bag,
                 std::vector<std::string> columns) {
  Table t;
  t.metadata.emplace_back("artifact", "fdd batch runner");
  t.metadata.emplace_back("version", std::string(kVersion));
  t.metadata.emplace_back("command", command);
  t.metadata.emplace_back("config", bag.echo());
  t.columns = std::move(columns);
  return t;
}

int emit_table(const Table& t, const OptionBag& bag, int status) {
  const std::string& format = bag.get("format");
  const std::string& path = bag.get("output");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format: must be csv or json, got '" + format + "'");
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!path.empty() && path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("output: cannot open '" + path + "' for writing");
    os = &file;
  }
  if (format == "csv")
    table_io::write_csv(*os, t);
  else
    table_io::write_json(*os, t);
  os->flush();
  if (!os->good())
    throw std::runtime_error("output: write failure on '" + (path.empty() ? "<stdout>" : path) +
                             "'");
  return status;
}

struct CellRows {
  std::vector<Row> rows;
  bool failed = false;
};

int run_sweep(size_t count, const std::function<CellRows(size_t)>& compute, Table& t) {
  std::vector<CellRows> out(count);
  parallel::parallel_for(count, [&](size_t i) { out[i] = compute(i); });
  bool any_failed = false;
  for (auto& c : out) {
    if (c.failed) any_failed = true;
    for (auto& r : c.rows) t.rows.push_back(std::move(r));
  }
  return any_failed ? 2 : 0;
}

void push_failure(Row& row, int nan_count, const std::string& reason) {
  for (int i = 0; i < nan_count; ++i) row.emplace_back(kNaN);
  row.emplace_back(reason);
}

// ---------------------------------------------------------------------------
// parameter grids shared by the state-sweep commands
// ---------------------------------------------------------------------------

struct StatePoint {
  int n = 0, m = 0;
  double omega = 1.0, omega_c = 0.0, lambda = 0.0;
};

std::vector<StatePoint> read_state_points(const OptionBag& bag) {
  const auto ns = named("n", [&] { return parse_index_grid(bag.get("n")); });
  const auto ms = named("m", [&] { return parse_index_grid(bag.get("m")); });
  const auto ws = named("omega", [&] { return parse_value_grid(bag.get("omega")); });
  const auto wcs = named("omega-c", [&] { return parse_value_grid(bag.get("omega-c")); });
  const auto las = named("lambda", [&] { return parse_value_grid(bag.get("lambda")); });
  std::vector<StatePoint> out;
  for (int n : ns)
    for (int m : ms)
      for (double w : ws)
        for (double wc : wcs)
          for (double la : las) out.push_back({n, m, w, wc, la});
  return out;
}

void check_system_flag(const OptionBag& bag, const std::vector<StatePoint>& pts) {
  const std::string& system = bag.get("system");
  if (system != "fd" && system != "fdd")
    throw std::invalid_argument("system: must be fd or fdd, got '" + system + "'");
  if (system == "fd")
    for (const auto& p : pts)
      if (p.lambda != 0.0)
        throw std::invalid_argument("system: fd requires every lambda grid value to be 0");
}

Row state_prefix(const StatePoint& p) {
  return Row{(long long)p.n, (long long)p.m, p.omega, p.omega_c, p.lambda};
}

// ---------------------------------------------------------------------------
// subcommand runners
// ---------------------------------------------------------------------------

int run_spectrum(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  Table t = make_table("spectrum", bag,
                       {"n", "m", "omega", "omega_c", "lambda", "nu", "sigma", "epsilon", "E",
                        "Omega", "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    Row row = state_prefix(p);
    try {
      const spectra::QuantumNumbers qn{p.n, p.m};
      const spectra::SystemParams sp{p.omega, p.omega_c, p.lambda};
      const auto d = spectra::derive(qn, sp);
      const double eps = spectra::fdd_dimensionless_energy(qn, d.sigma, d.nu);
      row.emplace_back(d.nu);
      row.emplace_back(d.sigma);
      row.emplace_back(eps);
      row.emplace_back(d.energy);
      row.emplace_back(d.Omega);
      row.emplace_back(std::string("ok"));
    } catch (const std::exception& e) {
      push_failure(row, 5, e.what());
      out.failed = true;
    }
    out.rows.push_back(std::move(row));
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_degeneracy(OptionBag& bag) {
  const auto sigmas = named("sigma", [&] { return parse_value_grid(bag.get("sigma")); });
  const int nmax = parse_single_int("nmax", bag.get("nmax"));
  const int mmax = parse_single_int("mmax", bag.get("mmax"));
  if (nmax < 0 || mmax < 0) throw std::invalid_argument("nmax/mmax: must be >= 0");

  std::vector<spectra::QuantumNumbers> states;
  for (int n = 0; n <= nmax; ++n)
    for (int m = -mmax; m <= mmax; ++m) states.push_back({n, m});

  if (*bag.flag_targets.at("pairs")) {
    Table t = make_table("degeneracy", bag,
                         {"n1", "m1", "n2", "m2", "sigma", "crossing", "nu", "q", "residual",
                          "status"});
    struct PairCell {
      double sigma;
      spectra::QuantumNumbers a, b;
    };
    std::vector<PairCell> cells;
    for (double s : sigmas)
      for (size_t i = 0; i < states.size(); ++i)
        for (size_t j = i + 1; j < states.size(); ++j) cells.push_back({s, states[i], states[j]});
    const int rc = run_sweep(cells.size(), [&](size_t i) {
      const PairCell& c = cells[i];
      CellRows out;
      Row row{(long long)c.a.n, (long long)c.a.m, (long long)c.b.n, (long long)c.b.m, c.sigma};
      try {
        std::string crossing, q;
        double nu = kNaN, residual = kNaN;
        if (c.sigma == 0.0) {
          const auto deg = spectra::degeneracy_nu_fd(c.a, c.b);
          crossing = deg.status == spectra::DegeneracyStatus::found     ? "found"
                     : deg.status == spectra::DegeneracyStatus::none    ? "none"
                                                                         : "undefined";
          if (deg.status == spectra::DegeneracyStatus::found) {
            nu = deg.nu.value();
            q = std::to_string(deg.nu.num) + "/" + std::to_string(deg.nu.den);
            residual = std::fabs(spectra::fd_dimensionless_energy(c.a, nu) -
                                 spectra::fd_dimensionless_energy(c.b, nu));
          }
        } else {
          const auto deg = spectra::degeneracy_nu_fdd(c.a, c.b, c.sigma);
          crossing = deg.status == spectra::DegeneracyStatus::found     ? "found"
                     : deg.status == spectra::DegeneracyStatus::none    ? "none"
                                                                         : "undefined";
          if (deg.status == spectra::DegeneracyStatus::found) {
            nu = deg.nu;
            residual = deg.residual;
          }
        }
        row.emplace_back(crossing);
        row.emplace_back(nu);
        row.emplace_back(q);
        row.emplace_back(residual);
        row.emplace_back(std::string("ok"));
      } catch (const std::exception& e) {
        row.emplace_back(std::string());
        row.emplace_back(kNaN);
        row.emplace_back(std::string());
        push_failure(row, 1, e.what());
        out.failed = true;
      }
      out.rows.push_back(std::move(row));
      return out;
    }, t);
    return emit_table(t, bag, rc);
  }

  const auto nus = named("nu", [&] { return parse_value_grid(bag.get("nu")); });
  std::vector<RationalToken> curves;
  if (!bag.get("q").empty()) curves = parse_rationals("q", bag.get("q"));

  Table t = make_table("degeneracy", bag,
                       {"kind", "n", "m", "q", "sigma", "nu", "epsilon", "status"});
  struct ScatterCell {
    bool curve;
    double sigma;
    spectra::QuantumNumbers qn;
    RationalToken q;
  };
  std::vector<ScatterCell> cells;
  for (double s : sigmas) {
    for (const auto& qn : states) cells.push_back({false, s, qn, {}});
    for (const auto& q : curves) cells.push_back({true, s, {}, q});
  }
  const int rc = run_sweep(cells.size(), [&](size_t i) {
    const ScatterCell& c = cells[i];
    CellRows out;
    for (double nu : nus) {
      Row row;
      row.emplace_back(std::string(c.curve ? "curve" : "level"));
      if (c.curve) {
        row.emplace_back(std::string());
        row.emplace_back(std::string());
        row.emplace_back(c.q.text);
      } else {
        row.emplace_back((long long)c.qn.n);
        row.emplace_back((long long)c.qn.m);
        row.emplace_back(std::string());
      }
      row.emplace_back(c.sigma);
      row.emplace_back(nu);
      try {
        const double eps = c.curve
                               ? spectra::degeneracy_curve_epsilon(c.sigma, c.q.num, c.q.den, nu)
                               : spectra::fdd_dimensionless_energy(c.qn, c.sigma, nu);
        row.emplace_back(eps);
        row.emplace_back(std::string("ok"));
      } catch (const std::exception& e) {
        push_failure(row, 1, e.what());
        out.failed = true;
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_density(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  check_system_flag(bag, pts);
  const int points = parse_single_int("points", bag.get("points"));
  Table t = make_table("density", bag,
                       {"n", "m", "omega", "omega_c", "lambda", "coordinate", "density",
                        "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    try {
      const auto profile = states::fdd_position_profile({p.n, p.m},
                                                        {p.omega, p.omega_c, p.lambda}, points);
      for (size_t k = 0; k < profile.abscissae.size(); ++k) {
        Row row = state_prefix(p);
        row.emplace_back(profile.abscissae[k]);
        row.emplace_back(profile.values[k]);
        row.emplace_back(std::string("ok"));
        out.rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      Row row = state_prefix(p);
      push_failure(row, 2, e.what());
      out.rows.push_back(std::move(row));
      out.failed = true;
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_momentum(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  const int points = parse_single_int("points", bag.get("points"));
  const double p_max = parse_single_double("p-max", bag.get("p-max"));
  const double tol_v = parse_single_double("tol", bag.get("tol"));
  const numerics::Tolerance tol{tol_v, tol_v, 2000};
  Table t = make_table("momentum", bag,
                       {"n", "m", "omega", "omega_c", "lambda", "p", "psi_magnitude", "gamma",
                        "norm_residual", "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    try {
      const spectra::QuantumNumbers qn{p.n, p.m};
      const spectra::SystemParams sp{p.omega, p.omega_c, p.lambda};
      if (p.lambda == 0.0) {
        const auto profile = states::fd_momentum_profile(qn, sp, points);
        const double residual = states::fd_momentum_norm_residual(qn, sp, tol);
        for (size_t k = 0; k < profile.abscissae.size(); ++k) {
          Row row = state_prefix(p);
          row.emplace_back(profile.abscissae[k]);
          row.emplace_back(std::sqrt(profile.values[k]));
          row.emplace_back(profile.values[k]);
          row.emplace_back(residual);
          row.emplace_back(std::string("ok"));
          out.rows.push_back(std::move(row));
        }
      } else {
        const auto table = momentum::fdd_momentum_density_table(qn, sp, points, p_max, tol);
        for (size_t k = 0; k < table.p.size(); ++k) {
          Row row = state_prefix(p);
          row.emplace_back(table.p[k]);
          row.emplace_back(table.psi_tilde_magnitude[k]);
          row.emplace_back(table.gamma[k]);
          row.emplace_back(table.norm_residual);
          row.emplace_back(std::string("ok"));
          out.rows.push_back(std::move(row));
        }
      }
    } catch (const std::exception& e) {
      Row row = state_prefix(p);
      push_failure(row, 4, e.what());
      out.rows.push_back(std::move(row));
      out.failed = true;
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_entropy(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  check_system_flag(bag, pts);
  const auto alphas = named("alpha", [&] { return parse_value_grid(bag.get("alpha")); });
  for (double a : alphas)
    if (!(a > 0.0) || std::fabs(a - 1.0) < 1e-12)
      throw std::invalid_argument("alpha: values must be positive and different from 1");
  const std::string& space_text = bag.get("space");
  std::vector<Space> spaces;
  if (space_text == "position")
    spaces = {Space::position};
  else if (space_text == "momentum")
    spaces = {Space::momentum};
  else if (space_text == "both")
    spaces = {Space::position, Space::momentum};
  else
    throw std::invalid_argument("space: must be position, momentum, or both");
  const int points = parse_single_int("points", bag.get("points"));
  const double tol_v = parse_single_double("tol", bag.get("tol"));
  const numerics::Tolerance tol{tol_v, tol_v, 2000};

  Table t = make_table("entropy", bag,
                       {"system", "n", "m", "omega", "omega_c", "lambda", "alpha", "space", "W",
                        "renyi", "tsallis", "shannon", "method", "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    const spectra::QuantumNumbers qn{p.n, p.m};
    const spectra::SystemParams sp{p.omega, p.omega_c, p.lambda};
    const std::string system_label = p.lambda == 0.0 ? "fd" : "fdd";

    std::unique_ptr<momentum::MomentumTable> table;
    auto ensure_table = [&]() -> const momentum::MomentumTable& {
      if (!table)
        table = std::make_unique<momentum::MomentumTable>(
            momentum::fdd_momentum_density_table(qn, sp, points, 0.0, tol));
      return *table;
    };

    for (Space space : spaces) {
      double shannon = kNaN;
      std::string shannon_error;
      try {
        if (space == Space::position)
          shannon = p.lambda == 0.0 ? entropy::shannon_fd_closed(qn, sp, space, tol)
                                    : entropy::shannon_fdd_position(qn, sp, tol).value;
        else
          shannon = p.lambda == 0.0 ? entropy::shannon_fd_closed(qn, sp, space, tol)
                                    : entropy::shannon_table(ensure_table());
      } catch (const std::exception& e) {
        shannon_error = e.what();
      }

      for (double alpha : alphas) {
        Row row;
        row.emplace_back(system_label);
        row.emplace_back((long long)p.n);
        row.emplace_back((long long)p.m);
        row.emplace_back(p.omega);
        row.emplace_back(p.omega_c);
        row.emplace_back(p.lambda);
        row.emplace_back(alpha);
        row.emplace_back(std::string(to_string(space)));
        try {
          const long long rounded = std::llround(alpha);
          const bool integral = std::fabs(alpha - rounded) < 1e-12 && rounded >= 2;
          double w = kNaN, log_w = kNaN;
          entropy::Method method = entropy::Method::quadrature;
          if (space == Space::position) {
            if (integral) {
              log_w = entropy::log_entropic_moment_fdd_closed(qn, sp, (int)rounded);
              w = std::exp(log_w);
              method = entropy::Method::closed_form;
            } else {
              w = entropy::entropic_moment_position_quadrature(qn, sp, alpha, tol);
              log_w = std::log(w);
            }
          } else if (p.lambda == 0.0) {
            if (integral) {
              log_w = entropy::log_entropic_moment_fd_momentum_closed(qn, sp, (int)rounded);
              w = std::exp(log_w);
              method = entropy::Method::closed_form;
            } else {
              w = entropy::entropic_moment_fd_momentum_quadrature(qn, sp, alpha, tol);
              log_w = std::log(w);
            }
          } else {
            w = entropy::entropic_moment_table(ensure_table(), alpha);
            log_w = std::log(w);
          }
          row.emplace_back(w);
          row.emplace_back(entropy::renyi_from_log_moment(log_w, alpha));
          row.emplace_back(entropy::tsallis_from_moment(w, alpha));
          row.emplace_back(shannon);
          row.emplace_back(std::string(method == entropy::Method::closed_form ? "closed_form"
                                                                              : "quadrature"));
          if (!shannon_error.empty()) {
            row.emplace_back("shannon failed: " + shannon_error);
            out.failed = true;
          } else {
            row.emplace_back(std::string("ok"));
          }
        } catch (const std::exception& e) {
          row.emplace_back(kNaN);
          row.emplace_back(kNaN);
          row.emplace_back(kNaN);
          row.emplace_back(shannon);
          row.emplace_back(std::string());
          row.emplace_back(std::string(e.what()));
          out.failed = true;
        }
        out.rows.push_back(std::move(row));
      }
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_uncertainty(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  const auto alphas = named("alpha", [&] { return parse_value_grid(bag.get("alpha")); });
  for (double a : alphas)
    if (!(a > 0.5 && a < 1.0))
      throw std::invalid_argument("alpha: values must lie strictly between 1/2 and 1");
  const int points = parse_single_int("points", bag.get("points"));
  const double tol_v = parse_single_double("tol", bag.get("tol"));
  const numerics::Tolerance tol{tol_v, tol_v, 2000};

  Table t = make_table("uncertainty", bag,
                       {"n", "m", "omega", "omega_c", "lambda", "alpha", "beta", "W_position",
                        "W_momentum", "renyi_position", "renyi_momentum", "bound", "xi_renyi",
                        "xi_tsallis", "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    const spectra::QuantumNumbers qn{p.n, p.m};
    const spectra::SystemParams sp{p.omega, p.omega_c, p.lambda};

    std::unique_ptr<momentum::MomentumTable> table;
    std::string table_error;
    if (p.lambda > 0.0) {
      try {
        table = std::make_unique<momentum::MomentumTable>(
            momentum::fdd_momentum_density_table(qn, sp, points, 0.0, tol));
      } catch (const std::exception& e) {
        table_error = e.what();
      }
    }

    for (double alpha : alphas) {
      Row row = state_prefix(p);
      row.emplace_back(alpha);
      try {
        if (!table_error.empty()) throw std::runtime_error(table_error);
        const auto rep = entropy::renyi_uncertainty(qn, sp, alpha, tol, table.get());
        const double xi_t =
            std::pow(rep.alpha / 3.141592653589793238462643383279502884, 0.5 / rep.alpha) *
                std::pow(rep.moment_position, 0.5 / rep.alpha) -
            std::pow(rep.beta / 3.141592653589793238462643383279502884, 0.5 / rep.beta) *
                std::pow(rep.moment_momentum, 0.5 / rep.beta);
        row.emplace_back(rep.beta);
        row.emplace_back(rep.moment_position);
        row.emplace_back(rep.moment_momentum);
        row.emplace_back(rep.renyi_position);
        row.emplace_back(rep.renyi_momentum);
        row.emplace_back(rep.bound);
        row.emplace_back(rep.xi);
        row.emplace_back(xi_t);
        row.emplace_back(std::string("ok"));
      } catch (const std::exception& e) {
        push_failure(row, 8, e.what());
        out.failed = true;
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_dispersion(OptionBag& bag) {
  const auto pts = read_state_points(bag);
  const double tol_v = parse_single_double("tol", bag.get("tol"));
  const numerics::Tolerance tol{tol_v, tol_v, 2000};
  Table t = make_table("dispersion", bag,
                       {"n", "m", "omega", "omega_c", "lambda", "r2", "p2", "p2_angular",
                        "p2_radial", "p2_radial_closed", "closed_agrees", "product",
                        "fd_reference", "status"});
  const int rc = run_sweep(pts.size(), [&](size_t i) {
    const StatePoint& p = pts[i];
    CellRows out;
    Row row = state_prefix(p);
    try {
      const spectra::QuantumNumbers qn{p.n, p.m};
      const spectra::SystemParams sp{p.omega, p.omega_c, p.lambda};
      const auto p2 = dispersion::p2_fdd(qn, sp, tol);
      double r2;
      if (p.lambda == 0.0) {
        sp.validate();
        qn.validate();
        r2 = qn.c() / sp.omega_t();
      } else {
        r2 = dispersion::r_moment_fdd(qn, sp, 2);
      }
      row.emplace_back(r2);
      row.emplace_back(p2.total);
      row.emplace_back(p2.angular);
      row.emplace_back(p2.radial);
      row.emplace_back(p2.radial_closed);
      row.emplace_back((long long)(p2.closed_agrees ? 1 : 0));
      row.emplace_back(r2 * p2.total);
      row.emplace_back(qn.c() * qn.c());
      row.emplace_back(std::string(p2.diagnostic.empty() ? "ok" : p2.diagnostic));
      if (!p2.diagnostic.empty()) out.failed = true;
    } catch (const std::exception& e) {
      push_failure(row, 8, e.what());
      out.failed = true;
    }
    out.rows.push_back(std::move(row));
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_omega_cut(OptionBag& bag) {
  const auto ns = named("n", [&] { return parse_index_grid(bag.get("n")); });
  const auto ls = named("l", [&] { return parse_index_grid(bag.get("l")); });
  const auto ws = named("omega", [&] { return parse_value_grid(bag.get("omega")); });
  const auto las = named("lambda", [&] { return parse_value_grid(bag.get("lambda")); });
  const double tol_v = parse_single_double("tol", bag.get("tol"));
  const numerics::Tolerance tol{tol_v, tol_v, 2000};

  struct CutCell {
    int n, l;
    double omega, lambda;
  };
  std::vector<CutCell> cells;
  for (int n : ns)
    for (int l : ls)
      for (double w : ws)
        for (double la : las) cells.push_back({n, l, w, la});

  Table t = make_table("omega-cut", bag,
                       {"n", "l", "omega", "lambda", "omega_cut", "r2_residual",
                        "p2_difference", "status"});
  const int rc = run_sweep(cells.size(), [&](size_t i) {
    const CutCell& c = cells[i];
    CellRows out;
    Row row{(long long)c.n, (long long)c.l, c.omega, c.lambda};
    try {
      const double oc = dispersion::omega_cut(c.n, c.l, c.omega, c.lambda);
      const double target = (2.0 * c.n + c.l + 1.0) / c.omega;
      const double r2 = dispersion::r_moment_fdd({c.n, c.l}, {c.omega, oc, c.lambda}, 2);
      const double delta = dispersion::omega_cut_p2_difference(c.n, c.l, c.omega, c.lambda, tol);
      row.emplace_back(oc);
      row.emplace_back(std::fabs(r2 - target));
      row.emplace_back(delta);
      row.emplace_back(std::string("ok"));
    } catch (const std::exception& e) {
      push_failure(row, 3, e.what());
      out.failed = true;
    }
    out.rows.push_back(std::move(row));
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_geometry(OptionBag& bag) {
  const auto las = named("lambda", [&] { return parse_value_grid(bag.get("lambda")); });
  const auto rs = named("r", [&] { return parse_value_grid(bag.get("r")); });
  Table t = make_table("geometry", bag,
                       {"lambda", "r", "geodesic_radius", "curvature", "height",
                        "paraboloid_height", "hyperboloid_height", "cone_height", "status"});
  const int rc = run_sweep(las.size(), [&](size_t i) {
    const double lambda = las[i];
    CellRows out;
    for (double r : rs) {
      Row row{lambda, r};
      try {
        const geometry::SurfaceParams sp{lambda};
        sp.validate();
        const auto point = geometry::embed(sp, r);
        row.emplace_back(point.geodesic);
        row.emplace_back(geometry::scalar_curvature(sp, r));
        row.emplace_back(point.height);
        row.emplace_back(geometry::paraboloid_height(sp, point.geodesic));
        row.emplace_back(geometry::hyperboloid_height(sp, point.geodesic));
        row.emplace_back(geometry::cone_height(point.geodesic));
        row.emplace_back(std::string("ok"));
      } catch (const std::exception& e) {
        push_failure(row, 6, e.what());
        out.failed = true;
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }, t);
  return emit_table(t, bag, rc);
}

int run_validate() {
  const auto results = validation::run_all();
  int passed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      ++passed;
      std::cout << "[PASS] " << r.name << "\n";
    } else {
      std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << "result: " << passed << "/" << results.size() << " checks passed\n";
  return passed == (int)results.size() ? 0 : 1;
}

void add_state_options(OptionBag& bag, const std::string& n_def, const std::string& m_def,
                       const std::string& lambda_def) {
  bag.add("n", n_def, "radial quantum number grid");
  bag.add("m", m_def, "angular momentum grid (use --m=-2 style for negatives)");
  bag.add("omega", "1", "confinement frequency grid");
  bag.add("omega-c", "0", "cyclotron frequency grid");
  bag.add("lambda", lambda_def, "deformation strength grid");
}

void add_io_options(OptionBag& bag) {
  bag.add("format", "csv", "output format: csv or json");
  bag.add("output", "", "output path; empty or '-' writes to stdout");
}

}  // namespace

std::vector<double> parse_value_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok.empty()) throw std::invalid_argument("grid '" + text + "' has an empty entry");
    const size_t c1 = tok.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_scalar_token(tok));
      continue;
    }
    const size_t c2 = tok.find(':', c1 + 1);
    const double start = parse_scalar_token(tok.substr(0, c1));
    const double stop = parse_scalar_token(
        c2 == std::string::npos ? tok.substr(c1 + 1) : tok.substr(c1 + 1, c2 - c1 - 1));
    const double step = c2 == std::string::npos ? 1.0 : parse_scalar_token(tok.substr(c2 + 1));
    if (step == 0.0) throw std::invalid_argument("range '" + tok + "' has zero step");
    const double span = (stop - start) / step;
    if (span < -0.5) throw std::invalid_argument("range '" + tok + "' is empty");
    const long long k_max = (long long)std::floor(span + 0.5 + 1e-12);
    if (k_max > 10'000'000) throw std::invalid_argument("range '" + tok + "' is too long");
    for (long long k = 0; k <= k_max; ++k) out.push_back(start + k * step);
  }
  if (out.empty()) throw std::invalid_argument("grid '" + text + "' is empty");
  return out;
}

std::vector<int> parse_index_grid(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_value_grid(text)) {
    const long long r = std::llround(v);
    if (std::fabs(v - r) > 1e-9)
      throw std::invalid_argument("grid '" + text + "' holds non-integer value");
    out.push_back((int)r);
  }
  return out;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"batch toolkit for flat and Darboux-deformed quantum dot observables"};
  app.require_subcommand(1);

  struct Command {
    std::unique_ptr<OptionBag> bag;
    CLI::App* sub = nullptr;
    std::function<int(OptionBag&)> run;
  };
  std::vector<Command> commands;

  auto register_command = [&](const std::string& name, const std::string& desc,
                              const std::function<void(OptionBag&)>& setup,
                              const std::function<int(OptionBag&)>& run) {
    Command c;
    c.sub = app.add_subcommand(name, desc);
    c.bag = std::make_unique<OptionBag>(c.sub);
    setup(*c.bag);
    c.run = run;
    commands.push_back(std::move(c));
  };

  register_command(
      "spectrum", "energy levels and derived frequencies over a parameter grid",
      [](OptionBag& b) {
        add_state_options(b, "0:3", "-3:3", "0");
        add_io_options(b);
      },
      run_spectrum);
  register_command(
      "degeneracy",
      "dimensionless level scan over nu with optional crossing curves, or all-pairs "
      "crossing analysis with --pairs",
      [](OptionBag& b) {
        b.add("sigma", "0", "deformation ratio grid (0 selects the flat system)");
        b.add("nu", "0:1:0.01", "field ratio grid for the level scan");
        b.add("nmax", "4", "largest radial quantum number");
        b.add("mmax", "6", "largest |m|");
        b.add("q", "", "comma list of rational field ratios p/q for crossing curves");
        b.add_flag("pairs", "emit the all-pairs crossing table instead of the level scan");
        add_io_options(b);
      },
      run_degeneracy);
  register_command(
      "density", "radial position density profiles",
      [](OptionBag& b) {
        b.add("system", "fdd", "fd (requires lambda 0) or fdd");
        add_state_options(b, "0", "0", "0");
        b.add("points", "512", "samples per profile");
        add_io_options(b);
      },
      run_density);
  register_command(
      "momentum", "radial momentum density tables",
      [](OptionBag& b) {
        add_state_options(b, "0", "0", "0.1");
        b.add("points", "512", "samples per table");
        b.add("p-max", "0", "table reach; 0 picks an automatic span");
        b.add("tol", "1e-10", "quadrature tolerance");
        add_io_options(b);
      },
      run_momentum);
  register_command(
      "entropy", "entropic moments with Renyi, Tsallis, and Shannon entropies",
      [](OptionBag& b) {
        b.add("system", "fdd", "fd (requires lambda 0) or fdd");
        add_state_options(b, "0", "0", "0");
        b.add("alpha", "2", "moment order grid (positive, not 1)");
        b.add("space", "position", "position, momentum, or both");
        b.add("points", "1024", "momentum table samples when lambda > 0");
        b.add("tol", "1e-10", "quadrature tolerance");
        add_io_options(b);
      },
      run_entropy);
  register_command(
      "uncertainty", "conjugate-order Renyi and Tsallis uncertainty diagnostics",
      [](OptionBag& b) {
        add_state_options(b, "0", "0", "0");
        b.add("alpha", "2/3", "position-side order grid in (1/2, 1)");
        b.add("points", "1024", "momentum table samples when lambda > 0");
        b.add("tol", "1e-10", "quadrature tolerance");
        add_io_options(b);
      },
      run_uncertainty);
  register_command(
      "dispersion", "second moments and the uncertainty product",
      [](OptionBag& b) {
        add_state_options(b, "0:3", "0:3", "0");
        b.add("tol", "1e-10", "quadrature tolerance");
        add_io_options(b);
      },
      run_dispersion);
  register_command(
      "omega-cut", "matching field strength and the momentum-side gap it leaves",
      [](OptionBag& b) {
        b.add("n", "0:3", "radial quantum number grid");
        b.add("l", "0:3", "angular momentum modulus grid (state taken at m = +l)");
        b.add("omega", "1", "confinement frequency grid");
        b.add("lambda", "0.1,0.5,1", "deformation strength grid");
        b.add("tol", "1e-10", "quadrature tolerance");
        add_io_options(b);
      },
      run_omega_cut);
  register_command(
      "geometry", "embedded surface profile with comparison heights",
      [](OptionBag& b) {
        b.add("lambda", "1", "deformation strength grid (positive)");
        b.add("r", "0:5:0.05", "coordinate radius grid");
        add_io_options(b);
      },
      run_geometry);
  register_command(
      "validate", "run the fast self-consistency matrix and print pass/fail lines",
      [](OptionBag&) {}, [](OptionBag&) { return run_validate(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (auto& c : commands) {
      if (c.sub->parsed()) {
        c.bag->apply_config();
        return c.run(*c.bag);
      }
    }
    std::cerr << app.help();
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fdd::cli

#include "ldpc/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldpc/bounds.hpp"
#include "ldpc/ensemble_sim.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/exact_spectrum.hpp"
#include "ldpc/format.hpp"
#include "ldpc/growth_rate.hpp"

namespace ldpc::cli {

namespace {

using nlohmann::json;

constexpr const char* kUndefined = "not defined for this regime";

struct RunConfig {
  std::uint32_t q = 2;
  std::uint32_t c = 3;
  std::uint32_t d = 6;
  std::uint32_t n = 12;
  double xmin = 0.0;
  double xmax = 1.0;
  std::uint32_t steps = 1001;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint32_t l0 = 1;
  double alpha = 0.5;
  bool filter = false;
  unsigned workers = 0;
  std::uint32_t l = 2;
  std::vector<std::uint32_t> ns{24, 48, 96, 192, 384};
  std::vector<std::uint32_t> ds{6, 12, 24, 48};
  std::uint32_t r_num = 1;
  std::uint32_t r_den = 2;
  int id = 1;
  std::string format;
  std::string output;
  std::uint64_t enum_cap = std::uint64_t{1} << 24;
  std::uint32_t n_cap = 2000;
  std::uint64_t config_cap = 100'000'000;
};

// One result in both shapes; the caller picks the one requested.
struct Result {
  json params = json::object();
  json data = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<double> grid(const RunConfig& cfg) {
  if (cfg.steps < 2) throw ParameterError("--steps must be at least 2");
  if (!(cfg.xmin < cfg.xmax)) throw ParameterError("--xmin must be below --xmax");
  std::vector<double> xs(cfg.steps);
  for (std::uint32_t i = 0; i < cfg.steps; ++i) xs[i] = cfg.xmin + (cfg.xmax - cfg.xmin) * i / (cfg.steps - 1);
  xs.back() = cfg.xmax;
  return xs;
}

json ensemble_json(const EnsembleParams& p) { return {{"q", p.q}, {"c", p.c}, {"d", p.d}, {"n", p.n}}; }

json optional_json(const std::optional<double>& v) { return v ? real_to_json(*v) : json(kUndefined); }
std::string optional_csv(const std::optional<double>& v) { return v ? format_real(*v) : kUndefined; }

void spectrum_rows(const SpectrumTable& table, Result& r) {
  r.header = {"l", "numerator", "denominator", "approx"};
  json values = json::array();
  for (std::size_t l = 0; l < table.values.size(); ++l) {
    const mpq_class& v = table.values[l];
    r.rows.push_back({std::to_string(l), v.get_num().get_str(), v.get_den().get_str(), format_real(to_double(v))});
    json entry = rational_to_json(v);
    entry["l"] = l;
    values.push_back(entry);
  }
  r.data["values"] = values;
}

void check_caps(const RunConfig& cfg) {
  if (cfg.enum_cap == 0 || cfg.n_cap == 0 || cfg.config_cap == 0) throw ParameterError("caps must be positive");
}

Result cmd_spectrum(const RunConfig& cfg) {
  check_caps(cfg);
  const EnsembleParams p = make_params(cfg.q, cfg.c, cfg.d, cfg.n);
  Result r;
  r.params = ensemble_json(p);
  spectrum_rows(avg_weight_distribution(p, {cfg.n_cap}), r);
  return r;
}

Result cmd_exhaustive(const RunConfig& cfg) {
  check_caps(cfg);
  const EnsembleParams p = make_params(cfg.q, cfg.c, cfg.d, cfg.n);
  ExhaustiveOptions opts;
  opts.cap = cfg.config_cap;
  opts.enumeration.cap = cfg.enum_cap;
  const SpectrumTable table = exhaustive_ensemble(p, opts);
  Result r;
  r.params = ensemble_json(p);
  spectrum_rows(table, r);
  if (p.n <= cfg.n_cap) {
    r.data["equals_recurrence"] = avg_weight_distribution(p, {cfg.n_cap}).values == table.values;
  }
  return r;
}

Result cmd_growth(const RunConfig& cfg) {
  Result r;
  r.params = {{"q", cfg.q}, {"c", cfg.c}, {"d", cfg.d}, {"xmin", cfg.xmin}, {"xmax", cfg.xmax}, {"steps", cfg.steps}};
  r.header = {"x", "omega", "domega"};
  json points = json::array();
  for (const double x : grid(cfg)) {
    const GrowthPoint g = growth_point(cfg.q, cfg.c, cfg.d, x);
    r.rows.push_back({format_real(x), format_real(g.omega), format_real(g.domega)});
    points.push_back({{"x", x}, {"omega", real_to_json(g.omega)}, {"domega", real_to_json(g.domega)}});
  }
  r.data["points"] = points;
  return r;
}

Result cmd_delta(const RunConfig& cfg) {
  Result r;
  r.params = {{"q", cfg.q}, {"d", cfg.d}, {"xmin", cfg.xmin}, {"xmax", cfg.xmax}, {"steps", cfg.steps}};
  r.header = {"x", "z", "zhat1", "xhat1", "delta"};
  json points = json::array();
  for (const double x : grid(cfg)) {
    const DeltaEval e = delta(cfg.q, cfg.d, x);
    r.rows.push_back({format_real(x), format_real(e.z), format_real(e.zhat1), format_real(e.xhat1),
                      format_real(e.delta)});
    points.push_back({{"x", x},
                      {"z", real_to_json(e.z)},
                      {"zhat1", real_to_json(e.zhat1)},
                      {"xhat1", real_to_json(e.xhat1)},
                      {"delta", real_to_json(e.delta)}});
  }
  r.data["points"] = points;
  return r;
}

Result cmd_landmarks(const RunConfig& cfg) {
  const Landmarks lm = landmarks(cfg.q, cfg.c, cfg.d);
  Result r;
  r.params = {{"q", cfg.q}, {"c", cfg.c}, {"d", cfg.d}};
  std::optional<double> res_x0;
  std::optional<double> res_x3;
  std::optional<double> res_z2;
  if (lm.x0) res_x0 = std::abs(omega(cfg.q, cfg.c, cfg.d, *lm.x0));
  if (lm.x3) res_x3 = std::abs(domega(cfg.q, cfg.c, cfg.d, *lm.x3));
  if (lm.zhat2) res_z2 = std::abs(xi(cfg.q, cfg.c, cfg.d, *lm.zhat2));

  r.data = {{"x1", real_to_json(lm.x1)},
            {"z1", real_to_json(lm.z1)},
            {"zhat2", optional_json(lm.zhat2)},
            {"zhat2_neg", optional_json(lm.zhat2_neg)},
            {"x2", optional_json(lm.x2)},
            {"x3", optional_json(lm.x3)},
            {"x0", optional_json(lm.x0)},
            {"residuals",
             {{"omega_x0", optional_json(res_x0)}, {"domega_x3", optional_json(res_x3)}, {"xi_zhat2", optional_json(res_z2)}}}};
  r.header = {"key", "value"};
  r.rows = {{"x1", format_real(lm.x1)},
            {"z1", format_real(lm.z1)},
            {"zhat2", optional_csv(lm.zhat2)},
            {"zhat2_neg", optional_csv(lm.zhat2_neg)},
            {"x2", optional_csv(lm.x2)},
            {"x3", optional_csv(lm.x3)},
            {"x0", optional_csv(lm.x0)},
            {"residual_omega_x0", optional_csv(res_x0)},
            {"residual_domega_x3", optional_csv(res_x3)},
            {"residual_xi_zhat2", optional_csv(res_z2)}};
  return r;
}

json proportion_json(const ProportionEstimate& p) {
  return {{"hits", p.hits}, {"total", p.total}, {"estimate", real_to_json(p.estimate)},
          {"half_width", real_to_json(p.half_width)}};
}

json means_json(const std::vector<MeanEstimate>& m) {
  json out = json::array();
  for (std::size_t l = 0; l < m.size(); ++l) {
    out.push_back({{"l", l}, {"mean", real_to_json(m[l].mean)}, {"std_error", real_to_json(m[l].std_error)}});
  }
  return out;
}

Result cmd_simulate(const RunConfig& cfg) {
  check_caps(cfg);
  const EnsembleParams p = make_params(cfg.q, cfg.c, cfg.d, cfg.n);
  MonteCarloOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.l0 = cfg.l0;
  opts.alpha = cfg.alpha;
  opts.filter_on = cfg.filter;
  opts.workers = cfg.workers;
  opts.enumeration.cap = cfg.enum_cap;
  const SimReport rep = monte_carlo(p, opts);

  Result r;
  r.params = ensemble_json(p);
  r.params["trials"] = cfg.trials;
  r.params["l0"] = cfg.l0;
  r.params["alpha"] = cfg.alpha;
  r.params["filter"] = cfg.filter;

  json hist = json::array();
  for (std::size_t i = 0; i < rep.dmin_histogram.size(); ++i) {
    if (rep.dmin_histogram[i] == 0) continue;
    const json dmin = i + 1 == rep.dmin_histogram.size() ? json("infinite") : json(i + 1);
    hist.push_back({{"dmin", dmin}, {"count", rep.dmin_histogram[i]}});
  }
  r.data = {{"trials", rep.trials},
            {"upper_weight", rep.upper_weight},
            {"mean_spectrum", means_json(rep.mean_spectrum)},
            {"p_dmin_le", proportion_json(rep.p_dmin_in_range)},
            {"dmin_histogram", hist}};
  if (rep.filter_on) {
    r.data["filtered"] = {{"passes", rep.filter_passes},
                          {"filter_pass_rate", real_to_json(rep.filter_pass_rate)},
                          {"mean_spectrum", means_json(rep.filtered_mean_spectrum)},
                          {"p_dmin_le", proportion_json(rep.filtered_p_dmin_in_range)}};
  }

  r.header = {"l", "mean", "std_error"};
  if (rep.filter_on) {
    r.header.push_back("filtered_mean");
    r.header.push_back("filtered_std_error");
  }
  for (std::size_t l = 0; l < rep.mean_spectrum.size(); ++l) {
    std::vector<std::string> row{std::to_string(l), format_real(rep.mean_spectrum[l].mean),
                                 format_real(rep.mean_spectrum[l].std_error)};
    if (rep.filter_on) {
      const bool have = l < rep.filtered_mean_spectrum.size();
      row.push_back(have ? format_real(rep.filtered_mean_spectrum[l].mean) : "nan");
      row.push_back(have ? format_real(rep.filtered_mean_spectrum[l].std_error) : "nan");
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Result cmd_bounds(const RunConfig& cfg) {
  const EnsembleParams p = make_params(cfg.q, cfg.c, cfg.d, cfg.n);
  const MinDistanceBoundReport b = cfg.filter ? no_zero_column_bound(p, cfg.alpha) : min_distance_bound(p, cfg.l0, cfg.alpha);
  Result r;
  r.params = ensemble_json(p);
  r.params["l0"] = cfg.l0;
  r.params["alpha"] = cfg.alpha;
  r.params["filter"] = cfg.filter;
  const std::vector<std::pair<std::string, double>> fields{
      {"kappa", kappa(p.q, p.c, p.d)},          {"l0", b.l0},
      {"delta", b.delta},                       {"exponent_term", b.exponent_term},
      {"poly_term", b.poly_term},               {"omega_alpha", b.omega_alpha},
      {"exp_term", b.exp_term},                 {"phi", b.phi}};
  r.header = {"key", "value"};
  for (const auto& [k, v] : fields) {
    const bool integral = k == "l0" || k == "delta" || k == "exponent_term";
    r.data[k] = integral ? json(static_cast<long long>(v)) : real_to_json(v);
    r.rows.push_back({k, integral ? std::to_string(static_cast<long long>(v)) : format_real(v)});
  }
  return r;
}

Result cmd_gv_limit(const RunConfig& cfg) {
  if (cfg.r_den == 0 || cfg.r_num == 0 || cfg.r_num > cfg.r_den) throw ParameterError("need 0 < r-num <= r-den");
  const double ratio = static_cast<double>(cfg.r_num) / cfg.r_den;
  const double gv = gv_threshold(cfg.q, ratio);
  Result r;
  r.params = {{"q", cfg.q}, {"ds", cfg.ds}, {"r_num", cfg.r_num}, {"r_den", cfg.r_den}};
  r.header = {"d", "c", "x0", "gv", "gap"};
  json rows = json::array();
  for (const std::uint32_t d : cfg.ds) {
    if ((std::uint64_t{d} * cfg.r_num) % cfg.r_den != 0) {
      throw ParameterError("c = d * r-num / r-den is not an integer for d = " + std::to_string(d));
    }
    const auto c = static_cast<std::uint32_t>(std::uint64_t{d} * cfg.r_num / cfg.r_den);
    const std::optional<double> x0 = landmarks(cfg.q, c, d).x0;
    if (!x0) throw ParameterError("x0 is not defined for c = " + std::to_string(c));
    const double gap = std::abs(*x0 - gv);
    r.rows.push_back({std::to_string(d), std::to_string(c), format_real(*x0), format_real(gv), format_real(gap)});
    rows.push_back({{"d", d}, {"c", c}, {"x0", *x0}, {"gv", gv}, {"gap", gap}});
  }
  r.data = {{"gv", gv}, {"rows", rows}};
  return r;
}

Result cmd_figure(const RunConfig& cfg) {
  const Table t = figure_data(cfg.id);
  Result r;
  r.params = {{"id", cfg.id}};
  r.header = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    json jrow = json::array();
    for (const double v : row) {
      line.push_back(format_real(v));
      jrow.push_back(real_to_json(v));
    }
    r.rows.push_back(std::move(line));
    rows.push_back(std::move(jrow));
  }
  r.data = {{"columns", t.columns}, {"rows", rows}};
  return r;
}

Result cmd_small_weight(const RunConfig& cfg) {
  check_caps(cfg);
  const ScalingFit fit = small_weight_scaling(cfg.q, cfg.c, cfg.d, cfg.l, cfg.ns, {cfg.n_cap});
  Result r;
  r.params = {{"q", cfg.q}, {"c", cfg.c}, {"d", cfg.d}, {"l", cfg.l}, {"ns", cfg.ns}};
  r.header = {"n", "numerator", "denominator", "approx"};
  json values = json::array();
  for (const auto& [n, v] : fit.values) {
    r.rows.push_back({std::to_string(n), v.get_num().get_str(), v.get_den().get_str(), format_real(to_double(v))});
    json entry = rational_to_json(v);
    entry["n"] = n;
    values.push_back(entry);
  }
  r.data = {{"values", values},
            {"exact_zero", fit.exact_zero},
            {"vanishes_identically", small_weight_vanishes(cfg.q, cfg.c, cfg.l)},
            {"predicted_exponent", small_weight_exponent(cfg.c, cfg.l)}};
  if (fit.exact_zero) {
    r.data["slope"] = kUndefined;
    r.data["intercept"] = kUndefined;
  } else {
    r.data["slope"] = real_to_json(fit.slope);
    r.data["intercept"] = real_to_json(fit.intercept);
  }
  return r;
}

void emit(const Result& r, const std::string& command, const RunConfig& cfg, const std::string& format,
          std::ostream& out) {
  if (format == "csv") {
    write_csv(out, r.header, r.rows);
    return;
  }
  json doc;
  doc["meta"] = {{"command", command}, {"params", r.params}, {"seed", cfg.seed}, {"version", kVersion}};
  doc["data"] = r.data;
  out << doc.dump(2) << '\n';
}

void report_error(std::ostream& err, int code, const std::string& message) {
  err << json{{"code", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

Table figure_data(int id) {
  if (id < 1 || id > 5) throw ParameterError("figure id must be in 1..5, got " + std::to_string(id));
  struct Pair {
    std::uint32_t q, d;
  };
  const Pair pairs[] = {{2, 5}, {2, 6}, {3, 5}, {3, 6}};
  Table t;
  t.columns.push_back("x");
  if (id == 1) {
    for (const auto& p : pairs) t.columns.push_back("delta_" + std::to_string(p.q) + "_" + std::to_string(p.d));
  } else {
    const Pair p = pairs[id - 2];
    for (std::uint32_t c = 1; c <= 3; ++c) {
      t.columns.push_back("omega_" + std::to_string(p.q) + "_" + std::to_string(c) + "_" + std::to_string(p.d));
    }
  }
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    std::vector<double> row{x};
    if (id == 1) {
      for (const auto& p : pairs) row.push_back(delta(p.q, p.d, x).delta);
    } else {
      const Pair p = pairs[id - 2];
      for (std::uint32_t c = 1; c <= 3; ++c) row.push_back(omega(p.q, c, p.d, x));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Weight spectra and growth rates of regular LDPC ensembles over GF(q)", "ldpc-spectra"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  using Handler = std::function<Result(const RunConfig&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add_command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto ensemble = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--q", cfg.q, "field size (prime power)")->required();
    sub->add_option("--c", cfg.c, "variable-node degree")->required();
    sub->add_option("--d", cfg.d, "check-node degree")->required();
    if (with_n) sub->add_option("--n", cfg.n, "block length")->required();
  };
  auto grid_opts = [&](CLI::App* sub) {
    sub->add_option("--xmin", cfg.xmin, "grid start");
    sub->add_option("--xmax", cfg.xmax, "grid end");
    sub->add_option("--steps", cfg.steps, "number of grid points (>= 2)");
  };

  CLI::App* spectrum = add_command("spectrum", "exact average weight distribution", cmd_spectrum);
  ensemble(spectrum, true);
  spectrum->add_option("--n-cap", cfg.n_cap, "largest accepted n");

  CLI::App* growth = add_command("growth", "growth rate omega and its derivative on a grid", cmd_growth);
  ensemble(growth, false);
  grid_opts(growth);

  CLI::App* lm = add_command("landmarks", "x1, x0, x2, x3 and zhat2 with residuals", cmd_landmarks);
  ensemble(lm, false);

  CLI::App* del = add_command("delta", "delta and its stationary point on a grid", cmd_delta);
  del->add_option("--q", cfg.q, "field size (prime power)")->required();
  del->add_option("--d", cfg.d, "check-node degree")->required();
  grid_opts(del);

  CLI::App* sim = add_command("simulate", "Monte-Carlo sampling of the ensemble", cmd_simulate);
  ensemble(sim, true);
  sim->add_option("--trials", cfg.trials, "number of sampled codes");
  sim->add_option("--seed", cfg.seed, "master seed");
  sim->add_option("--l0", cfg.l0, "lower end of the dmin event");
  sim->add_option("--alpha", cfg.alpha, "upper end of the dmin event is floor(n alpha)");
  sim->add_flag("--filter", cfg.filter, "also report statistics over codes without all-zero columns");
  sim->add_option("--workers", cfg.workers, "worker threads (0 = automatic)");
  sim->add_option("--enum-cap", cfg.enum_cap, "largest q^dim enumerated");

  CLI::App* exh = add_command("exhaustive", "exact ensemble average over every configuration", cmd_exhaustive);
  ensemble(exh, true);
  exh->add_option("--cap", cfg.config_cap, "largest (cn)! (q-1)^cn accepted");
  exh->add_option("--enum-cap", cfg.enum_cap, "largest q^dim enumerated");
  exh->add_option("--n-cap", cfg.n_cap, "largest n compared against the recurrence");

  CLI::App* bnd = add_command("bounds", "structural terms of the minimum-distance bound", cmd_bounds);
  ensemble(bnd, true);
  bnd->add_option("--l0", cfg.l0, "lower end of the dmin event");
  bnd->add_option("--alpha", cfg.alpha, "relative distance");
  bnd->add_flag("--filter", cfg.filter, "condition on no all-zero column (l0 = 2)");

  CLI::App* gv = add_command("gv-limit", "x0(q, d r, d) against the GV threshold", cmd_gv_limit);
  gv->add_option("--q", cfg.q, "field size (prime power)");
  gv->add_option("--ds", cfg.ds, "check degrees")->delimiter(',');
  gv->add_option("--r-num", cfg.r_num, "c/d numerator");
  gv->add_option("--r-den", cfg.r_den, "c/d denominator");

  CLI::App* fig = add_command("figure", "curve data for figures 1-5", cmd_figure);
  fig->add_option("--id", cfg.id, "figure number")->required();

  CLI::App* sw = add_command("small-weight", "E[A(l)] at fixed l over growing n, with slope fit", cmd_small_weight);
  ensemble(sw, false);
  sw->add_option("--l", cfg.l, "weight");
  sw->add_option("--ns", cfg.ns, "block lengths")->delimiter(',');
  sw->add_option("--n-cap", cfg.n_cap, "largest accepted n");

  for (auto& entry : commands) {
    if (entry.first != sim) entry.first->add_option("--seed", cfg.seed, "recorded in the output metadata");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, kParameterExit, e.what());
    return kParameterExit;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      const Result result = handler(cfg);
      const std::string format = !cfg.format.empty() ? cfg.format : (sub == fig ? "csv" : "json");
      if (cfg.output.empty()) {
        emit(result, sub->get_name(), cfg, format, out);
      } else {
        std::ostringstream buffer;
        emit(result, sub->get_name(), cfg, format, buffer);
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) throw ParameterError("cannot open output file " + cfg.output);
        file << buffer.str();
        if (!file) throw ParameterError("failed writing " + cfg.output);
      }
      return kOk;
    }
  } catch (const CapacityError& e) {
    report_error(err, kCapacityExit, e.what());
    return kCapacityExit;
  } catch (const std::invalid_argument& e) {
    report_error(err, kParameterExit, e.what());
    return kParameterExit;
  } catch (const std::domain_error& e) {
    report_error(err, kParameterExit, e.what());
    return kParameterExit;
  } catch (const std::exception& e) {
    report_error(err, 1, e.what());
    return 1;
  }
  report_error(err, kParameterExit, "no subcommand");
  return kParameterExit;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ldpc-spectra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ldpc::cli

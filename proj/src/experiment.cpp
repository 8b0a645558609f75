#include "aqcsim/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "aqcsim/errors.hpp"
#include "aqcsim/evolution.hpp"
#include "aqcsim/models.hpp"
#include "aqcsim/simd/kernels.hpp"
#include "aqcsim/spectral.hpp"
#include "aqcsim/state.hpp"
#include "worker_pool.hpp"

namespace aqcsim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string buf(trim(text));
  if (buf == "inf") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v))
    throw InvalidArgument(std::string(what) + ": not a finite number: '" + buf + "'");
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string buf(trim(text));
  char* end = nullptr;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (buf.empty() || end != buf.c_str() + buf.size() || v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max())
    throw InvalidArgument(std::string(what) + ": not an integer: '" + buf + "'");
  return static_cast<int>(v);
}

bool parse_bool(std::string_view text, std::string_view what) {
  if (text == "forward") return false;
  if (text == "reverse") return true;
  throw InvalidArgument(std::string(what) + ": expected forward|reverse, got '" + std::string(text) + "'");
}

Task parse_task(std::string_view text) {
  if (text == "spectrum") return Task::spectrum;
  if (text == "sweep") return Task::sweep;
  if (text == "evolve") return Task::evolve;
  throw InvalidArgument("unknown task '" + std::string(text) + "'");
}

ModelKind parse_model(std::string_view text) {
  if (text == "xy") return ModelKind::xy;
  if (text == "ising2d") return ModelKind::ising2d;
  throw InvalidArgument("unknown model '" + std::string(text) + "' (expected xy|ising2d)");
}

const std::set<std::string_view>& initial_names() {
  static const std::set<std::string_view> names{"auto", "paramagnetic", "ghz", "up", "down"};
  return names;
}

// Header keys written for information only; parse_header skips them.
const std::set<std::string_view>& informational_keys() {
  static const std::set<std::string_view> keys{"version", "kernel", "wall_clock_s", "transition_s", "resolved_steps"};
  return keys;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<double> uniform_s(int count) {
  std::vector<double> s(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) s[static_cast<std::size_t>(i)] = static_cast<double>(i) / (count - 1);
  return s;
}

// Rethrows the active exception with `context` prefixed, keeping its type.
[[noreturn]] void rethrow_with_context(const std::string& context) {
  try {
    throw;
  } catch (const CapExceeded& e) {
    throw CapExceeded(context + ": " + e.what());
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(context + ": " + e.what());
  } catch (const NormDriftError& e) {
    throw NormDriftError(context + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw DimensionMismatch(context + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(context + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error(context + ": " + e.what());
  }
}

struct Site {
  int n = 0;
  double gamma = 0.0;
};

// (n, gamma) combinations in output order. ising2d has a single entry.
std::vector<Site> model_sites(const ExperimentConfig& c) {
  std::vector<Site> out;
  if (c.model == ModelKind::ising2d) {
    out.push_back({c.rows * c.cols, 0.0});
    return out;
  }
  for (int n : c.n_values)
    for (double g : c.gamma.values()) out.push_back({n, g});
  return out;
}

ModelParams model_at(const ExperimentConfig& c, const Site& site, double lambda) {
  if (c.model == ModelKind::ising2d) return GridParams{c.rows, c.cols, lambda};
  return XYParams{site.n, site.gamma, lambda};
}

std::string site_label(const ExperimentConfig& c, const Site& site) {
  if (c.model == ModelKind::ising2d) return "ising2d " + std::to_string(c.rows) + "x" + std::to_string(c.cols);
  return "xy n=" + std::to_string(site.n) + " gamma=" + format_number(site.gamma);
}

void add_site_columns(const ExperimentConfig& c, std::vector<std::string>& cols) {
  if (c.model == ModelKind::ising2d) {
    cols.push_back("rows");
    cols.push_back("cols");
  } else {
    cols.push_back("gamma");
  }
}

void add_site_fields(const ExperimentConfig& c, const Site& site, std::vector<std::string>& row) {
  if (c.model == ModelKind::ising2d) {
    row.push_back(std::to_string(c.rows));
    row.push_back(std::to_string(c.cols));
  } else {
    row.push_back(format_number(site.gamma));
  }
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  line += '\n';
  return line;
}

// ---- sweep / spectrum ----

struct GridPoint {
  Site site;
  double x = 0.0;  // s with a schedule, lambda otherwise
};

std::vector<std::string> sweep_columns(const ExperimentConfig& c) {
  std::vector<std::string> cols;
  add_site_columns(c, cols);
  if (c.schedule) cols.push_back("s");
  cols.push_back("lambda");
  cols.push_back("n");
  for (int i = 0; i < c.k; ++i) cols.push_back("E" + std::to_string(i));
  cols.insert(cols.end(), {"delta01", "delta12", "delta01_per_n"});
  return cols;
}

std::string sweep_row(const ExperimentConfig& c, const GridPoint& p) {
  double lambda = p.x;
  Hamiltonian h(p.site.n, {});
  if (c.schedule) {
    const Schedule sched(*c.schedule, c.reverse);
    const auto split = split_driver_problem(model_at(c, p.site, 0.0));
    const auto w = sched.coefficients(p.x);
    h = w.f * split.h0 + w.g * split.hp;
    lambda = sched.lambda(p.x);
  } else {
    h = build(model_at(c, p.site, lambda));
  }
  const auto energies = lowest_eigenvalues(h, c.k);
  const auto gap = gaps(energies);

  std::vector<std::string> row;
  add_site_fields(c, p.site, row);
  if (c.schedule) row.push_back(format_number(p.x));
  row.push_back(format_number(lambda));
  row.push_back(std::to_string(p.site.n));
  for (double e : energies) row.push_back(format_number(e));
  row.push_back(format_number(gap.delta01));
  row.push_back(format_number(gap.delta12));
  row.push_back(format_number(gap.delta01 / p.site.n));
  return join_row(row);
}

std::string run_sweep(const ExperimentConfig& c, const RunOptions& options) {
  const std::vector<double> xs = c.schedule ? uniform_s(c.samples) : c.lambda.values();
  std::vector<GridPoint> points;
  for (const Site& site : model_sites(c))
    for (double x : xs) points.push_back({site, x});

  const auto rows = detail::parallel_map(points.size(), options.jobs, [&](std::size_t i) {
    try {
      return sweep_row(c, points[i]);
    } catch (...) {
      rethrow_with_context(site_label(c, points[i].site) + (c.schedule ? " s=" : " lambda=") +
                           format_number(points[i].x));
    }
  });
  std::string body = join_row(sweep_columns(c));
  for (const auto& r : rows) body += r;
  return body;
}

// ---- evolve ----

StateVector initial_state(const ExperimentConfig& c, int n, const Schedule& sched) {
  if (c.initial == "paramagnetic") return make_paramagnetic(n);
  if (c.initial == "ghz") return make_ghz(n);
  if (c.initial == "up") return make_ferromagnet(n, Spin::up);
  if (c.initial == "down") return make_ferromagnet(n, Spin::down);
  return default_initial_state(n, sched);
}

std::vector<std::string> evolve_columns(const ExperimentConfig& c) {
  std::vector<std::string> cols;
  add_site_columns(c, cols);
  cols.insert(cols.end(), {"n", "s", "lambda", "f", "g"});
  for (int i = 0; i < c.k; ++i) cols.push_back("E" + std::to_string(i));
  if (c.k >= 3) cols.insert(cols.end(), {"delta01", "delta12"});
  cols.insert(cols.end(), {"energy", "f_ghz", "f_p", "f_ferro", "entropy_site1", "norm_error"});
  return cols;
}

std::string evolve_rows(const ExperimentConfig& c, const Site& site) {
  const Schedule sched(*c.schedule, c.reverse);
  const auto split = split_driver_problem(model_at(c, site, 0.0));
  EvolutionParams params;
  params.total_time = c.total_time;
  params.num_steps = c.num_steps;
  params.sample_count = c.samples;
  params.num_levels = c.k;
  const auto trace = evolve(split.h0, split.hp, sched, params, initial_state(c, site.n, sched));

  std::string out;
  for (const auto& smp : trace.samples) {
    std::vector<std::string> row;
    add_site_fields(c, site, row);
    row.push_back(std::to_string(site.n));
    for (double v : {smp.s, smp.lambda, smp.f, smp.g}) row.push_back(format_number(v));
    for (double e : smp.energies) row.push_back(format_number(e));
    if (c.k >= 3) {
      const auto gap = gaps(smp.energies);
      row.push_back(format_number(gap.delta01));
      row.push_back(format_number(gap.delta12));
    }
    for (double v : {smp.energy, smp.f_ghz, smp.f_p, smp.f_ferro, smp.entropy, smp.norm_error})
      row.push_back(format_number(v));
    out += join_row(row);
  }
  return out;
}

std::string run_evolve(const ExperimentConfig& c, const RunOptions& options) {
  const auto sites = model_sites(c);
  const auto blocks = detail::parallel_map(sites.size(), options.jobs, [&](std::size_t i) {
    try {
      return evolve_rows(c, sites[i]);
    } catch (...) {
      rethrow_with_context(site_label(c, sites[i]));
    }
  });
  std::string body = join_row(evolve_columns(c));
  for (const auto& b : blocks) body += b;
  return body;
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::spectrum: return "spectrum";
    case Task::sweep: return "sweep";
    case Task::evolve: return "evolve";
  }
  return "?";
}

std::string_view to_string(ModelKind model) {
  return model == ModelKind::xy ? "xy" : "ising2d";
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// ---- Axis ----

Axis Axis::single(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("axis value must be finite");
  Axis a;
  a.start_ = a.stop_ = value;
  a.count_ = 1;
  return a;
}

Axis Axis::sweep(double start, double stop, int count) {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw InvalidArgument("sweep bounds must be finite");
  if (count < 2) throw InvalidArgument("sweep count must be at least 2, got " + std::to_string(count));
  if (!(start < stop)) throw InvalidArgument("sweep needs start < stop");
  Axis a;
  a.start_ = start;
  a.stop_ = stop;
  a.count_ = count;
  return a;
}

Axis Axis::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return single(parse_double(parts[0], "axis"));
  if (parts.size() == 3)
    return sweep(parse_double(parts[0], "sweep start"), parse_double(parts[1], "sweep stop"),
                 parse_int(parts[2], "sweep count"));
  throw InvalidArgument("axis must be 'value' or 'start:stop:count', got '" + std::string(text) + "'");
}

std::vector<double> Axis::values() const {
  if (count_ == 1) return {start_};
  std::vector<double> v(static_cast<std::size_t>(count_));
  for (int i = 0; i < count_; ++i)
    v[static_cast<std::size_t>(i)] = start_ + (stop_ - start_) * static_cast<double>(i) / (count_ - 1);
  v.back() = stop_;
  return v;
}

std::string Axis::to_string() const {
  if (count_ == 1) return format_number(start_);
  return format_number(start_) + ":" + format_number(stop_) + ":" + std::to_string(count_);
}

// ---- ExperimentConfig ----

void ExperimentConfig::validate() const {
  if (model == ModelKind::xy) {
    if (n_values.empty()) throw InvalidArgument("n: at least one chain length is required");
    for (int n : n_values)
      if (n < 3) throw InvalidArgument("n: chain length must be at least 3, got " + std::to_string(n));
  } else {
    if (rows < 2 || cols < 2) throw InvalidArgument("ising2d grid needs rows, cols >= 2");
    if (gamma.is_sweep()) throw InvalidArgument("gamma: ising2d has no anisotropy to sweep");
  }
  if (task != Task::evolve && k < 3) throw InvalidArgument("k: gap output needs k >= 3");
  if (k < 0) throw InvalidArgument("k must be non-negative");
  if (!initial_names().contains(initial))
    throw InvalidArgument("initial: expected auto|paramagnetic|ghz|up|down, got '" + initial + "'");
  if (reverse && !schedule) throw InvalidArgument("reverse needs a schedule");

  switch (task) {
    case Task::spectrum:
      if (gamma.is_sweep() || lambda.is_sweep() || n_values.size() > 1)
        throw InvalidArgument("spectrum takes single values; use sweep for grids");
      if (schedule) throw InvalidArgument("spectrum takes lambda directly; use sweep with a schedule");
      break;
    case Task::sweep:
      if (schedule && samples < 2) throw InvalidArgument("samples must be at least 2");
      if (schedule && lambda.is_sweep()) throw InvalidArgument("lambda cannot be swept along with a schedule");
      break;
    case Task::evolve:
      if (!schedule) throw InvalidArgument("evolve needs a schedule");
      if (lambda.is_sweep()) throw InvalidArgument("evolve follows lambda(s) from the schedule");
      if (!(total_time > 0.0) || !std::isfinite(total_time)) throw InvalidArgument("T must be positive");
      if (num_steps < 0) throw InvalidArgument("steps must be non-negative");
      if (samples < 2) throw InvalidArgument("samples must be at least 2");
      break;
  }
  if (task != Task::evolve && initial != "auto") throw InvalidArgument("initial applies to evolve only");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::to_key_values() const {
  return {
      {"task", std::string(to_string(task))},
      {"model", std::string(to_string(model))},
      {"n", join_ints(n_values)},
      {"rows", std::to_string(rows)},
      {"cols", std::to_string(cols)},
      {"gamma", gamma.to_string()},
      {"lambda", lambda.to_string()},
      {"schedule", schedule ? std::string(aqcsim::to_string(*schedule)) : "none"},
      {"direction", reverse ? "reverse" : "forward"},
      {"initial", initial},
      {"T", format_number(total_time)},
      {"steps", std::to_string(num_steps)},
      {"samples", std::to_string(samples)},
      {"k", std::to_string(k)},
      {"preset", preset.empty() ? "none" : preset},
  };
}

ExperimentConfig ExperimentConfig::from_key_values(const std::map<std::string, std::string>& kv) {
  ExperimentConfig c;
  for (const auto& [key, value] : kv) {
    if (key == "task") c.task = parse_task(value);
    else if (key == "model") c.model = parse_model(value);
    else if (key == "n") {
      c.n_values.clear();
      for (auto part : split(value, ',')) c.n_values.push_back(parse_int(part, "n"));
    } else if (key == "rows") c.rows = parse_int(value, "rows");
    else if (key == "cols") c.cols = parse_int(value, "cols");
    else if (key == "gamma") c.gamma = Axis::parse(value);
    else if (key == "lambda") c.lambda = Axis::parse(value);
    else if (key == "schedule") {
      if (value == "none") c.schedule.reset();
      else c.schedule = parse_schedule_kind(value);
    } else if (key == "direction") c.reverse = parse_bool(value, "direction");
    else if (key == "initial") c.initial = value;
    else if (key == "T") c.total_time = parse_double(value, "T");
    else if (key == "steps") c.num_steps = parse_int(value, "steps");
    else if (key == "samples") c.samples = parse_int(value, "samples");
    else if (key == "k") c.k = parse_int(value, "k");
    else if (key == "preset") c.preset = value == "none" ? "" : value;
    else throw InvalidArgument("unknown config key '" + key + "'");
  }
  return c;
}

// ---- presets ----

std::vector<std::string> preset_names() {
  return {"fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig5", "fig6"};
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig c;
  c.preset = std::string(name);
  if (name == "fig1b") {
    c.task = Task::sweep;
    c.n_values = {12};
    c.gamma = Axis::sweep(0.0, 1.0, 41);
    c.lambda = Axis::sweep(0.0, 2.0, 41);
    c.k = 3;
  } else if (name == "fig2a") {
    c.task = Task::sweep;
    c.n_values = {8, 10, 12};
    c.gamma = Axis::single(1.0);
    c.schedule = ScheduleKind::linear;
    c.samples = 101;
    c.k = 3;
  } else if (name == "fig2b") {
    c.task = Task::sweep;
    c.n_values = {8, 10, 12};
    c.gamma = Axis::sweep(0.0, 1.0, 101);
    c.lambda = Axis::single(0.1);
    c.k = 3;
  } else if (name == "fig3a" || name == "fig3b") {
    c.task = Task::evolve;
    c.n_values = {12};
    c.gamma = Axis::single(0.75);
    c.schedule = name == "fig3a" ? ScheduleKind::linear : ScheduleKind::square;
    c.total_time = 20.0;
    c.num_steps = 4000;
    c.samples = 201;
    c.k = 6;
  } else if (name == "fig4") {
    c.task = Task::evolve;
    c.n_values = {10};
    c.gamma = Axis::sweep(0.0, 1.0, 21);
    c.schedule = ScheduleKind::square;
    c.total_time = 20.0;
    c.num_steps = 4000;
    c.samples = 201;
    c.k = 0;
  } else if (name == "fig5") {
    c.task = Task::evolve;
    c.n_values = {10};
    c.gamma = Axis::single(0.8);
    c.schedule = ScheduleKind::roundtrip;
    c.total_time = 200.0;
    c.num_steps = 40000;
    c.samples = 201;
    c.k = 3;
  } else if (name == "fig6") {
    c.task = Task::evolve;
    c.model = ModelKind::ising2d;
    c.rows = 3;
    c.cols = 3;
    c.schedule = ScheduleKind::linear;
    c.total_time = 100.0;
    c.num_steps = 20000;
    c.samples = 201;
    c.k = 6;
  } else {
    std::string known;
    for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
    throw InvalidArgument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
  }
  return c;
}

// ---- running ----

std::string_view library_version() { return AQCSIM_VERSION; }

std::string run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::string body = config.task == Task::evolve ? run_evolve(config, options) : run_sweep(config, options);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream head;
  head << "# aqcsim experiment\n";
  head << "# version = " << library_version() << '\n';
  for (const auto& [key, value] : config.to_key_values()) head << "# " << key << " = " << value << '\n';
  if (config.task == Task::evolve) {
    head << "# resolved_steps = "
         << (config.num_steps > 0 ? config.num_steps : default_num_steps(config.total_time)) << '\n';
    std::string crossings;
    for (double s : Schedule(*config.schedule, config.reverse).critical_points())
      crossings += (crossings.empty() ? "" : ",") + format_number(s);
    head << "# transition_s = " << crossings << '\n';
  }
  head << "# kernel = " << simd::to_string(simd::active_kernels().isa) << '\n';
  if (options.wall_clock) head << "# wall_clock_s = " << format_number(elapsed) << '\n';
  return head.str() + body;
}

void run_experiment_to(const ExperimentConfig& config, const std::string& path, const RunOptions& options) {
  const std::string csv = run_experiment(config, options);
  if (path == "-") {
    std::cout << csv << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << csv;
  if (!out.flush()) throw Error("write to '" + path + "' failed");
}

ExperimentConfig parse_header(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (in.peek() == '#' && std::getline(in, line)) {
    std::string_view body = trim(std::string_view(line).substr(1));
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string key(trim(body.substr(0, eq)));
    if (informational_keys().contains(key)) continue;
    kv[key] = std::string(trim(body.substr(eq + 1)));
  }
  if (!kv.contains("task")) throw InvalidArgument("no experiment header found");
  return ExperimentConfig::from_key_values(kv);
}

ExperimentConfig parse_header_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_header(in);
}

std::vector<std::string> data_lines(std::string_view csv) {
  std::vector<std::string> lines;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    const auto line = csv.substr(0, nl);
    if (!line.empty() && line.front() != '#') lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    csv.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace aqcsim

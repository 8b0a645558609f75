// aqcsim: spectra, gap sweeps and annealing runs for transverse-field spin
// models, written as CSV.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqcsim/errors.hpp"
#include "aqcsim/experiment.hpp"
#include "aqcsim/simd/kernels.hpp"

namespace {

struct FreeFormFlags {
  std::string model = "xy";
  std::string n = "10";
  int rows = 3;
  int cols = 3;
  std::string gamma = "1";
  std::string lambda = "0";
  std::string schedule;
  double total_time = 20.0;
  int steps = 0;
  int samples = 201;
  std::optional<int> k;
  bool reverse = false;
  std::string initial = "auto";
  std::string out = "-";
};

void add_free_form(CLI::App* cmd, FreeFormFlags& f, aqcsim::Task task) {
  cmd->add_option("--model", f.model, "xy | ising2d")->check(CLI::IsMember({"xy", "ising2d"}));
  cmd->add_option("--n", f.n, "chain length(s), comma separated");
  cmd->add_option("--rows", f.rows, "ising2d grid rows");
  cmd->add_option("--cols", f.cols, "ising2d grid columns");
  cmd->add_option("--gamma", f.gamma, "anisotropy: value or start:stop:count");
  cmd->add_option("--k", f.k, "number of lowest eigenvalues");
  cmd->add_option("--out", f.out, "output CSV path, '-' for stdout");
  if (task != aqcsim::Task::evolve) cmd->add_option("--lambda", f.lambda, "transverse field: value or start:stop:count");
  if (task == aqcsim::Task::spectrum) return;
  cmd->add_option("--schedule", f.schedule, "linear | square | roundtrip")
      ->check(CLI::IsMember({"linear", "square", "roundtrip"}));
  cmd->add_option("--samples", f.samples, "points in s (schedule grid or evolution samples)");
  cmd->add_flag("--reverse", f.reverse, "run the schedule backwards, s -> 1 - s");
  if (task != aqcsim::Task::evolve) return;
  cmd->add_option("--T", f.total_time, "total run time");
  cmd->add_option("--steps", f.steps, "integrator steps, 0 for ceil(200 T)");
  cmd->add_option("--initial", f.initial, "auto | paramagnetic | ghz | up | down")
      ->check(CLI::IsMember({"auto", "paramagnetic", "ghz", "up", "down"}));
}

aqcsim::ExperimentConfig to_config(const FreeFormFlags& f, aqcsim::Task task) {
  std::map<std::string, std::string> kv{
      {"task", std::string(aqcsim::to_string(task))},
      {"model", f.model},
      {"n", f.n},
      {"rows", std::to_string(f.rows)},
      {"cols", std::to_string(f.cols)},
      {"gamma", f.gamma},
      {"lambda", f.lambda},
      {"schedule", f.schedule.empty() ? "none" : f.schedule},
      {"direction", f.reverse ? "reverse" : "forward"},
      {"initial", f.initial},
      {"T", aqcsim::format_number(f.total_time)},
      {"steps", std::to_string(f.steps)},
      {"samples", std::to_string(f.samples)},
      {"k", std::to_string(f.k.value_or(task == aqcsim::Task::evolve ? 0 : 6))},
  };
  return aqcsim::ExperimentConfig::from_key_values(kv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, gap sweeps and adiabatic evolution of transverse-field spin models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(aqcsim::library_version()));

  int jobs = 0;
  std::string kernel = "auto";
  app.add_option("--jobs", jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--kernel", kernel, "auto | scalar | avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  FreeFormFlags spectrum_flags, sweep_flags, evolve_flags;
  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues and gaps at one point");
  add_free_form(spectrum, spectrum_flags, aqcsim::Task::spectrum);
  auto* sweep = app.add_subcommand("sweep", "gaps over a lambda, gamma or schedule grid");
  add_free_form(sweep, sweep_flags, aqcsim::Task::sweep);
  auto* evolve = app.add_subcommand("evolve", "time evolution along a schedule");
  add_free_form(evolve, evolve_flags, aqcsim::Task::evolve);

  std::string preset_name;
  std::string preset_out = ".";
  auto* preset = app.add_subcommand("preset", "run a named preset, writing <out>/<name>.csv");
  preset->add_option("name", preset_name, "preset name ('all' runs every preset)")->required();
  preset->add_option("--out", preset_out, "output directory");

  app.add_subcommand("presets", "list preset names");

  std::string rerun_path;
  std::string rerun_out = "-";
  auto* rerun = app.add_subcommand("rerun", "re-run the experiment recorded in a CSV header");
  rerun->add_option("csv", rerun_path, "CSV written by this tool")->required()->check(CLI::ExistingFile);
  rerun->add_option("--out", rerun_out, "output CSV path, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kernel != "auto") aqcsim::simd::select_kernels(aqcsim::simd::parse_isa(kernel));
    const aqcsim::RunOptions options{jobs, true};

    if (app.got_subcommand("presets")) {
      for (const auto& name : aqcsim::preset_names()) std::cout << name << '\n';
    } else if (app.got_subcommand(preset)) {
      std::vector<std::string> names{preset_name};
      if (preset_name == "all") names = aqcsim::preset_names();
      const auto config_list = [&] {
        std::vector<aqcsim::ExperimentConfig> cs;
        for (const auto& name : names) cs.push_back(aqcsim::preset(name));
        return cs;
      }();
      std::filesystem::create_directories(preset_out);
      for (const auto& config : config_list) {
        const auto path = (std::filesystem::path(preset_out) / (config.preset + ".csv")).string();
        aqcsim::run_experiment_to(config, path, options);
        std::cerr << "wrote " << path << '\n';
      }
    } else if (app.got_subcommand(rerun)) {
      aqcsim::run_experiment_to(aqcsim::parse_header_file(rerun_path), rerun_out, options);
    } else {
      const auto [flags, task] = app.got_subcommand(spectrum) ? std::pair{&spectrum_flags, aqcsim::Task::spectrum}
                                 : app.got_subcommand(sweep)  ? std::pair{&sweep_flags, aqcsim::Task::sweep}
                                                              : std::pair{&evolve_flags, aqcsim::Task::evolve};
      aqcsim::run_experiment_to(to_config(*flags, task), flags->out, options);
    }
  } catch (const std::exception& e) {
    std::cerr << "aqcsim: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

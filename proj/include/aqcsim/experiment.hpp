#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqcsim/schedule.hpp"

namespace aqcsim {

enum class Task { spectrum, sweep, evolve };
enum class ModelKind { xy, ising2d };

/// Library version string, as recorded in CSV headers.
std::string_view library_version();

std::string_view to_string(Task task);
std::string_view to_string(ModelKind model);

/// A fixed value, or `count` uniform points from start to stop inclusive.
/// Text form: "0.75" or "0:1:41".
class Axis {
 public:
  static Axis single(double value);
  /// Throws InvalidArgument unless count >= 2 and start < stop.
  static Axis sweep(double start, double stop, int count);
  static Axis parse(std::string_view text);

  bool is_sweep() const { return count_ > 1; }
  int count() const { return count_; }
  double start() const { return start_; }
  double stop() const { return stop_; }
  std::vector<double> values() const;
  std::string to_string() const;

  bool operator==(const Axis&) const = default;

 private:
  double start_ = 0.0;
  double stop_ = 0.0;
  int count_ = 1;
};

/// Fully resolved description of one experiment. Everything needed to
/// reproduce the output is in here and is echoed into the CSV header.
struct ExperimentConfig {
  Task task = Task::spectrum;
  ModelKind model = ModelKind::xy;
  std::vector<int> n_values{10};  // xy chain lengths, one block each
  int rows = 3;                   // ising2d grid
  int cols = 3;
  Axis gamma = Axis::single(1.0);
  Axis lambda = Axis::single(0.0);
  /// Sweeps: when set, the grid runs over s (samples points) with H(s) =
  /// f(s) H0 + g(s) HP instead of over lambda. Evolve: required.
  std::optional<ScheduleKind> schedule;
  bool reverse = false;
  std::string initial = "auto";  // auto|paramagnetic|ghz|up|down
  double total_time = 20.0;
  int num_steps = 0;  // 0: ceil(200 T)
  int samples = 201;
  int k = 6;
  std::string preset;

  /// Throws InvalidArgument describing the first violated constraint.
  void validate() const;

  std::vector<std::pair<std::string, std::string>> to_key_values() const;
  /// Inverse of to_key_values(); unknown keys are rejected.
  static ExperimentConfig from_key_values(const std::map<std::string, std::string>& kv);

  bool operator==(const ExperimentConfig&) const = default;
};

std::vector<std::string> preset_names();

/// Throws InvalidArgument for an unknown name.
ExperimentConfig preset(std::string_view name);

struct RunOptions {
  int jobs = 0;  // worker threads; 0 uses every available core
  bool wall_clock = true;
};

/// Runs the experiment and returns the CSV document: '#'-prefixed
/// "key = value" header lines, one column-name line, then data rows.
std::string run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Writes run_experiment() output to `path` ("-" for stdout).
void run_experiment_to(const ExperimentConfig& config, const std::string& path, const RunOptions& options = {});

/// Reads the configuration echoed in a CSV header.
ExperimentConfig parse_header(std::istream& in);
ExperimentConfig parse_header_file(const std::string& path);

/// Data lines (column names and rows) of a CSV document, header dropped.
std::vector<std::string> data_lines(std::string_view csv);

/// Shortest text for a double that reads back to the same value: 17
/// significant digits, "inf" for infinity.
std::string format_number(double value);

}  // namespace aqcsim

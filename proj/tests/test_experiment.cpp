#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "aqcsim/errors.hpp"
#include "aqcsim/experiment.hpp"
#include "aqcsim/models.hpp"
#include "aqcsim/spectral.hpp"

using namespace aqcsim;

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  return out;
}

ExperimentConfig small_sweep() {
  ExperimentConfig c;
  c.task = Task::sweep;
  c.n_values = {4, 6};
  c.gamma = Axis::sweep(0.2, 1.0, 3);
  c.lambda = Axis::sweep(0.0, 2.0, 4);
  c.k = 3;
  return c;
}

ExperimentConfig small_evolve() {
  ExperimentConfig c;
  c.task = Task::evolve;
  c.n_values = {5};
  c.gamma = Axis::sweep(0.5, 1.0, 3);
  c.schedule = ScheduleKind::square;
  c.total_time = 2.0;
  c.samples = 6;
  c.k = 3;
  return c;
}

}  // namespace

TEST(Axis, ParseAndFormat) {
  const auto single = Axis::parse("0.75");
  EXPECT_FALSE(single.is_sweep());
  EXPECT_EQ(single.values(), std::vector<double>{0.75});
  const auto sweep = Axis::parse("0:1:5");
  EXPECT_TRUE(sweep.is_sweep());
  EXPECT_EQ(sweep.values(), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(sweep.to_string(), "0:1:5");
  EXPECT_EQ(Axis::parse(sweep.to_string()), sweep);
  EXPECT_EQ(Axis::parse(Axis::single(0.1).to_string()), Axis::single(0.1));
}

TEST(Axis, SweepEndpointsAreExact) {
  const auto v = Axis::sweep(0.0, 2.0, 41).values();
  ASSERT_EQ(v.size(), 41u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 2.0);
  EXPECT_EQ(v[20], 1.0);
}

TEST(Axis, RejectsInvalidSweeps) {
  EXPECT_THROW(Axis::sweep(0, 1, 1), InvalidArgument);
  EXPECT_THROW(Axis::sweep(1, 1, 5), InvalidArgument);
  EXPECT_THROW(Axis::sweep(2, 1, 5), InvalidArgument);
  EXPECT_THROW(Axis::parse("0:1"), InvalidArgument);
  EXPECT_THROW(Axis::parse("a"), InvalidArgument);
  EXPECT_THROW(Axis::parse("0:1:x"), InvalidArgument);
  EXPECT_THROW(Axis::parse("nan"), InvalidArgument);
}

TEST(FormatNumber, SeventeenDigitsAndInfinity) {
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456.789, 1e300}) EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
}

TEST(Presets, FigureParameters) {
  const auto fig4 = preset("fig4");
  EXPECT_EQ(fig4.n_values, std::vector<int>{10});
  EXPECT_EQ(fig4.schedule, ScheduleKind::square);
  EXPECT_EQ(fig4.total_time, 20.0);
  EXPECT_EQ(fig4.gamma.count(), 21);
  EXPECT_EQ(fig4.samples, 201);

  const auto fig5 = preset("fig5");
  EXPECT_EQ(fig5.total_time, 200.0);
  EXPECT_EQ(fig5.gamma, Axis::single(0.8));
  EXPECT_EQ(fig5.n_values, std::vector<int>{10});
  EXPECT_EQ(fig5.schedule, ScheduleKind::roundtrip);

  const auto fig6 = preset("fig6");
  EXPECT_EQ(fig6.model, ModelKind::ising2d);
  EXPECT_EQ(fig6.rows, 3);
  EXPECT_EQ(fig6.cols, 3);
  EXPECT_EQ(fig6.schedule, ScheduleKind::linear);
  EXPECT_EQ(fig6.total_time, 100.0);
  EXPECT_EQ(fig6.num_steps, 20000);

  const auto fig1b = preset("fig1b");
  EXPECT_EQ(fig1b.n_values, std::vector<int>{12});
  EXPECT_EQ(fig1b.gamma, Axis::sweep(0, 1, 41));
  EXPECT_EQ(fig1b.lambda, Axis::sweep(0, 2, 41));

  const auto fig2a = preset("fig2a");
  EXPECT_EQ(fig2a.n_values, (std::vector<int>{8, 10, 12}));
  EXPECT_EQ(fig2a.schedule, ScheduleKind::linear);
  EXPECT_EQ(fig2a.gamma, Axis::single(1.0));

  const auto fig2b = preset("fig2b");
  EXPECT_EQ(fig2b.lambda, Axis::single(0.1));
  EXPECT_TRUE(fig2b.gamma.is_sweep());

  for (auto name : {"fig3a", "fig3b"}) {
    const auto c = preset(name);
    EXPECT_EQ(c.n_values, std::vector<int>{12});
    EXPECT_EQ(c.gamma, Axis::single(0.75));
    EXPECT_EQ(c.total_time, 20.0);
  }
  EXPECT_EQ(preset("fig3a").schedule, ScheduleKind::linear);
  EXPECT_EQ(preset("fig3b").schedule, ScheduleKind::square);
}

TEST(Presets, ExpansionIsPureAndValid) {
  for (const auto& name : preset_names()) {
    EXPECT_EQ(preset(name), preset(name)) << name;
    EXPECT_NO_THROW(preset(name).validate()) << name;
    EXPECT_EQ(preset(name).preset, name);
  }
  EXPECT_THROW(preset("fig7"), InvalidArgument);
}

TEST(Config, KeyValueRoundTrip) {
  for (const auto& name : preset_names()) {
    const auto c = preset(name);
    const auto kv = c.to_key_values();
    EXPECT_EQ(ExperimentConfig::from_key_values({kv.begin(), kv.end()}), c) << name;
  }
  EXPECT_THROW(ExperimentConfig::from_key_values({{"bogus", "1"}}), InvalidArgument);
}

TEST(Config, ValidationMessages) {
  auto c = small_sweep();
  c.k = 2;
  EXPECT_THROW(c.validate(), InvalidArgument);
  auto e = small_evolve();
  e.schedule.reset();
  EXPECT_THROW(e.validate(), InvalidArgument);
  auto s = ExperimentConfig{};
  s.gamma = Axis::sweep(0, 1, 3);
  EXPECT_THROW(s.validate(), InvalidArgument);
  auto g = ExperimentConfig{};
  g.model = ModelKind::ising2d;
  g.rows = 1;
  EXPECT_THROW(g.validate(), InvalidArgument);
  auto i = small_evolve();
  i.initial = "sideways";
  EXPECT_THROW(i.validate(), InvalidArgument);
}

TEST(Run, SpectrumRowMatchesSolver) {
  ExperimentConfig c;
  c.n_values = {6};
  c.gamma = Axis::single(0.4);
  c.lambda = Axis::single(0.9);
  c.k = 4;
  const auto lines = data_lines(run_experiment(c, {1, false}));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "gamma,lambda,n,E0,E1,E2,E3,delta01,delta12,delta01_per_n");
  const auto fields = split_fields(lines[1]);
  const auto e = lowest_eigenvalues(build_xy_chain({6, 0.4, 0.9}), 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(fields[static_cast<std::size_t>(3 + i)], format_number(e[static_cast<std::size_t>(i)]));
  EXPECT_EQ(fields[7], format_number(e[1] - e[0]));
  EXPECT_EQ(fields[9], format_number((e[1] - e[0]) / 6));
}

TEST(Run, SweepLayoutIsBlockedByN) {
  const auto lines = data_lines(run_experiment(small_sweep(), {2, false}));
  ASSERT_EQ(lines.size(), 1u + 2 * 3 * 4);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    EXPECT_EQ(f[2], i <= 12 ? "4" : "6");
  }
}

TEST(Run, ScheduleSweepHasSColumnAndInfiniteLambda) {
  ExperimentConfig c;
  c.task = Task::sweep;
  c.n_values = {4, 6, 8};
  c.schedule = ScheduleKind::linear;
  c.samples = 5;
  c.k = 3;
  const auto lines = data_lines(run_experiment(c, {0, false}));
  EXPECT_EQ(lines[0], "gamma,s,lambda,n,E0,E1,E2,delta01,delta12,delta01_per_n");
  ASSERT_EQ(lines.size(), 16u);
  EXPECT_EQ(split_fields(lines[1])[2], "inf");
  EXPECT_EQ(split_fields(lines[3])[2], "1");
}

TEST(Run, DeterministicAcrossWorkerCounts) {
  for (const auto& c : {small_sweep(), small_evolve()}) {
    const auto a = data_lines(run_experiment(c, {1, true}));
    const auto b = data_lines(run_experiment(c, {4, true}));
    const auto again = data_lines(run_experiment(c, {3, false}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, again);
  }
}

TEST(Run, HeaderRoundTripReproducesRows) {
  for (auto c : {small_sweep(), small_evolve()}) {
    c.preset = "";
    const auto csv = run_experiment(c, {0, true});
    std::istringstream in(csv);
    const auto parsed = parse_header(in);
    EXPECT_EQ(parsed, c);
    EXPECT_EQ(data_lines(run_experiment(parsed, {0, true})), data_lines(csv));
  }
}

TEST(Run, HeaderRecordsVersionClockAndTransitions) {
  const auto csv = run_experiment(small_evolve(), {0, true});
  EXPECT_NE(csv.find("# version = " + std::string(library_version()) + "\n"), std::string::npos);
  EXPECT_NE(csv.find("# wall_clock_s = "), std::string::npos);
  EXPECT_NE(csv.find("# transition_s = 0.5\n"), std::string::npos);
  EXPECT_NE(csv.find("# resolved_steps = 400\n"), std::string::npos);
  EXPECT_EQ(run_experiment(small_evolve(), {0, false}).find("wall_clock"), std::string::npos);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Run, EvolveColumnsAndRows) {
  const auto lines = data_lines(run_experiment(small_evolve(), {0, false}));
  EXPECT_EQ(lines[0],
            "gamma,n,s,lambda,f,g,E0,E1,E2,delta01,delta12,energy,f_ghz,f_p,f_ferro,entropy_site1,norm_error");
  ASSERT_EQ(lines.size(), 1u + 3 * 6);
  const auto first = split_fields(lines[1]);
  EXPECT_EQ(first[2], "0");
  EXPECT_EQ(first[3], "inf");
}

TEST(Run, GridEvolveUsesRowsCols) {
  ExperimentConfig c;
  c.task = Task::evolve;
  c.model = ModelKind::ising2d;
  c.rows = 2;
  c.cols = 2;
  c.schedule = ScheduleKind::linear;
  c.total_time = 1.0;
  c.samples = 3;
  c.k = 0;
  const auto lines = data_lines(run_experiment(c, {0, false}));
  EXPECT_EQ(lines[0], "rows,cols,n,s,lambda,f,g,energy,f_ghz,f_p,f_ferro,entropy_site1,norm_error");
  EXPECT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[1].substr(0, 6), "2,2,4,");
}

TEST(Run, ReverseStartsFromGhz) {
  auto c = small_evolve();
  c.gamma = Axis::single(1.0);
  c.reverse = true;
  const auto lines = data_lines(run_experiment(c, {0, false}));
  const auto first = split_fields(lines[1]);
  EXPECT_NEAR(std::strtod(first[12].c_str(), nullptr), 1.0, 1e-14);  // f_ghz at s = 0
}

TEST(Run, LowerModuleErrorsCarryContext) {
  ExperimentConfig c;
  c.n_values = {30};
  try {
    run_experiment(c);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("n=30"), std::string::npos) << e.what();
  }
}

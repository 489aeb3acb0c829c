#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coneopt/harness.hpp"

using namespace coneopt;
namespace fs = std::filesystem;

namespace {

ExperimentConfig tiny_config(const std::string& out) {
  ExperimentConfig cfg;
  cfg.algorithms = {"c-dwu", "c-nsgaii"};
  cfg.problems = {"dtlz2"};
  cfg.dimensions = {5};
  cfg.runs = 2;
  cfg.population = 12;
  cfg.evaluations = 240;
  cfg.reference_count = 500;
  cfg.threads = 1;
  cfg.out_dir = out;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("coneopt_test_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("cell seeds are stable and independent of other cells") {
  const auto s = cell_seed("c-dwu", "dtlz2", 5, 1, 0);
  CHECK(s == cell_seed("c-dwu", "dtlz2", 5, 1, 0));
  CHECK(s != cell_seed("c-dwu", "dtlz2", 5, 1, 1));
  CHECK(s != cell_seed("c-dwu", "dtlz2", 7, 1, 0));
  CHECK(s != cell_seed("c-nsgaii", "dtlz2", 5, 1, 0));
}

TEST_CASE("config file parsing with flag-style overrides") {
  TempDir tmp("config");
  const fs::path file = tmp.path / "exp.cfg";
  std::ofstream(file) << "# experiment setup\n"
                         "problems = wfg4, wfg9\n"
                         "dims = 5,7\n"
                         "theta = 0.25\n"
                         "axis = 1, 2\n"
                         "runs = 3\n";
  ExperimentConfig cfg;
  load_config_file(file.string(), cfg);
  CHECK(cfg.problems == std::vector<std::string>{"wfg4", "wfg9"});
  CHECK(cfg.dimensions == std::vector<std::size_t>{5, 7});
  CHECK(cfg.theta == doctest::Approx(0.25));
  CHECK(cfg.axis == std::vector<double>{1.0, 2.0});
  CHECK(cfg.runs == 3);
  CHECK(cfg.population == 100); // untouched default

  std::ofstream(file) << "bogus = 1\n";
  ExperimentConfig cfg2;
  CHECK_THROWS(load_config_file(file.string(), cfg2));
}

TEST_CASE("run_matrix produces the full record grid and per-run files") {
  TempDir tmp("matrix");
  const auto cfg = tiny_config(tmp.path.string());
  const auto records = run_matrix(cfg);
  CHECK(records.size() == 2 * 1 * 1 * 2);
  for (const auto& rec : records) {
    const fs::path cell = tmp.path / "runs" / cell_name(rec.algorithm, rec.problem, rec.dim);
    CHECK(fs::exists(cell / (std::to_string(rec.seed) + ".csv")));
    CHECK(fs::exists(cell / (std::to_string(rec.seed) + "_pop.csv")));
    CHECK(rec.evaluations <= cfg.evaluations);
    CHECK(rec.decisions.size() == cfg.population);
  }
}

TEST_CASE("rerun with the same base seed is byte-identical") {
  TempDir tmp_a("rerun_a");
  TempDir tmp_b("rerun_b");
  auto cfg_a = tiny_config(tmp_a.path.string());
  auto cfg_b = tiny_config(tmp_b.path.string());
  run_matrix(cfg_a);
  run_matrix(cfg_b);
  for (const auto& entry : fs::recursive_directory_iterator(tmp_a.path / "runs")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), tmp_a.path);
    CHECK(slurp(entry.path()) == slurp(tmp_b.path / rel));
  }
}

TEST_CASE("summary is a pure fold of the per-run CSVs") {
  TempDir tmp("summary");
  const auto cfg = tiny_config(tmp.path.string());
  const auto records = run_matrix(cfg);
  const auto direct = summarize(records);

  const auto reloaded = load_run_records(cfg.out_dir);
  REQUIRE(reloaded.size() == records.size());
  const auto folded = summarize(reloaded);
  REQUIRE(folded.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(folded[i].algorithm == direct[i].algorithm);
    CHECK(folded[i].igd_mean == doctest::Approx(direct[i].igd_mean).epsilon(1e-15));
    CHECK(folded[i].uni_mean == doctest::Approx(direct[i].uni_mean).epsilon(1e-15));
    CHECK(folded[i].roi_mean == doctest::Approx(direct[i].roi_mean).epsilon(1e-15));
  }
}

TEST_CASE("summarize statistics on identical records") {
  RunRecord rec;
  rec.algorithm = "c-dwu";
  rec.problem = "dtlz2";
  rec.dim = 5;
  rec.metrics.igd = 0.5;
  rec.metrics.uniformity = 0.25;
  rec.metrics.roi_membership_rate = 1.0;
  const auto rows = summarize({rec, rec, rec});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].igd_mean == 0.5);
  CHECK(rows[0].igd_std == 0.0);
  CHECK(rows[0].igd_min == 0.5);
  CHECK(rows[0].igd_max == 0.5);
}

TEST_CASE("plot data: reference rows on the model front, rays at theta") {
  TempDir tmp("plots");
  auto cfg = tiny_config(tmp.path.string());
  cfg.algorithms = {"c-nsgaii"};
  cfg.runs = 1;
  const auto records = run_matrix(cfg);
  REQUIRE(records.size() == 1);
  emit_plot_data(records[0], cfg);

  const std::string stem = cell_name("c-nsgaii", "dtlz2", 5) + "_" +
                           std::to_string(records[0].seed);
  const fs::path obj_csv = tmp.path / "plots" / (stem + "_objectives.csv");
  REQUIRE(fs::exists(obj_csv));
  const PreferenceCone cone = make_cone(cfg);

  std::ifstream in(obj_csv);
  std::string line;
  std::size_t solutions = 0, references = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("kind", 0) == 0) continue;
    const auto f = io::split(line, ',');
    REQUIRE(f.size() == 3);
    const ObjectiveVector y{std::stod(f[1]), std::stod(f[2])};
    if (f[0] == "solution") ++solutions;
    if (f[0] == "reference") {
      ++references;
      CHECK(y[0] * y[0] + y[1] * y[1] == doctest::Approx(1.0).epsilon(1e-9));
    }
    if (f[0] == "cone_low" || f[0] == "cone_high")
      CHECK(angular_distance(y, cone) == doctest::Approx(cone.theta).epsilon(1e-9));
  }
  CHECK(solutions == cfg.population);
  CHECK(references == records[0].metrics.reference_size);

  const fs::path disp_csv = tmp.path / "plots" / (stem + "_dispersion.csv");
  REQUIRE(fs::exists(disp_csv));
  std::ifstream din(disp_csv);
  std::size_t rows = 0;
  while (std::getline(din, line))
    if (!line.empty() && line[0] != '#' && line.rfind("run,", 0) != 0) ++rows;
  CHECK(rows == cfg.population);
}

TEST_CASE("unwritable output directory fails before any run") {
  ExperimentConfig cfg = tiny_config("/proc/nonexistent/out");
  CHECK_THROWS(run_matrix(cfg));
}

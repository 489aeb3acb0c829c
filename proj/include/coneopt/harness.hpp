#ifndef CONEOPT_HARNESS_HPP
#define CONEOPT_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "coneopt/algorithms.hpp"
#include "coneopt/dispersion.hpp"
#include "coneopt/metrics.hpp"
#include "coneopt/problems.hpp"

namespace coneopt {

inline constexpr const char* kCsvSchema = "# coneopt-csv v1";

struct ExperimentConfig {
  std::vector<std::string> algorithms = {"c-dwu", "c-nsgaii"};
  std::vector<std::string> problems = {"dtlz2", "wfg4", "wfg9"};
  std::vector<std::size_t> dimensions = {5, 7, 9};
  std::size_t runs = 10;
  std::size_t population = 100;
  long evaluations = 100000;
  std::vector<double> axis = {1.0, 1.0};
  double theta = 0.3;
  double alpha = 0.3;
  double beta = 1.0;
  std::uint64_t base_seed = 1;
  std::size_t wfg_k = 1;
  bool normalize_uniformity = false; // which column feeds the summary
  std::size_t reference_count = 10000;
  std::size_t threads = 0; // 0 = hardware concurrency
  std::string out_dir = "out";
};

struct RunRecord {
  std::string algorithm;
  std::string problem;
  std::size_t dim = 0;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  std::vector<DecisionVector> decisions;
  std::vector<ObjectiveVector> objectives;
  MetricReport metrics;
  long evaluations = 0;
  long generations = 0;
  double seconds = 0.0;
};

namespace io {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

} // namespace io

/// Flat key=value config file; '#' starts a comment. CLI flags override.
inline void load_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = io::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("malformed config line: " + line);
    const std::string key = io::trim(line.substr(0, eq));
    const std::string value = io::trim(line.substr(eq + 1));
    auto as_list = [&] {
      std::vector<std::string> items;
      for (auto& v : io::split(value, ',')) items.push_back(io::trim(v));
      return items;
    };
    if (key == "algorithms") cfg.algorithms = as_list();
    else if (key == "problems") cfg.problems = as_list();
    else if (key == "dims") {
      cfg.dimensions.clear();
      for (auto& v : as_list()) cfg.dimensions.push_back(std::stoul(v));
    } else if (key == "axis") {
      cfg.axis.clear();
      for (auto& v : as_list()) cfg.axis.push_back(std::stod(v));
    } else if (key == "runs") cfg.runs = std::stoul(value);
    else if (key == "pop") cfg.population = std::stoul(value);
    else if (key == "evals") cfg.evaluations = std::stol(value);
    else if (key == "theta") cfg.theta = std::stod(value);
    else if (key == "alpha") cfg.alpha = std::stod(value);
    else if (key == "beta") cfg.beta = std::stod(value);
    else if (key == "seed") cfg.base_seed = std::stoull(value);
    else if (key == "wfg_k") cfg.wfg_k = std::stoul(value);
    else if (key == "normalize_uniformity") cfg.normalize_uniformity = (value == "1" || value == "true");
    else if (key == "reference_count") cfg.reference_count = std::stoul(value);
    else if (key == "threads") cfg.threads = std::stoul(value);
    else if (key == "out") cfg.out_dir = value;
    else throw std::runtime_error("unknown config key: " + key);
  }
}

inline std::string cell_name(const std::string& algorithm, const std::string& problem,
                             std::size_t dim) {
  return algorithm + "_" + problem + "_d" + std::to_string(dim);
}

/// Stable per-run seed: FNV-1a of the cell name mixed with base seed + run
/// index, so adding cells never shifts the seeds of existing ones.
inline std::uint64_t cell_seed(const std::string& algorithm, const std::string& problem,
                               std::size_t dim, std::uint64_t base_seed,
                               std::size_t run_index) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : cell_name(algorithm, problem, dim))
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
  h ^= (base_seed + run_index) * 0x9e3779b97f4a7c15ull;
  return h;
}

inline PreferenceCone make_cone(const ExperimentConfig& cfg) {
  return PreferenceCone{cfg.axis, cfg.theta, cfg.alpha, cfg.beta};
}

inline RunRecord execute_run(const ExperimentConfig& cfg, const std::string& algorithm,
                             const std::string& problem_name, std::size_t dim,
                             std::size_t run_index) {
  const Problem problem = make_problem(problem_name, dim, cfg.wfg_k);
  AlgorithmConfig acfg;
  acfg.population_size = cfg.population;
  acfg.max_evaluations = cfg.evaluations;
  acfg.cone = make_cone(cfg);
  acfg.variation.mutation_probability = 1.0 / static_cast<double>(dim);
  acfg.seed = cell_seed(algorithm, problem_name, dim, cfg.base_seed, run_index);

  RunResult res;
  if (algorithm == "c-dwu") res = run_c_dwu(problem, acfg);
  else if (algorithm == "c-nsgaii") res = run_c_nsgaii(problem, acfg);
  else throw std::invalid_argument("unknown algorithm: " + algorithm);

  RunRecord rec;
  rec.algorithm = algorithm;
  rec.problem = problem_name;
  rec.dim = dim;
  rec.run_index = run_index;
  rec.seed = acfg.seed;
  for (const auto& ind : res.population.members) {
    rec.decisions.push_back(ind.decision);
    rec.objectives.push_back(ind.objectives);
  }
  const ReferenceSet ref = roi_reference_set(problem, acfg.cone, cfg.reference_count);
  rec.metrics.igd = igd(ref, rec.objectives);
  rec.metrics.uniformity = final_uniformity(rec.decisions);
  rec.metrics.uniformity_normalized = final_uniformity_normalized(rec.decisions, problem.bounds);
  rec.metrics.roi_membership_rate = roi_membership_rate(rec.objectives, acfg.cone);
  rec.metrics.reference_size = ref.points.size();
  rec.evaluations = res.population.evaluations;
  rec.generations = res.population.generation;
  rec.seconds = res.seconds;
  return rec;
}

// Wall time is deliberately absent from the per-run files: reruns of the same
// seed must be byte-identical.
inline void write_metrics_csv(const RunRecord& rec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvSchema << "\n";
  out << "algorithm,problem,dim,run,seed,igd,uniformity,uniformity_normalized,"
         "roi_membership_rate,reference_size,evaluations,generations\n";
  out << rec.algorithm << ',' << rec.problem << ',' << rec.dim << ',' << rec.run_index
      << ',' << rec.seed << ',' << io::fmt(rec.metrics.igd) << ','
      << io::fmt(rec.metrics.uniformity) << ',' << io::fmt(rec.metrics.uniformity_normalized)
      << ',' << io::fmt(rec.metrics.roi_membership_rate) << ',' << rec.metrics.reference_size
      << ',' << rec.evaluations << ',' << rec.generations << "\n";
}

inline void write_population_csv(const RunRecord& rec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvSchema << "\n";
  out << "# algorithm=" << rec.algorithm << " problem=" << rec.problem << " dim=" << rec.dim
      << " seed=" << rec.seed << "\n";
  out << "index";
  for (std::size_t i = 0; i < rec.dim; ++i) out << ",x" << i + 1;
  out << ",f1,f2\n";
  for (std::size_t i = 0; i < rec.decisions.size(); ++i) {
    out << i;
    for (double x : rec.decisions[i]) out << ',' << io::fmt(x);
    for (double f : rec.objectives[i]) out << ',' << io::fmt(f);
    out << "\n";
  }
}

inline RunRecord read_metrics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  RunRecord rec;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("algorithm,", 0) == 0) continue;
    const auto f = io::split(line, ',');
    if (f.size() != 12) throw std::runtime_error("malformed metrics row in " + path.string());
    rec.algorithm = f[0];
    rec.problem = f[1];
    rec.dim = std::stoul(f[2]);
    rec.run_index = std::stoul(f[3]);
    rec.seed = std::stoull(f[4]);
    rec.metrics.igd = std::stod(f[5]);
    rec.metrics.uniformity = std::stod(f[6]);
    rec.metrics.uniformity_normalized = std::stod(f[7]);
    rec.metrics.roi_membership_rate = std::stod(f[8]);
    rec.metrics.reference_size = std::stoul(f[9]);
    rec.evaluations = std::stol(f[10]);
    rec.generations = std::stol(f[11]);
  }
  return rec;
}

inline void read_population_csv(const std::filesystem::path& path, RunRecord& rec) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
    const auto f = io::split(line, ',');
    if (f.size() != rec.dim + 3)
      throw std::runtime_error("malformed population row in " + path.string());
    DecisionVector x;
    for (std::size_t i = 1; i <= rec.dim; ++i) x.push_back(std::stod(f[i]));
    rec.decisions.push_back(std::move(x));
    rec.objectives.push_back({std::stod(f[rec.dim + 1]), std::stod(f[rec.dim + 2])});
  }
}

/// Executes the full (algorithm x problem x dimension x run) matrix and
/// persists one metrics CSV and one population CSV per run. Cells are
/// independent; with threads > 1 they run concurrently with identical output.
inline std::vector<RunRecord> run_matrix(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path root(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(root / "runs", ec);
  if (ec || !fs::is_directory(root / "runs"))
    throw std::runtime_error("cannot create output directory: " + (root / "runs").string());

  struct Task {
    std::string algorithm, problem;
    std::size_t dim, run;
  };
  std::vector<Task> tasks;
  for (const auto& alg : cfg.algorithms)
    for (const auto& prob : cfg.problems)
      for (std::size_t dim : cfg.dimensions)
        for (std::size_t r = 0; r < cfg.runs; ++r) tasks.push_back({alg, prob, dim, r});

  const std::size_t threads =
      cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      records[i] = execute_run(cfg, t.algorithm, t.problem, t.dim, t.run);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& rec : records) {
    const fs::path cell = root / "runs" / cell_name(rec.algorithm, rec.problem, rec.dim);
    fs::create_directories(cell);
    write_metrics_csv(rec, cell / (std::to_string(rec.seed) + ".csv"));
    write_population_csv(rec, cell / (std::to_string(rec.seed) + "_pop.csv"));
  }
  return records;
}

struct SummaryRow {
  std::string algorithm, problem;
  std::size_t dim = 0;
  std::size_t runs = 0;
  double igd_mean = 0, igd_std = 0, igd_min = 0, igd_max = 0;
  double uni_mean = 0, uni_std = 0, uni_min = 0, uni_max = 0;
  double roi_mean = 0, roi_std = 0, roi_min = 0, roi_max = 0;
};

/// Per-cell mean/std/min/max of IGD, uniformity and ROI membership; rows
/// sorted canonically by (algorithm, problem, dim).
inline std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                         bool normalized_uniformity = false) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  std::map<std::tuple<std::string, std::string, std::size_t>, std::vector<const RunRecord*>>
      cells;
  for (const auto& rec : records)
    cells[{rec.algorithm, rec.problem, rec.dim}].push_back(&rec);

  std::vector<SummaryRow> rows;
  for (const auto& [key, cell] : cells) {
    SummaryRow row;
    row.algorithm = std::get<0>(key);
    row.problem = std::get<1>(key);
    row.dim = std::get<2>(key);
    row.runs = cell.size();
    auto stats = [&](auto getter, double& mean, double& stdev, double& mn, double& mx) {
      double sum = 0;
      mn = std::numeric_limits<double>::infinity();
      mx = -mn;
      for (const RunRecord* r : cell) {
        const double v = getter(*r);
        sum += v;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      mean = sum / static_cast<double>(cell.size());
      double ss = 0;
      for (const RunRecord* r : cell) {
        const double d = getter(*r) - mean;
        ss += d * d;
      }
      stdev = cell.size() > 1 ? std::sqrt(ss / static_cast<double>(cell.size() - 1)) : 0.0;
    };
    stats([](const RunRecord& r) { return r.metrics.igd; }, row.igd_mean, row.igd_std,
          row.igd_min, row.igd_max);
    stats(
        [normalized_uniformity](const RunRecord& r) {
          return normalized_uniformity ? r.metrics.uniformity_normalized
                                       : r.metrics.uniformity;
        },
        row.uni_mean, row.uni_std, row.uni_min, row.uni_max);
    stats([](const RunRecord& r) { return r.metrics.roi_membership_rate; }, row.roi_mean,
          row.roi_std, row.roi_min, row.roi_max);
    rows.push_back(row);
  }
  return rows;
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows,
                              const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvSchema << "\n";
  out << "algorithm,problem,dim,runs,igd_mean,igd_std,igd_min,igd_max,"
         "uniformity_mean,uniformity_std,uniformity_min,uniformity_max,"
         "roi_mean,roi_std,roi_min,roi_max\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.problem << ',' << r.dim << ',' << r.runs;
    for (double v : {r.igd_mean, r.igd_std, r.igd_min, r.igd_max, r.uni_mean, r.uni_std,
                     r.uni_min, r.uni_max, r.roi_mean, r.roi_std, r.roi_min, r.roi_max})
      out << ',' << io::fmt(v);
    out << "\n";
  }
}

/// Loads every per-run metrics CSV under <dir>/runs.
inline std::vector<RunRecord> load_run_records(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(fs::path(dir) / "runs")) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.ends_with(".csv") && !name.ends_with("_pop.csv"))
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunRecord> records;
  for (const auto& f : files) records.push_back(read_metrics_csv(f));
  return records;
}

/// Objective-space scatter for one run: final solutions, the ROI reference
/// front, and the two cone boundary rays at +-theta around the axis.
inline void write_objective_plot_csv(const RunRecord& rec, const ExperimentConfig& cfg,
                                     const std::filesystem::path& path) {
  const Problem problem = make_problem(rec.problem, rec.dim, cfg.wfg_k);
  const PreferenceCone cone = make_cone(cfg);
  const ReferenceSet ref = roi_reference_set(problem, cone, cfg.reference_count);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvSchema << "\n";
  out << "kind,f1,f2\n";
  double rmax = 0.0;
  for (const auto& f : rec.objectives) {
    out << "solution," << io::fmt(f[0]) << ',' << io::fmt(f[1]) << "\n";
    rmax = std::max(rmax, norm2(f));
  }
  for (const auto& f : ref.points) {
    out << "reference," << io::fmt(f[0]) << ',' << io::fmt(f[1]) << "\n";
    rmax = std::max(rmax, norm2(f));
  }
  const double base = std::atan2(cone.axis[1], cone.axis[0]);
  for (double sign : {-1.0, 1.0}) {
    const double ang = base + sign * cone.theta;
    const char* kind = sign < 0 ? "cone_low" : "cone_high";
    for (int i = 1; i <= 50; ++i) {
      const double r = rmax * i / 50.0;
      out << kind << ',' << io::fmt(r * std::cos(ang)) << ',' << io::fmt(r * std::sin(ang))
          << "\n";
    }
  }
}

inline void write_dispersion_csv(const RunRecord& rec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvSchema << "\n";
  out << "run,index,sector,sigma,rho";
  for (std::size_t i = 0; i < rec.dim; ++i) out << ",x" << i + 1;
  out << "\n";
  const std::string run_id =
      cell_name(rec.algorithm, rec.problem, rec.dim) + "/" + std::to_string(rec.seed);
  for (const auto& srec : dispersion_table(rec.decisions)) {
    out << run_id << ',' << srec.index << ',' << srec.sector << ',' << io::fmt(srec.sigma)
        << ',' << io::fmt(srec.rho);
    for (double x : rec.decisions[srec.index]) out << ',' << io::fmt(x);
    out << "\n";
  }
}

inline void emit_plot_data(const RunRecord& rec, const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path plots = fs::path(cfg.out_dir) / "plots";
  fs::create_directories(plots);
  const std::string stem =
      cell_name(rec.algorithm, rec.problem, rec.dim) + "_" + std::to_string(rec.seed);
  write_objective_plot_csv(rec, cfg, plots / (stem + "_objectives.csv"));
  write_dispersion_csv(rec, plots / (stem + "_dispersion.csv"));
}

} // namespace coneopt

#endif

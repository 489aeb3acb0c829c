#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coneopt/harness.hpp"

namespace {

void add_common_flags(CLI::App* cmd, coneopt::ExperimentConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "flat key=value config file");
  cmd->add_option("--algorithms", cfg.algorithms, "subset of {c-dwu, c-nsgaii}")->delimiter(',');
  cmd->add_option("--problems", cfg.problems, "subset of {dtlz2, wfg4, wfg9}")->delimiter(',');
  cmd->add_option("--dims", cfg.dimensions, "decision dimensions")->delimiter(',');
  cmd->add_option("--runs", cfg.runs, "runs per cell");
  cmd->add_option("--pop", cfg.population, "population size");
  cmd->add_option("--evals", cfg.evaluations, "objective evaluation budget per run");
  cmd->add_option("--theta", cfg.theta, "cone opening angle (radians)");
  cmd->add_option("--alpha", cfg.alpha, "front-level penalty intensity");
  cmd->add_option("--beta", cfg.beta, "uniformity penalty intensity");
  cmd->add_option("--axis", cfg.axis, "cone axis components")->delimiter(',');
  cmd->add_option("--seed", cfg.base_seed, "base seed");
  cmd->add_option("--wfg-k", cfg.wfg_k, "WFG position parameter count");
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  cmd->add_option("--reference-count", cfg.reference_count, "front samples before ROI filter");
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_flag("--normalize-uniformity", cfg.normalize_uniformity,
                "summarize the [0,1]-rescaled uniformity column");
}

coneopt::ExperimentConfig resolve(CLI::App* cmd, coneopt::ExperimentConfig cli_cfg,
                                  const std::string& config_path) {
  if (config_path.empty()) return cli_cfg;
  // Flags win over the file: reload the file into a fresh config, then
  // re-apply every flag the user actually passed.
  coneopt::ExperimentConfig cfg;
  coneopt::load_config_file(config_path, cfg);
  auto passed = [&](const std::string& name) { return cmd->count(name) > 0; };
  if (passed("--algorithms")) cfg.algorithms = cli_cfg.algorithms;
  if (passed("--problems")) cfg.problems = cli_cfg.problems;
  if (passed("--dims")) cfg.dimensions = cli_cfg.dimensions;
  if (passed("--runs")) cfg.runs = cli_cfg.runs;
  if (passed("--pop")) cfg.population = cli_cfg.population;
  if (passed("--evals")) cfg.evaluations = cli_cfg.evaluations;
  if (passed("--theta")) cfg.theta = cli_cfg.theta;
  if (passed("--alpha")) cfg.alpha = cli_cfg.alpha;
  if (passed("--beta")) cfg.beta = cli_cfg.beta;
  if (passed("--axis")) cfg.axis = cli_cfg.axis;
  if (passed("--seed")) cfg.base_seed = cli_cfg.base_seed;
  if (passed("--wfg-k")) cfg.wfg_k = cli_cfg.wfg_k;
  if (passed("--threads")) cfg.threads = cli_cfg.threads;
  if (passed("--reference-count")) cfg.reference_count = cli_cfg.reference_count;
  if (passed("--out")) cfg.out_dir = cli_cfg.out_dir;
  if (passed("--normalize-uniformity")) cfg.normalize_uniformity = cli_cfg.normalize_uniformity;
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"preference-cone multi-objective optimization experiment runner"};
  app.require_subcommand(1);

  coneopt::ExperimentConfig run_cfg, sum_cfg, plot_cfg;
  std::string run_config, sum_config, plot_config;

  CLI::App* run = app.add_subcommand("run", "execute the experiment matrix");
  add_common_flags(run, run_cfg, run_config);

  CLI::App* sum = app.add_subcommand("summarize", "fold per-run CSVs into summary.csv");
  add_common_flags(sum, sum_cfg, sum_config);

  CLI::App* plot = app.add_subcommand("plot-data", "emit figure-data CSVs for persisted runs");
  add_common_flags(plot, plot_cfg, plot_config);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto cfg = resolve(run, run_cfg, run_config);
      const auto records = coneopt::run_matrix(cfg);
      const auto rows = coneopt::summarize(records, cfg.normalize_uniformity);
      coneopt::write_summary_csv(rows, std::filesystem::path(cfg.out_dir) / "summary.csv");
      double total = 0;
      for (const auto& r : records) total += r.seconds;
      std::printf("%zu runs complete (%.1f s solver time), summary at %s/summary.csv\n",
                  records.size(), total, cfg.out_dir.c_str());
    } else if (sum->parsed()) {
      const auto cfg = resolve(sum, sum_cfg, sum_config);
      const auto records = coneopt::load_run_records(cfg.out_dir);
      const auto rows = coneopt::summarize(records, cfg.normalize_uniformity);
      coneopt::write_summary_csv(rows, std::filesystem::path(cfg.out_dir) / "summary.csv");
      std::printf("summarized %zu runs into %s/summary.csv\n", records.size(),
                  cfg.out_dir.c_str());
    } else if (plot->parsed()) {
      const auto cfg = resolve(plot, plot_cfg, plot_config);
      namespace fs = std::filesystem;
      std::size_t count = 0;
      std::vector<fs::path> files;
      for (const auto& entry : fs::recursive_directory_iterator(fs::path(cfg.out_dir) / "runs")) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.ends_with(".csv") && !name.ends_with("_pop.csv"))
          files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        coneopt::RunRecord rec = coneopt::read_metrics_csv(f);
        fs::path pop = f;
        pop.replace_filename(std::to_string(rec.seed) + "_pop.csv");
        coneopt::read_population_csv(pop, rec);
        coneopt::emit_plot_data(rec, cfg);
        ++count;
      }
      std::printf("plot data for %zu runs written to %s/plots\n", count, cfg.out_dir.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "sclaw/config.hpp"
#include "sclaw/errors.hpp"
#include "sclaw/exact_solution.hpp"
#include "sclaw/run.hpp"

namespace {

struct Common {
  std::string config_path;
  std::string out;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config_path, "Run configuration")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", common.out, "Output directory (overrides the config)");
  cmd->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
}

sclaw::RunConfig load(const Common& common) {
  auto config = sclaw::parse_config_file(common.config_path);
  if (!common.out.empty()) config.out = common.out;
  return config;
}

int report(const sclaw::AnalysisOutcome& outcome) {
  std::cout << outcome.name << ": " << outcome.detail << "\n";
  return outcome.passed ? 0 : 1;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) x.push_back(std::stod(item));
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit entropy solutions, finite-volume cross-checks and semi-norm blow-up rates"};
  app.set_version_flag("--version", sclaw::library_version());
  app.require_subcommand(1);

  Common common;
  auto* build = app.add_subcommand("build", "Write the initial (or evolved) planar profile");
  add_common(build, common);
  double build_time = 0.0;
  build->add_option("--time", build_time, "Evolve to this time first");

  auto* eval = app.add_subcommand("exact-eval", "Evaluate the exact solution at points");
  add_common(eval, common);
  std::vector<std::string> points;
  double eval_time = 0.0;
  eval->add_option("--x", points, "Point as comma-separated coordinates (repeatable)")->required();
  eval->add_option("--t", eval_time, "Time")->required();

  std::map<std::string, CLI::App*> analyses;
  const std::map<std::string, std::string> help{
      {"times", "Interaction times, finite-speed time and validity window"},
      {"validate", "Godunov convergence study against the exact solution"},
      {"seminorm", "Truncated Besov scan, lower-bound series and TV growth"},
      {"nondegeneracy", "Nondegeneracy exponent of the flux"},
      {"check-lemmas", "Lemma 2 sweep, Lax and chord conditions at every shock"},
      {"tiling", "Multi-box tiling and its separation certificates"}};
  for (const auto& name : sclaw::known_analyses()) {
    analyses[name] = app.add_subcommand(name, help.at(name));
    add_common(analyses[name], common);
  }
  auto* run = app.add_subcommand("run", "Run every analysis the config requests and write the manifest");
  add_common(run, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors share the config-error status
  }

  try {
    const auto config = load(common);
    if (build->parsed()) {
      const auto initial = sclaw::config_datum(config);
      std::filesystem::create_directories(config.out);
      const auto path = std::filesystem::path(config.out) / "profile.txt";
      std::ofstream os(path);
      if (build_time > 0.0) {
        sclaw::write_profile(os, sclaw::ExactSolution(initial).evolve(build_time));
      } else {
        sclaw::write_profile(os, initial);
      }
      std::cout << "wrote " << path.string() << "\n";
      return 0;
    }
    if (eval->parsed()) {
      const sclaw::ExactSolution exact(sclaw::config_datum(config));
      std::cout << std::setprecision(17);
      for (const auto& text : points) {
        const auto x = parse_point(text);
        std::cout << text << "," << eval_time << "," << exact.evaluate(x, eval_time) << "\n";
      }
      return 0;
    }
    if (run->parsed()) {
      const auto result = sclaw::run(config, common.threads);
      for (const auto& o : result.outcomes) std::cout << o.name << ": " << o.detail << "\n";
      std::cout << "manifest: " << (std::filesystem::path(config.out) / "manifest").string() << " ("
                << (result.passed() ? "pass" : "fail") << ")\n";
      return result.passed() ? 0 : 1;
    }
    for (const auto& [name, cmd] : analyses) {
      if (!cmd->parsed()) continue;
      const auto outcome = sclaw::run_analysis(name, config, common.threads);
      sclaw::write_tables(config.out, outcome);
      return report(outcome);
    }
  } catch (const sclaw::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

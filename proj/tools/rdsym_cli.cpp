// rdsym_cli: iterate, solve, verify, forbidden and symmetry commands for the
// two recurrence families. Flags override values from --config.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rdsym/cli.hpp"

int main(int argc, char** argv) {
  using rdsym::cli::RunConfig;

  CLI::App app{"Exact solver and verifier for two families of rational recurrences"};
  std::string config_path;
  std::string command;
  std::string family;
  std::string A, B, lambda, mu, init, index_mode, format, tolerance;
  long from = 0, to = 0;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool strict = false;

  app.add_option("--config", config_path, "JSON file with default settings");
  app.add_option("--command", command, "iterate | solve | verify | forbidden | symmetry");
  app.add_option("--family", family, "sixth | fifth");
  app.add_option("--A", A, "sixth order: A_n as const:p/q, periodic:a,b,... or explicit:...");
  app.add_option("--B", B, "sixth order: B_n, same syntax as --A");
  app.add_option("--lambda", lambda, "fifth order: lambda (rational)");
  app.add_option("--mu", mu, "fifth order: mu (rational)");
  app.add_option("--init", init, "comma-separated initial values");
  app.add_option("--index-mode", index_mode, "u (u_0 first) or x (x_{-5} / x_{-4} first)");
  app.add_option("--from", from, "first index reported");
  app.add_option("--to", to, "last index reported; horizon for forbidden");
  app.add_option("--seed", seed, "seed for randomized verify / symmetry");
  app.add_option("--cases", cases, "number of random specs or points");
  app.add_option("--format", format, "json | csv");
  app.add_option("--tolerance", tolerance, "enables the floating spectral check (fifth order)");
  app.add_flag("--strict", strict, "exit 3 when solve/iterate hits a singularity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rdsym::cli::kConfigError;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw rdsym::ConfigError("cannot open config file " + config_path);
      rdsym::cli::apply_json(cfg, nlohmann::json::parse(in));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rdsym::cli::kConfigError;
  }

  auto set = [&](const char* flag, auto& field, const auto& value) {
    if (app.count(flag) > 0) field = value;
  };
  set("--command", cfg.command, command);
  set("--family", cfg.family, family);
  set("--A", cfg.A, A);
  set("--B", cfg.B, B);
  set("--lambda", cfg.lambda, lambda);
  set("--mu", cfg.mu, mu);
  set("--init", cfg.init, init);
  set("--index-mode", cfg.index_mode, index_mode);
  set("--from", cfg.from, from);
  set("--to", cfg.to, to);
  set("--seed", cfg.seed, seed);
  set("--cases", cfg.cases, cases);
  set("--format", cfg.format, format);
  set("--tolerance", cfg.tolerance, tolerance);
  if (strict) cfg.strict = true;

  const auto result = rdsym::cli::run(cfg);
  (result.exit_code == rdsym::cli::kConfigError ? std::cerr : std::cout) << result.report;
  return result.exit_code;
}

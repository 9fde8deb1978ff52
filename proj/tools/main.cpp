#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ore/cli.hpp"
#include "ore/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Minimal prime ideals of Ore extensions over Z[i], F_p[t] and Q[t]"};
  std::string config_path, command, ideal, out;
  std::uint64_t norm_bound = 0, budget = 0, samples = 0, seed = 0;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--command", command, "check-domain | classify | enumerate-minimal | largest-stable | verify");
  app.add_option("--ideal", ideal, "comma-separated generators, e.g. \"2+i\" or \"1 mod 3*t\"");
  auto* nb = app.add_option("--norm-bound", norm_bound, "norm bound for enumerations and the oracle");
  auto* bu = app.add_option("--budget", budget, "iteration budget for orbits and refinement");
  auto* sa = app.add_option("--samples", samples, "random samples for the falsifier");
  auto* se = app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out, "report path (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  ore::RunConfig cfg;
  try {
    cfg = ore::load_config(config_path);
  } catch (const ore::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ore::kExitConfig;
  }
  if (!command.empty()) cfg.command = command;
  if (!ideal.empty()) cfg.ideal = ore::split_generators(ideal);
  if (nb->count()) cfg.norm_bound = norm_bound;
  if (bu->count()) cfg.budget = budget;
  if (sa->count()) cfg.samples = samples;
  if (se->count()) cfg.seed = seed;
  if (!out.empty()) cfg.out = out;

  const auto outcome = ore::execute(cfg);
  const std::string text = ore::render_report(outcome.report);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    try {
      ore::write_atomically(cfg.out, text);
    } catch (const ore::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return ore::kExitIo;
    }
  }
  if (outcome.report.contains("error")) std::cerr << "error: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}

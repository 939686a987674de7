#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  namespace ffc = frameforge::cli;

  CLI::App app{"frame-forge: finite-truncation checks for localized frames"};
  ffc::Options opts;
  std::uint64_t seed = 0;
  bool no_timestamp = false;

  app.add_option("command", opts.command, "Pipeline to run")
      ->required()
      ->check(CLI::IsMember(ffc::command_names()));
  app.add_option("--config", opts.config, "JSON experiment config")->required();
  app.add_option("--out", opts.out, "Output directory")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Master seed (overrides the config)");
  app.add_flag("--no-timestamp", no_timestamp, "Omit generated_at from reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ffc::kPass : ffc::kInvalidInput;
  }
  if (*seed_opt) opts.seed = seed;
  opts.timestamp = !no_timestamp;
  return ffc::run(opts, std::cout, std::cerr);
}

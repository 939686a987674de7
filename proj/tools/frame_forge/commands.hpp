#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace frameforge::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kInvalidInput = 2,
  kIoError = 3,
};

struct Options {
  std::string command;
  std::filesystem::path config;
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;
  bool timestamp = true;
};

const std::vector<std::string>& command_names();

/// Runs one command; never throws. Reports go to `out_dir`, a one-line
/// summary to `out`, errors to `err`.
int run(const Options& options, std::ostream& out, std::ostream& err);

/// FRAME_FORGE_THREADS if set to a positive integer, else the hardware count.
unsigned thread_budget();

}  // namespace frameforge::cli

#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 precision or geometry error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sah::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kNumeric = 3 };

struct Config {
  std::uint64_t seed = 0;
  long precision_bits = 256;
  long long relation_height = 1000000;
  std::size_t max_dim = 4;
  bool json = false;
  bool timing = false;  // wall-clock times break byte-identical output
  int digits = 30;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sah::cli

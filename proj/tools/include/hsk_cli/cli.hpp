#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsk::cli {

enum class Format { text, records };

struct RunConfig {
  std::string command;  // check, skeleton, solve, sreu, encode, eval, countermodel
  std::string input = "-";
  std::size_t n = 1;
  std::size_t max_size = 6;
  std::string structure = "two-point";
  std::vector<std::string> alpha;  // name=NAT or name=J(j,k)
  Format format = Format::text;
  bool solve = false;
  std::optional<std::size_t> m;
  std::optional<std::string> var;
  unsigned threads = 1;
  bool color = false;
};

struct RunResult {
  int status = 0;  // 0 positive, 1 negative, 2 usage or parse error
  std::string out;
  std::string err;
};

/// Parses the command line. On --help or a usage error the result carries
/// the message and status instead of a config.
struct ParsedArgs {
  std::optional<RunConfig> config;
  RunResult early;
};
ParsedArgs parse_args(int argc, const char* const* argv);

/// Runs one command over the given input text.
RunResult run(const RunConfig& config, std::string_view input);

}  // namespace hsk::cli

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hsk_cli/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = hsk::cli::parse_args(argc, argv);
  if (!parsed.config) {
    std::cout << parsed.early.out;
    std::cerr << parsed.early.err;
    return parsed.early.status;
  }
  const auto& config = *parsed.config;
  std::string text;
  if (config.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(config.input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << config.input << '\n';
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto result = hsk::cli::run(config, text);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}

// Command-line front end. Exit status: 0 success, 1 domain failure
// (unbalanced reaction, no candidates, threshold missed), 2 input error.

#ifndef CHEMGENUS_CLI_HPP_
#define CHEMGENUS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chemgenus {

enum class Command { Encode, Check, Solve, Respond };
enum class OutputFormat { Text, Tree };

struct RunConfig {
  Command command = Command::Encode;
  std::filesystem::path input;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::filesystem::path> elements_file;  // overrides CHEMGENUS_ELEMENTS

  // encode
  std::optional<std::string> molecule;
  std::optional<std::string> side;
  // check / solve (1-based)
  std::size_t reaction = 1;
  // solve
  std::vector<std::string> elements = {"H", "C", "N", "O", "S", "Cl", "Mg"};
  int max_atoms = 6;
  std::uint64_t node_budget = 1'000'000;
  // respond
  double T = 0.0;
  double epsilon = 0.0;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs; usage errors exit with 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chemgenus

#endif

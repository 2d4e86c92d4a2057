#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmix::cli {

enum class OutputFormat { Text, Csv, Markdown, JsonLines };

std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_format(std::string_view name);

/// Everything a command needs, independent of how it was spelled on the
/// command line or in a config file.
struct CliConfig {
  std::string subcommand;

  std::string op;
  std::vector<double> weights;
  std::optional<std::size_t> arity;
  std::vector<double> vector;  ///< eval input
  std::vector<std::string> properties;

  std::vector<std::string> paths;  ///< positional files
  std::vector<std::string> images;
  std::vector<std::string> ops;
  std::vector<std::size_t> blocks;
  std::vector<std::string> methods;
  std::size_t block = 2;
  std::size_t factor = 2;
  std::string method = "nn";
  bool replicate_edge = false;
  std::string output;

  std::string pattern = "gradient";  ///< synth
  std::size_t width = 64;
  std::size_t height = 64;
  int level = 128;

  std::size_t samples = 10000;
  std::size_t grid = 21;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::Text;

  /// Arguments that parse back to an equal config.
  std::vector<std::string> to_argv() const;

  friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

/// Parses a command line (without the program name). A `--config FILE` option
/// reads TOML-style defaults. Throws ParseError on bad input; help requests
/// surface as HelpRequested.
CliConfig parse_cli(const std::vector<std::string>& args);

struct HelpRequested {
  std::string text;
};

}  // namespace gmix::cli

#include "gmix/cli/config.hpp"

#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "gmix/error.hpp"

namespace gmix::cli {

namespace {

const std::vector<std::string> kDefaultOps{"min", "max", "med", "arith", "cowa", "h"};
const std::vector<std::size_t> kDefaultBlocks{2, 4};
const std::vector<std::string> kDefaultMethods{"nn", "bilinear", "bicubic"};

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F&& fmt) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += fmt(xs[i]);
  }
  return s;
}

std::string join_str(const std::vector<std::string>& xs) {
  return join(xs, [](const std::string& s) { return s; });
}

}  // namespace

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Markdown: return "markdown";
    case OutputFormat::JsonLines: return "json-lines";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown" || name == "md") return OutputFormat::Markdown;
  if (name == "json-lines" || name == "jsonl") return OutputFormat::JsonLines;
  throw Error(ErrorCode::ParseError, "unknown output format '" + std::string(name) + "'");
}

CliConfig parse_cli(const std::vector<std::string>& args) {
  CliConfig cfg;
  std::string format = "text";
  std::size_t arity = 0;

  CLI::App app{"Generalized mixture aggregation toolkit", "gmix"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML file with option defaults");
  app.add_option("--samples", cfg.samples, "random samples per property check")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "grid points per axis")->check(CLI::Range(2, 1000000));
  app.add_option("--seed", cfg.seed, "sampling seed")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text, csv, markdown or json-lines");
  app.add_option("--output", cfg.output, "write the table or report here instead of stdout");

  auto add_op = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--op", cfg.op, "operator name, e.g. h, owa, gm:proportional");
    if (required) o->required();
    sub->add_option("--weights", cfg.weights, "fixed weights for wavg and owa")->delimiter(',');
  };

  auto* eval = app.add_subcommand("eval", "evaluate an operator on one vector");
  add_op(eval, true);
  eval->add_option("vector", cfg.vector, "comma separated components in [0,1]")
      ->delimiter(',')
      ->required();

  auto* audit = app.add_subcommand("audit", "sample algebraic properties of an operator");
  add_op(audit, true);
  audit->add_option("--arity", arity, "operator arity")->check(CLI::PositiveNumber);
  audit->add_option("--props", cfg.properties, "comma separated property names")
      ->delimiter(',')
      ->required();

  auto* reduce = app.add_subcommand("reduce", "block-reduce a PGM image");
  add_op(reduce, true);
  reduce->add_option("--block", cfg.block, "block side")->check(CLI::Range(2, 4096));
  reduce->add_flag("--replicate-edge", cfg.replicate_edge, "pad ragged edges instead of failing");
  reduce->add_option("paths", cfg.paths, "input and output PGM")->expected(2)->required();

  auto* magnify = app.add_subcommand("magnify", "upscale a PGM image");
  magnify->add_option("--method", cfg.method, "nn, bilinear or bicubic");
  magnify->add_option("--factor", cfg.factor, "integer factor")->check(CLI::Range(2, 4096));
  magnify->add_option("paths", cfg.paths, "input and output PGM")->expected(2)->required();

  auto* psnr = app.add_subcommand("psnr", "compare two PGM images");
  psnr->add_option("paths", cfg.paths, "two PGM images")->expected(2)->required();

  auto* exp = app.add_subcommand("experiment", "reduce, magnify and compare a set of images");
  exp->add_option("--images", cfg.images, "comma separated PGM paths")->delimiter(',')->required();
  exp->add_option("--ops", cfg.ops, "comma separated operators")->delimiter(',');
  exp->add_option("--blocks", cfg.blocks, "comma separated block sides")->delimiter(',');
  exp->add_option("--methods", cfg.methods, "comma separated interpolation methods")
      ->delimiter(',');
  exp->add_flag("--replicate-edge", cfg.replicate_edge, "pad ragged edges instead of failing");

  auto* synth = app.add_subcommand("synth", "write a synthetic test image");
  synth->add_option("--pattern", cfg.pattern, "gradient or constant");
  synth->add_option("--width", cfg.width)->check(CLI::PositiveNumber);
  synth->add_option("--height", cfg.height)->check(CLI::PositiveNumber);
  synth->add_option("--level", cfg.level, "pixel value of a constant image")
      ->check(CLI::Range(0, 255));
  synth->add_option("paths", cfg.paths, "output PGM")->expected(1)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    throw HelpRequested{os.str()};
  } catch (const CLI::Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = parse_format(format);
  if (audit->count("--arity") > 0) cfg.arity = arity;
  if (cfg.subcommand == "experiment") {
    if (cfg.ops.empty()) cfg.ops = kDefaultOps;
    if (cfg.blocks.empty()) cfg.blocks = kDefaultBlocks;
    if (cfg.methods.empty()) cfg.methods = kDefaultMethods;
  }
  return cfg;
}

std::vector<std::string> CliConfig::to_argv() const {
  std::vector<std::string> a{subcommand};
  auto opt = [&](const char* flag, const std::string& v) {
    a.push_back(flag);
    a.push_back(v);
  };
  auto op_opts = [&] {
    opt("--op", op);
    if (!weights.empty()) opt("--weights", join(weights, num));
  };
  if (subcommand == "eval") {
    op_opts();
  } else if (subcommand == "audit") {
    op_opts();
    if (arity) opt("--arity", std::to_string(*arity));
    opt("--props", join_str(properties));
  } else if (subcommand == "reduce") {
    op_opts();
    opt("--block", std::to_string(block));
    if (replicate_edge) a.push_back("--replicate-edge");
  } else if (subcommand == "magnify") {
    opt("--method", method);
    opt("--factor", std::to_string(factor));
  } else if (subcommand == "experiment") {
    opt("--images", join_str(images));
    opt("--ops", join_str(ops));
    opt("--blocks", join(blocks, [](std::size_t k) { return std::to_string(k); }));
    opt("--methods", join_str(methods));
    if (replicate_edge) a.push_back("--replicate-edge");
  } else if (subcommand == "synth") {
    opt("--pattern", pattern);
    opt("--width", std::to_string(width));
    opt("--height", std::to_string(height));
    opt("--level", std::to_string(level));
  }
  opt("--samples", std::to_string(samples));
  opt("--grid", std::to_string(grid));
  opt("--seed", std::to_string(seed));
  opt("--tolerance", num(tolerance));
  opt("--format", std::string(to_string(format)));
  if (!output.empty()) opt("--output", output);
  if (subcommand == "eval") {
    a.push_back("--");
    a.push_back(join(vector, num));
  } else {
    a.insert(a.end(), paths.begin(), paths.end());
  }
  return a;
}

}  // namespace gmix::cli

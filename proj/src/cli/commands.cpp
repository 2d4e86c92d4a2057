#include "gmix/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gmix/cli/registry.hpp"
#include "gmix/image/experiment.hpp"
#include "gmix/lab/report.hpp"

namespace gmix::cli {

namespace {

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> parse_direction(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find('/', start);
    const std::string part(text.substr(start, at - start));
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad direction component '" + part + "'");
    }
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

lab::CheckBudget budget_of(const CliConfig& cfg) {
  lab::CheckBudget b;
  b.random_samples = cfg.samples;
  b.grid_points_per_axis = cfg.grid;
  b.rng_seed = cfg.seed;
  b.tolerance = cfg.tolerance;
  b.validate();
  return b;
}

// Sends text to --output when given, otherwise to out.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + cfg.output + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + cfg.output);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_reports(const std::vector<lab::PropertyReport>& reports, OutputFormat f) {
  std::string s;
  switch (f) {
    case OutputFormat::Text:
      for (const auto& r : reports) s += lab::to_text(r) + "\n";
      break;
    case OutputFormat::JsonLines:
      for (const auto& r : reports) s += lab::to_json_line(r) + "\n";
      break;
    case OutputFormat::Csv:
      s = "property,verdict,samples_used,violations,tolerance,detail\n";
      for (const auto& r : reports) {
        s += csv_field(r.property) + "," + std::string(lab::to_string(r.verdict)) + "," +
             std::to_string(r.samples_used) + "," + std::to_string(r.violations) + "," +
             fmt10(r.tolerance) + "," + csv_field(r.detail) + "\n";
      }
      break;
    case OutputFormat::Markdown:
      s = "| property | verdict | samples | violations | detail |\n|---|---|---:|---:|---|\n";
      for (const auto& r : reports) {
        s += "| " + r.property + " | " + std::string(lab::to_string(r.verdict)) + " | " +
             std::to_string(r.samples_used) + " | " + std::to_string(r.violations) + " | " +
             r.detail + " |\n";
      }
      break;
  }
  return s;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const AggregatorSpec agg = make_operator(cfg.op, cfg.vector.size(), cfg.weights);
  emit(cfg, out, fmt10(agg(cfg.vector)) + "\n");
  return kExitOk;
}

int cmd_audit(const CliConfig& cfg, std::ostream& out) {
  const auto budget = budget_of(cfg);
  const AggregatorSpec agg = make_operator(cfg.op, cfg.arity, cfg.weights);
  std::vector<lab::PropertyReport> reports;
  int code = kExitOk;
  for (const auto& p : cfg.properties) {
    reports.push_back(run_property(agg, p, budget));
    if (reports.back().verdict == lab::Verdict::Refuted && expected_to_hold(p)) code = kExitRefuted;
  }
  emit(cfg, out, render_reports(reports, cfg.format));
  return code;
}

int cmd_reduce(const CliConfig& cfg, std::ostream& out) {
  const auto img = image::read_pgm(cfg.paths.at(0));
  const image::ReductionConfig rc{
      cfg.block, make_operator(cfg.op, cfg.block * cfg.block, cfg.weights),
      cfg.replicate_edge ? image::Boundary::ReplicateEdge : image::Boundary::RequireDivisible};
  const auto reduced = image::block_reduce(img, rc);
  image::write_pgm(reduced, cfg.paths.at(1));
  out << cfg.paths.at(1) << ": " << reduced.width() << "x" << reduced.height() << "\n";
  return kExitOk;
}

int cmd_magnify(const CliConfig& cfg, std::ostream& out) {
  const auto img = image::read_pgm(cfg.paths.at(0));
  const auto big = image::magnify(img, cfg.factor, image::parse_interpolation(cfg.method));
  image::write_pgm(big, cfg.paths.at(1));
  out << cfg.paths.at(1) << ": " << big.width() << "x" << big.height() << "\n";
  return kExitOk;
}

int cmd_psnr(const CliConfig& cfg, std::ostream& out) {
  const double db = image::psnr(image::read_pgm(cfg.paths.at(0)), image::read_pgm(cfg.paths.at(1)));
  emit(cfg, out, fmt10(db) + "\n");
  return kExitOk;
}

int cmd_experiment(const CliConfig& cfg, std::ostream& out) {
  std::vector<image::NamedImage> images;
  for (const auto& p : cfg.images) {
    images.push_back({std::filesystem::path(p).stem().string(), image::read_pgm(p)});
  }
  std::vector<image::NamedOperator> ops;
  for (const auto& name : cfg.ops) {
    make_operator(name, 4, {});  // fail fast on unknown names
    ops.push_back({name, [name](std::size_t n) { return make_operator(name, n, {}); }});
  }
  std::vector<image::Interpolation> methods;
  for (const auto& m : cfg.methods) methods.push_back(image::parse_interpolation(m));
  const auto table = image::run_reduction_experiment(
      images, ops, cfg.blocks, methods,
      cfg.replicate_edge ? image::Boundary::ReplicateEdge : image::Boundary::RequireDivisible);
  switch (cfg.format) {
    case OutputFormat::Csv: emit(cfg, out, table.to_csv()); break;
    case OutputFormat::JsonLines: emit(cfg, out, table.to_json_lines()); break;
    case OutputFormat::Text:
    case OutputFormat::Markdown: emit(cfg, out, table.to_markdown()); break;
  }
  return kExitOk;
}

int cmd_synth(const CliConfig& cfg, std::ostream& out) {
  image::GrayImage img = image::GrayImage::filled(cfg.width, cfg.height, 0);
  if (cfg.pattern == "gradient") {
    img = image::gradient_image(cfg.width, cfg.height);
  } else if (cfg.pattern == "constant") {
    img = image::GrayImage::filled(cfg.width, cfg.height, static_cast<std::uint8_t>(cfg.level));
  } else {
    throw Error(ErrorCode::ParseError, "unknown pattern '" + cfg.pattern + "'");
  }
  image::write_pgm(img, cfg.paths.at(0));
  out << cfg.paths.at(0) << ": " << img.width() << "x" << img.height() << "\n";
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::MalformedPgm:
      return kExitIo;
    case ErrorCode::FamilyViolation:
    case ErrorCode::ZeroDenominator:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

bool expected_to_hold(std::string_view p) {
  return !(p == "neutral" || p == "annihilator" || p == "zero-divisor" || p == "one-divisor");
}

lab::PropertyReport run_property(const AggregatorSpec& agg, std::string_view p,
                                 const lab::CheckBudget& budget) {
  using namespace lab;
  if (p == "boundary") return check_boundary(agg, budget);
  if (p == "monotone") return check_monotone(agg, budget);
  if (p == "idempotent") return check_idempotent(agg, budget);
  if (p == "averaging") return check_averaging(agg, budget);
  if (p == "shift-invariant") return check_shift_invariant(agg, budget);
  if (p == "symmetric") return check_symmetric(agg, budget);
  if (p == "neutral") return find_neutral(agg, budget);
  if (p == "annihilator") return find_annihilator(agg, budget);
  if (p == "zero-divisor") return check_zero_divisor(agg, budget);
  if (p == "one-divisor") return check_one_divisor(agg, budget);
  if (p == "pre-aggregation") return is_pre_aggregation(agg, {}, budget);
  if (p.starts_with("homogeneous:")) {
    const std::string k(p.substr(12));
    try {
      std::size_t used = 0;
      const double order = std::stod(k, &used);
      if (used == k.size()) return check_homogeneous(agg, order, budget);
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::ParseError, "bad homogeneity order '" + k + "'");
  }
  if (p.starts_with("directional:")) {
    return check_directional(agg, Direction(parse_direction(p.substr(12))), budget);
  }
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(p) + "'");
}

int execute(const CliConfig& cfg, std::ostream& out) {
  const std::string& s = cfg.subcommand;
  if (s == "eval") return cmd_eval(cfg, out);
  if (s == "audit") return cmd_audit(cfg, out);
  if (s == "reduce") return cmd_reduce(cfg, out);
  if (s == "magnify") return cmd_magnify(cfg, out);
  if (s == "psnr") return cmd_psnr(cfg, out);
  if (s == "experiment") return cmd_experiment(cfg, out);
  if (s == "synth") return cmd_synth(cfg, out);
  throw Error(ErrorCode::ParseError, "unknown subcommand '" + s + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_cli(args), out);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const Error& e) {
    err << "gmix: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace gmix::cli

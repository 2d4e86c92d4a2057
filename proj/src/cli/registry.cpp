#include "gmix/cli/registry.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "gmix/error.hpp"
#include "gmix/families.hpp"
#include "gmix/lab/preagg_gallery.hpp"

namespace gmix::cli {

namespace {

struct ParsedSpec {
  std::string head;
  std::string sub;  // family or mixture kind
  std::map<std::string, std::string> params;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "bad number '" + s + "' for " + what);
  }
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(s, '/')) out.push_back(parse_number(part, what));
  return out;
}

ParsedSpec parse_spec(std::string_view spec) {
  auto parts = split(spec, ':');
  ParsedSpec p;
  p.head = parts[0];
  std::size_t i = 1;
  if ((p.head == "gm" || p.head == "bgm" || p.head == "mixture")) {
    if (parts.size() < 2 || parts[1].empty()) {
      throw Error(ErrorCode::ParseError, "'" + p.head + "' needs a family, e.g. " + p.head +
                                             (p.head == "mixture" ? ":power" : ":proportional"));
    }
    p.sub = parts[1];
    i = 2;
  }
  for (; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, "expected key=value in '" + std::string(spec) + "'");
    }
    p.params[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  return p;
}

void allow_keys(const ParsedSpec& p, std::initializer_list<std::string_view> keys) {
  for (const auto& [k, v] : p.params) {
    bool ok = false;
    for (auto allowed : keys) ok = ok || k == allowed;
    if (!ok) throw Error(ErrorCode::ParseError, "unknown parameter '" + k + "' for " + p.head);
  }
}

bool is_binary_gallery(const std::string& head) {
  return head == "truncdiff" || head == "lehmer" || head == "stepa" || head == "stepb";
}

}  // namespace

std::vector<std::string> registry_names() {
  return {"min",   "max",  "arith",     "prod",   "median", "wavg",  "owa",
          "cowa",  "mixture:power",     "gm:<family>",      "bgm:<family>", "h",
          "mode",  "truncdiff", "lehmer", "stepa", "stepb"};
}

std::size_t natural_arity(std::string_view spec, const std::vector<double>& weights,
                          std::size_t fallback) {
  const ParsedSpec p = parse_spec(spec);
  if (is_binary_gallery(p.head)) return 2;
  if (!weights.empty()) return weights.size();
  for (const char* key : {"r", "w"}) {
    if (auto it = p.params.find(key); it != p.params.end()) return parse_list(it->second, key).size();
  }
  return fallback;
}

AggregatorSpec make_operator(std::string_view spec, std::optional<std::size_t> arity_opt,
                             const std::vector<double>& weights) {
  const ParsedSpec p = parse_spec(spec);
  const std::size_t n = arity_opt.value_or(natural_arity(spec, weights));
  const std::string& h = p.head;

  if (h != "gm" && h != "bgm" && h != "mixture" && h != "lehmer") allow_keys(p, {});
  if (h == "min") return make_classic(Classic::Min, n);
  if (h == "max") return make_classic(Classic::Max, n);
  if (h == "arith") return make_classic(Classic::Arith, n);
  if (h == "prod") return make_classic(Classic::Prod, n);
  if (h == "median" || h == "med") return make_classic(Classic::Median, n);
  if (h == "cowa") return make_cowa(n);
  if (h == "h") return make_h(n);
  if (h == "wavg" || h == "owa") {
    if (weights.empty()) throw Error(ErrorCode::ParseError, h + " needs --weights");
    require_same_arity(n, weights.size(), "weights");
    return h == "wavg" ? make_wavg(WeightVector(weights)) : make_owa(WeightVector(weights));
  }
  if (h == "mixture") {
    if (p.sub != "power") throw Error(ErrorCode::ParseError, "unknown mixture kind '" + p.sub + "'");
    allow_keys(p, {"p"});
    const double e = p.params.count("p") ? parse_number(p.params.at("p"), "p") : 1.0;
    if (!(e > 0.0)) throw Error(ErrorCode::BadParams, "mixture:power needs p > 0");
    std::vector<UnaryWeight> fns(n, [e](double t) { return std::pow(t, e); });
    return make_mixture(std::move(fns), std::string(spec));
  }
  if (h == "gm" || h == "bgm") {
    allow_keys(p, {"alpha", "r", "w"});
    FamilyParams fp;
    fp.arity = n;
    if (p.params.count("alpha")) fp.alpha = parse_number(p.params.at("alpha"), "alpha");
    if (p.params.count("r")) fp.direction = parse_list(p.params.at("r"), "r");
    if (p.params.count("w")) fp.weights = parse_list(p.params.at("w"), "w");
    const WeightFamily fam = family_gallery(p.sub, fp);
    return h == "gm" ? make_gm(fam) : make_bgm(fam);
  }
  if (h == "mode") return lab::gallery_preagg(lab::PreAggKind::Mode, {n, 0.5});
  if (is_binary_gallery(h)) {
    require_same_arity(2, n, h.c_str());
    if (h == "truncdiff") return lab::gallery_preagg(lab::PreAggKind::TruncDiff);
    if (h == "stepa") return lab::gallery_preagg(lab::PreAggKind::StepA);
    if (h == "stepb") return lab::gallery_preagg(lab::PreAggKind::StepB);
    allow_keys(p, {"lambda"});
    lab::PreAggParams lp;
    if (p.params.count("lambda")) lp.lambda = parse_number(p.params.at("lambda"), "lambda");
    return lab::gallery_preagg(lab::PreAggKind::Lehmer, lp);
  }
  throw Error(ErrorCode::ParseError, "unknown operator '" + std::string(spec) + "'");
}

}  // namespace gmix::cli

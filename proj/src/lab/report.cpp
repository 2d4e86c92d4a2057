#include "gmix/lab/report.hpp"

#include <cmath>
#include <charconv>

#include "gmix/error.hpp"

namespace gmix::lab {

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string vec(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += num(v[i]);
  }
  return s + ")";
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::HoldsSampled, Verdict::Refuted, Verdict::Inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "unknown verdict '" + s + "'");
}

WitnessKind kind_from(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(WitnessKind::NotOne); ++k) {
    if (to_string(static_cast<WitnessKind>(k)) == s) return static_cast<WitnessKind>(k);
  }
  throw Error(ErrorCode::ParseError, "unknown witness kind '" + s + "'");
}

}  // namespace

std::string to_text(const PropertyReport& r) {
  std::string s = "property=" + r.property + " verdict=" + std::string(to_string(r.verdict)) +
                  " samples=" + std::to_string(r.samples_used) +
                  " violations=" + std::to_string(r.violations) + " tolerance=" + num(r.tolerance);
  if (!r.found.empty()) s += " found=" + vec(r.found);
  if (r.witness) {
    const Witness& w = *r.witness;
    s += " witness.kind=" + std::string(to_string(w.kind)) + " witness.inputs=";
    for (std::size_t i = 0; i < w.inputs.size(); ++i) {
      if (i) s += ";";
      s += vec(w.inputs[i]);
    }
    s += " witness.observed=" + vec(w.observed);
    if (!w.params.empty()) s += " witness.params=" + vec(w.params);
  }
  s += " detail=\"" + r.detail + "\"";
  return s;
}

nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["verdict"] = std::string(to_string(r.verdict));
  j["samples_used"] = r.samples_used;
  j["violations"] = r.violations;
  j["tolerance"] = r.tolerance;
  j["found"] = r.found;
  if (r.witness) {
    j["witness"] = {{"kind", std::string(to_string(r.witness->kind))},
                    {"inputs", r.witness->inputs},
                    {"observed", r.witness->observed},
                    {"params", r.witness->params}};
  } else {
    j["witness"] = nullptr;
  }
  j["detail"] = r.detail;
  return j;
}

PropertyReport report_from_json(const nlohmann::json& j) {
  try {
    PropertyReport r;
    r.property = j.at("property").get<std::string>();
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    r.samples_used = j.at("samples_used").get<std::size_t>();
    r.violations = j.at("violations").get<std::size_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.found = j.at("found").get<std::vector<double>>();
    if (const auto& w = j.at("witness"); !w.is_null()) {
      r.witness = Witness{kind_from(w.at("kind").get<std::string>()),
                          w.at("inputs").get<std::vector<std::vector<double>>>(),
                          w.at("observed").get<std::vector<double>>(),
                          w.at("params").get<std::vector<double>>()};
    }
    r.detail = j.at("detail").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report document: ") + e.what());
  }
}

std::string to_json_line(const PropertyReport& r) { return to_json(r).dump(); }

}  // namespace gmix::lab

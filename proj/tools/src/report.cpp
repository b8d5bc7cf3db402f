#include <algorithm>
#include <charconv>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <system_error>

#include "harmsum/cli.hpp"
#include "harmsum/error.hpp"

namespace harmsum::cli {

namespace {

using nlohmann::ordered_json;

// Shortest decimal that reads back to the same double.
std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParseError("bad decimal '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text) {
  int v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + text + "'");
  }
  return v;
}

std::string text_table(const std::vector<VerificationReport>& reports, FormatOptions options) {
  std::vector<std::string> params;
  size_t id_w = 2, param_w = 6;
  for (const auto& r : reports) {
    params.push_back(format_params(r.params));
    id_w = std::max(id_w, r.id.size());
    param_w = std::max(param_w, params.back().size());
  }
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-*s  %7s  %-6s  %9s\n", static_cast<int>(id_w), "id",
                static_cast<int>(param_w), "params", "matched", "status", "ms");
  out += line;
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::snprintf(line, sizeof line, "%-*s  %-*s  %7d  %-6s  %9.1f\n", static_cast<int>(id_w), r.id.c_str(),
                  static_cast<int>(param_w), params[i].c_str(), r.matched_digits, to_string(r.status).c_str(),
                  options.omit_timing ? 0.0 : r.elapsed_ms);
    out += line;
  }
  return out;
}

}  // namespace

std::string format_report(const std::vector<VerificationReport>& reports, OutputMode mode,
                          FormatOptions options) {
  if (mode == OutputMode::Text) return text_table(reports, options);
  ordered_json doc = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = to_string(value);
    doc.push_back({{"id", r.id},
                   {"params", params},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"matched_digits", std::to_string(r.matched_digits)},
                   {"method", r.method},
                   {"elapsed_ms", shortest(options.omit_timing ? 0.0 : r.elapsed_ms)},
                   {"status", to_string(r.status)}});
  }
  return doc.empty() ? "[]\n" : doc.dump(2) + "\n";
}

std::vector<VerificationReport> parse_reports(std::string_view json) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("report JSON: expected an array");
  std::vector<VerificationReport> out;
  for (const auto& item : doc) {
    if (!item.is_object() || item.size() != 8) throw ParseError("report JSON: expected 8 fields per report");
    try {
      VerificationReport r;
      r.id = item.at("id").get<std::string>();
      for (const auto& [name, value] : item.at("params").items()) {
        r.params[name] = parse_rational(value.get<std::string>());
      }
      r.lhs = item.at("lhs").get<std::string>();
      r.rhs = item.at("rhs").get<std::string>();
      r.matched_digits = parse_int(item.at("matched_digits").get<std::string>());
      r.method = item.at("method").get<std::string>();
      r.elapsed_ms = parse_double(item.at("elapsed_ms").get<std::string>());
      r.status = parse_status(item.at("status").get<std::string>());
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("report JSON: ") + e.what());
    }
  }
  return out;
}

std::pair<std::string, Rational> parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ParseError("parameter binding '" + std::string(text) + "' must look like name=value");
  }
  return {std::string(text.substr(0, eq)), parse_rational(text.substr(eq + 1))};
}

}  // namespace harmsum::cli

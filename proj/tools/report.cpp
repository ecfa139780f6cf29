#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ellint/cli.hpp"
#include "ellint/version.hpp"

namespace ellint::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

int Report::passed() const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [](const ReportRecord& r) { return r.pass; }));
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

std::string format_human(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json meta;
  meta["version"] = ellint::version;
  meta["suite"] = r.suite;
  meta["grid"] = r.grid;
  nlohmann::ordered_json tols = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.tolerances) tols[name] = value;
  meta["tolerances"] = tols;
  meta["passed"] = r.passed();
  meta["failed"] = r.failed();
  if (r.timestamp) meta["timestamp"] = *r.timestamp;

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const ReportRecord& rec : r.records) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.params) params[name] = number(value);
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["params"] = params;
    j["closed"] = number(rec.closed);
    j["oracle"] = number(rec.oracle);
    j["abs_err"] = number(rec.abs_err);
    j["rel_err"] = number(rec.rel_err);
    j["pass"] = rec.pass;
    records.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["meta"] = std::move(meta);
  out["records"] = std::move(records);
  return out;
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "id,params,closed,oracle,abs_err,rel_err,pass\r\n";
  for (const ReportRecord& rec : r.records) {
    std::string params;
    for (const auto& [name, value] : rec.params) {
      if (!params.empty()) params += ';';
      params += name + "=" + format_shortest(value);
    }
    os << csv_field(rec.id) << ',' << csv_field(params) << ',' << format_shortest(rec.closed)
       << ',' << format_shortest(rec.oracle) << ',' << format_shortest(rec.abs_err) << ','
       << format_shortest(rec.rel_err) << ',' << (rec.pass ? "true" : "false") << "\r\n";
  }
  return os.str();
}

}  // namespace ellint::cli

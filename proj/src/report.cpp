#include "polymux/report.hpp"

#include <sstream>

#include "polymux/errors.hpp"

namespace polymux {

Json json_integer(const Integer& x) { return to_string(x); }

Json json_counts(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json json_flag_map(const FlagVector& fv) {
  Json out = Json::object();
  for (unsigned mask = 0; mask < (1u << fv.dim()); ++mask)
    out[FlagVector::subset_key(mask)] = to_string(fv.at_mask(mask));
  return out;
}

Json json_check(const std::string& name, bool pass, const std::string& detail) {
  Json c = {{"name", name}, {"pass", pass}};
  if (!detail.empty()) c["detail"] = detail;
  return c;
}

Json report_document(const std::string& command, Json parameters, Json results,
                     std::vector<Json> checks) {
  bool ok = true;
  Json list = Json::array();
  for (auto& c : checks) {
    ok = ok && c.at("pass").get<bool>();
    list.push_back(std::move(c));
  }
  return Json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"checks", std::move(list)},
              {"status", ok ? "ok" : "fail"}};
}

bool report_ok(const Json& doc) {
  return doc.contains("status") && doc["status"] == "ok";
}

namespace {

// CSV quoting: wrap in quotes when the value holds a comma or quote.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten(v[i], path + "." + std::to_string(i), out);
  } else {
    out << csv_cell(path) << "," << csv_cell(scalar_text(v)) << "\n";
  }
}

}  // namespace

std::string render_report(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") {
    std::ostringstream out;
    out << "key,value\n";
    flatten(doc, "", out);
    return out.str();
  }
  throw BadParams("unknown output format: " + format);
}

}  // namespace polymux

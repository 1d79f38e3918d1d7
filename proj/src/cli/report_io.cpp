#include "kslice/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kslice/errors.hpp"

namespace kslice {

SeifertMatrix parse_seifert_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("cannot parse Seifert matrix file at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InvalidInput("Seifert matrix file: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "matrix") throw InvalidInput("Seifert matrix file: unknown field '" + key + "'");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("Seifert matrix file: 'name' must be text");
    name = j["name"].get<std::string>();
  }
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw InvalidInput("Seifert matrix file: 'matrix' must be an array of rows");
  const auto& rows = j["matrix"];
  const std::size_t n = rows.size();
  std::size_t width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) throw InvalidInput("Seifert matrix file: row " + std::to_string(i + 1) + " is not an array");
    if (i == 0) width = rows[i].size();
    if (rows[i].size() != width) throw InvalidInput("Seifert matrix file: rows have unequal lengths");
  }
  IntegerMatrix m(n, width);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < width; ++k) {
      const auto& x = rows[i][k];
      if (x.is_number_integer())
        m(i, k) = x.is_number_unsigned() ? Integer(std::to_string(x.get<std::uint64_t>()))
                                         : Integer(std::to_string(x.get<std::int64_t>()));
      else
        throw InvalidInput("Seifert matrix file: entry (" + std::to_string(i + 1) + ", " + std::to_string(k + 1) +
                           ") is not an integer");
    }
  return validate_seifert(m, name);
}

SeifertMatrix parse_seifert_file(const std::string& path) {
  namespace fs = std::filesystem;
  std::string actual = path;
  if (!fs::exists(actual) && fs::exists(path + ".json")) actual = path + ".json";
  std::ifstream in(actual);
  if (!in) throw InvalidInput("cannot open Seifert matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seifert_json(buf.str());
}

Json group_to_json(const AbelianGroup& g) {
  Json j;
  j["invariant_factors"] = Json::array();
  for (const auto& d : g.invariant_factors) j["invariant_factors"].push_back(d.get_str());
  j["free_rank"] = g.free_rank;
  return j;
}

namespace {

Integer integer_field(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected an integer encoded as a string");
  try {
    return Integer(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed integer '" + j.get<std::string>() + "'");
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json steps_to_json(const std::vector<ReportStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json payload = Json::object();
    for (const auto& [k, v] : s.payload) payload[k] = v;
    out.push_back(Json{{"name", s.name}, {"status", to_string(s.status)}, {"payload", payload}});
  }
  return out;
}

std::vector<ReportStep> steps_from_json(const Json& j) {
  std::vector<ReportStep> steps;
  for (const auto& s : j) {
    ReportStep step;
    step.name = field(s, "name").get<std::string>();
    step.status = step_status_from_string(field(s, "status").get<std::string>());
    for (const auto& [k, v] : field(s, "payload").items()) step.payload.emplace_back(k, v.get<std::string>());
    steps.push_back(std::move(step));
  }
  return steps;
}

void render_steps(std::ostringstream& out, const std::vector<ReportStep>& steps, const std::string& indent) {
  for (const auto& s : steps) {
    out << indent << "[" << to_string(s.status) << "] " << s.name << "\n";
    for (const auto& [k, v] : s.payload) out << indent << "    " << k << ": " << v << "\n";
  }
}

}  // namespace

AbelianGroup group_from_json(const Json& j) {
  AbelianGroup g;
  for (const auto& d : field(j, "invariant_factors")) g.invariant_factors.push_back(integer_field(d));
  g.free_rank = field(j, "free_rank").get<std::size_t>();
  g.validate();
  return g;
}

Json report_to_json(const ObstructionReport& r) {
  Json j;
  j["m"] = r.m;
  j["odd_regime"] = r.odd_regime;
  j["cover_degrees"] = r.cover_degrees;
  j["warnings"] = r.warnings;
  j["checks"] = steps_to_json(r.checks);
  j["covers"] = Json::array();
  for (const auto& c : r.covers) j["covers"].push_back(Json{{"r", c.r}, {"steps", steps_to_json(c.steps)}});
  j["external"] = steps_to_json(r.external);
  j["conclusion"] = r.conclusion;
  return j;
}

ObstructionReport report_from_json(const Json& j) {
  try {
    ObstructionReport r;
    r.m = field(j, "m").get<long>();
    r.odd_regime = field(j, "odd_regime").get<bool>();
    r.cover_degrees = field(j, "cover_degrees").get<std::vector<long>>();
    r.warnings = field(j, "warnings").get<std::vector<std::string>>();
    r.checks = steps_from_json(field(j, "checks"));
    for (const auto& c : field(j, "covers"))
      r.covers.push_back(CoverSubreport{field(c, "r").get<long>(), steps_from_json(field(c, "steps"))});
    r.external = steps_from_json(field(j, "external"));
    r.conclusion = field(j, "conclusion").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string render_report_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "obstruction report for K_" << r.m << "\n";
  out << "m: " << r.m << "\n";
  out << "odd_regime: " << (r.odd_regime ? "true" : "false") << "\n";
  out << "cover_degrees:";
  for (std::size_t i = 0; i < r.cover_degrees.size(); ++i) out << (i ? ", " : " ") << r.cover_degrees[i];
  out << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "checks:\n";
  render_steps(out, r.checks, "  ");
  for (const auto& c : r.covers) {
    out << "cover r = " << c.r << ":\n";
    render_steps(out, c.steps, "  ");
  }
  out << "external:\n";
  render_steps(out, r.external, "  ");
  out << "conclusion: " << r.conclusion << "\n";
  return out.str();
}

std::string render_machine(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render_value(std::ostringstream& out, const Json& j, const std::string& indent);

void render_object(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (!value.is_structured()) {
      out << indent << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && is_flat_array(value)) {
      out << indent << key << ":";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : " ") << scalar_text(value[i]);
      out << "\n";
    } else {
      out << indent << key << ":\n";
      render_value(out, value, indent + "  ");
    }
  }
}

void render_value(std::ostringstream& out, const Json& j, const std::string& indent) {
  if (j.is_object()) {
    render_object(out, j, indent);
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object()) {
        out << indent << "-\n";
        render_object(out, x, indent + "  ");
      } else if (x.is_array()) {
        out << indent << "-\n";
        render_value(out, x, indent + "  ");
      } else {
        out << indent << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render_value(out, j, "");
  return out.str();
}

}  // namespace kslice

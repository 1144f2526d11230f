#include "csc/io/report.hpp"

#include <sstream>
#include <stdexcept>

namespace csc::io {

std::string verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Certified: return "CERTIFIED";
  case Verdict::Refuted: return "NOT CERTIFIED";
  case Verdict::Unknown: return "UNKNOWN";
  case Verdict::Done: return "DONE";
  }
  return "DONE";
}

Verdict verdict_from_name(const std::string& name)
{
  for (Verdict v : {Verdict::Certified, Verdict::Refuted, Verdict::Unknown, Verdict::Done}) {
    if (verdict_name(v) == name) return v;
  }
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

nlohmann::json to_json(const Report& r)
{
  nlohmann::json conditions = nlohmann::json::array();
  for (const ConditionTranscript& c : r.conditions) {
    nlohmann::json jc = {
      {"name", c.name},
      {"goal", c.goal},
      {"result", c.result},
      {"clauses_generated", c.clauses_generated},
      {"budget", c.budget},
    };
    if (c.derivation) jc["derivation"] = *c.derivation;
    conditions.push_back(std::move(jc));
  }
  return {
    {"verdict", verdict_name(r.verdict)},
    {"subject", r.subject},
    {"conditions", std::move(conditions)},
    {"artifact", r.artifact},
    {"result", r.result},
    {"notes", r.notes},
  };
}

Report report_from_json(const nlohmann::json& j)
{
  try {
    Report r;
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.subject = j.at("subject").get<std::string>();
    for (const nlohmann::json& jc : j.at("conditions")) {
      ConditionTranscript c;
      c.name = jc.at("name").get<std::string>();
      c.goal = jc.at("goal").get<std::string>();
      c.result = jc.at("result").get<std::string>();
      c.clauses_generated = jc.at("clauses_generated").get<std::size_t>();
      c.budget = jc.at("budget").get<std::size_t>();
      if (jc.contains("derivation")) c.derivation = jc.at("derivation").get<std::vector<std::string>>();
      r.conditions.push_back(std::move(c));
    }
    r.artifact = j.at("artifact");
    r.result = j.value("result", nlohmann::json::object());
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

namespace {

void render_value(std::ostream& out, const std::string& key, const nlohmann::json& v, int indent)
{
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render_value(out, it.key(), it.value(), indent + 2);
  } else if (v.is_array() && !v.empty() && (v.front().is_string() || v.front().is_structured())) {
    out << pad << key << ":\n";
    for (const nlohmann::json& e : v) {
      if (e.is_string()) {
        out << pad << "  " << e.get<std::string>() << '\n';
      } else {
        render_value(out, "-", e, indent + 2);
      }
    }
  } else if (v.is_string()) {
    out << pad << key << ": " << v.get<std::string>() << '\n';
  } else {
    out << pad << key << ": " << v.dump() << '\n';
  }
}

} // namespace

std::string render_report(const Report& r, ReportFormat format)
{
  if (format == ReportFormat::Structured) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << verdict_name(r.verdict) << ": " << r.subject << '\n';
  bool exhausted = false;
  for (const ConditionTranscript& c : r.conditions) {
    out << "condition " << c.name << ": " << c.result << '\n';
    out << "  goal: " << c.goal << '\n';
    out << "  clauses generated: " << c.clauses_generated << " of " << c.budget << '\n';
    if (c.derivation) {
      out << "  derivation:\n";
      for (const std::string& step : *c.derivation) out << "    " << step << '\n';
    }
    exhausted |= c.result == "Unknown";
  }
  if (exhausted) out << "note: budget exhausted before the condition was decided\n";
  for (auto it = r.result.begin(); it != r.result.end(); ++it) render_value(out, it.key(), it.value(), 0);
  for (const std::string& n : r.notes) out << "note: " << n << '\n';
  return out.str();
}

Report parse_report(const std::string& structured)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(structured);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

} // namespace csc::io

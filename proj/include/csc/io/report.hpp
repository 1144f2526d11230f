#ifndef CSC_IO_REPORT_HPP
#define CSC_IO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace csc::io {

enum class Verdict
{
  Certified,
  /** Some condition was shown not to hold (the engine saturated without a contradiction). */
  Refuted,
  /** Some condition could not be decided within the budget. */
  Unknown,
  /** A non-certifying command completed (normalization, emission, ...). */
  Done,
};

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

/** One entailment check performed while establishing a verdict. */
struct ConditionTranscript
{
  std::string name;
  /** The checked entailment in readable form. */
  std::string goal;
  /** Proved, CounterSatisfiable or Unknown. */
  std::string result;
  std::size_t clauses_generated = 0;
  std::size_t budget = 0;
  /** Derivation of the empty clause, one step per line, when one was found. */
  std::optional<std::vector<std::string>> derivation;

  bool operator==(const ConditionTranscript&) const = default;
};

struct Report
{
  Verdict verdict = Verdict::Done;
  /** What the verdict is about, e.g. "clause set cycle". */
  std::string subject;
  std::vector<ConditionTranscript> conditions;
  /** Echo of the inputs. */
  nlohmann::json artifact = nlohmann::json::object();
  /** Command-specific results (normalized sets, detected offsets, obligations, ...). */
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> notes;

  bool operator==(const Report&) const = default;
};

enum class ReportFormat
{
  Text,
  Structured,
};

nlohmann::json to_json(const Report& r);
/** Inverse of to_json; throws std::invalid_argument on schema violations. */
Report report_from_json(const nlohmann::json& j);

std::string render_report(const Report& r, ReportFormat format);
Report parse_report(const std::string& structured);

} // namespace csc::io

#endif

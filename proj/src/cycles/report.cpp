#include "csc/cycles/report.hpp"

#include "csc/io/problem.hpp"

namespace csc::cycles {

io::ConditionTranscript transcript(const ConditionCheck& c)
{
  io::ConditionTranscript t;
  t.name = c.name;
  t.goal = c.goal;
  t.result = sat::status_name(c.status);
  t.clauses_generated = c.generated();
  t.budget = c.runs.empty() ? 0 : c.runs.front().budget.max_generated_clauses;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < c.runs.size(); ++i) {
    const sat::EntailmentVerdict& run = c.runs[i];
    if (!run.derivation) continue;
    if (c.runs.size() > 1) lines.push_back("goal clause " + std::to_string(i + 1) + ":");
    for (std::string& line : sat::describe(*run.derivation, run.signature)) lines.push_back(std::move(line));
  }
  if (!lines.empty()) t.derivation = std::move(lines);
  return t;
}

std::vector<io::ConditionTranscript> transcripts(const std::vector<ConditionCheck>& checks)
{
  std::vector<io::ConditionTranscript> out;
  for (const ConditionCheck& c : checks) out.push_back(transcript(c));
  return out;
}

io::Verdict verdict_of(const CheckFailure& f)
{
  return f.kind == FailureKind::Budget ? io::Verdict::Unknown : io::Verdict::Refuted;
}

nlohmann::json clause_set_json(const ClauseSet& s, const Signature& sig)
{
  nlohmann::json out = nlohmann::json::array();
  for (const Clause& c : s) out.push_back(io::to_string(c, sig));
  return out;
}

namespace {

void add_failure(io::Report& report, const CheckFailure& f)
{
  report.verdict = verdict_of(f);
  report.conditions = transcripts(f.conditions);
  report.result["failed_condition"] = f.condition;
  report.result["failure"] = failure_name(f.kind);
}

} // namespace

io::Report cycle_report(const Checked<CycleCertificate>& result, const ClauseSet& s, const Signature& sig)
{
  io::Report report;
  report.subject = "clause set cycle";
  report.artifact["cycle"] = clause_set_json(s, sig);
  if (const auto* cert = std::get_if<CycleCertificate>(&result)) {
    report.verdict = io::Verdict::Certified;
    report.conditions = transcripts(cert->conditions);
    if (!cert->plain) {
      report.subject = "offset/step cycle";
      report.result["offset"] = cert->offset;
      report.result["step"] = cert->step;
    }
  } else {
    add_failure(report, std::get<CheckFailure>(result));
  }
  return report;
}

io::Report refutation_report(const Checked<RefutationCertificate>& result, const ClauseSet& r, const ClauseSet& s,
                             const Signature& sig)
{
  io::Report report;
  report.subject = "refutation by a clause set cycle";
  report.artifact["refuted"] = clause_set_json(r, sig);
  report.artifact["cycle"] = clause_set_json(s, sig);
  if (const auto* cert = std::get_if<RefutationCertificate>(&result)) {
    report.verdict = io::Verdict::Certified;
    report.conditions = transcripts(cert->cycle.conditions);
    for (io::ConditionTranscript& t : transcripts(cert->conditions)) report.conditions.push_back(std::move(t));
    report.result["n"] = cert->n;
    if (!cert->cycle.plain) {
      report.result["offset"] = cert->cycle.offset;
      report.result["step"] = cert->cycle.step;
    }
  } else {
    add_failure(report, std::get<CheckFailure>(result));
  }
  return report;
}

io::Report induction_report(const InductionObligation& ind, const Signature& sig)
{
  io::Report report;
  report.subject = "induction obligations";
  report.result["variable"] = io::to_string(ind.variable, sig);
  report.result["negated_cycle"] = io::to_string(ind.negated_cycle, sig);
  report.result["induction_axiom"] = io::to_string(ind.induction_axiom, sig);
  report.result["case_distinction"] = io::to_string(ind.case_distinction, sig);
  nlohmann::json obligations = nlohmann::json::array();
  bool all = true;
  bool unknown = false;
  for (const InductionObligation::Obligation& o : ind.obligations) {
    obligations.push_back({{"name", o.name}, {"formula", io::to_string(o.formula, sig)}});
    report.conditions.push_back(transcript(o.check));
    all = all && o.check.status == sat::Status::Proved;
    unknown = unknown || o.check.status == sat::Status::Unknown;
  }
  report.result["obligations"] = obligations;
  report.verdict = all ? io::Verdict::Done : (unknown ? io::Verdict::Unknown : io::Verdict::Refuted);
  return report;
}

} // namespace csc::cycles

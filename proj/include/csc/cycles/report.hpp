#ifndef CSC_CYCLES_REPORT_HPP
#define CSC_CYCLES_REPORT_HPP

#include "csc/cycles/cycles.hpp"
#include "csc/io/report.hpp"

namespace csc::cycles {

/** Transcript of one condition; derivations of Proved runs are included. */
io::ConditionTranscript transcript(const ConditionCheck& c);
std::vector<io::ConditionTranscript> transcripts(const std::vector<ConditionCheck>& checks);

io::Verdict verdict_of(const CheckFailure& f);

nlohmann::json clause_set_json(const ClauseSet& s, const Signature& sig);

io::Report cycle_report(const Checked<CycleCertificate>& result, const ClauseSet& s, const Signature& sig);
io::Report refutation_report(const Checked<RefutationCertificate>& result, const ClauseSet& r, const ClauseSet& s,
                             const Signature& sig);
io::Report induction_report(const InductionObligation& ind, const Signature& sig);

} // namespace csc::cycles

#endif

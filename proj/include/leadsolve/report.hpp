#ifndef LEADSOLVE_REPORT_HPP
#define LEADSOLVE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "leadsolve/classify.hpp"
#include "leadsolve/commitment.hpp"
#include "leadsolve/equilibria.hpp"
#include "leadsolve/trd.hpp"
#include "leadsolve/two_by_two.hpp"

namespace leadsolve {

inline constexpr const char* kReportSchema = "leadsolve/1";

// Report documents. Every rational `key` is written as a "p/q" string with a
// `key_approx` double next to it; the strings are authoritative. Strategy
// labels made of digits only are written as numbers, other labels as strings.

using Document = nlohmann::ordered_json;

Document label_json(const std::string& label);

struct AnalyzeReport {
  LeaderReport leader;
  PureCommitmentCheck pure;
  MixedImprovementCheck mixed;
};

AnalyzeReport analyze(const Game& g, Player leader, const ReportOptions& opts = {});

Document to_document(const Game& g, const AnalyzeReport& r);
Document to_document(const Game& g, const NashSet& nash);
Document to_document(const Game& g, const ClassificationReport& r);
Document to_document(const Game& g, const TwoByTwoReport& r);
Document to_document(const TrdSolution& s);
Document to_document(const Game& g, const CceCheck& c);

std::string render_text(const Game& g, const AnalyzeReport& r);
std::string render_text(const Game& g, const NashSet& nash);
std::string render_text(const Game& g, const ClassificationReport& r);
std::string render_text(const Game& g, const TwoByTwoReport& r);
std::string render_text(const TrdSolution& s);
std::string render_text(const Game& g, const CceCheck& c);

/// v_A <= l <= h <= alpha^H with alpha^L placed according to the leader's
/// degeneracy status, on one line.
std::string bound_chain_line(const LeaderReport& r);

}  // namespace leadsolve

#endif  // LEADSOLVE_REPORT_HPP

#include "t3lab/report.hpp"

#include <algorithm>

namespace t3lab {

BoundReport BoundReport::make(std::string name, ExtRational lhs, ExtRational rhs,
                              ReportContext ctx) {
  BoundReport report;
  report.name = std::move(name);
  report.lhs = lhs;
  report.rhs = rhs;
  report.pass = lhs >= rhs;
  report.context = ctx;
  return report;
}

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["lhs"] = to_string(report.lhs);
  j["rhs"] = to_string(report.rhs);
  j["pass"] = report.pass;
  if (report.vacuous) j["vacuous"] = true;
  nlohmann::ordered_json ctx = nlohmann::ordered_json::object();
  if (report.context.r) ctx["r"] = *report.context.r;
  if (report.context.n) ctx["n"] = *report.context.n;
  if (report.context.epsilon) ctx["epsilon"] = to_string(*report.context.epsilon);
  j["context"] = ctx;
  j["witnesses"] = report.witnesses;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

bool all_pass(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.pass; });
}

}  // namespace t3lab

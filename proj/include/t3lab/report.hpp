#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "t3lab/rational.hpp"

namespace t3lab {

// Instance parameters recorded alongside a bound check.
struct ReportContext {
  std::optional<int> r;
  std::optional<int> n;
  std::optional<Rational> epsilon;
};

// A machine-checkable claim lhs >= rhs with the witnesses that produced
// both sides. `pass` is always lhs >= rhs; `vacuous` marks checks whose
// hypothesis matched nothing in the instance.
struct BoundReport {
  std::string name;
  ExtRational lhs;
  ExtRational rhs;
  bool pass = false;
  bool vacuous = false;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  ReportContext context;
  std::string note;

  static BoundReport make(std::string name, ExtRational lhs, ExtRational rhs,
                          ReportContext ctx = {});
};

nlohmann::ordered_json to_json(const BoundReport& report);

bool all_pass(const std::vector<BoundReport>& reports);

}  // namespace t3lab

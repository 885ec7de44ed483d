#ifndef PRELIE_REPORT_HPP
#define PRELIE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace prelie {

/// First coefficient where two sides of an identity disagree.
struct Discrepancy {
  int degree = 0;
  std::vector<int> partition;  // empty for series identities
  std::string lhs;
  std::string rhs;
};

/// Outcome of one verification check.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string name, int degree) : check(std::move(name)), max_degree(degree) {}

  std::string check;
  int max_degree = 0;
  bool ok = true;
  std::optional<Discrepancy> first_discrepancy;
  std::string details;

  void fail(Discrepancy d) {
    if (ok) first_discrepancy = std::move(d);
    ok = false;
  }
  void fail_with(std::string why) {
    if (ok && details.empty()) details = std::move(why);
    ok = false;
  }
};

inline nlohmann::ordered_json to_json(const Discrepancy& d) {
  return {{"degree", d.degree}, {"partition", d.partition}, {"lhs", d.lhs}, {"rhs", d.rhs}};
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["max_degree"] = r.max_degree;
  j["status"] = r.ok ? "ok" : "fail";
  j["first_discrepancy"] = r.first_discrepancy ? to_json(*r.first_discrepancy) : nlohmann::ordered_json(nullptr);
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace prelie

#endif  // PRELIE_REPORT_HPP

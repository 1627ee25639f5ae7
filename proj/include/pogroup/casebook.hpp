#pragma once

#include "pogroup/json_io.hpp"

namespace pogroup {

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string id;
  std::string title;
  Json inputs = Json::object();
  std::vector<Claim> claims;
  bool pass = false;
};

const std::vector<std::string>& case_ids();

/// Run one pinned case; every positive claim re-validates through public
/// operations, every bounded negative claim records its bound.
CaseReport run_case(const std::string& id, const SearchBudget& budget);

Json case_report_to_json(const CaseReport& r);

} // namespace pogroup

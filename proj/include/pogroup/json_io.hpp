#pragma once

#include <json.hpp>

#include "pogroup/oracle.hpp"
#include "pogroup/rdp_solvers.hpp"

namespace pogroup {

using Json = nlohmann::json;

/// Tagged-union descriptor tree. Canonical: identical descriptors encode to
/// byte-identical JSON (keys sorted, numbers as canonical "p/q" strings).
Json descriptor_to_json(const Desc& d);
Desc descriptor_from_json(const Json& j);

/// Shape-directed: numbers as strings "p/q", words as [index, sign] arrays,
/// tuples as arrays, matrices as {"a","b"}.
Json element_to_json(const Desc& d, const Element& e);
Element element_from_json(const Desc& d, const Json& j);

Json equation_to_json(const Desc& d, const Equation& eq);
Equation equation_from_json(const Desc& d, const Json& j);

Json table_to_json(const Desc& d, const RdpTable& t);
RdpTable table_from_json(const Desc& d, const Json& j);

Json budget_to_json(const SearchBudget& b);
SearchBudget budget_from_json(const Json& j);

Json verdict_to_json(const Desc& d, const Verdict& v);
Json report_to_json(const Desc& d, const TableReport& r);
Json trace_to_json(const SolverTrace& t);
Json oracle_result_to_json(const Desc& d, const OracleResult& r);

/// JSON Schema documents for the wire formats, versioned "format": 1.
Json schemas();

} // namespace pogroup

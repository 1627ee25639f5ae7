#include <fstream>
#include <iostream>
#include <sstream>

#include "pogroup/casebook.hpp"
#include "pogroup/parser.hpp"

namespace {

using namespace pogroup;

int exit_code_for(Err e) {
  switch (e) {
    case Err::Parse:
    case Err::ShapeMismatch:
    case Err::InvalidDescriptor: return 4;
    case Err::NoRuleApplies:
    case Err::NotFound:
    case Err::NotFoundWithinBudget:
    case Err::NotDirected:
    case Err::NotComDirected:
    case Err::NotApplicable:
    case Err::Unsupported: return 2;
    case Err::ConstructionFailed:
    case Err::SolverFailed:
    case Err::DensityRequired:
    case Err::AbelianRequired:
    case Err::NcdpWitnessUnavailable:
    case Err::WrdpWitnessUnavailable:
    case Err::InvalidWitness: return 3;
    case Err::UnknownCase:
    case Err::Usage: return 1;
  }
  return 1;
}

struct Args {
  std::string command;
  std::string group;
  std::string group_file;
  std::string property;
  std::string table_file;
  std::string case_id;
  bool all_cases = false;
  bool json = false;
  std::vector<std::string> elems;
  std::vector<std::string> eq;
  SearchBudget budget;
};

const char* kUsage =
    "usage: pogroup <command> [options]\n"
    "\n"
    "commands\n"
    "  solve  --group DSL --eq A1 A2 B1 B2      build and verify a refinement table\n"
    "         (--group-file FILE reads the descriptor from a file)\n"
    "  verify --group DSL --table FILE          re-verify a table file ('-' = stdin)\n"
    "  check  --group DSL --property P [--elems E ...]\n"
    "         P: directed | com-directed | antilattice | ncdp | wrdp | rdp0 | rip\n"
    "  oracle --group DSL --eq A1 A2 B1 B2      brute-force table search\n"
    "  case   <id> | --all                      run pinned casebook entries\n"
    "  schema                                   print the JSON schemas\n"
    "\n"
    "options\n"
    "  --budget-coord N --budget-wordlen N --budget-candidates N --seed N --json\n";

long long parse_ll(const std::string& s) {
  std::size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size()) fail(Err::Usage, "bad number: " + s);
  return v;
}

Args parse_args(int argc, char** argv) {
  Args a;
  if (argc < 2) fail(Err::Usage, "missing command");
  a.command = argv[1];
  int i = 2;
  if (a.command == "case" && i < argc && argv[i][0] != '-') a.case_id = argv[i++];
  for (; i < argc; ++i) {
    std::string f = argv[i];
    auto need = [&](const char* what) -> std::string {
      if (i + 1 >= argc) fail(Err::Usage, std::string("missing value for ") + what);
      return argv[++i];
    };
    if (f == "--group") a.group = need("--group");
    else if (f == "--group-file") a.group_file = need("--group-file");
    else if (f == "--property") a.property = need("--property");
    else if (f == "--table") a.table_file = need("--table");
    else if (f == "--elems") {
      while (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) a.elems.push_back(argv[++i]);
    } else if (f == "--eq") {
      while (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) a.eq.push_back(argv[++i]);
    } else if (f == "--budget-coord") a.budget.max_abs_coord = parse_ll(need(f.c_str()));
    else if (f == "--budget-wordlen") a.budget.max_word_len = parse_ll(need(f.c_str()));
    else if (f == "--budget-candidates") a.budget.max_candidates = parse_ll(need(f.c_str()));
    else if (f == "--seed") a.budget.seed = static_cast<std::uint64_t>(parse_ll(need(f.c_str())));
    else if (f == "--json") a.json = true;
    else if (f == "--all") a.all_cases = true;
    else fail(Err::Usage, "unknown option: " + f);
  }
  return a;
}

Desc group_of(const Args& a) {
  if (!a.group_file.empty()) {
    std::ifstream in(a.group_file);
    if (!in) fail(Err::Usage, "cannot open " + a.group_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_descriptor(text);
  }
  if (a.group.empty()) fail(Err::Usage, "missing --group (or --group-file)");
  return parse_descriptor(a.group);
}

Equation parse_eq(const Desc& d, const std::vector<std::string>& eq) {
  if (eq.size() != 4) fail(Err::Usage, "--eq needs exactly four elements (a1 a2 b1 b2)");
  return Equation{parse_element(d, eq[0]), parse_element(d, eq[1]), parse_element(d, eq[2]),
                  parse_element(d, eq[3])};
}

void emit(const Json& j, bool /*json*/) { std::cout << j.dump(2) << "\n"; }

int cmd_solve(const Args& a) {
  Desc d = group_of(a);
  Equation eq = parse_eq(d, a.eq);
  SolveResult r = solve(d, eq, a.budget);
  TableReport rep = verify_table(d, r.table);
  Json out{{"table", table_to_json(d, r.table)},
           {"trace", trace_to_json(r.trace)},
           {"report", report_to_json(d, rep)}};
  emit(out, a.json);
  return rep.ok() ? 0 : 3;
}

int cmd_verify(const Args& a) {
  if (a.table_file.empty()) fail(Err::Usage, "verify needs --table");
  Desc d = group_of(a);
  Json j;
  if (a.table_file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    j = Json::parse(ss.str());
  } else {
    std::ifstream in(a.table_file);
    if (!in) fail(Err::Usage, "cannot open " + a.table_file);
    in >> j;
  }
  RdpTable t = table_from_json(d, j.contains("table") ? j["table"] : j);
  TableReport rep = verify_table(d, t);
  if (rep.sums_ok) {
    rep.rdp1 = check_rdp1_com(d, t, a.budget);
    rep.rdp2 = check_rdp2_meet(d, t, a.budget);
  }
  emit(report_to_json(d, rep), a.json);
  return rep.ok() ? 0 : 2;
}

int cmd_check(const Args& a) {
  if (a.property.empty()) fail(Err::Usage, "check needs --property");
  Desc d = group_of(a);
  std::vector<Element> es;
  es.reserve(a.elems.size());
  for (const std::string& s : a.elems) es.push_back(parse_element(d, s));
  auto want = [&](std::size_t n, const char* what) {
    if (es.size() != n)
      fail(Err::Usage, std::string(what) + " needs " + std::to_string(n) + " --elems");
  };
  Json out;
  const std::string& p = a.property;
  if (p == "directed") {
    want(2, "directed");
    Element w = directed_witness(d, es[0], es[1]);
    out = Json{{"property", p}, {"witness", element_to_json(d, w)}};
  } else if (p == "com-directed") {
    want(2, "com-directed");
    Element w = com_directed_witness(d, es[0], es[1]);
    out = Json{{"property", p}, {"witness", element_to_json(d, w)}};
  } else if (p == "antilattice") {
    Verdict v = antilattice_status(d, a.budget);
    out = Json{{"property", p}, {"result", verdict_to_json(d, v)}};
    emit(out, a.json);
    return v.kind == VerdictKind::Holds ? 0 : 2;
  } else if (p == "ncdp") {
    want(2, "ncdp");
    Element w = ncdp_witness(d, es[0], es[1], a.budget);
    out = Json{{"property", p}, {"witness", element_to_json(d, w)}};
  } else if (p == "wrdp") {
    want(4, "wrdp");
    auto [d1, d2] = wrdp_witnesses(d, es[0], es[1], es[2], es[3], a.budget);
    out = Json{{"property", p},
               {"d1", element_to_json(d, d1)},
               {"d2", element_to_json(d, d2)}};
  } else if (p == "rdp0") {
    want(3, "rdp0");
    auto [b1, c1] = rdp0_decompose(d, es[0], es[1], es[2], default_solver(a.budget));
    out = Json{{"property", p},
               {"b1", element_to_json(d, b1)},
               {"c1", element_to_json(d, c1)}};
  } else if (p == "rip") {
    want(4, "rip");
    Element c = interpolate(d, es[0], es[1], es[2], es[3], default_solver(a.budget));
    out = Json{{"property", p}, {"c", element_to_json(d, c)}};
  } else {
    fail(Err::Usage, "unknown property: " + p);
  }
  emit(out, a.json);
  return 0;
}

int cmd_oracle(const Args& a) {
  Desc d = group_of(a);
  Equation eq = parse_eq(d, a.eq);
  OracleResult r = brute_force_table(d, eq, a.budget);
  emit(oracle_result_to_json(d, r), a.json);
  return r.kind == VerdictKind::Found ? 0 : 2;
}

int cmd_case(const Args& a) {
  std::vector<std::string> ids;
  if (a.all_cases)
    ids = case_ids();
  else if (!a.case_id.empty())
    ids.push_back(a.case_id);
  else
    fail(Err::Usage, "case needs an id or --all");
  bool all_pass = true;
  Json all = Json::array();
  for (const std::string& id : ids) {
    CaseReport r = run_case(id, a.budget);
    all_pass = all_pass && r.pass;
    if (a.json) {
      all.push_back(case_report_to_json(r));
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  (" << r.title << ")\n";
      for (const Claim& c : r.claims) {
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
      }
    }
  }
  if (a.json) emit(all.size() == 1 ? all[0] : all, true);
  return all_pass ? 0 : 2;
}

int run(int argc, char** argv) {
  Args a = parse_args(argc, argv);
  if (a.command == "solve") return cmd_solve(a);
  if (a.command == "verify") return cmd_verify(a);
  if (a.command == "check") return cmd_check(a);
  if (a.command == "oracle") return cmd_oracle(a);
  if (a.command == "case") return cmd_case(a);
  if (a.command == "schema") {
    std::cout << schemas().dump(2) << "\n";
    return 0;
  }
  if (a.command == "help" || a.command == "--help" || a.command == "-h") {
    std::cout << kUsage;
    return 0;
  }
  fail(Err::Usage, "unknown command: " + a.command);
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Err::Usage) std::cerr << "\n" << kUsage;
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

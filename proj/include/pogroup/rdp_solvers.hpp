#pragma once

#include "pogroup/rdp_core.hpp"

namespace pogroup {

/// Which construction produced a table, plus the auxiliary elements it used
/// (printed canonically; index sets as comma-separated coordinates).
struct SolverTrace {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> aux;
  const std::string* find(const std::string& name) const;
};

struct SolveResult {
  RdpTable table;
  SolverTrace trace;
};

/// Structure-directed dispatcher. Routes by descriptor shape, cheapest
/// construction first: linear > trivial-order > strict/product > product-of-
/// chains lex > com-directed lex > conjugation-witness lex > commuting-pair
/// lex. Throws NoRuleApplies when no route matches, ConstructionFailed when
/// a matching route's side conditions fail.
SolveResult solve(const Desc& d, const Equation& eq, const SearchBudget& budget = {});

/// Min-splitting on a linearly ordered carrier.
SolveResult solve_linear(const Desc& d, const Equation& eq);

/// Strict-product of dense abelian chains: per-coordinate split, then a
/// shift making every entry strictly positive when the equation is.
SolveResult solve_strict_product(const Desc& d, const Equation& eq);

/// Product order: solve each coordinate and zip.
SolveResult solve_prod_componentwise(const Desc& d, const Equation& eq, const SearchBudget& budget);

/// Lex over a (product of) linearly ordered group(s): comparable-firsts
/// cases plus the index-set splitter for incomparable firsts (abelian G).
SolveResult solve_lex_prodlinear_rdp1(const Desc& a, const Desc& g, const Equation& eq,
                                      const SearchBudget& budget);

/// Lex with com-directed second factor: comparable-firsts cases plus the
/// central-witness tables for incomparable firsts.
SolveResult solve_lex_comdirected(const Desc& a, const Desc& g, const Equation& eq,
                                  const SearchBudget& budget);

/// Lex where the first factor has conjugation-compatible lower bounds on
/// incomparable positive pairs and the second is directed.
SolveResult solve_lex_ncdp(const Desc& a, const Desc& g, const Equation& eq,
                           const SearchBudget& budget);

/// Incomparable-firsts assembly behind solve_lex_ncdp, taking any valid
/// first-factor table for x1+x2 = y1+y2: positive corners lift directly;
/// a zero corner triggers the conjugation-witness shift of the off-diagonal
/// pair.
SolveResult lex_ncdp_table_from_parts(const Desc& a, const Desc& g, const Equation& eq,
                                      const RdpTable& first_factor_table,
                                      const SearchBudget& budget);

/// Lex where the second factor has commuting-pair witnesses.
SolveResult solve_lex_wrdp(const Desc& a, const Desc& g, const Equation& eq,
                           const SearchBudget& budget);

/// Non-comparable rows: all four entries strictly positive with incomparable
/// off-diagonals, via a between-shift of a plain solution.
SolveResult antilattice_strengthen(const Desc& d, const Equation& eq, const SearchBudget& budget);

/// Table with positive corners from commuting-pair witnesses; off-diagonal
/// entries unrestricted in sign.
RdpTable wrdp_corner_table(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                           const Element& v2, const Element& d1, const Element& d2);

/// Can the dispatcher handle equations over this carrier at all.
bool can_solve(const Desc& d);

/// Recipe-level availability of ncdp_witness used by the dispatcher.
bool has_ncdp_recipe(const Desc& d);

/// Adapter for the rdp-core entry points.
SolveFn default_solver(const SearchBudget& budget = {});

} // namespace pogroup

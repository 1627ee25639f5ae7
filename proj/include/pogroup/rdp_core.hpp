#pragma once

#include <functional>

#include "pogroup/order_props.hpp"

namespace pogroup {

/// a1 + a2 = b1 + b2 in one carrier.
struct Equation {
  Element a1, a2, b1, b2;
  bool operator==(const Equation&) const = default;
};

/// Refinement table for an equation; rows sum to a1, a2 and columns to
/// b1, b2, with the operand order of the non-abelian identities fixed as
/// a1 = c11+c12, a2 = c21+c22, b1 = c11+c21, b2 = c12+c22.
struct RdpTable {
  Element c11, c12, c21, c22;
  Equation eq;
  bool operator==(const RdpTable&) const = default;
};

struct TableReport {
  bool sums_ok = false;
  bool pos11 = false, pos12 = false, pos21 = false, pos22 = false;
  std::optional<Verdict> rdp1, rdp2;
  bool all_positive() const { return pos11 && pos12 && pos21 && pos22; }
  bool ok() const { return sums_ok && all_positive(); }
};

bool equation_holds(const Desc& d, const Equation& eq);
bool equation_positive(const Desc& d, const Equation& eq);

/// Exact re-check of the four identities and entry positivity; trusts
/// nothing about how the table was produced.
TableReport verify_table(const Desc& d, const RdpTable& t);

/// All x with 0 <= x <= c where the interval is finite (Int and product-mode
/// products of such); otherwise a deterministic bounded sample that always
/// contains 0 and c.
std::vector<Element> lower_interval(const Desc& d, const Element& c, const SearchBudget& budget);

/// Do all x in [0,c12], y in [0,c21] commute.
Verdict check_rdp1_com(const Desc& d, const RdpTable& t, const SearchBudget& budget);

/// Is c12 meet c21 = 0.
Verdict check_rdp2_meet(const Desc& d, const RdpTable& t, const SearchBudget& budget);

using SolveFn = std::function<RdpTable(const Desc&, const Equation&)>;

/// For 0 <= a <= b + c (b, c >= 0) produce (b1, c1) with b1 <= b, c1 <= c,
/// a = b1 + c1, via a table for a + (-a+b+c) = b + c.
std::pair<Element, Element> rdp0_decompose(const Desc& d, const Element& a, const Element& b,
                                           const Element& c, const SolveFn& solver);

/// For a1, a2 <= b1, b2 produce c with a1, a2 <= c <= b1, b2 by decomposing
/// b2 - a1 <= (b2 - a2) + (b1 - a1) and returning c2 + a1.
Element interpolate(const Desc& d, const Element& a1, const Element& a2, const Element& b1,
                    const Element& b2, const SolveFn& solver);

} // namespace pogroup

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pogroup/budget.hpp"
#include "pogroup/element.hpp"

namespace pogroup {

enum class VerdictKind {
  Holds,
  HoldsExact,
  HoldsSampled,
  Fails,
  Unknown,
  Found,
  NotFoundExhaustive,
  NotFoundWithinBudget,
};

const char* verdict_kind_name(VerdictKind k);

/// Outcome of a property check. Holds/Fails carry re-checkable evidence;
/// bounded verdicts carry the exhausted budget.
struct Verdict {
  VerdictKind kind;
  std::vector<Element> evidence;
  std::string reason;
  std::optional<SearchBudget> budget;

  bool positive() const {
    return kind == VerdictKind::Holds || kind == VerdictKind::HoldsExact ||
           kind == VerdictKind::HoldsSampled || kind == VerdictKind::Found;
  }
  static Verdict holds(std::vector<Element> ev = {}, std::string why = {}) {
    return {VerdictKind::Holds, std::move(ev), std::move(why), std::nullopt};
  }
  static Verdict fails(std::vector<Element> ev, std::string why = {}) {
    return {VerdictKind::Fails, std::move(ev), std::move(why), std::nullopt};
  }
  static Verdict unknown(std::string why, const SearchBudget& b) {
    return {VerdictKind::Unknown, {}, std::move(why), b};
  }
};

/// d with d <= x and d <= y. Throws NotDirected when the carrier has no
/// analytic construction (trivially ordered carriers and Lex with a first
/// factor lacking strict lower bounds).
Element directed_witness(const Desc& d, const Element& x, const Element& y);

/// d <= x, y with d != x, d != y, strictly below in the first-component
/// sense required when the carrier sits under a lexicographic order.
Element strict_lower_bound(const Desc& d, const Element& x, const Element& y);

/// d with 0 < d < a and 0 < d < b; requires a, b strictly positive.
Element strict_between(const Desc& d, const Element& a, const Element& b);

bool is_central(const Desc& d, const Element& x);

/// Central d with d <= x and d <= y; throws NotComDirected.
Element com_directed_witness(const Desc& d, const Element& x, const Element& y);

/// Antilattice check: analytic where a rule exists, otherwise bounded
/// falsification search for an incomparable pair with a meet.
Verdict antilattice_status(const Desc& d, const SearchBudget& budget);

/// d with 0 < d <= a, d <= b and -a+d+a = -b+d+b, for strictly positive
/// non-comparable a, b.
Element ncdp_witness(const Desc& d, const Element& a, const Element& b,
                     const SearchBudget& budget = {});

/// (d1,d2) with d1 <= u1,v2; d2 <= u2,v1; d1+d2 = d2+d1; -u1+v1 = -d1+d2.
std::pair<Element, Element> wrdp_witnesses(const Desc& d, const Element& u1, const Element& u2,
                                           const Element& v1, const Element& v2,
                                           const SearchBudget& budget);

/// Exact re-check of the three witness conditions above.
bool wrdp_conditions_hold(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                          const Element& v2, const Element& d1, const Element& d2);

/// k >= 0 with v2 <= u1+k and u2-k, v2-k commuting.
bool p1p2_conditions_hold(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                          const Element& v2, const Element& k);

/// k := -d1 + v2 from valid witnesses; verifies (P1)-(P2).
Element p1p2_from_wrdp(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                       const Element& v2, const Element& d1, const Element& d2);

/// d1 := v2-k, d2 := u2-k from a valid k; verifies the witness conditions.
std::pair<Element, Element> wrdp_from_p1p2(const Desc& d, const Element& u1, const Element& u2,
                                           const Element& v1, const Element& v2, const Element& k);

} // namespace pogroup

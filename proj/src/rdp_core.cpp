#include "pogroup/rdp_core.hpp"

#include <algorithm>

#include "pogroup/enumerate.hpp"

namespace pogroup {

bool equation_holds(const Desc& d, const Equation& eq) {
  return add(d, eq.a1, eq.a2) == add(d, eq.b1, eq.b2);
}

bool equation_positive(const Desc& d, const Equation& eq) {
  return is_positive(d, eq.a1) && is_positive(d, eq.a2) && is_positive(d, eq.b1) &&
         is_positive(d, eq.b2);
}

TableReport verify_table(const Desc& d, const RdpTable& t) {
  for (const Element* e : {&t.c11, &t.c12, &t.c21, &t.c22, &t.eq.a1, &t.eq.a2, &t.eq.b1, &t.eq.b2})
    check_shape(d, *e);
  TableReport r;
  r.sums_ok = add(d, t.c11, t.c12) == t.eq.a1 && add(d, t.c21, t.c22) == t.eq.a2 &&
              add(d, t.c11, t.c21) == t.eq.b1 && add(d, t.c12, t.c22) == t.eq.b2;
  r.pos11 = is_positive(d, t.c11);
  r.pos12 = is_positive(d, t.c12);
  r.pos21 = is_positive(d, t.c21);
  r.pos22 = is_positive(d, t.c22);
  return r;
}

namespace {

// Exhaustive [0,c] for the finitely enumerable carriers.
void finite_interval(const Desc& d, const Element& c, std::vector<Element>& out) {
  switch (d->kind) {
    case Kind::Int: {
      for (Int i = 0; i <= c.ival(); ++i) out.push_back(Element::of_int(i));
      return;
    }
    case Kind::Trivial: {
      out.push_back(zero(d)); // 0 <= x <= c forces x = 0 (and c = 0)
      return;
    }
    case Kind::Prod: {
      std::vector<std::vector<Element>> per_child(d->children.size());
      for (std::size_t i = 0; i < d->children.size(); ++i)
        finite_interval(d->children[i], c.tval()[i], per_child[i]);
      std::vector<std::size_t> idx(d->children.size(), 0);
      for (;;) {
        Element::Tuple t;
        for (std::size_t i = 0; i < idx.size(); ++i) t.push_back(per_child[i][idx[i]]);
        out.push_back(Element::of_tuple(std::move(t)));
        std::size_t i = idx.size();
        while (i-- > 0) {
          if (++idx[i] < per_child[i].size()) break;
          idx[i] = 0;
          if (i == 0) return;
        }
      }
    }
    default: fail(Err::Unsupported, "interval not finitely enumerable");
  }
}

} // namespace

std::vector<Element> lower_interval(const Desc& d, const Element& c, const SearchBudget& budget) {
  check_shape(d, c);
  if (!is_positive(d, c)) fail(Err::NotApplicable, "interval top must be positive");
  std::vector<Element> out;
  if (interval_finitely_enumerable(d)) {
    finite_interval(d, c, out);
    return out;
  }
  const Element z = zero(d);
  out.push_back(z);
  const bool nonzero_top = !(c == z);
  if (nonzero_top) out.push_back(c);
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates &&
                           out.size() < static_cast<std::size_t>(budget.max_candidates);
       ++i) {
    const Element& x = s.at(static_cast<std::size_t>(i));
    if (!is_positive(d, x) || !leq(d, x, c)) continue;
    if (x == z || (nonzero_top && x == c)) continue;
    out.push_back(x);
  }
  return out;
}

Verdict check_rdp1_com(const Desc& d, const RdpTable& t, const SearchBudget& budget) {
  if (!verify_table(d, t).sums_ok) fail(Err::InvalidWitness, "table sums do not hold");
  if (is_abelian(d)) return {VerdictKind::HoldsExact, {}, "abelian carrier", std::nullopt};

  const bool exact = interval_finitely_enumerable(d);
  // the pair scan is what the candidate budget bounds; modest interval
  // samples already feed it more pairs than that
  SearchBudget ib = budget;
  ib.max_candidates = std::min<std::int64_t>(budget.max_candidates, 2000);
  std::vector<Element> xs = lower_interval(d, t.c12, ib);
  std::vector<Element> ys = lower_interval(d, t.c21, ib);
  std::int64_t tested = 0;
  for (std::size_t level = 0; level < xs.size() + ys.size(); ++level) {
    for (std::size_t i = 0; i <= level && i < xs.size(); ++i) {
      std::size_t j = level - i;
      if (j >= ys.size()) continue;
      const Element& x = xs[i];
      const Element& y = ys[j];
      if (!(add(d, x, y) == add(d, y, x)))
        return Verdict::fails({x, y}, "pair below c12/c21 does not commute");
      if (!exact && ++tested >= budget.max_candidates)
        return {VerdictKind::HoldsSampled, {}, "no counterexample in sample", budget};
    }
  }
  if (exact) return {VerdictKind::HoldsExact, {}, "all pairs commute", std::nullopt};
  return {VerdictKind::HoldsSampled, {}, "no counterexample in sample", budget};
}

Verdict check_rdp2_meet(const Desc& d, const RdpTable& t, const SearchBudget& budget) {
  if (!verify_table(d, t).sums_ok) fail(Err::InvalidWitness, "table sums do not hold");
  const Element z = zero(d);
  if (t.c12 == z || t.c21 == z) return Verdict::holds({}, "an off-diagonal entry is zero");
  auto m = lattice_meet(d, t.c12, t.c21);
  if (m) {
    if (*m == z) return Verdict::holds({*m}, "meet is zero");
    return Verdict::fails({*m}, "meet is nonzero");
  }
  // no meet: look for a strictly positive common lower bound
  try {
    Element w = strict_between(d, t.c12, t.c21);
    return Verdict::fails({w}, "strictly positive common lower bound");
  } catch (const Error&) {
  }
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates; ++i) {
    const Element& w = s.at(static_cast<std::size_t>(i));
    if (is_strictly_positive(d, w) && leq(d, w, t.c12) && leq(d, w, t.c21))
      return Verdict::fails({w}, "strictly positive common lower bound");
  }
  return Verdict::unknown("budget-exhausted", budget);
}

std::pair<Element, Element> rdp0_decompose(const Desc& d, const Element& a, const Element& b,
                                           const Element& c, const SolveFn& solver) {
  for (const Element* e : {&a, &b, &c}) check_shape(d, *e);
  const Element bc = add(d, b, c);
  if (!is_positive(d, a) || !is_positive(d, b) || !is_positive(d, c) || !leq(d, a, bc))
    fail(Err::NotApplicable, "need 0 <= a <= b + c with b, c >= 0");
  Equation eq{a, add(d, neg(d, a), bc), b, c};
  RdpTable t;
  try {
    t = solver(d, eq);
  } catch (const Error& e) {
    throw Error(Err::SolverFailed, e.what());
  }
  TableReport rep = verify_table(d, t);
  if (!rep.ok()) fail(Err::SolverFailed, "solver returned an invalid table");
  return {t.c11, t.c12};
}

Element interpolate(const Desc& d, const Element& a1, const Element& a2, const Element& b1,
                    const Element& b2, const SolveFn& solver) {
  if (!(leq(d, a1, b1) && leq(d, a1, b2) && leq(d, a2, b1) && leq(d, a2, b2)))
    fail(Err::NotApplicable, "need a1, a2 <= b1, b2");
  const Element target = sub(d, b2, a1);
  const Element left = sub(d, b2, a2);
  const Element right = sub(d, b1, a1);
  auto [c1, c2] = rdp0_decompose(d, target, left, right, solver);
  (void)c1;
  Element c = add(d, c2, a1);
  if (!(leq(d, a1, c) && leq(d, a2, c) && leq(d, c, b1) && leq(d, c, b2)))
    fail(Err::SolverFailed, "interpolant fails an inequality");
  return c;
}

} // namespace pogroup

#include "pogroup/rdp_solvers.hpp"

#include "pogroup/parser.hpp"

namespace pogroup {

const std::string* SolverTrace::find(const std::string& name) const {
  for (const auto& [k, v] : aux)
    if (k == name) return &v;
  return nullptr;
}

namespace {

RdpTable table_of(Element c11, Element c12, Element c21, Element c22, Equation eq) {
  return RdpTable{std::move(c11), std::move(c12), std::move(c21), std::move(c22), std::move(eq)};
}

void require_solvable_eq(const Desc& d, const Equation& eq) {
  for (const Element* e : {&eq.a1, &eq.a2, &eq.b1, &eq.b2}) check_shape(d, *e);
  if (!equation_holds(d, eq)) fail(Err::NotApplicable, "a1+a2 must equal b1+b2");
  if (!equation_positive(d, eq)) fail(Err::NotApplicable, "equation elements must be positive");
}

SolveResult finish(const Desc& d, SolveResult r) {
  if (!verify_table(d, r.table).ok())
    fail(Err::ConstructionFailed, "construction produced an invalid table: " + r.trace.tag);
  return r;
}

void put_aux(SolverTrace& tr, const Desc& d, const std::string& name, const Element& e) {
  tr.aux.emplace_back(name, print_element(d, e));
}

std::optional<SolveResult> degenerate(const Desc& d, const Equation& eq) {
  const Element z = zero(d);
  SolverTrace tr;
  if (eq.a1 == z) {
    tr.tag = "degenerate/a1";
    return SolveResult{table_of(z, z, eq.b1, eq.b2, eq), tr};
  }
  if (eq.a2 == z) {
    tr.tag = "degenerate/a2";
    return SolveResult{table_of(eq.b1, eq.b2, z, z, eq), tr};
  }
  if (eq.b1 == z) {
    tr.tag = "degenerate/b1";
    return SolveResult{table_of(z, eq.a1, z, eq.a2, eq), tr};
  }
  if (eq.b2 == z) {
    tr.tag = "degenerate/b2";
    return SolveResult{table_of(eq.a1, z, eq.a2, z, eq), tr};
  }
  return std::nullopt;
}

Element dw4(const Desc& g, const Element& a, const Element& b, const Element& c,
            const Element& e) {
  return directed_witness(g, directed_witness(g, a, b), directed_witness(g, c, e));
}

Element cdw4(const Desc& g, const Element& a, const Element& b, const Element& c,
             const Element& e) {
  return com_directed_witness(g, com_directed_witness(g, a, b), com_directed_witness(g, c, e));
}

bool prod_of_chains(const Desc& a) {
  if (a->kind != Kind::Prod || a->mode != ProdMode::Product) return false;
  for (const Desc& c : a->children)
    if (!is_linear(c)) return false;
  return true;
}

struct LexEq {
  Element x1, u1, x2, u2, y1, v1, y2, v2;
};

LexEq split_lex(const Equation& eq) {
  return LexEq{eq.a1.tval()[0], eq.a1.tval()[1], eq.a2.tval()[0], eq.a2.tval()[1],
               eq.b1.tval()[0], eq.b1.tval()[1], eq.b2.tval()[0], eq.b2.tval()[1]};
}

Element pair_of(const Element& a, const Element& g) { return Element::of_tuple({a, g}); }

// Comparable-first-components constructions shared by every lex solver.
// Returns nullopt when the first components are incomparable.
std::optional<SolveResult> lex_comparable_cases(const Desc& A, const Desc& G,
                                                const Equation& eq, const SearchBudget& budget) {
  LexEq q = split_lex(eq);
  const Element zA = zero(A);
  SolverTrace tr;
  if (q.x1 == q.y1) {
    const bool z1 = q.x1 == zA;
    const bool z2 = q.x2 == zA;
    if (z1 && z2) {
      SolveResult g = solve(G, Equation{q.u1, q.u2, q.v1, q.v2}, budget);
      tr.tag = "lex/i";
      tr.aux.emplace_back("G", g.trace.tag);
      return SolveResult{table_of(pair_of(zA, g.table.c11), pair_of(zA, g.table.c12),
                                  pair_of(zA, g.table.c21), pair_of(zA, g.table.c22), eq),
                         tr};
    }
    if (z1) {
      Element dd = directed_witness(G, q.u2, q.v2);
      SolveResult g =
          solve(G, Equation{q.u1, sub(G, q.u2, dd), q.v1, sub(G, q.v2, dd)}, budget);
      tr.tag = "lex/ii";
      put_aux(tr, G, "d", dd);
      return SolveResult{table_of(pair_of(zA, g.table.c11), pair_of(zA, g.table.c12),
                                  pair_of(zA, g.table.c21),
                                  pair_of(q.x2, add(G, g.table.c22, dd)), eq),
                         tr};
    }
    if (z2) {
      Element dd = directed_witness(G, q.u1, q.v1);
      SolveResult g = solve(G, Equation{lsub(G, dd, q.u1), q.u2, lsub(G, dd, q.v1), q.v2}, budget);
      tr.tag = "lex/iii";
      put_aux(tr, G, "d", dd);
      return SolveResult{table_of(pair_of(q.x1, add(G, dd, g.table.c11)),
                                  pair_of(zA, g.table.c12), pair_of(zA, g.table.c21),
                                  pair_of(zA, g.table.c22), eq),
                         tr};
    }
    Element dd = dw4(G, q.u1, q.u2, q.v1, q.v2);
    SolveResult g = solve(
        G, Equation{lsub(G, dd, q.u1), sub(G, q.u2, dd), lsub(G, dd, q.v1), sub(G, q.v2, dd)},
        budget);
    tr.tag = "lex/ix";
    put_aux(tr, G, "d", dd);
    return SolveResult{table_of(pair_of(q.x1, add(G, dd, g.table.c11)), pair_of(zA, g.table.c12),
                                pair_of(zA, g.table.c21), pair_of(q.x2, add(G, g.table.c22, dd)),
                                eq),
                       tr};
  }
  if (lt(A, q.y1, q.x1)) {
    // rows dominate: split a1 through b1
    tr.tag = (q.y1 == zA && q.x2 == zA) ? "lex/iv" : (q.x2 == zA ? "lex/v" : "lex/vii");
    return SolveResult{table_of(eq.b1, pair_of(lsub(A, q.y1, q.x1), lsub(G, q.v1, q.u1)),
                                pair_of(zA, zero(G)), eq.a2, eq),
                       tr};
  }
  if (lt(A, q.x1, q.y1)) {
    tr.tag = (q.x1 == zA && q.y2 == zA) ? "lex/iv-dual" : (q.x1 == zA ? "lex/vi" : "lex/viii");
    return SolveResult{table_of(eq.a1, pair_of(zA, zero(G)),
                                pair_of(lsub(A, q.x1, q.y1), lsub(G, q.u1, q.v1)), eq.b2, eq),
                       tr};
  }
  return std::nullopt;
}

bool all_strict_dense_abelian(const Desc& d) {
  for (const Desc& c : d->children) {
    if (c->kind == Kind::Int) fail(Err::DensityRequired, "integer factor is not dense");
    if (!is_abelian(c)) fail(Err::AbelianRequired, "strict-product factors must be abelian");
    if (!is_dense_linear(c)) fail(Err::Unsupported, "strict-product factor must be a dense chain");
  }
  return true;
}

} // namespace

SolveResult solve_linear(const Desc& d, const Equation& eq) {
  if (!is_linear(d)) fail(Err::Unsupported, "carrier is not linearly ordered");
  require_solvable_eq(d, eq);
  SolverTrace tr;
  tr.tag = "linear";
  RdpTable t;
  if (leq(d, eq.a1, eq.b1)) {
    tr.aux.emplace_back("case", "a1<=b1");
    t = table_of(eq.a1, zero(d), lsub(d, eq.a1, eq.b1), eq.b2, eq);
  } else {
    tr.aux.emplace_back("case", "b1<a1");
    t = table_of(eq.b1, lsub(d, eq.b1, eq.a1), zero(d), eq.a2, eq);
  }
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult solve_strict_product(const Desc& d, const Equation& eq) {
  if (d->kind != Kind::Prod || d->mode != ProdMode::Strict)
    fail(Err::Unsupported, "carrier is not a strict product");
  all_strict_dense_abelian(d);
  require_solvable_eq(d, eq);
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));

  const std::size_t n = d->children.size();
  Element::Tuple e11(n), e12(n), e21(n), e22(n);
  SolverTrace tr;
  tr.tag = "strict/shift";
  for (std::size_t i = 0; i < n; ++i) {
    const Desc& c = d->children[i];
    const Element &a1 = eq.a1.tval()[i], &a2 = eq.a2.tval()[i];
    const Element &b1 = eq.b1.tval()[i], &b2 = eq.b2.tval()[i];
    Element n11 = zero(c), n12 = zero(c), n21 = zero(c), n22 = zero(c);
    if (leq(c, a1, b1)) {
      n11 = a1;
      n21 = lsub(c, a1, b1);
      n22 = b2;
    } else {
      n11 = b1;
      n12 = lsub(c, b1, a1);
      n22 = a2;
    }
    // all four equation coordinates are strictly positive here, so the
    // diagonal entries are; shift to force the whole coordinate table > 0
    Element n0 = strict_between(c, n11, n22);
    put_aux(tr, c, "n0[" + std::to_string(i) + "]", n0);
    e11[i] = sub(c, n11, n0);
    e12[i] = add(c, n12, n0);
    e21[i] = add(c, n21, n0);
    e22[i] = sub(c, n22, n0);
  }
  RdpTable t = table_of(Element::of_tuple(e11), Element::of_tuple(e12), Element::of_tuple(e21),
                        Element::of_tuple(e22), eq);
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult solve_prod_componentwise(const Desc& d, const Equation& eq,
                                     const SearchBudget& budget) {
  if (d->kind != Kind::Prod || d->mode != ProdMode::Product)
    fail(Err::Unsupported, "carrier is not a product-ordered product");
  require_solvable_eq(d, eq);
  const std::size_t n = d->children.size();
  Element::Tuple e11(n), e12(n), e21(n), e22(n);
  SolverTrace tr;
  tr.tag = "prod/zip";
  for (std::size_t i = 0; i < n; ++i) {
    const Desc& c = d->children[i];
    SolveResult r = solve(
        c, Equation{eq.a1.tval()[i], eq.a2.tval()[i], eq.b1.tval()[i], eq.b2.tval()[i]}, budget);
    tr.aux.emplace_back("child[" + std::to_string(i) + "]", r.trace.tag);
    e11[i] = r.table.c11;
    e12[i] = r.table.c12;
    e21[i] = r.table.c21;
    e22[i] = r.table.c22;
  }
  RdpTable t = table_of(Element::of_tuple(e11), Element::of_tuple(e12), Element::of_tuple(e21),
                        Element::of_tuple(e22), eq);
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult solve_lex_prodlinear_rdp1(const Desc& a, const Desc& g, const Equation& eq,
                                      const SearchBudget& budget) {
  if (!(is_linear(a) || prod_of_chains(a)))
    fail(Err::Unsupported, "first factor must be a chain or a product of chains");
  const Desc d = desc_lex(a, g);
  require_solvable_eq(d, eq);
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));
  if (auto r = lex_comparable_cases(a, g, eq, budget)) return finish(d, std::move(*r));

  // incomparable first components: coordinate split (needs abelian G)
  if (!is_abelian(g)) fail(Err::AbelianRequired, "coordinate splitter needs an abelian second factor");
  LexEq q = split_lex(eq);
  Element dd = dw4(g, q.u1, q.u2, q.v1, q.v2);
  SolveResult gt = solve(
      g, Equation{lsub(g, dd, q.u1), sub(g, q.u2, dd), lsub(g, dd, q.v1), sub(g, q.v2, dd)},
      budget);

  const std::size_t n = a->children.size();
  Element::Tuple e(n), f(n), gv(n), h(n);
  std::string i1, i2, i3;
  for (std::size_t i = 0; i < n; ++i) {
    const Desc& c = a->children[i];
    const Element &x1 = q.x1.tval()[i], &y1 = q.y1.tval()[i];
    const Element &x2 = q.x2.tval()[i], &y2 = q.y2.tval()[i];
    if (lt(c, x1, y1)) {
      (i1 += i1.empty() ? "" : ",") += std::to_string(i);
      e[i] = x1;
      f[i] = lsub(c, x1, y1);
      gv[i] = zero(c);
      h[i] = y2;
    } else if (lt(c, y1, x1)) {
      (i2 += i2.empty() ? "" : ",") += std::to_string(i);
      e[i] = y1;
      f[i] = zero(c);
      gv[i] = lsub(c, y1, x1);
      h[i] = x2;
    } else {
      (i3 += i3.empty() ? "" : ",") += std::to_string(i);
      e[i] = x1;
      f[i] = zero(c);
      gv[i] = zero(c);
      h[i] = y2;
    }
  }
  if (i1.empty() || i2.empty())
    fail(Err::ConstructionFailed, "incomparable firsts must populate both index sets");
  Element ee = Element::of_tuple(e), ff = Element::of_tuple(f), gg = Element::of_tuple(gv),
          hh = Element::of_tuple(h);
  SolverTrace tr;
  tr.tag = "lexprod/4";
  tr.aux.emplace_back("I1", i1);
  tr.aux.emplace_back("I2", i2);
  tr.aux.emplace_back("I3", i3);
  put_aux(tr, a, "e", ee);
  put_aux(tr, a, "f", ff);
  put_aux(tr, a, "g", gg);
  put_aux(tr, a, "h", hh);
  put_aux(tr, g, "d", dd);
  RdpTable t = table_of(pair_of(ee, gt.table.c11), pair_of(gg, add(g, gt.table.c12, dd)),
                        pair_of(ff, add(g, gt.table.c21, dd)), pair_of(hh, gt.table.c22), eq);
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

namespace {

// Incomparable-firsts scaffolding shared by the com-directed / ncdp / wrdp
// lex solvers: the first-factor table and the d-shifted second-factor table.
struct LexIncomparable {
  LexEq q;
  RdpTable ea;   // table for x1+x2 = y1+y2 in A
  Element dd;    // lower bound of u1,u2,v1,v2 in G
  RdpTable gg;   // table for (-d+u1)+(u2-d) = (-d+v1)+(v2-d) in G
  std::string atag, gtag;
};

LexIncomparable lex_incomparable_parts(const Desc& a, const Desc& g, const Equation& eq,
                                       const SearchBudget& budget, bool central) {
  LexIncomparable out;
  out.q = split_lex(eq);
  SolveResult ra = solve(a, Equation{out.q.x1, out.q.x2, out.q.y1, out.q.y2}, budget);
  out.ea = ra.table;
  out.atag = ra.trace.tag;
  out.dd = central ? cdw4(g, out.q.u1, out.q.u2, out.q.v1, out.q.v2)
                   : dw4(g, out.q.u1, out.q.u2, out.q.v1, out.q.v2);
  SolveResult rg = solve(g,
                         Equation{lsub(g, out.dd, out.q.u1), sub(g, out.q.u2, out.dd),
                                  lsub(g, out.dd, out.q.v1), sub(g, out.q.v2, out.dd)},
                         budget);
  out.gg = rg.table;
  out.gtag = rg.trace.tag;
  return out;
}

} // namespace

SolveResult solve_lex_comdirected(const Desc& a, const Desc& g, const Equation& eq,
                                  const SearchBudget& budget) {
  const Desc d = desc_lex(a, g);
  require_solvable_eq(d, eq);
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));
  if (auto r = lex_comparable_cases(a, g, eq, budget)) return finish(d, std::move(*r));

  LexIncomparable p = lex_incomparable_parts(a, g, eq, budget, /*central=*/true);
  SolverTrace tr;
  put_aux(tr, g, "d", p.dd);
  tr.aux.emplace_back("A", p.atag);
  tr.aux.emplace_back("G", p.gtag);
  RdpTable t;
  if (is_strictly_positive(a, p.ea.c11) && is_strictly_positive(a, p.ea.c22)) {
    tr.tag = "lex/II-diag";
    t = table_of(pair_of(p.ea.c11, add(g, p.dd, p.gg.c11)), pair_of(p.ea.c12, p.gg.c12),
                 pair_of(p.ea.c21, p.gg.c21), pair_of(p.ea.c22, add(g, p.gg.c22, p.dd)), eq);
  } else {
    if (!is_central(g, p.dd)) fail(Err::ConstructionFailed, "shift witness must be central");
    tr.tag = "lex/II-central";
    t = table_of(pair_of(p.ea.c11, p.gg.c11), pair_of(p.ea.c12, add(g, p.dd, p.gg.c12)),
                 pair_of(p.ea.c21, add(g, p.gg.c21, p.dd)), pair_of(p.ea.c22, p.gg.c22), eq);
  }
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult lex_ncdp_table_from_parts(const Desc& a, const Desc& g, const Equation& eq,
                                      const RdpTable& first_factor_table,
                                      const SearchBudget& budget) {
  const Desc d = desc_lex(a, g);
  require_solvable_eq(d, eq);
  if (!is_directed_analytic(g)) fail(Err::NotDirected, "second factor must be directed");
  LexEq q = split_lex(eq);
  const RdpTable& ea = first_factor_table;
  if (!verify_table(a, ea).ok() || !(ea.eq == Equation{q.x1, q.x2, q.y1, q.y2}))
    fail(Err::InvalidWitness, "first-factor table does not refine the first components");

  Element dd = dw4(g, q.u1, q.u2, q.v1, q.v2);
  SolveResult rg =
      solve(g, Equation{lsub(g, dd, q.u1), sub(g, q.u2, dd), lsub(g, dd, q.v1), sub(g, q.v2, dd)},
            budget);
  const RdpTable& gg = rg.table;
  SolverTrace tr;
  put_aux(tr, g, "d", dd);
  tr.aux.emplace_back("G", rg.trace.tag);
  if (is_strictly_positive(a, ea.c11) && is_strictly_positive(a, ea.c22)) {
    tr.tag = "lex/II-diag";
    RdpTable t = table_of(pair_of(ea.c11, add(g, dd, gg.c11)), pair_of(ea.c12, gg.c12),
                          pair_of(ea.c21, gg.c21), pair_of(ea.c22, add(g, gg.c22, dd)), eq);
    return finish(d, SolveResult{std::move(t), std::move(tr)});
  }

  Element dp = zero(a);
  try {
    dp = ncdp_witness(a, ea.c12, ea.c21, budget);
  } catch (const Error& e) {
    throw Error(Err::NcdpWitnessUnavailable, e.what());
  }
  // conjugate row-2 tail: -e12 + d' + e12 + e22
  Element conj = add(a, add(a, add(a, neg(a, ea.c12), dp), ea.c12), ea.c22);
  tr.tag = "lex/II-conj";
  put_aux(tr, a, "d'", dp);
  RdpTable t = table_of(pair_of(add(a, ea.c11, dp), add(g, dd, gg.c11)),
                        pair_of(lsub(a, dp, ea.c12), gg.c12),
                        pair_of(lsub(a, dp, ea.c21), gg.c21),
                        pair_of(conj, add(g, gg.c22, dd)), eq);
  // exact recombination of the second row in A
  if (!(add(a, lsub(a, dp, ea.c21), conj) == q.x2))
    fail(Err::ConstructionFailed, "row-2 recombination identity fails");
  tr.aux.emplace_back("row2-recombination", "exact");
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult solve_lex_ncdp(const Desc& a, const Desc& g, const Equation& eq,
                           const SearchBudget& budget) {
  const Desc d = desc_lex(a, g);
  require_solvable_eq(d, eq);
  if (!is_directed_analytic(g)) fail(Err::NotDirected, "second factor must be directed");
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));
  if (auto r = lex_comparable_cases(a, g, eq, budget)) return finish(d, std::move(*r));

  LexEq q = split_lex(eq);
  SolveResult ra = solve(a, Equation{q.x1, q.x2, q.y1, q.y2}, budget);
  SolveResult r = lex_ncdp_table_from_parts(a, g, eq, ra.table, budget);
  r.trace.aux.emplace_back("A", ra.trace.tag);
  return r;
}

SolveResult solve_lex_wrdp(const Desc& a, const Desc& g, const Equation& eq,
                           const SearchBudget& budget) {
  const Desc d = desc_lex(a, g);
  require_solvable_eq(d, eq);
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));
  if (auto r = lex_comparable_cases(a, g, eq, budget)) return finish(d, std::move(*r));

  LexEq q = split_lex(eq);
  SolveResult ra = solve(a, Equation{q.x1, q.x2, q.y1, q.y2}, budget);
  Element d1 = zero(g), d2 = zero(g);
  try {
    std::tie(d1, d2) = wrdp_witnesses(g, q.u1, q.u2, q.v1, q.v2, budget);
  } catch (const Error& e) {
    if (e.code() == Err::NotDirected) throw;
    throw Error(Err::WrdpWitnessUnavailable, e.what());
  }
  SolverTrace tr;
  tr.tag = "lex/II-wpair";
  tr.aux.emplace_back("A", ra.trace.tag);
  put_aux(tr, g, "d1", d1);
  put_aux(tr, g, "d2", d2);
  RdpTable t = table_of(pair_of(ra.table.c11, sub(g, q.u1, d1)), pair_of(ra.table.c12, d1),
                        pair_of(ra.table.c21, d2), pair_of(ra.table.c22, lsub(g, d2, q.u2)), eq);
  return finish(d, SolveResult{std::move(t), std::move(tr)});
}

SolveResult antilattice_strengthen(const Desc& d, const Equation& eq, const SearchBudget& budget) {
  require_solvable_eq(d, eq);
  Verdict anti = antilattice_status(d, budget);
  if (anti.kind != VerdictKind::Holds)
    fail(Err::Unsupported, "carrier is not an analytic antilattice");
  if (comparable(d, eq.a1, eq.b1)) fail(Err::NotApplicable, "rows must be incomparable");
  if (!supports_strict_between(d)) fail(Err::Unsupported, "needs between elements");

  Element n0 = strict_between(d, eq.a1, eq.b1);
  Element m0 = strict_between(d, eq.a2, eq.b2);
  Equation inner{lsub(d, n0, eq.a1), sub(d, eq.a2, m0), lsub(d, n0, eq.b1), sub(d, eq.b2, m0)};
  SolveResult in = solve(d, inner, budget);
  SolverTrace tr;
  tr.tag = "antilattice/shift";
  put_aux(tr, d, "n0", n0);
  put_aux(tr, d, "m0", m0);
  tr.aux.emplace_back("inner", in.trace.tag);
  RdpTable t = table_of(add(d, n0, in.table.c11), in.table.c12, in.table.c21,
                        add(d, in.table.c22, m0), eq);
  SolveResult r = finish(d, SolveResult{std::move(t), std::move(tr)});
  const RdpTable& tt = r.table;
  if (!(is_strictly_positive(d, tt.c11) && is_strictly_positive(d, tt.c12) &&
        is_strictly_positive(d, tt.c21) && is_strictly_positive(d, tt.c22)))
    fail(Err::ConstructionFailed, "strengthened table must be strictly positive");
  if (comparable(d, tt.c12, tt.c21))
    fail(Err::ConstructionFailed, "off-diagonal entries must be incomparable");
  return r;
}

RdpTable wrdp_corner_table(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                           const Element& v2, const Element& d1, const Element& d2) {
  if (!wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2))
    fail(Err::InvalidWitness, "witness conditions fail");
  RdpTable t = table_of(sub(d, u1, d1), d1, d2, lsub(d, d2, u2), Equation{u1, u2, v1, v2});
  TableReport rep = verify_table(d, t);
  if (!rep.sums_ok) fail(Err::ConstructionFailed, "corner table sums fail");
  if (!rep.pos11 || !rep.pos22) fail(Err::ConstructionFailed, "corner entries must be positive");
  return t;
}

bool has_ncdp_recipe(const Desc& d) {
  switch (d->kind) {
    case Kind::Prod:
      return d->mode == ProdMode::Strict && is_abelian(d) && supports_strict_between(d);
    case Kind::Lex: {
      const Desc& g = d->children[1];
      if (!is_abelian(g) || !supports_strict_lower_bound(g)) return false;
      return is_linear(g) || has_ncdp_recipe(g) || supports_strict_between(g);
    }
    default: return false;
  }
}

bool can_solve(const Desc& d) {
  if (is_linear(d)) return true;
  switch (d->kind) {
    case Kind::Trivial: return true; // positive equations are all-zero
    case Kind::Prod: {
      if (d->mode == ProdMode::Strict) {
        for (const Desc& c : d->children)
          if (c->kind == Kind::Int || !is_abelian(c) || !is_dense_linear(c)) return false;
        return true;
      }
      for (const Desc& c : d->children)
        if (!can_solve(c)) return false;
      return true;
    }
    case Kind::Lex: {
      const Desc& a = d->children[0];
      const Desc& g = d->children[1];
      if (a->kind == Kind::Trivial) return can_solve(g);
      if (!can_solve(a) || !can_solve(g)) return false;
      if (is_linear(a) || prod_of_chains(a))
        return is_abelian(g) ? is_directed_analytic(g) : true;
      return is_com_directed_analytic(g) ||
             (has_ncdp_recipe(a) && is_directed_analytic(g)) || is_directed_analytic(g);
    }
    default: return false;
  }
}

SolveResult solve(const Desc& d, const Equation& eq, const SearchBudget& budget) {
  require_solvable_eq(d, eq);
  if (auto t = degenerate(d, eq)) return finish(d, std::move(*t));
  if (is_linear(d)) return solve_linear(d, eq);
  switch (d->kind) {
    case Kind::Trivial:
      // a positive equation over a trivial order is all-zero, handled above
      fail(Err::ConstructionFailed, "nonzero positive equation in a trivial order");
    case Kind::Prod:
      if (d->mode == ProdMode::Strict) return solve_strict_product(d, eq);
      return solve_prod_componentwise(d, eq, budget);
    case Kind::Lex: {
      const Desc& a = d->children[0];
      const Desc& g = d->children[1];
      if (a->kind == Kind::Trivial) {
        // zero first components: reduce to the second factor
        if (auto r = lex_comparable_cases(a, g, eq, budget)) return finish(d, std::move(*r));
        fail(Err::ConstructionFailed, "trivially ordered firsts must be zero");
      }
      std::string attempts;
      if (is_linear(a) || prod_of_chains(a)) {
        try {
          return solve_lex_prodlinear_rdp1(a, g, eq, budget);
        } catch (const Error& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + e.what();
        }
      }
      if (is_com_directed_analytic(g) && can_solve(a) && can_solve(g)) {
        try {
          return solve_lex_comdirected(a, g, eq, budget);
        } catch (const Error& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + e.what();
        }
      }
      if (has_ncdp_recipe(a) && can_solve(a) && is_directed_analytic(g) && can_solve(g)) {
        try {
          return solve_lex_ncdp(a, g, eq, budget);
        } catch (const Error& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + e.what();
        }
      }
      if (can_solve(a) && is_directed_analytic(g) && can_solve(g)) {
        try {
          return solve_lex_wrdp(a, g, eq, budget);
        } catch (const Error& e) {
          attempts += std::string(attempts.empty() ? "" : "; ") + e.what();
        }
      }
      if (!attempts.empty()) fail(Err::ConstructionFailed, attempts);
      fail(Err::NoRuleApplies, "no lex construction matches this carrier");
    }
    default: fail(Err::NoRuleApplies, "no construction for this carrier");
  }
}

SolveFn default_solver(const SearchBudget& budget) {
  return [budget](const Desc& d, const Equation& eq) { return solve(d, eq, budget).table; };
}

} // namespace pogroup

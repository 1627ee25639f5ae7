#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "pogroup/oracle.hpp"
#include "pogroup/parser.hpp"

using namespace pogroup;
using namespace pogroup::testgen;

namespace {

Desc PZZ() { return desc_prod({desc_int(), desc_int()}, ProdMode::Product); }
Desc SQQ() { return desc_prod({desc_rat(), desc_rat()}, ProdMode::Strict); }

bool ok(const Desc& d, const SolveResult& r) { return verify_table(d, r.table).ok(); }

} // namespace

TEST_CASE("linear min-splitting") {
  Desc Q = desc_rat();
  SolveResult r = solve_linear(Q, Equation{QQ(1, 2), QQ(1, 2), QQ(1, 3), QQ(2, 3)});
  CHECK(r.table.c11 == QQ(1, 3));
  CHECK(r.table.c12 == QQ(1, 6));
  CHECK(r.table.c21 == QQ(0));
  CHECK(r.table.c22 == QQ(1, 2));

  // equal first arguments give a diagonal table on the matrix chain
  Desc Mx = desc_matrix();
  Element a1 = M(2, 1, 1, 1), a2 = M(3, 2, 0, 1);
  Equation eq{a1, a2, a1, a2};
  SolveResult rm = solve_linear(Mx, eq);
  CHECK(ok(Mx, rm));
  CHECK(rm.table.c12 == zero(Mx));
  CHECK(rm.table.c21 == zero(Mx));

  Desc LM = desc_lex(desc_int(), desc_matrix());
  Gen g(73);
  for (int i = 0; i < 60; ++i) {
    Equation e = g.positive_equation(LM, 3);
    SolveResult rr = solve_linear(LM, e);
    CHECK(ok(LM, rr));
  }

  CHECK_THROWS_AS(solve_linear(PZZ(), Equation{T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(1)}),
                                               T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(1)})}),
                  Error);
}

TEST_CASE("dispatcher base cases and traces") {
  Desc Z = desc_int();
  SolveResult r = solve(Z, Equation{ZZ(1), ZZ(1), ZZ(1), ZZ(1)});
  CHECK(r.table.c11 == ZZ(1));
  CHECK(r.table.c12 == ZZ(0));
  CHECK(r.table.c21 == ZZ(0));
  CHECK(r.table.c22 == ZZ(1));
  CHECK(r.trace.tag == "linear");

  Desc LZ = desc_lex(desc_int(), desc_int());
  SolveResult rl = solve(
      LZ, Equation{T({ZZ(1), ZZ(5)}), T({ZZ(1), ZZ(-5)}), T({ZZ(1), ZZ(0)}), T({ZZ(1), ZZ(0)})});
  CHECK(ok(LZ, rl));
  CHECK(rl.trace.tag == "linear"); // a chain of chains dispatches to min-splitting

  // reduction to the second factor when the first order is trivial
  Desc TF = desc_trivial(desc_free(2, {make_rat(1), make_rat(1)}));
  Desc LT = desc_lex(TF, desc_int());
  Element zw = zero(TF);
  SolveResult rt = solve(LT, Equation{T({zw, ZZ(1)}), T({zw, ZZ(2)}), T({zw, ZZ(2)}),
                                      T({zw, ZZ(1)})});
  CHECK(ok(LT, rt));
  CHECK(rt.trace.tag == "lex/i");

  SolveResult rp = solve(PZZ(), Equation{T({ZZ(2), ZZ(1)}), T({ZZ(1), ZZ(2)}), T({ZZ(1), ZZ(1)}),
                                         T({ZZ(2), ZZ(2)})});
  CHECK(ok(PZZ(), rp));
  CHECK(rp.trace.tag == "prod/zip");

  CHECK_THROWS_AS(solve(desc_free(2, {make_rat(1), make_rat(1)}),
                        Equation{W({1}), W({2}), W({1}), W({2})}),
                  Error);
}

TEST_CASE("strict product splitter") {
  Desc S = SQQ();
  Equation eq{T({QQ(1), QQ(4)}), T({QQ(3), QQ(7)}), T({QQ(2), QQ(3)}), T({QQ(2), QQ(8)})};
  SolveResult r = solve_strict_product(S, eq);
  CHECK(ok(S, r));
  for (const Element* e : {&r.table.c11, &r.table.c12, &r.table.c21, &r.table.c22})
    CHECK(is_strictly_positive(S, *e));

  // zero addend short-circuits to the evident table
  Equation ez{zero(S), T({QQ(1), QQ(1)}), T({QQ(1), QQ(1)}), zero(S)};
  SolveResult rz = solve_strict_product(S, ez);
  CHECK(ok(S, rz));
  CHECK(rz.trace.tag == "degenerate/a1");

  Desc SI = desc_prod({desc_int(), desc_int()}, ProdMode::Strict);
  try {
    solve_strict_product(SI, Equation{T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(1)}),
                                      T({ZZ(1), ZZ(1)})});
    FAIL("expected DensityRequired");
  } catch (const Error& e) {
    CHECK(e.code() == Err::DensityRequired);
  }
}

TEST_CASE("lex over a product of chains") {
  Desc A = PZZ();
  Desc G = desc_int();
  Desc L = desc_lex(A, G);

  // strictly dominated first components leave a zero tail
  Equation e1{T({T({ZZ(1), ZZ(1)}), ZZ(7)}), T({T({ZZ(2), ZZ(2)}), ZZ(-3)}),
              T({T({ZZ(2), ZZ(2)}), ZZ(1)}), T({T({ZZ(1), ZZ(1)}), ZZ(3)})};
  SolveResult r1 = solve_lex_prodlinear_rdp1(A, G, e1, {});
  CHECK(ok(L, r1));
  CHECK(r1.trace.tag == "lex/viii");
  CHECK(r1.table.c12 == zero(L));

  // zero first components everywhere reduce to the second factor
  Element za = zero(A);
  SolveResult r3 = solve_lex_prodlinear_rdp1(
      A, G, Equation{T({za, ZZ(2)}), T({za, ZZ(3)}), T({za, ZZ(1)}), T({za, ZZ(4)})}, {});
  CHECK(ok(L, r3));
  CHECK(r3.trace.tag == "lex/i");

  // the pinned coordinate split: I1 = {0}, I2 = {1}
  Equation e4{T({T({ZZ(1), ZZ(4)}), ZZ(9)}), T({T({ZZ(3), ZZ(7)}), ZZ(-2)}),
              T({T({ZZ(2), ZZ(3)}), ZZ(3)}), T({T({ZZ(2), ZZ(8)}), ZZ(4)})};
  SolveResult r4 = solve_lex_prodlinear_rdp1(A, G, e4, {});
  CHECK(ok(L, r4));
  CHECK(r4.trace.tag == "lexprod/4");
  REQUIRE(r4.trace.find("I1"));
  REQUIRE(r4.trace.find("I2"));
  CHECK(*r4.trace.find("I1") == "0");
  CHECK(*r4.trace.find("I2") == "1");
  CHECK(*r4.trace.find("e") == "(1, 3)");
  CHECK(*r4.trace.find("f") == "(1, 0)");
  CHECK(*r4.trace.find("g") == "(0, 1)");
  CHECK(*r4.trace.find("h") == "(2, 7)");
  CHECK(check_rdp1_com(L, r4.table, {}).kind == VerdictKind::HoldsExact);

  // the splitter needs an abelian second factor
  try {
    Desc LM = desc_matrix();
    Equation em{T({T({ZZ(1), ZZ(4)}), zero(LM)}), T({T({ZZ(3), ZZ(7)}), zero(LM)}),
                T({T({ZZ(2), ZZ(3)}), zero(LM)}), T({T({ZZ(2), ZZ(8)}), zero(LM)})};
    solve_lex_prodlinear_rdp1(A, LM, em, {});
    FAIL("expected AbelianRequired");
  } catch (const Error& e) {
    CHECK(e.code() == Err::AbelianRequired);
  }
}

TEST_CASE("lex comparable-firsts case tables match the pinned shapes") {
  Desc A = SQQ();
  Desc G = desc_lex(desc_int(), desc_matrix());
  Desc L = desc_lex(A, G);
  Element za = zero(A);
  Element zg = zero(G);
  Element x = T({QQ(1), QQ(1)});
  Element u1 = T({ZZ(-2), M(2, 1, 0, 1)});
  Element u2 = T({ZZ(1), M(1, 1, 3, 1)});
  Element v1 = T({ZZ(0), M(2, 1, 1, 1)});
  Element v2 = add(G, add(G, neg(G, v1), u1), u2);

  // rows (x,u1),(0,u2) = (0,v1),(x,v2): forced corner table
  Equation eq4{T({x, u1}), T({za, u2}), T({za, v1}), T({x, v2})};
  REQUIRE(equation_holds(L, eq4));
  REQUIRE(equation_positive(L, eq4));
  SolveResult r = solve_lex_comdirected(A, G, eq4, {});
  CHECK(ok(L, r));
  CHECK(r.trace.tag == "lex/iv");
  CHECK(r.table.c11 == T({za, v1}));
  CHECK(r.table.c12 == T({x, add(G, neg(G, v1), u1)}));
  CHECK(r.table.c21 == T({za, zg}));
  CHECK(r.table.c22 == T({za, u2}));
}

TEST_CASE("com-directed lex solver covers the incomparable branch") {
  Desc A = PZZ();
  Desc G = desc_lex(desc_int(), desc_matrix());
  Desc L = desc_lex(A, G);
  REQUIRE(is_com_directed_analytic(G));

  Gen g(79);
  int central_hits = 0;
  for (int i = 0; i < 60; ++i) {
    Equation eq = g.positive_equation(L, 3);
    SolveResult r = solve(L, eq, {});
    CHECK(ok(L, r));
    if (r.trace.tag == "lex/II-central") {
      ++central_hits;
      const std::string* ds = r.trace.find("d");
      REQUIRE(ds);
      Element dd = parse_element(G, *ds);
      CHECK(is_central(G, dd));
    }
  }
  // pinned incomparable-firsts instance with zero corners in the first table
  Equation eq{T({T({ZZ(1), ZZ(0)}), zero(G)}), T({T({ZZ(0), ZZ(1)}), zero(G)}),
              T({T({ZZ(0), ZZ(1)}), zero(G)}), T({T({ZZ(1), ZZ(0)}), zero(G)})};
  SolveResult r = solve_lex_comdirected(A, G, eq, {});
  CHECK(ok(L, r));
  CHECK(r.trace.tag == "lex/II-central");
}

TEST_CASE("conjugation-witness lex solver") {
  // the pinned carrier: first factor itself a lex of a chain over a strict
  // plane, second factor the integers
  Desc B = SQQ();
  Desc A = desc_lex(desc_matrix(), B);
  Desc G = desc_int();
  Desc L = desc_lex(A, G);

  Element x1 = T({M(2, 1, 0, 1), T({QQ(1), QQ(1)})});
  Element y1 = T({M(2, 1, 0, 1), T({QQ(3), QQ(-1)})});
  REQUIRE_FALSE(comparable(A, x1, y1));
  Element x2 = T({M(3, 1, 1, 1), T({QQ(4), QQ(4)})});
  Element y2 = add(A, neg(A, y1), add(A, x1, x2));
  Equation eq{T({x1, ZZ(5)}), T({x2, ZZ(-1)}), T({y1, ZZ(2)}), T({y2, ZZ(2)})};
  REQUIRE(equation_holds(L, eq));
  REQUIRE(equation_positive(L, eq));
  SolveResult r = solve_lex_ncdp(A, G, eq, {});
  CHECK(ok(L, r));
  CHECK(r.trace.tag == "lex/II-diag");

  // comparable first components delegate to the shared cases
  Equation eqc{T({x1, ZZ(5)}), T({x2, ZZ(-1)}), T({x1, ZZ(2)}), T({x2, ZZ(2)})};
  if (equation_holds(L, eqc) && equation_positive(L, eqc)) {
    SolveResult rc = solve_lex_ncdp(A, G, eqc, {});
    CHECK(ok(L, rc));
    CHECK(rc.trace.tag.rfind("lex/i", 0) == 0);
  }
}

TEST_CASE("conjugation shift fires on a supplied zero-corner table") {
  Desc A = SQQ();
  Desc G = desc_int();
  Desc L = desc_lex(A, G);
  Equation aeq{T({QQ(1), QQ(4)}), T({QQ(3), QQ(7)}), T({QQ(2), QQ(3)}), T({QQ(2), QQ(8)})};
  // a valid refinement of the first components with a zero corner
  RdpTable ea{zero(A), T({QQ(1), QQ(4)}), T({QQ(2), QQ(3)}), T({QQ(1), QQ(4)}), aeq};
  REQUIRE(verify_table(A, ea).ok());
  Equation eq{T({aeq.a1, ZZ(3)}), T({aeq.a2, ZZ(1)}), T({aeq.b1, ZZ(2)}), T({aeq.b2, ZZ(2)})};
  REQUIRE(equation_holds(L, eq));
  SolveResult r = lex_ncdp_table_from_parts(A, G, eq, ea, {});
  CHECK(ok(L, r));
  CHECK(r.trace.tag == "lex/II-conj");
  REQUIRE(r.trace.find("d'"));
  Element dp = parse_element(A, *r.trace.find("d'"));
  CHECK(is_strictly_positive(A, dp));
  CHECK(leq(A, dp, ea.c12));
  CHECK(leq(A, dp, ea.c21));
  CHECK(*r.trace.find("row2-recombination") == "exact");

  // no witness on a meet-zero pair
  Desc AP = PZZ();
  Desc LP = desc_lex(AP, G);
  Equation apeq{T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(1)}), T({ZZ(0), ZZ(1)}), T({ZZ(1), ZZ(0)})};
  RdpTable eap{zero(AP), T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(1)}), zero(AP), apeq};
  REQUIRE(verify_table(AP, eap).ok());
  Equation eqp{T({apeq.a1, ZZ(3)}), T({apeq.a2, ZZ(1)}), T({apeq.b1, ZZ(2)}), T({apeq.b2, ZZ(2)})};
  try {
    SearchBudget small;
    small.max_candidates = 300;
    lex_ncdp_table_from_parts(AP, G, eqp, eap, small);
    FAIL("expected NcdpWitnessUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NcdpWitnessUnavailable);
  }
}

TEST_CASE("commuting-pair lex solver") {
  Desc A = PZZ();
  Desc G = desc_int();
  Desc L = desc_lex(A, G);
  Equation eq{T({T({ZZ(1), ZZ(0)}), ZZ(4)}), T({T({ZZ(0), ZZ(1)}), ZZ(-2)}),
              T({T({ZZ(0), ZZ(1)}), ZZ(1)}), T({T({ZZ(1), ZZ(0)}), ZZ(1)})};
  REQUIRE(equation_holds(L, eq));
  SolveResult r = solve_lex_wrdp(A, G, eq, {});
  CHECK(ok(L, r));
  CHECK(r.trace.tag == "lex/II-wpair");

  // equal second data collapses toward the diagonal
  Equation eq2{T({T({ZZ(1), ZZ(0)}), ZZ(3)}), T({T({ZZ(0), ZZ(1)}), ZZ(5)}),
               T({T({ZZ(0), ZZ(1)}), ZZ(3)}), T({T({ZZ(1), ZZ(0)}), ZZ(5)})};
  REQUIRE(equation_holds(L, eq2));
  SolveResult r2 = solve_lex_wrdp(A, G, eq2, {});
  CHECK(ok(L, r2));

  // a valued free second factor exhausts the witness search
  Desc F = desc_free(3, {make_rat(1), make_rat(1), make_rat(1, 2)});
  Desc LF = desc_lex(A, F);
  Element u1 = W({3, -1}), u2 = W({1}), v1 = W({3, -2}), v2 = W({2});
  Equation eqf{T({T({ZZ(1), ZZ(0)}), u1}), T({T({ZZ(0), ZZ(1)}), u2}),
               T({T({ZZ(0), ZZ(1)}), v1}), T({T({ZZ(1), ZZ(0)}), v2})};
  REQUIRE(equation_holds(LF, eqf));
  try {
    SearchBudget small;
    small.max_candidates = 800;
    solve_lex_wrdp(A, F, eqf, small);
    FAIL("expected WrdpWitnessUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Err::WrdpWitnessUnavailable);
  }
}

TEST_CASE("antilattice strengthening") {
  Desc S = SQQ();
  Equation eq{T({QQ(1), QQ(4)}), T({QQ(3), QQ(7)}), T({QQ(2), QQ(3)}), T({QQ(2), QQ(8)})};
  SolveResult r = antilattice_strengthen(S, eq, {});
  CHECK(ok(S, r));
  for (const Element* e : {&r.table.c11, &r.table.c12, &r.table.c21, &r.table.c22})
    CHECK(is_strictly_positive(S, *e));
  CHECK_FALSE(comparable(S, r.table.c12, r.table.c21));

  Equation cmp{T({QQ(1), QQ(1)}), T({QQ(1), QQ(1)}), T({QQ(2), QQ(2)}), zero(S)};
  CHECK_THROWS_AS(antilattice_strengthen(S, cmp, {}), Error);
}

TEST_CASE("corner table from commuting-pair witnesses") {
  Desc Z = desc_int();
  RdpTable t = wrdp_corner_table(Z, ZZ(1), ZZ(2), ZZ(2), ZZ(1), ZZ(1), ZZ(2));
  CHECK(t.c11 == ZZ(0));
  CHECK(t.c12 == ZZ(1));
  CHECK(t.c21 == ZZ(2));
  CHECK(t.c22 == ZZ(0));
  CHECK(verify_table(Z, t).sums_ok);

  // diagonal data keeps both corners positive
  auto [d1, d2] = wrdp_witnesses(Z, ZZ(3), ZZ(5), ZZ(3), ZZ(5), {});
  RdpTable td = wrdp_corner_table(Z, ZZ(3), ZZ(5), ZZ(3), ZZ(5), d1, d2);
  CHECK(verify_table(Z, td).sums_ok);
  CHECK(is_positive(Z, td.c11));
  CHECK(is_positive(Z, td.c22));

  CHECK_THROWS_AS(wrdp_corner_table(Z, ZZ(1), ZZ(2), ZZ(2), ZZ(1), ZZ(2), ZZ(1)), Error);
}

TEST_CASE("lex routes agree wherever they all apply") {
  // strict plane over the integers: com-directed, conjugation-witness and
  // commuting-pair constructions are all available
  Desc A = SQQ();
  Desc G = desc_int();
  Desc L = desc_lex(A, G);
  Gen g(109);
  for (int i = 0; i < 50; ++i) {
    Equation eq = g.positive_equation(L, 3);
    SolveResult rc = solve_lex_comdirected(A, G, eq, {});
    SolveResult rn = solve_lex_ncdp(A, G, eq, {});
    SolveResult rw = solve_lex_wrdp(A, G, eq, {});
    CHECK(ok(L, rc));
    CHECK(ok(L, rn));
    CHECK(ok(L, rw));
    // comparable-firsts instances share one construction across routes
    if (comparable(A, eq.a1.tval()[0], eq.b1.tval()[0])) {
      CHECK(rc.table == rn.table);
      CHECK(rc.trace.tag == rn.trace.tag);
    }
  }
}

TEST_CASE("dispatcher soundness sweep across the carrier families") {
  Gen g(83);
  std::vector<Desc> ds = {
      desc_int(),
      desc_rat(),
      PZZ(),
      SQQ(),
      desc_lex(desc_int(), desc_int()),
      desc_lex(PZZ(), desc_int()),
      desc_lex(SQQ(), desc_matrix()),
      desc_lex(desc_int(), desc_matrix()),
      desc_lex(PZZ(), desc_lex(desc_int(), desc_matrix())),
  };
  for (const Desc& d : ds) {
    CAPTURE(print_descriptor(d));
    for (int i = 0; i < 40; ++i) {
      Equation eq = g.positive_equation(d, 3);
      SolveResult r = solve(d, eq, {});
      CHECK(ok(d, r));
    }
  }
}

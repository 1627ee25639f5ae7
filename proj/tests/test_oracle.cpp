#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "pogroup/enumerate.hpp"
#include "pogroup/oracle.hpp"
#include "pogroup/parser.hpp"

using namespace pogroup;
using namespace pogroup::testgen;

namespace {

Desc PZZ() { return desc_prod({desc_int(), desc_int()}, ProdMode::Product); }

} // namespace

TEST_CASE("reduced word enumeration") {
  std::vector<Element> w1 = enumerate_reduced_words(1, 2);
  REQUIRE(w1.size() == 5);
  CHECK(w1[0] == W({}));
  CHECK(w1[1] == W({1}));
  CHECK(w1[2] == W({-1}));
  CHECK(w1[3] == W({1, 1}));
  CHECK(w1[4] == W({-1, -1}));

  CHECK(enumerate_reduced_words(2, 1).size() == 5);

  for (int k = 1; k <= 3; ++k)
    for (int len = 0; len <= 6; ++len)
      CHECK(Int(enumerate_reduced_words(k, len).size()) == reduced_word_count(k, len));

  // each exactly once, reduced, in length-then-lexicographic order
  std::vector<Element> w3 = enumerate_reduced_words(3, 4);
  std::set<Word> seen;
  for (std::size_t i = 0; i < w3.size(); ++i) {
    const Word& w = w3[i].wval();
    CHECK(reduce_word(w) == w);
    CHECK(seen.insert(w).second);
    if (i + 1 < w3.size()) CHECK(word_stream_less(w, w3[i + 1].wval()));
  }
}

TEST_CASE("brute force tables on exhaustive carriers") {
  Desc P = PZZ();
  Equation eq{T({ZZ(2), ZZ(1)}), T({ZZ(1), ZZ(2)}), T({ZZ(1), ZZ(1)}), T({ZZ(2), ZZ(2)})};
  OracleResult r = brute_force_table(P, eq, {});
  REQUIRE(r.kind == VerdictKind::Found);
  CHECK(verify_table(P, *r.table).ok());

  // a1 = 0 short-circuits
  Equation ez{zero(P), T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(1)})};
  OracleResult rz = brute_force_table(P, ez, {});
  CHECK(rz.kind == VerdictKind::Found);
  CHECK(verify_table(P, *rz.table).ok());

  // determinism
  OracleResult r2 = brute_force_table(P, eq, {});
  CHECK(*r.table == *r2.table);
}

TEST_CASE("brute force exhausts the valued free instance") {
  Desc F = desc_free(4, {make_rat(1), make_rat(1), make_rat(1, 2), make_rat(1, 2)});
  Element comm = W({1, 2, -1, -2});
  Equation eq{W({1}), W({2}), add(F, W({1}), comm), add(F, neg(F, comm), W({2}))};
  REQUIRE(equation_holds(F, eq));
  REQUIRE(equation_positive(F, eq));
  SearchBudget b;
  b.max_candidates = reduced_word_count(4, 4).get_si();
  OracleResult r = brute_force_table(F, eq, b);
  CHECK(r.kind == VerdictKind::NotFoundWithinBudget);
  CHECK(Int(r.tested) == reduced_word_count(4, 4));
}

TEST_CASE("oracle agrees with the solver on small lex and product boxes") {
  Gen g(89);
  for (const Desc& d : {desc_lex(desc_int(), desc_int()), PZZ()}) {
    CAPTURE(print_descriptor(d));
    for (int i = 0; i < 80; ++i) {
      Equation eq = g.positive_equation(d, 4);
      SolveResult s = solve(d, eq, {});
      REQUIRE(verify_table(d, s.table).ok());
      OracleResult r = brute_force_table(d, eq, {});
      CHECK(r.kind == VerdictKind::Found);
      CHECK(verify_table(d, *r.table).ok());
    }
  }
}

TEST_CASE("commuting k search on the pinned free instance") {
  Desc F = desc_free(3, {make_rat(1), make_rat(1), make_rat(1, 2)});
  Element u1 = W({3, -1}), u2 = W({1}), v1 = W({3, -2}), v2 = W({2});
  SearchBudget b;
  b.max_word_len = 4;
  WrdpKResult r = search_wrdp_k(F, u1, u2, v1, v2, b);
  CHECK(r.kind == VerdictKind::NotFoundWithinBudget);
  CHECK(Int(r.tested) == reduced_word_count(3, 4));

  WrdpKResult ra = search_wrdp_k(F, u1, u2, v1, v2, b, /*abelianized=*/true);
  REQUIRE(ra.kind == VerdictKind::Found);
  CHECK(*ra.k == W({1, 1}));

  // identical data with v2 below u1 finds k = 0
  WrdpKResult rz = search_wrdp_k(F, W({1}), W({3}), W({1}), W({3}), b);
  REQUIRE(rz.kind == VerdictKind::Found);
  CHECK(*rz.k == W({}));
  CHECK(p1p2_conditions_hold(F, W({1}), W({3}), W({1}), W({3}), *rz.k));

  // determinism across repeated runs
  WrdpKResult rb = search_wrdp_k(F, u1, u2, v1, v2, b, true);
  CHECK(*rb.k == *ra.k);
}

TEST_CASE("found verdicts re-verify from scratch") {
  Gen g(97);
  Desc P = PZZ();
  for (int i = 0; i < 60; ++i) {
    Equation eq = g.positive_equation(P, 4);
    OracleResult r = brute_force_table(P, eq, {});
    REQUIRE(r.kind == VerdictKind::Found);
    TableReport rep = verify_table(P, *r.table);
    CHECK(rep.sums_ok);
    CHECK(rep.all_positive());
  }
}

TEST_CASE("element streams are deterministic and canonical") {
  Desc Mx = desc_matrix();
  ElementStream s1(Mx), s2(Mx);
  for (std::size_t i = 0; i < 200; ++i) {
    const Element a = s1.at(i);
    CHECK(a == s2.at(i));
  }
  CHECK(s1.at(0) == zero(Mx)); // identity first

  Desc L = desc_lex(desc_int(), desc_int());
  ElementStream sl(L);
  CHECK(sl.at(0) == zero(L));
  // the stream reaches every small element
  std::set<std::pair<long, long>> seen;
  for (std::size_t i = 0; i < 600; ++i) {
    const Element e = sl.at(i);
    seen.insert({e.tval()[0].ival().get_si(), e.tval()[1].ival().get_si()});
  }
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) CHECK(seen.count({x, y}) == 1);
}

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

} // namespace

TEST_CASE("verify_table re-checks identities and positivity") {
  Desc Z = desc_int();
  RdpTable t{ZZ(1), ZZ(0), ZZ(0), ZZ(1), Equation{ZZ(1), ZZ(1), ZZ(1), ZZ(1)}};
  TableReport r = verify_table(Z, t);
  CHECK(r.sums_ok);
  CHECK(r.all_positive());

  Desc P = PZZ();
  RdpTable tp{T({ZZ(1), ZZ(1)}), T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(0)}), T({ZZ(1), ZZ(2)}),
              Equation{T({ZZ(2), ZZ(1)}), T({ZZ(1), ZZ(2)}), T({ZZ(1), ZZ(1)}), T({ZZ(2), ZZ(2)})}};
  TableReport rp = verify_table(P, tp);
  CHECK(rp.sums_ok);
  CHECK(rp.all_positive());
  // the exhaustive oracle also finds a table for this equation
  CHECK(brute_force_table(P, tp.eq, {}).kind == VerdictKind::Found);

  // dominating-rows shape over a lex carrier
  Desc L = desc_lex(desc_int(), desc_int());
  Equation eq{T({ZZ(3), ZZ(2)}), T({ZZ(1), ZZ(4)}), T({ZZ(1), ZZ(0)}), T({ZZ(3), ZZ(6)})};
  RdpTable tl{T({ZZ(1), ZZ(0)}), T({ZZ(2), ZZ(2)}), T({ZZ(0), ZZ(0)}), T({ZZ(1), ZZ(4)}), eq};
  CHECK(verify_table(L, tl).sums_ok);
}

TEST_CASE("mutating any entry breaks the sums") {
  Gen g(61);
  Desc Z = desc_int();
  for (int i = 0; i < 50; ++i) {
    Equation eq = g.positive_equation(Z, 6);
    RdpTable t = solve(Z, eq).table;
    REQUIRE(verify_table(Z, t).sums_ok);
    for (Element* entry : {&t.c11, &t.c12, &t.c21, &t.c22}) {
      Element saved = *entry;
      *entry = add(Z, saved, ZZ(1));
      CHECK_FALSE(verify_table(Z, t).sums_ok);
      *entry = saved;
    }
  }
}

TEST_CASE("lower intervals") {
  Desc Z = desc_int();
  std::vector<Element> iz = lower_interval(Z, ZZ(2), {});
  REQUIRE(iz.size() == 3);
  CHECK(iz[0] == ZZ(0));
  CHECK(iz[1] == ZZ(1));
  CHECK(iz[2] == ZZ(2));

  Desc P = PZZ();
  std::vector<Element> ip = lower_interval(P, T({ZZ(1), ZZ(1)}), {});
  REQUIRE(ip.size() == 4);
  CHECK(ip[0] == T({ZZ(0), ZZ(0)}));
  CHECK(ip[1] == T({ZZ(0), ZZ(1)}));
  CHECK(ip[2] == T({ZZ(1), ZZ(0)}));
  CHECK(ip[3] == T({ZZ(1), ZZ(1)}));

  Desc L = desc_lex(desc_int(), desc_int());
  SearchBudget b;
  b.max_candidates = 500;

  // zero top over a sampled carrier: the interval collapses to the identity
  std::vector<Element> iz0 = lower_interval(L, zero(L), b);
  for (const Element& x : iz0) CHECK(x == zero(L));
  CHECK(!iz0.empty());

  Element top = T({ZZ(1), ZZ(0)});
  std::vector<Element> il = lower_interval(L, top, b);
  bool has_zero = false, has_top = false, has_05 = false;
  for (const Element& x : il) {
    CHECK(is_positive(L, x));
    CHECK(leq(L, x, top));
    if (x == zero(L)) has_zero = true;
    if (x == top) has_top = true;
    if (x == T({ZZ(0), ZZ(5)})) has_05 = true;
  }
  CHECK(has_zero);
  CHECK(has_top);
  CHECK(has_05);
}

TEST_CASE("rdp1 commutation checks") {
  Desc Z = desc_int();
  Gen g(67);
  for (int i = 0; i < 20; ++i) {
    RdpTable t = solve(Z, g.positive_equation(Z, 5)).table;
    CHECK(check_rdp1_com(Z, t, {}).kind == VerdictKind::HoldsExact);
  }

  // finite intervals in a non-abelian carrier still give an exact verdict
  Desc NP = desc_prod({desc_trivial(desc_free(2, {make_rat(1), make_rat(1)})), desc_int()},
                      ProdMode::Product);
  CHECK_FALSE(is_abelian(NP));
  Element znp = zero(NP);
  Element one = T({zero(desc_trivial(desc_free(2, {make_rat(1), make_rat(1)}))), ZZ(1)});
  RdpTable tnp{one, znp, znp, one, Equation{one, one, one, one}};
  REQUIRE(verify_table(NP, tnp).sums_ok);
  CHECK(check_rdp1_com(NP, tnp, {}).kind == VerdictKind::HoldsExact);

  // the pinned non-commuting instance fails with exact evidence
  Desc L = desc_lex(SQQ(), desc_matrix());
  Equation eq{T({T({QQ(1), QQ(4)}), M(2, 1, 0, 1)}), T({T({QQ(3), QQ(7)}), M(1, 1, 1, 1)}),
              T({T({QQ(2), QQ(3)}), M(2, 1, 2, 1)}), T({T({QQ(2), QQ(8)}), M(1, 1, 0, 1)})};
  RdpTable tf = solve(L, eq).table;
  Verdict v = check_rdp1_com(L, tf, {});
  REQUIRE(v.kind == VerdictKind::Fails);
  REQUIRE(v.evidence.size() == 2);
  CHECK(is_positive(L, v.evidence[0]));
  CHECK(leq(L, v.evidence[0], tf.c12));
  CHECK(is_positive(L, v.evidence[1]));
  CHECK(leq(L, v.evidence[1], tf.c21));
  CHECK_FALSE(add(L, v.evidence[0], v.evidence[1]) == add(L, v.evidence[1], v.evidence[0]));
}

TEST_CASE("rdp2 meet checks") {
  Desc P = PZZ();
  RdpTable tp{T({ZZ(0), ZZ(0)}), T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(1)}), T({ZZ(0), ZZ(0)}),
              Equation{T({ZZ(1), ZZ(0)}), T({ZZ(0), ZZ(1)}), T({ZZ(0), ZZ(1)}), T({ZZ(1), ZZ(0)})}};
  REQUIRE(verify_table(P, tp).sums_ok);
  CHECK(check_rdp2_meet(P, tp, {}).kind == VerdictKind::Holds);

  Desc Z = desc_int();
  RdpTable tz{ZZ(0), ZZ(1), ZZ(1), ZZ(0), Equation{ZZ(1), ZZ(1), ZZ(1), ZZ(1)}};
  Verdict vz = check_rdp2_meet(Z, tz, {});
  CHECK(vz.kind == VerdictKind::Fails);
  REQUIRE(vz.evidence.size() == 1);
  CHECK(vz.evidence[0] == ZZ(1));

  Desc S = SQQ();
  RdpTable ts{T({QQ(1), QQ(1)}), T({QQ(1), QQ(2)}), T({QQ(2), QQ(1)}), T({QQ(1), QQ(1)}),
              Equation{T({QQ(2), QQ(3)}), T({QQ(3), QQ(2)}), T({QQ(3), QQ(2)}), T({QQ(2), QQ(3)})}};
  REQUIRE(verify_table(S, ts).sums_ok);
  Verdict vs = check_rdp2_meet(S, ts, {});
  REQUIRE(vs.kind == VerdictKind::Fails);
  REQUIRE(vs.evidence.size() == 1);
  CHECK(vs.evidence[0] == T({QQ(1, 2), QQ(1, 2)}));
  CHECK(is_strictly_positive(S, vs.evidence[0]));
  CHECK(leq(S, vs.evidence[0], ts.c12));
  CHECK(leq(S, vs.evidence[0], ts.c21));
}

TEST_CASE("rdp0 decomposition") {
  SolveFn solver = default_solver({});
  Desc Z = desc_int();
  auto [b1, c1] = rdp0_decompose(Z, ZZ(3), ZZ(2), ZZ(2), solver);
  CHECK(b1 == ZZ(2));
  CHECK(c1 == ZZ(1));
  CHECK(leq(Z, b1, ZZ(2)));
  CHECK(leq(Z, c1, ZZ(2)));
  CHECK(add(Z, b1, c1) == ZZ(3));

  auto [z1, z2] = rdp0_decompose(Z, ZZ(0), ZZ(4), ZZ(4), solver);
  CHECK(z1 == ZZ(0));
  CHECK(z2 == ZZ(0));

  Desc L = desc_lex(desc_int(), desc_int());
  Element a = T({ZZ(1), ZZ(5)}), b = T({ZZ(1), ZZ(0)}), c = T({ZZ(1), ZZ(0)});
  REQUIRE(leq(L, a, add(L, b, c)));
  auto [lb, lc] = rdp0_decompose(L, a, b, c, solver);
  CHECK(leq(L, lb, b));
  CHECK(leq(L, lc, c));
  CHECK(add(L, lb, lc) == a);

  CHECK_THROWS_AS(rdp0_decompose(Z, ZZ(5), ZZ(2), ZZ(2), solver), Error);
}

TEST_CASE("interpolation") {
  SolveFn solver = default_solver({});
  Desc Z = desc_int();
  Element c = interpolate(Z, ZZ(0), ZZ(1), ZZ(2), ZZ(3), solver);
  CHECK(c == ZZ(1));

  CHECK(interpolate(Z, ZZ(7), ZZ(7), ZZ(7), ZZ(7), solver) == ZZ(7));

  Desc P = PZZ();
  Element cp = interpolate(P, T({ZZ(0), ZZ(0)}), T({ZZ(1), ZZ(0)}), T({ZZ(1), ZZ(1)}),
                           T({ZZ(2), ZZ(1)}), solver);
  CHECK(cp == T({ZZ(1), ZZ(0)}));

  CHECK_THROWS_AS(interpolate(Z, ZZ(5), ZZ(0), ZZ(1), ZZ(2), solver), Error);
}

TEST_CASE("decomposition chain on solved instances") {
  SolveFn solver = default_solver({});
  Gen g(71);
  for (const Desc& d : {desc_int(), PZZ(), desc_lex(desc_int(), desc_int())}) {
    CAPTURE(print_descriptor(d));
    for (int i = 0; i < 40; ++i) {
      Equation eq = g.positive_equation(d, 4);
      RdpTable t = solve(d, eq).table;
      TableReport rep = verify_table(d, t);
      CHECK(rep.ok());
      if (is_abelian(d)) CHECK(check_rdp1_com(d, t, {}).kind == VerdictKind::HoldsExact);
      // a1 <= b1 + b2, so the two-splits decomposition applies
      auto [s1, s2] = rdp0_decompose(d, eq.a1, eq.b1, eq.b2, solver);
      CHECK(leq(d, s1, eq.b1));
      CHECK(leq(d, s2, eq.b2));
      CHECK(add(d, s1, s2) == eq.a1);
      // and interpolation between (0, s1) and (a1, b1) succeeds
      Element lo2 = s1;
      if (leq(d, lo2, eq.a1) && leq(d, zero(d), eq.a1)) {
        Element cc = interpolate(d, zero(d), lo2, eq.a1, add(d, eq.a1, eq.b2), solver);
        CHECK(leq(d, zero(d), cc));
        CHECK(leq(d, lo2, cc));
        CHECK(leq(d, cc, eq.a1));
      }
    }
  }
}

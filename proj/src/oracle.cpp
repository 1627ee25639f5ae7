#include "pogroup/oracle.hpp"

#include <map>

#include "pogroup/enumerate.hpp"

namespace pogroup {

namespace {

// Remaining entries forced by c11; returns the verified table if everything
// checks out.
std::optional<RdpTable> complete_from_c11(const Desc& d, const Equation& eq, const Element& c11) {
  if (!is_positive(d, c11) || !leq(d, c11, eq.a1) || !leq(d, c11, eq.b1)) return std::nullopt;
  Element c12 = lsub(d, c11, eq.a1);
  Element c21 = lsub(d, c11, eq.b1);
  Element c22 = lsub(d, c21, eq.a2);
  RdpTable t{c11, c12, c21, c22, eq};
  if (!verify_table(d, t).ok()) return std::nullopt;
  return t;
}

} // namespace

std::vector<RdpTable> brute_force_tables(const Desc& d, const Equation& eq,
                                         const SearchBudget& budget, std::size_t max_tables) {
  for (const Element* e : {&eq.a1, &eq.a2, &eq.b1, &eq.b2}) check_shape(d, *e);
  if (!equation_holds(d, eq) || !equation_positive(d, eq))
    fail(Err::NotApplicable, "need a positive equation with the sum identity");
  std::vector<RdpTable> out;
  if (interval_finitely_enumerable(d)) {
    auto m = lattice_meet(d, eq.a1, eq.b1);
    if (m) {
      for (const Element& c11 : lower_interval(d, *m, budget)) {
        if (auto t = complete_from_c11(d, eq, c11)) {
          out.push_back(std::move(*t));
          if (out.size() >= max_tables) return out;
        }
      }
      return out;
    }
  }
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates; ++i) {
    if (auto t = complete_from_c11(d, eq, s.at(static_cast<std::size_t>(i)))) {
      out.push_back(std::move(*t));
      if (out.size() >= max_tables) return out;
    }
  }
  return out;
}

OracleResult brute_force_table(const Desc& d, const Equation& eq, const SearchBudget& budget) {
  for (const Element* e : {&eq.a1, &eq.a2, &eq.b1, &eq.b2}) check_shape(d, *e);
  if (!equation_holds(d, eq) || !equation_positive(d, eq))
    fail(Err::NotApplicable, "need a positive equation with the sum identity");
  OracleResult r{VerdictKind::NotFoundWithinBudget, std::nullopt, budget, 0};
  const bool exhaustive = interval_finitely_enumerable(d);
  if (exhaustive) {
    auto m = lattice_meet(d, eq.a1, eq.b1);
    if (m) {
      for (const Element& c11 : lower_interval(d, *m, budget)) {
        ++r.tested;
        if (auto t = complete_from_c11(d, eq, c11)) {
          r.kind = VerdictKind::Found;
          r.table = std::move(*t);
          return r;
        }
      }
      r.kind = VerdictKind::NotFoundExhaustive;
      return r;
    }
  }
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates; ++i) {
    ++r.tested;
    if (auto t = complete_from_c11(d, eq, s.at(static_cast<std::size_t>(i)))) {
      r.kind = VerdictKind::Found;
      r.table = std::move(*t);
      return r;
    }
  }
  return r;
}

namespace {

void words_of_length(int k, int len, Word& prefix, std::vector<Element>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(Element::of_word(prefix));
    return;
  }
  for (int g = 1; g <= k; ++g) {
    for (int s : {1, -1}) {
      if (!prefix.empty() && prefix.back().gen == g && prefix.back().sign == -s) continue;
      prefix.push_back(Letter{g, s});
      words_of_length(k, len, prefix, out);
      prefix.pop_back();
    }
  }
}

} // namespace

std::vector<Element> enumerate_reduced_words(int k, int max_len) {
  if (k < 1) fail(Err::NotApplicable, "need at least one generator");
  std::vector<Element> out;
  Word prefix;
  for (int len = 0; len <= max_len; ++len) words_of_length(k, len, prefix, out);
  return out;
}

Int reduced_word_count(int k, int max_len) {
  Int total = 1; // the empty word
  Int per_len = 2 * k;
  for (int len = 1; len <= max_len; ++len) {
    total += per_len;
    per_len *= 2 * k - 1;
  }
  return total;
}

namespace {

using ExpVec = std::vector<Int>;

ExpVec exponents(int k, const Element& w) {
  ExpVec e(static_cast<std::size_t>(k), Int(0));
  for (const Letter& l : w.wval()) e[static_cast<std::size_t>(l.gen - 1)] += l.sign;
  return e;
}

ExpVec ev_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Rat ev_val(const Desc& d, const ExpVec& e) {
  Rat v(0);
  for (std::size_t i = 0; i < e.size(); ++i) v += Rat(e[i]) * d->valuations[i];
  return v;
}

bool ev_is_zero(const ExpVec& e) {
  for (const Int& x : e)
    if (x != 0) return false;
  return true;
}

// x <= y in the abelianized image: equal or smaller valuation.
bool ev_leq(const Desc& d, const ExpVec& x, const ExpVec& y) {
  return x == y || ev_val(d, x) < ev_val(d, y);
}

} // namespace

WrdpKResult search_wrdp_k(const Desc& free_desc, const Element& u1, const Element& u2,
                          const Element& v1, const Element& v2, const SearchBudget& budget,
                          bool abelianized) {
  if (free_desc->kind != Kind::Free) fail(Err::ShapeMismatch, "carrier must be Free");
  for (const Element* e : {&u1, &u2, &v1, &v2}) check_shape(free_desc, *e);
  if (!(add(free_desc, u1, u2) == add(free_desc, v1, v2)))
    fail(Err::NotApplicable, "u1+u2 must equal v1+v2");

  WrdpKResult r{VerdictKind::NotFoundWithinBudget, std::nullopt, budget, 0};
  const int k = free_desc->generators;
  const std::vector<Element> candidates =
      enumerate_reduced_words(k, static_cast<int>(budget.max_word_len));

  if (!abelianized) {
    for (const Element& cand : candidates) {
      ++r.tested;
      if (!is_positive(free_desc, cand)) continue;
      if (p1p2_conditions_hold(free_desc, u1, u2, v1, v2, cand)) {
        r.kind = VerdictKind::Found;
        r.k = cand;
        return r;
      }
    }
    return r;
  }

  const ExpVec eu1 = exponents(k, u1), eu2 = exponents(k, u2), ev2 = exponents(k, v2);
  std::map<ExpVec, bool> seen;
  for (const Element& cand : candidates) {
    ExpVec ek = exponents(k, cand);
    if (!seen.emplace(ek, true).second) continue;
    ++r.tested;
    // k >= 0
    if (!(ev_is_zero(ek) || ev_val(free_desc, ek) > 0)) continue;
    // (P1) v2 <= u1 + k; (P2) automatic in an abelian image
    if (!ev_leq(free_desc, ev2, ev_add(eu1, ek))) continue;
    (void)eu2;
    r.kind = VerdictKind::Found;
    r.k = cand;
    return r;
  }
  return r;
}

} // namespace pogroup

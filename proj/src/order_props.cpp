#include "pogroup/order_props.hpp"

#include "pogroup/enumerate.hpp"

namespace pogroup {

const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::HoldsExact: return "holds-exact";
    case VerdictKind::HoldsSampled: return "holds-sampled";
    case VerdictKind::Fails: return "fails";
    case VerdictKind::Unknown: return "unknown";
    case VerdictKind::Found: return "found";
    case VerdictKind::NotFoundExhaustive: return "not-found-exhaustive";
    case VerdictKind::NotFoundWithinBudget: return "not-found-within-budget";
  }
  return "?";
}

namespace {

Element min_of(const Desc& d, const Element& x, const Element& y) {
  return leq(d, x, y) ? x : y;
}

// Smallest n >= 1 with -n*v1 strictly below bound.
Int word_shift_exponent(const Rat& v1, const Rat& bound) {
  Rat t = -bound / v1; // need n > t
  Int n = mpz_class(t.get_num() / t.get_den());
  if (n < 1) n = 1;
  while (Rat(-n) * v1 >= bound) n += 1;
  return n;
}

Element word_power_neg_g1(const Int& n) {
  Word w;
  for (Int i = 0; i < n; ++i) w.push_back(Letter{1, -1});
  return Element::of_word(std::move(w));
}

} // namespace

Element directed_witness(const Desc& d, const Element& x, const Element& y) {
  check_shape(d, x);
  check_shape(d, y);
  Element r = zero(d);
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat: r = min_of(d, x, y); break;
    case Kind::Matrix: {
      Rat c = std::min(x.mval().a, y.mval().a) / 2;
      r = Element::of_mat(Mat{c, Rat(0)});
      break;
    }
    case Kind::Free: {
      Rat m = std::min(valuation(d, x), valuation(d, y));
      r = word_power_neg_g1(word_shift_exponent(d->valuations[0], m));
      break;
    }
    case Kind::Prod: {
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        t.push_back(d->mode == ProdMode::Product
                        ? directed_witness(d->children[i], x.tval()[i], y.tval()[i])
                        : strict_lower_bound(d->children[i], x.tval()[i], y.tval()[i]));
      }
      r = Element::of_tuple(std::move(t));
      break;
    }
    case Kind::Lex: {
      if (!supports_strict_lower_bound(d->children[0]))
        fail(Err::NotDirected, "first lex factor has no strict lower bounds");
      r = Element::of_tuple(
          {strict_lower_bound(d->children[0], x.tval()[0], y.tval()[0]), zero(d->children[1])});
      break;
    }
    case Kind::Trivial: {
      if (x == y) return x;
      fail(Err::NotDirected, "trivially ordered carrier is not directed");
    }
  }
  if (!leq(d, r, x) || !leq(d, r, y)) fail(Err::ConstructionFailed, "directed witness invalid");
  return r;
}

Element strict_lower_bound(const Desc& d, const Element& x, const Element& y) {
  check_shape(d, x);
  check_shape(d, y);
  Element r = zero(d);
  switch (d->kind) {
    case Kind::Int: r = Element::of_int(std::min(x.ival(), y.ival()) - 1); break;
    case Kind::Rat: r = Element::of_rat(std::min(x.qval(), y.qval()) - 1); break;
    case Kind::Matrix:
      r = Element::of_mat(Mat{std::min(x.mval().a, y.mval().a) / 2, Rat(0)});
      break;
    case Kind::Free: {
      Rat m = std::min(valuation(d, x), valuation(d, y));
      r = word_power_neg_g1(word_shift_exponent(d->valuations[0], m));
      break;
    }
    case Kind::Prod: {
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(strict_lower_bound(d->children[i], x.tval()[i], y.tval()[i]));
      r = Element::of_tuple(std::move(t));
      break;
    }
    case Kind::Lex:
      r = Element::of_tuple(
          {strict_lower_bound(d->children[0], x.tval()[0], y.tval()[0]), zero(d->children[1])});
      break;
    case Kind::Trivial: fail(Err::Unsupported, "no strict lower bounds in a trivial order");
  }
  if (!lt(d, r, x) || !lt(d, r, y)) fail(Err::ConstructionFailed, "strict lower bound invalid");
  return r;
}

Element strict_between(const Desc& d, const Element& a, const Element& b) {
  check_shape(d, a);
  check_shape(d, b);
  if (!is_strictly_positive(d, a) || !is_strictly_positive(d, b))
    fail(Err::NotApplicable, "strict_between needs strictly positive inputs");
  Element r = zero(d);
  switch (d->kind) {
    case Kind::Rat: r = Element::of_rat(std::min(a.qval(), b.qval()) / 2); break;
    case Kind::Matrix: {
      Mat m = leq(d, a, b) ? a.mval() : b.mval();
      if (m.a > 1)
        r = Element::of_mat(Mat{(m.a + 1) / 2, Rat(0)});
      else
        r = Element::of_mat(Mat{Rat(1), m.b / 2});
      break;
    }
    case Kind::Prod: {
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        const Desc& c = d->children[i];
        const Element& ai = a.tval()[i];
        const Element& bi = b.tval()[i];
        if (is_strictly_positive(c, ai) && is_strictly_positive(c, bi))
          t.push_back(strict_between(c, ai, bi));
        else
          t.push_back(zero(c));
      }
      r = Element::of_tuple(std::move(t));
      break;
    }
    case Kind::Lex: {
      const Desc& A = d->children[0];
      const Desc& G = d->children[1];
      const Element& a1 = a.tval()[0];
      const Element& b1 = b.tval()[0];
      bool pa = is_strictly_positive(A, a1);
      bool pb = is_strictly_positive(A, b1);
      if (pa && pb) {
        r = Element::of_tuple({strict_between(A, a1, b1), zero(G)});
      } else {
        // a zero first component pins d to (0, t); t must fit below the
        // zero-first sides only, the positive-first sides follow by
        // first-strictness
        const Element& ga = a.tval()[1];
        const Element& gb = b.tval()[1];
        Element t = zero(G);
        if (!pa && !pb)
          t = strict_between(G, ga, gb);
        else if (!pa)
          t = strict_between(G, ga, ga);
        else
          t = strict_between(G, gb, gb);
        r = Element::of_tuple({zero(A), t});
      }
      break;
    }
    case Kind::Int: fail(Err::Unsupported, "integers are not dense");
    case Kind::Free: fail(Err::Unsupported, "no between rule for free carriers");
    case Kind::Trivial: fail(Err::Unsupported, "no between rule for trivial orders");
  }
  if (!(lt(d, zero(d), r) && lt(d, r, a) && lt(d, r, b)))
    fail(Err::Unsupported, "no element strictly between for these inputs");
  return r;
}

bool is_central(const Desc& d, const Element& x) {
  check_shape(d, x);
  if (is_abelian(d)) return true;
  switch (d->kind) {
    case Kind::Matrix: return x == zero(d);
    case Kind::Free: return x.wval().empty();
    case Kind::Prod:
    case Kind::Lex: {
      for (std::size_t i = 0; i < d->children.size(); ++i)
        if (!is_central(d->children[i], x.tval()[i])) return false;
      return true;
    }
    case Kind::Trivial: return is_central(d->children[0], x);
    default: return true;
  }
}

Element com_directed_witness(const Desc& d, const Element& x, const Element& y) {
  check_shape(d, x);
  check_shape(d, y);
  Element z = zero(d);
  if (leq(d, z, x) && leq(d, z, y)) return z; // zero is always central
  Element r = z;
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat:
      r = min_of(d, x, y);
      break;
    case Kind::Matrix: fail(Err::NotComDirected, "only central element is the identity");
    case Kind::Free: {
      if (d->generators <= 1) {
        r = min_of(d, x, y); // linear
        break;
      }
      fail(Err::NotComDirected, "center of a free group on >1 generators is trivial");
    }
    case Kind::Prod: {
      if (is_abelian(d)) {
        r = directed_witness(d, x, y);
        break;
      }
      if (d->mode == ProdMode::Strict)
        fail(Err::NotComDirected, "no rule for strict products of non-abelian factors");
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(com_directed_witness(d->children[i], x.tval()[i], y.tval()[i]));
      r = Element::of_tuple(std::move(t));
      break;
    }
    case Kind::Lex: {
      const Desc& A = d->children[0];
      if (is_abelian(A) && supports_strict_lower_bound(A)) {
        r = Element::of_tuple(
            {strict_lower_bound(A, x.tval()[0], y.tval()[0]), zero(d->children[1])});
        break;
      }
      fail(Err::NotComDirected, "first lex factor has no central strict lower bounds");
    }
    case Kind::Trivial: {
      if (x == y && is_central(d, x)) return x;
      fail(Err::NotComDirected, "trivially ordered carrier is not directed");
    }
  }
  if (!is_central(d, r) || !leq(d, r, x) || !leq(d, r, y))
    fail(Err::ConstructionFailed, "com-directed witness invalid");
  return r;
}

Verdict antilattice_status(const Desc& d, const SearchBudget& budget) {
  if (is_linear(d)) return Verdict::holds({}, "linearly ordered");
  if (d->kind == Kind::Prod && d->mode == ProdMode::Strict) {
    bool dense = true;
    for (const Desc& c : d->children) dense = dense && is_dense_linear(c);
    if (dense) return Verdict::holds({}, "strict product of dense chains");
  }
  if (d->kind == Kind::Prod && d->mode == ProdMode::Product) {
    // meet of two incomparable positive units is zero
    try {
      Element::Tuple a, b;
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        a.push_back(i == 0 ? unit_positive(d->children[i]) : zero(d->children[i]));
        b.push_back(i == 1 ? unit_positive(d->children[i]) : zero(d->children[i]));
      }
      Element ea = Element::of_tuple(std::move(a));
      Element eb = Element::of_tuple(std::move(b));
      auto m = lattice_meet(d, ea, eb);
      if (m && !comparable(d, ea, eb))
        return Verdict::fails({ea, eb, *m}, "incomparable pair with a meet");
    } catch (const Error&) {
      // no positive units; fall through to the search
    }
  }
  // bounded falsification: scan pairs for an incomparable pair with a meet
  ElementStream s(d);
  std::int64_t pulls = 0;
  for (std::size_t level = 0; pulls < budget.max_candidates; ++level) {
    for (std::size_t i = 0; i <= level && pulls < budget.max_candidates; ++i) {
      std::size_t j = level - i;
      if (j < i) break;
      const Element a = s.at(i);
      const Element b = s.at(j);
      ++pulls;
      if (comparable(d, a, b)) continue;
      auto m = lattice_meet(d, a, b);
      if (m) return Verdict::fails({a, b, *m}, "incomparable pair with a meet");
    }
  }
  return Verdict::unknown("budget-exhausted", budget);
}

namespace {

bool conjugation_identity(const Desc& d, const Element& a, const Element& b, const Element& w) {
  Element ca = add(d, add(d, neg(d, a), w), a);
  Element cb = add(d, add(d, neg(d, b), w), b);
  return ca == cb;
}

bool ncdp_valid(const Desc& d, const Element& a, const Element& b, const Element& w) {
  return is_strictly_positive(d, w) && leq(d, w, a) && leq(d, w, b) &&
         conjugation_identity(d, a, b, w);
}

} // namespace

Element ncdp_witness(const Desc& d, const Element& a, const Element& b, const SearchBudget& budget) {
  check_shape(d, a);
  check_shape(d, b);
  if (!is_strictly_positive(d, a) || !is_strictly_positive(d, b))
    fail(Err::NotApplicable, "ncdp witness needs strictly positive inputs");
  if (comparable(d, a, b)) fail(Err::NotApplicable, "inputs are comparable");

  try {
    switch (d->kind) {
      case Kind::Prod: {
        if (d->mode == ProdMode::Strict && supports_strict_between(d)) {
          Element w = strict_between(d, a, b);
          if (ncdp_valid(d, a, b, w)) return w;
          break;
        }
        auto m = lattice_meet(d, a, b);
        if (m && ncdp_valid(d, a, b, *m)) return *m;
        break;
      }
      case Kind::Lex: {
        const Desc& A = d->children[0];
        const Desc& G = d->children[1];
        const Element &a1 = a.tval()[0], &a2 = a.tval()[1];
        const Element &b1 = b.tval()[0], &b2 = b.tval()[1];
        if (a1 == b1) {
          if (is_strictly_positive(A, a1)) {
            // equal strictly positive firsts: (a1, d2) with d2 strictly
            // below both second components
            Element w = Element::of_tuple({a1, strict_lower_bound(G, a2, b2)});
            if (ncdp_valid(d, a, b, w)) return w;
          } else {
            // zero firsts: recurse into the second factor
            Element w = Element::of_tuple({a1, ncdp_witness(G, a2, b2, budget)});
            if (ncdp_valid(d, a, b, w)) return w;
          }
        } else if (!comparable(A, a1, b1)) {
          // incomparable positive firsts: (0, t) for any strictly positive t
          Element w = Element::of_tuple({zero(A), unit_positive(G)});
          if (ncdp_valid(d, a, b, w)) return w;
        }
        break;
      }
      default: break;
    }
  } catch (const Error&) {
    // analytic recipe unavailable here; fall through to the search
  }

  // bounded search in canonical order
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates; ++i) {
    const Element& w = s.at(static_cast<std::size_t>(i));
    if (ncdp_valid(d, a, b, w)) return w;
  }
  fail(Err::NotFound, "no ncdp witness within budget");
}

bool wrdp_conditions_hold(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                          const Element& v2, const Element& d1, const Element& d2) {
  if (!(leq(d, d1, u1) && leq(d, d1, v2) && leq(d, d2, u2) && leq(d, d2, v1))) return false;
  if (!(add(d, d1, d2) == add(d, d2, d1))) return false;
  return lsub(d, u1, v1) == lsub(d, d1, d2);
}

std::pair<Element, Element> wrdp_witnesses(const Desc& d, const Element& u1, const Element& u2,
                                           const Element& v1, const Element& v2,
                                           const SearchBudget& budget) {
  for (const Element* e : {&u1, &u2, &v1, &v2}) check_shape(d, *e);
  if (!(add(d, u1, u2) == add(d, v1, v2)))
    fail(Err::NotApplicable, "u1+u2 must equal v1+v2");
  if (!is_directed_analytic(d)) fail(Err::NotDirected, "carrier is not directed");

  if (is_abelian(d)) {
    Element d1 = directed_witness(d, u1, v2);
    Element d2 = add(d, sub(d, d1, u1), v1);
    if (!wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2))
      fail(Err::ConstructionFailed, "abelian witness construction invalid");
    return {d1, d2};
  }

  // analytic attempt for chains: least of u1, v2 plus the forced d2
  if (is_linear(d)) {
    Element d1 = min_of(d, u1, v2);
    Element d2 = add(d, d1, lsub(d, u1, v1));
    if (wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2)) return {d1, d2};
  }

  // bounded search: d1 ranges over the canonical stream, d2 is forced
  ElementStream s(d);
  for (std::int64_t i = 0; i < budget.max_candidates; ++i) {
    const Element& d1 = s.at(static_cast<std::size_t>(i));
    if (!(leq(d, d1, u1) && leq(d, d1, v2))) continue;
    Element d2 = add(d, d1, lsub(d, u1, v1));
    if (wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2)) return {d1, d2};
  }
  fail(Err::NotFoundWithinBudget, "no wRDP witnesses within budget");
}

bool p1p2_conditions_hold(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                          const Element& v2, const Element& k) {
  (void)v1;
  if (!is_positive(d, k)) return false;
  if (!leq(d, v2, add(d, u1, k))) return false;
  Element p = sub(d, u2, k);
  Element q = sub(d, v2, k);
  return add(d, p, q) == add(d, q, p);
}

Element p1p2_from_wrdp(const Desc& d, const Element& u1, const Element& u2, const Element& v1,
                       const Element& v2, const Element& d1, const Element& d2) {
  if (!wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2))
    fail(Err::InvalidWitness, "witness conditions fail");
  Element k = lsub(d, d1, v2);
  if (!p1p2_conditions_hold(d, u1, u2, v1, v2, k))
    fail(Err::InvalidWitness, "derived k fails (P1)-(P2)");
  return k;
}

std::pair<Element, Element> wrdp_from_p1p2(const Desc& d, const Element& u1, const Element& u2,
                                           const Element& v1, const Element& v2, const Element& k) {
  if (!p1p2_conditions_hold(d, u1, u2, v1, v2, k))
    fail(Err::InvalidWitness, "(P1)-(P2) fail for supplied k");
  Element d1 = sub(d, v2, k);
  Element d2 = sub(d, u2, k);
  if (!wrdp_conditions_hold(d, u1, u2, v1, v2, d1, d2))
    fail(Err::InvalidWitness, "derived witnesses fail conditions");
  return {d1, d2};
}

} // namespace pogroup

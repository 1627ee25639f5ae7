#include "pogroup/descriptor.hpp"

namespace pogroup {

const char* err_name(Err e) {
  switch (e) {
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::InvalidDescriptor: return "InvalidDescriptor";
    case Err::NotDirected: return "NotDirected";
    case Err::NotComDirected: return "NotComDirected";
    case Err::NotApplicable: return "NotApplicable";
    case Err::Unsupported: return "Unsupported";
    case Err::NotFound: return "NotFound";
    case Err::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case Err::InvalidWitness: return "InvalidWitness";
    case Err::SolverFailed: return "SolverFailed";
    case Err::NoRuleApplies: return "NoRuleApplies";
    case Err::ConstructionFailed: return "ConstructionFailed";
    case Err::DensityRequired: return "DensityRequired";
    case Err::AbelianRequired: return "AbelianRequired";
    case Err::NcdpWitnessUnavailable: return "NcdpWitnessUnavailable";
    case Err::WrdpWitnessUnavailable: return "WrdpWitnessUnavailable";
    case Err::UnknownCase: return "UnknownCase";
    case Err::Parse: return "ParseError";
    case Err::Usage: return "Usage";
  }
  return "Error";
}

Rat make_rat(long num, long den) {
  if (den == 0) fail(Err::InvalidDescriptor, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Desc desc_int() {
  static const Desc d = std::make_shared<GroupDescriptor>(GroupDescriptor{Kind::Int, ProdMode::Product, 0, {}, {}});
  return d;
}

Desc desc_rat() {
  static const Desc d = std::make_shared<GroupDescriptor>(GroupDescriptor{Kind::Rat, ProdMode::Product, 0, {}, {}});
  return d;
}

Desc desc_matrix() {
  static const Desc d = std::make_shared<GroupDescriptor>(GroupDescriptor{Kind::Matrix, ProdMode::Product, 0, {}, {}});
  return d;
}

Desc desc_free(int generators, std::vector<Rat> valuations) {
  if (generators < 1) fail(Err::InvalidDescriptor, "Free needs at least one generator");
  if (static_cast<int>(valuations.size()) != generators)
    fail(Err::InvalidDescriptor, "Free valuation count must match generator count");
  for (const Rat& v : valuations)
    if (!(v > 0)) fail(Err::InvalidDescriptor, "Free valuations must be strictly positive");
  auto d = std::make_shared<GroupDescriptor>();
  d->kind = Kind::Free;
  d->generators = generators;
  d->valuations = std::move(valuations);
  return d;
}

Desc desc_prod(std::vector<Desc> children, ProdMode mode) {
  if (children.size() < 2) fail(Err::InvalidDescriptor, "Prod needs at least two children");
  auto d = std::make_shared<GroupDescriptor>();
  d->kind = Kind::Prod;
  d->mode = mode;
  d->children = std::move(children);
  return d;
}

Desc desc_lex(Desc first, Desc second) {
  auto d = std::make_shared<GroupDescriptor>();
  d->kind = Kind::Lex;
  d->children = {std::move(first), std::move(second)};
  return d;
}

Desc desc_trivial(Desc child) {
  auto d = std::make_shared<GroupDescriptor>();
  d->kind = Kind::Trivial;
  d->children = {std::move(child)};
  return d;
}

bool desc_equal(const Desc& a, const Desc& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::Matrix: return true;
    case Kind::Free:
      return a->generators == b->generators && a->valuations == b->valuations;
    case Kind::Prod:
      if (a->mode != b->mode || a->children.size() != b->children.size()) return false;
      [[fallthrough]];
    case Kind::Lex:
    case Kind::Trivial: {
      if (a->children.size() != b->children.size()) return false;
      for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!desc_equal(a->children[i], b->children[i])) return false;
      return true;
    }
  }
  return false;
}

bool is_abelian(const Desc& d) {
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat: return true;
    case Kind::Matrix: return false;
    case Kind::Free: return d->generators <= 1;
    case Kind::Prod:
    case Kind::Lex:
    case Kind::Trivial:
      for (const Desc& c : d->children)
        if (!is_abelian(c)) return false;
      return true;
  }
  return false;
}

bool is_linear(const Desc& d) {
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::Matrix: return true;
    case Kind::Free: return d->generators == 1;
    case Kind::Prod: return false;
    case Kind::Lex: return is_linear(d->children[0]) && is_linear(d->children[1]);
    case Kind::Trivial: return false;
  }
  return false;
}

bool is_dense_linear(const Desc& d) {
  switch (d->kind) {
    case Kind::Rat:
    case Kind::Matrix: return true;
    case Kind::Lex:
      // Dense as soon as the second factor is dense; between distinct first
      // components any second component works.
      return is_linear(d) && is_dense_linear(d->children[1]);
    default: return false;
  }
}

bool supports_strict_lower_bound(const Desc& d) {
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::Matrix:
    case Kind::Free: return true;
    case Kind::Prod:
      for (const Desc& c : d->children)
        if (!supports_strict_lower_bound(c)) return false;
      return true;
    case Kind::Lex: return supports_strict_lower_bound(d->children[0]);
    case Kind::Trivial: return false;
  }
  return false;
}

bool supports_strict_between(const Desc& d) {
  switch (d->kind) {
    case Kind::Rat:
    case Kind::Matrix: return true;
    case Kind::Int:
    case Kind::Free:
    case Kind::Trivial: return false;
    case Kind::Prod:
      for (const Desc& c : d->children)
        if (!supports_strict_between(c)) return false;
      return true;
    case Kind::Lex:
      return supports_strict_between(d->children[0]) && supports_strict_between(d->children[1]);
  }
  return false;
}

bool is_directed_analytic(const Desc& d) {
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::Matrix:
    case Kind::Free: return true;
    case Kind::Prod:
      if (d->mode == ProdMode::Strict) {
        for (const Desc& c : d->children)
          if (!supports_strict_lower_bound(c)) return false;
        return true;
      }
      for (const Desc& c : d->children)
        if (!is_directed_analytic(c)) return false;
      return true;
    case Kind::Lex: return supports_strict_lower_bound(d->children[0]);
    case Kind::Trivial: return false;
  }
  return false;
}

bool is_com_directed_analytic(const Desc& d) {
  if (is_abelian(d)) return is_directed_analytic(d);
  switch (d->kind) {
    case Kind::Lex:
      // A central strict lower bound (c,0) exists in the first factor.
      return is_abelian(d->children[0]) && supports_strict_lower_bound(d->children[0]);
    case Kind::Prod:
      if (d->mode == ProdMode::Strict) return false;
      for (const Desc& c : d->children)
        if (!is_com_directed_analytic(c)) return false;
      return true;
    default: return false;
  }
}

bool interval_finitely_enumerable(const Desc& d) {
  switch (d->kind) {
    case Kind::Int: return true;
    case Kind::Trivial: return true;
    case Kind::Prod:
      if (d->mode == ProdMode::Strict) return false;
      for (const Desc& c : d->children)
        if (!interval_finitely_enumerable(c)) return false;
      return true;
    default: return false;
  }
}

} // namespace pogroup

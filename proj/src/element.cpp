#include "pogroup/element.hpp"

namespace pogroup {

Element Element::of_rat(Rat q) {
  q.canonicalize();
  return Element(Value(std::move(q)));
}

Element Element::of_mat(Mat m) {
  m.a.canonicalize();
  m.b.canonicalize();
  if (!(m.a > 0)) fail(Err::ShapeMismatch, "matrix element needs a > 0");
  return Element(Value(std::move(m)));
}

Element Element::of_word(Word w) { return Element(Value(reduce_word(w))); }

Word reduce_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (const Letter& l : w) {
    if (l.sign != 1 && l.sign != -1) fail(Err::ShapeMismatch, "letter sign must be +-1");
    if (!r.empty() && r.back().gen == l.gen && r.back().sign == -l.sign)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

void check_shape(const Desc& d, const Element& x) {
  switch (d->kind) {
    case Kind::Int:
      if (!x.holds_int()) fail(Err::ShapeMismatch, "expected integer");
      return;
    case Kind::Rat:
      if (!x.holds_rat()) fail(Err::ShapeMismatch, "expected rational");
      return;
    case Kind::Matrix:
      if (!x.holds_mat()) fail(Err::ShapeMismatch, "expected matrix pair");
      if (!(x.mval().a > 0)) fail(Err::ShapeMismatch, "matrix element needs a > 0");
      return;
    case Kind::Free: {
      if (!x.holds_word()) fail(Err::ShapeMismatch, "expected word");
      const Word& w = x.wval();
      if (reduce_word(w) != w) fail(Err::ShapeMismatch, "word not reduced");
      for (const Letter& l : w)
        if (l.gen < 1 || l.gen > d->generators)
          fail(Err::ShapeMismatch, "generator index out of range");
      return;
    }
    case Kind::Prod:
    case Kind::Lex: {
      if (!x.holds_tuple()) fail(Err::ShapeMismatch, "expected tuple");
      if (x.tval().size() != d->children.size())
        fail(Err::ShapeMismatch, "tuple arity mismatch");
      for (std::size_t i = 0; i < d->children.size(); ++i) check_shape(d->children[i], x.tval()[i]);
      return;
    }
    case Kind::Trivial: check_shape(d->children[0], x); return;
  }
}

Element zero(const Desc& d) {
  switch (d->kind) {
    case Kind::Int: return Element::of_int(0);
    case Kind::Rat: return Element::of_rat(Rat(0));
    case Kind::Matrix: return Element::of_mat(Mat{Rat(1), Rat(0)});
    case Kind::Free: return Element::of_word({});
    case Kind::Prod:
    case Kind::Lex: {
      Element::Tuple t;
      t.reserve(d->children.size());
      for (const Desc& c : d->children) t.push_back(zero(c));
      return Element::of_tuple(std::move(t));
    }
    case Kind::Trivial: return zero(d->children[0]);
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

Element add(const Desc& d, const Element& x, const Element& y) {
  switch (d->kind) {
    case Kind::Int: return Element::of_int(x.ival() + y.ival());
    case Kind::Rat: return Element::of_rat(x.qval() + y.qval());
    case Kind::Matrix: {
      const Mat& m = x.mval();
      const Mat& n = y.mval();
      return Element::of_mat(Mat{m.a * n.a, m.a * n.b + m.b});
    }
    case Kind::Free: {
      Word r = x.wval();
      for (const Letter& l : y.wval()) {
        if (!r.empty() && r.back().gen == l.gen && r.back().sign == -l.sign)
          r.pop_back();
        else
          r.push_back(l);
      }
      return Element::of_word(std::move(r));
    }
    case Kind::Prod:
    case Kind::Lex: {
      Element::Tuple t;
      t.reserve(d->children.size());
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(add(d->children[i], x.tval()[i], y.tval()[i]));
      return Element::of_tuple(std::move(t));
    }
    case Kind::Trivial: return add(d->children[0], x, y);
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

Element neg(const Desc& d, const Element& x) {
  switch (d->kind) {
    case Kind::Int: return Element::of_int(-x.ival());
    case Kind::Rat: return Element::of_rat(-x.qval());
    case Kind::Matrix: {
      const Mat& m = x.mval();
      return Element::of_mat(Mat{1 / m.a, -m.b / m.a});
    }
    case Kind::Free: {
      const Word& w = x.wval();
      Word r;
      r.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(Letter{it->gen, -it->sign});
      return Element::of_word(std::move(r));
    }
    case Kind::Prod:
    case Kind::Lex: {
      Element::Tuple t;
      t.reserve(d->children.size());
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(neg(d->children[i], x.tval()[i]));
      return Element::of_tuple(std::move(t));
    }
    case Kind::Trivial: return neg(d->children[0], x);
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

Element sub(const Desc& d, const Element& x, const Element& y) { return add(d, x, neg(d, y)); }
Element lsub(const Desc& d, const Element& x, const Element& y) { return add(d, neg(d, x), y); }

Rat valuation(const Desc& d, const Element& w) {
  if (d->kind != Kind::Free) fail(Err::ShapeMismatch, "valuation needs a Free carrier");
  check_shape(d, w);
  Rat v(0);
  for (const Letter& l : w.wval()) {
    if (l.sign > 0)
      v += d->valuations[static_cast<std::size_t>(l.gen - 1)];
    else
      v -= d->valuations[static_cast<std::size_t>(l.gen - 1)];
  }
  return v;
}

bool leq(const Desc& d, const Element& x, const Element& y) {
  switch (d->kind) {
    case Kind::Int: return x.ival() <= y.ival();
    case Kind::Rat: return x.qval() <= y.qval();
    case Kind::Matrix: {
      const Mat& m = x.mval();
      const Mat& n = y.mval();
      return m.a < n.a || (m.a == n.a && m.b <= n.b);
    }
    case Kind::Free: return x == y || valuation(d, x) < valuation(d, y);
    case Kind::Prod: {
      if (d->mode == ProdMode::Product) {
        for (std::size_t i = 0; i < d->children.size(); ++i)
          if (!leq(d->children[i], x.tval()[i], y.tval()[i])) return false;
        return true;
      }
      if (x == y) return true;
      for (std::size_t i = 0; i < d->children.size(); ++i)
        if (!lt(d->children[i], x.tval()[i], y.tval()[i])) return false;
      return true;
    }
    case Kind::Lex: {
      const Element& x1 = x.tval()[0];
      const Element& y1 = y.tval()[0];
      if (lt(d->children[0], x1, y1)) return true;
      return x1 == y1 && leq(d->children[1], x.tval()[1], y.tval()[1]);
    }
    case Kind::Trivial: return x == y;
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

bool lt(const Desc& d, const Element& x, const Element& y) { return !(x == y) && leq(d, x, y); }

bool comparable(const Desc& d, const Element& x, const Element& y) {
  return leq(d, x, y) || leq(d, y, x);
}

bool is_positive(const Desc& d, const Element& x) { return leq(d, zero(d), x); }

bool is_strictly_positive(const Desc& d, const Element& x) { return lt(d, zero(d), x); }

Element unit_positive(const Desc& d) {
  switch (d->kind) {
    case Kind::Int: return Element::of_int(1);
    case Kind::Rat: return Element::of_rat(Rat(1));
    case Kind::Matrix: return Element::of_mat(Mat{Rat(2), Rat(0)});
    case Kind::Free: return Element::of_word({Letter{1, 1}});
    case Kind::Prod: {
      Element::Tuple t;
      for (const Desc& c : d->children) t.push_back(unit_positive(c));
      return Element::of_tuple(std::move(t));
    }
    case Kind::Lex: return Element::of_tuple({unit_positive(d->children[0]), zero(d->children[1])});
    case Kind::Trivial: fail(Err::Unsupported, "trivially ordered carrier has no positive element");
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

std::optional<Element> lattice_meet(const Desc& d, const Element& x, const Element& y) {
  if (leq(d, x, y)) return x;
  if (leq(d, y, x)) return y;
  // x and y incomparable from here on
  switch (d->kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::Matrix: return std::nullopt; // linear: unreachable
    case Kind::Free: return std::nullopt;   // lower bounds have no greatest element
    case Kind::Prod: {
      if (d->mode == ProdMode::Strict) return std::nullopt;
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        auto m = lattice_meet(d->children[i], x.tval()[i], y.tval()[i]);
        if (!m) return std::nullopt;
        t.push_back(std::move(*m));
      }
      return Element::of_tuple(std::move(t));
    }
    case Kind::Lex: {
      const Element& x1 = x.tval()[0];
      const Element& y1 = y.tval()[0];
      if (!(x1 == y1)) return std::nullopt; // lower-bound chains unbounded in the second factor
      auto m = lattice_meet(d->children[1], x.tval()[1], y.tval()[1]);
      if (!m) return std::nullopt;
      return Element::of_tuple({x1, std::move(*m)});
    }
    case Kind::Trivial: return std::nullopt;
  }
  return std::nullopt;
}

} // namespace pogroup

#include "pogroup/parser.hpp"

#include <cctype>

namespace pogroup {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string found() {
    skip_ws();
    if (pos >= s.size()) return "end of input";
    return std::string("'") + s[pos] + "'";
  }
  [[noreturn]] void err(const std::string& expected) {
    skip_ws();
    throw ParseError(pos, expected, found());
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("'") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) err("a name");
    return std::string(s.substr(start, pos - start));
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) {
      pos = start;
      err("an integer");
    }
    return Int(std::string(s.substr(start, pos - start)));
  }
  Rat rational() {
    Int num = integer();
    if (eat('/')) {
      std::size_t dpos = pos;
      Int den = integer();
      if (den <= 0) throw ParseError(dpos, "a positive denominator", "nonpositive integer");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }
};

Desc parse_desc(Cursor& c) {
  c.skip_ws();
  std::size_t at = c.pos;
  std::string name = c.ident();
  if (name == "Z") return desc_int();
  if (name == "Q") return desc_rat();
  if (name == "Matrix") return desc_matrix();
  if (name == "Free") {
    c.expect('(');
    std::size_t npos = c.pos;
    Int k = c.integer();
    if (k < 1) throw ParseError(npos, "a positive generator count", k.get_str());
    if (k > 4096) throw ParseError(npos, "a generator count up to 4096", k.get_str());
    c.expect(';');
    std::vector<Rat> vals;
    vals.push_back(c.rational());
    for (Int i = 1; i < k; ++i) {
      c.expect(',');
      vals.push_back(c.rational());
    }
    for (const Rat& v : vals)
      if (!(v > 0)) c.err("strictly positive valuations");
    c.expect(')');
    return desc_free(static_cast<int>(k.get_si()), std::move(vals));
  }
  if (name == "Trivial") {
    c.expect('(');
    Desc child = parse_desc(c);
    c.expect(')');
    return desc_trivial(std::move(child));
  }
  if (name == "Prod" || name == "Strict") {
    c.expect('(');
    std::vector<Desc> children;
    children.push_back(parse_desc(c));
    c.expect(',');
    children.push_back(parse_desc(c));
    while (c.eat(',')) children.push_back(parse_desc(c));
    c.expect(')');
    return desc_prod(std::move(children),
                     name == "Strict" ? ProdMode::Strict : ProdMode::Product);
  }
  if (name == "Lex") {
    c.expect('(');
    Desc first = parse_desc(c);
    c.expect(',');
    Desc second = parse_desc(c);
    c.expect(')');
    return desc_lex(std::move(first), std::move(second));
  }
  throw ParseError(at, "one of Z, Q, Matrix, Free, Trivial, Prod, Strict, Lex", "'" + name + "'");
}

Element parse_elem(const Desc& d, Cursor& c);

Element parse_word(const Desc& d, Cursor& c) {
  if (c.eat('0')) return zero(d);
  Word w;
  bool any = false;
  for (;;) {
    c.skip_ws();
    std::size_t save = c.pos;
    int sign = 1;
    if (c.eat('-')) sign = -1;
    if (c.peek() != 'g') {
      c.pos = save;
      break;
    }
    c.expect('g');
    std::size_t gpos = c.pos;
    Int g = c.integer();
    if (g < 1 || g > d->generators)
      throw ParseError(gpos, "a generator index in 1.." + std::to_string(d->generators),
                       g.get_str());
    Int exp = 1;
    if (c.eat('^')) exp = c.integer();
    if (exp < 0) {
      sign = -sign;
      exp = -exp;
    }
    for (Int i = 0; i < exp; ++i) w.push_back(Letter{static_cast<int>(g.get_si()), sign});
    any = true;
  }
  if (!any) c.err("a word letter like g1 or -g2");
  return Element::of_word(std::move(w));
}

Element parse_elem(const Desc& d, Cursor& c) {
  switch (d->kind) {
    case Kind::Int: return Element::of_int(c.integer());
    case Kind::Rat: return Element::of_rat(c.rational());
    case Kind::Matrix: {
      if (c.peek() == '0') {
        c.expect('0');
        return zero(d);
      }
      if (c.peek() != 'M') c.err("'M' or '0'");
      c.ident();
      c.expect('(');
      Rat a = c.rational();
      c.expect(',');
      Rat b = c.rational();
      c.expect(')');
      if (!(a > 0)) c.err("a positive first matrix entry");
      return Element::of_mat(Mat{std::move(a), std::move(b)});
    }
    case Kind::Free: return parse_word(d, c);
    case Kind::Prod:
    case Kind::Lex: {
      if (c.peek() == '0') {
        c.expect('0');
        return zero(d);
      }
      c.expect('(');
      Element::Tuple t;
      t.push_back(parse_elem(d->children[0], c));
      for (std::size_t i = 1; i < d->children.size(); ++i) {
        c.expect(',');
        t.push_back(parse_elem(d->children[i], c));
      }
      c.expect(')');
      return Element::of_tuple(std::move(t));
    }
    case Kind::Trivial: return parse_elem(d->children[0], c);
  }
  c.err("an element");
}

} // namespace

Desc parse_descriptor(std::string_view text) {
  Cursor c{text};
  Desc d = parse_desc(c);
  if (!c.done()) c.err("end of input");
  return d;
}

Element parse_element(const Desc& d, std::string_view text) {
  Cursor c{text};
  Element e = parse_elem(d, c);
  if (!c.done()) c.err("end of input");
  check_shape(d, e);
  return e;
}

std::string print_descriptor(const Desc& d) {
  switch (d->kind) {
    case Kind::Int: return "Z";
    case Kind::Rat: return "Q";
    case Kind::Matrix: return "Matrix";
    case Kind::Free: {
      std::string s = "Free(" + std::to_string(d->generators) + "; ";
      for (std::size_t i = 0; i < d->valuations.size(); ++i) {
        if (i) s += ", ";
        s += d->valuations[i].get_str();
      }
      return s + ")";
    }
    case Kind::Prod: {
      std::string s = d->mode == ProdMode::Strict ? "Strict(" : "Prod(";
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        if (i) s += ", ";
        s += print_descriptor(d->children[i]);
      }
      return s + ")";
    }
    case Kind::Lex:
      return "Lex(" + print_descriptor(d->children[0]) + ", " +
             print_descriptor(d->children[1]) + ")";
    case Kind::Trivial: return "Trivial(" + print_descriptor(d->children[0]) + ")";
  }
  return "?";
}

std::string print_element(const Desc& d, const Element& e) {
  switch (d->kind) {
    case Kind::Int: return e.ival().get_str();
    case Kind::Rat: return e.qval().get_str();
    case Kind::Matrix:
      return "M(" + e.mval().a.get_str() + "," + e.mval().b.get_str() + ")";
    case Kind::Free: {
      const Word& w = e.wval();
      if (w.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        if (w[i].sign < 0) s += "-";
        s += "g" + std::to_string(w[i].gen);
      }
      return s;
    }
    case Kind::Prod:
    case Kind::Lex: {
      std::string s = "(";
      for (std::size_t i = 0; i < d->children.size(); ++i) {
        if (i) s += ", ";
        s += print_element(d->children[i], e.tval()[i]);
      }
      return s + ")";
    }
    case Kind::Trivial: return print_element(d->children[0], e);
  }
  return "?";
}

} // namespace pogroup

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pogroup/descriptor.hpp"

namespace pogroup {

/// One letter of a reduced word: generator index (1-based) and sign.
struct Letter {
  int gen;
  int sign; // +1 or -1
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Matrix carrier element (a,b), a > 0.
struct Mat {
  Rat a;
  Rat b;
  bool operator==(const Mat&) const = default;
};

/// Tagged value whose shape matches the owning descriptor. Words are stored
/// reduced, rationals normalized, so structural equality is group equality.
class Element {
public:
  using Tuple = std::vector<Element>;

  Element() : v_(Int(0)) {}
  static Element of_int(Int n) { return Element(Value(std::move(n))); }
  static Element of_rat(Rat q);
  static Element of_mat(Mat m);
  static Element of_word(Word w); // reduces
  static Element of_tuple(Tuple t) { return Element(Value(std::move(t))); }

  bool operator==(const Element&) const = default;

  bool holds_int() const { return std::holds_alternative<Int>(v_); }
  bool holds_rat() const { return std::holds_alternative<Rat>(v_); }
  bool holds_mat() const { return std::holds_alternative<Mat>(v_); }
  bool holds_word() const { return std::holds_alternative<Word>(v_); }
  bool holds_tuple() const { return std::holds_alternative<Tuple>(v_); }

  const Int& ival() const { return std::get<Int>(v_); }
  const Rat& qval() const { return std::get<Rat>(v_); }
  const Mat& mval() const { return std::get<Mat>(v_); }
  const Word& wval() const { return std::get<Word>(v_); }
  const Tuple& tval() const { return std::get<Tuple>(v_); }

private:
  using Value = std::variant<Int, Rat, Mat, Word, Tuple>;
  explicit Element(Value v) : v_(std::move(v)) {}
  Value v_;
};

/// Cancel adjacent inverse pairs until none remain.
Word reduce_word(const Word& w);

void check_shape(const Desc& d, const Element& x); // throws ShapeMismatch

Element zero(const Desc& d);
Element add(const Desc& d, const Element& x, const Element& y);
Element neg(const Desc& d, const Element& x);
/// x + (-y)
Element sub(const Desc& d, const Element& x, const Element& y);
/// (-x) + y
Element lsub(const Desc& d, const Element& x, const Element& y);

bool leq(const Desc& d, const Element& x, const Element& y);
bool lt(const Desc& d, const Element& x, const Element& y);
bool comparable(const Desc& d, const Element& x, const Element& y);
bool is_positive(const Desc& d, const Element& x);          // 0 <= x
bool is_strictly_positive(const Desc& d, const Element& x); // 0 < x

/// Valuation homomorphism of a Free carrier.
Rat valuation(const Desc& d, const Element& w);

/// Canonical strictly positive element; throws Unsupported when none exists.
Element unit_positive(const Desc& d);

/// Greatest lower bound where one provably exists; nullopt where the carrier
/// provably has none for this pair (incomparable in strict/lex/free/trivial
/// positions).
std::optional<Element> lattice_meet(const Desc& d, const Element& x, const Element& y);

} // namespace pogroup

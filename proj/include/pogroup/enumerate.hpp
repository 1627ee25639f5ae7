#pragma once

#include <memory>

#include "pogroup/element.hpp"

namespace pogroup {

/// Deterministic, exhaustive-in-the-limit stream of carrier elements in a
/// fixed canonical order, independent of budgets and thread count:
///  - Int: 0, 1, -1, 2, -2, ...
///  - Rat: 0, then +-q along the Calkin-Wilf sequence 1, 1/2, 2, 1/3, ...
///  - Matrix: (a,b) pairs diagonally over (positive rationals) x (rationals)
///  - Free: reduced words in length-then-lexicographic order
///    (letters ordered g1, -g1, g2, -g2, ...)
///  - Prod/Lex: tuples diagonally by total child index, then lexicographic
///  - Trivial: the child's stream
class ElementStream {
public:
  explicit ElementStream(Desc d);
  ~ElementStream();
  ElementStream(ElementStream&&) noexcept;
  ElementStream& operator=(ElementStream&&) noexcept;

  /// i-th element of the stream; prior elements are cached.
  const Element& at(std::size_t i);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Canonical order used by the word stream, exposed for tests.
bool word_stream_less(const Word& a, const Word& b);

} // namespace pogroup

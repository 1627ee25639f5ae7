#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "pogroup/errors.hpp"

namespace pogroup {

using Int = mpz_class;
using Rat = mpq_class;

/// Normalized rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

enum class Kind { Int, Rat, Matrix, Free, Prod, Lex, Trivial };
enum class ProdMode { Product, Strict };

struct GroupDescriptor;
using Desc = std::shared_ptr<const GroupDescriptor>;

/// Carrier description. A finite tree: leaves are the built-in groups, inner
/// nodes are the product/lexicographic/trivial-order combinators.
///
/// Orders per node:
///  - Int, Rat: the usual linear orders.
///  - Matrix: pairs (a,b), a > 0, with (a,b)+(c,d) = (a*c, a*d+b); positive
///    cone a > 1 or (a = 1 and b >= 0). Stands for the 2x2 matrices
///    [[a,b],[0,1]] under multiplication; linearly ordered.
///  - Free(k; v1..vk): free group on k generators, elements are reduced
///    words; x <= y iff x = y or v(x) < v(y) where v is the homomorphism
///    with v(g_i) = v_i > 0.
///  - Prod(product): componentwise order. Prod(strict): tuples comparable
///    only when equal or strictly dominated in every coordinate.
///  - Lex(A,G): first-strict-then-second order on A x G.
///  - Trivial(child): same group, order replaced by equality.
struct GroupDescriptor {
  Kind kind;
  ProdMode mode = ProdMode::Product; // Prod only
  int generators = 0;                // Free only
  std::vector<Rat> valuations;       // Free only, all > 0
  std::vector<Desc> children;        // Prod (>=2), Lex (2), Trivial (1)
};

Desc desc_int();
Desc desc_rat();
Desc desc_matrix();
Desc desc_free(int generators, std::vector<Rat> valuations);
Desc desc_prod(std::vector<Desc> children, ProdMode mode = ProdMode::Product);
Desc desc_lex(Desc first, Desc second);
Desc desc_trivial(Desc child);

bool desc_equal(const Desc& a, const Desc& b);

/// The group operation commutes.
bool is_abelian(const Desc& d);
/// The order is total.
bool is_linear(const Desc& d);
/// Total order with an element strictly between any two distinct ones.
bool is_dense_linear(const Desc& d);
/// strict_lower_bound is constructible for every pair.
bool supports_strict_lower_bound(const Desc& d);
/// strict_between is constructible (density of the relevant pieces).
bool supports_strict_between(const Desc& d);
/// directed_witness is constructible for every pair.
bool is_directed_analytic(const Desc& d);
/// com_directed_witness is constructible for every pair.
bool is_com_directed_analytic(const Desc& d);
/// Intervals [0,c] are finite and fully enumerable.
bool interval_finitely_enumerable(const Desc& d);

} // namespace pogroup

#pragma once

#include "pogroup/rdp_core.hpp"

namespace pogroup {

struct OracleResult {
  VerdictKind kind; // Found / NotFoundExhaustive / NotFoundWithinBudget
  std::optional<RdpTable> table;
  SearchBudget budget;
  std::int64_t tested = 0;
};

/// Brute-force table search: the c11 entry determines the rest, so scan
/// candidate c11 values. Over Int and product-mode products of Int the
/// candidate space [0, a1] ∩ [0, b1] is finite and fully enumerated
/// (NotFoundExhaustive is a proof); elsewhere candidates come from the
/// canonical element stream and exhaustion is only a bounded claim.
OracleResult brute_force_table(const Desc& d, const Equation& eq, const SearchBudget& budget);

/// Up to max_tables verified tables, in candidate order.
std::vector<RdpTable> brute_force_tables(const Desc& d, const Equation& eq,
                                         const SearchBudget& budget, std::size_t max_tables);

/// Every reduced word of length <= max_len over g1..gk, each exactly once,
/// in length-then-lexicographic order.
std::vector<Element> enumerate_reduced_words(int k, int max_len);

/// Count the stream above in closed form.
Int reduced_word_count(int k, int max_len);

struct WrdpKResult {
  VerdictKind kind; // Found / NotFoundWithinBudget
  std::optional<Element> k;
  SearchBudget budget;
  std::int64_t tested = 0;
};

/// Search k >= 0 with v2 <= u1+k and u2-k, v2-k commuting, over all reduced
/// words of length <= budget.max_word_len. With abelianized = true the same
/// candidates are evaluated in the exponent-vector image of the carrier
/// (componentwise sums, same valuation order).
WrdpKResult search_wrdp_k(const Desc& free_desc, const Element& u1, const Element& u2,
                          const Element& v1, const Element& v2, const SearchBudget& budget,
                          bool abelianized = false);

} // namespace pogroup

#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "ppfree/alphabet.hpp"
#include "ppfree/involution.hpp"

namespace ppfree {

/// Node and depth limits for dfs_search. Defaults are unlimited; settings
/// whose free language is infinite need at least one finite limit to
/// terminate.
struct SearchBudget {
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

struct SearchReport {
  std::uint64_t total_nodes = 0;  // every visited node, root included
  std::uint64_t leaf_nodes = 0;   // children containing a pseudo power
  std::size_t depth = 0;          // longest root-to-node word length
  /// All free words of maximal length seen, sorted lexicographically.
  std::vector<Word> longest_free_words;
  /// False when any free node was left unexpanded by the budget.
  bool exhausted = true;
};

/// Exhaustive prefix-tree search of the pseudo-k-th-power-free words over
/// the alphabet: the root is the empty word, every free node is expanded
/// with all |alphabet| children in letter order, and a child containing a
/// pseudo power is a counted, unexpanded leaf. Children are tested
/// incrementally (only suffixes of the extended word need checking).
///
/// jobs > 1 distributes subtrees over that many threads with a
/// deterministic merge; reports are identical to the sequential run. A
/// finite max_nodes forces the sequential path, since a shared node budget
/// would make the halt point depend on scheduling.
SearchReport dfs_search(const Alphabet& alphabet, const Involution& phi, int k,
                        SearchBudget budget = {}, unsigned jobs = 1);

/// For a 4-letter alphabet whose involution has exactly two transposition
/// orbits {a, phi(a)} and {b, phi(b)}: true iff consecutive letters of w
/// always come from different orbits and w is square-free. Equivalent to
/// pseudo-square-freeness in that setting. Throws BadSettingError for any
/// other shape.
bool check_alternation(const Word& w, const Involution& phi);

/// True when the prefix_len-letter prefix of the builtin morphism's fixed
/// point (seeded at its first letter) is free of pseudo k-th powers under
/// phi. Uses the linear test for k=2, the quadratic test for k=3, and the
/// bitmap route otherwise.
bool verify_free_prefix(std::string_view builtin_name, const Involution& phi, int k,
                        std::size_t prefix_len);

}  // namespace ppfree

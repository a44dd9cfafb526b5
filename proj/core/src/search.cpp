#include "ppfree/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "internal.hpp"
#include "ppfree/detect.hpp"
#include "ppfree/morphism.hpp"
#include "ppfree/periodicity.hpp"

namespace ppfree {

namespace {

struct Tally {
  std::uint64_t total_nodes = 0;
  std::uint64_t leaf_nodes = 0;
  std::size_t depth = 0;
  std::size_t best_len = 0;
  bool have_free = false;  // whether best_len/longest are meaningful yet
  std::vector<std::vector<Letter>> longest;
  bool exhausted = true;

  void see_free(const std::vector<Letter>& w) {
    if (!have_free || w.size() > best_len) {
      have_free = true;
      best_len = w.size();
      longest.assign(1, w);
    } else if (w.size() == best_len) {
      longest.push_back(w);
    }
  }

  void merge(Tally&& other) {
    total_nodes += other.total_nodes;
    leaf_nodes += other.leaf_nodes;
    depth = std::max(depth, other.depth);
    exhausted = exhausted && other.exhausted;
    if (!other.have_free) return;
    if (!have_free || other.best_len > best_len) {
      have_free = true;
      best_len = other.best_len;
      longest = std::move(other.longest);
    } else if (other.best_len == best_len) {
      longest.insert(longest.end(),
                     std::make_move_iterator(other.longest.begin()),
                     std::make_move_iterator(other.longest.end()));
    }
  }
};

struct DfsParams {
  std::size_t sigma = 0;
  std::span<const Letter> swap;
  int k = 2;
  SearchBudget budget;
};

// Depth-first expansion below an already-counted free word. Counts every
// generated child; free children recurse, violating children are leaves.
// Returns false when the node budget halted the walk.
bool dfs_below(const DfsParams& p, std::vector<Letter>& cur, Tally& t) {
  if (cur.size() >= p.budget.max_depth) {
    t.exhausted = false;  // free node left unexpanded
    return true;
  }
  for (std::size_t a = 0; a < p.sigma; ++a) {
    if (t.total_nodes >= p.budget.max_nodes) {
      t.exhausted = false;
      return false;
    }
    cur.push_back(static_cast<Letter>(a));
    ++t.total_nodes;
    t.depth = std::max(t.depth, cur.size());
    if (internal::suffix_pseudo_power(cur, p.swap, p.k)) {
      ++t.leaf_nodes;
    } else {
      t.see_free(cur);
      if (!dfs_below(p, cur, t)) {
        cur.pop_back();
        return false;
      }
    }
    cur.pop_back();
  }
  return true;
}

SearchReport finish(const Alphabet& alphabet, Tally&& t) {
  SearchReport report;
  report.total_nodes = t.total_nodes;
  report.leaf_nodes = t.leaf_nodes;
  report.depth = t.depth;
  report.exhausted = t.exhausted;
  std::sort(t.longest.begin(), t.longest.end());
  report.longest_free_words.reserve(t.longest.size());
  for (auto& letters : t.longest)
    report.longest_free_words.emplace_back(alphabet, std::move(letters));
  return report;
}

SearchReport search_parallel(const Alphabet& alphabet, const DfsParams& p,
                             unsigned jobs) {
  // Grow a frontier of free words breadth-first, counting exactly as the
  // sequential walk would, then hand each frontier word to a worker. All
  // quantities are tree-structural, so the merged report matches the
  // sequential one.
  Tally shared;
  shared.total_nodes = 1;
  std::vector<Letter> root;
  shared.see_free(root);

  std::vector<std::vector<Letter>> frontier{root};
  const std::size_t want = static_cast<std::size_t>(jobs) * 4;
  while (!frontier.empty() && frontier.size() < want) {
    std::vector<std::vector<Letter>> next;
    for (auto& node : frontier) {
      if (node.size() >= p.budget.max_depth) {
        shared.exhausted = false;
        continue;
      }
      for (std::size_t a = 0; a < p.sigma; ++a) {
        std::vector<Letter> child = node;
        child.push_back(static_cast<Letter>(a));
        ++shared.total_nodes;
        shared.depth = std::max(shared.depth, child.size());
        if (internal::suffix_pseudo_power(child, p.swap, p.k)) {
          ++shared.leaf_nodes;
        } else {
          shared.see_free(child);
          next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Tally> results(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= frontier.size()) return;
      std::vector<Letter> cur = frontier[idx];
      dfs_below(p, cur, results[idx]);
    }
  };
  std::vector<std::thread> pool;
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(
      jobs, std::max<std::size_t>(frontier.size(), 1)));
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (auto& r : results) shared.merge(std::move(r));
  return finish(alphabet, std::move(shared));
}

}  // namespace

SearchReport dfs_search(const Alphabet& alphabet, const Involution& phi, int k,
                        SearchBudget budget, unsigned jobs) {
  if (k < 2) throw BadExponentError("power exponent must be at least 2");
  if (!(alphabet == phi.alphabet()))
    throw AlphabetMismatchError("search alphabet and involution disagree");

  DfsParams p;
  p.sigma = alphabet.size();
  p.swap = phi.table();
  p.k = k;
  p.budget = budget;

  const bool node_limited =
      budget.max_nodes != std::numeric_limits<std::uint64_t>::max();
  if (jobs > 1 && !node_limited) return search_parallel(alphabet, p, jobs);

  Tally t;
  t.total_nodes = 1;  // the empty root, always free
  std::vector<Letter> cur;
  t.see_free(cur);
  dfs_below(p, cur, t);
  return finish(alphabet, std::move(t));
}

bool check_alternation(const Word& w, const Involution& phi) {
  if (!(w.alphabet() == phi.alphabet()))
    throw AlphabetMismatchError("word and involution use different alphabets");
  const auto cls = phi.classify();
  if (phi.alphabet().size() != 4 || cls.trn.size() != 2)
    throw BadSettingError(
        "alternation check needs a 4-letter alphabet with two transpositions");
  std::array<std::uint8_t, 4> orbit{};
  orbit[cls.trn[0]] = 0;
  orbit[phi.map(cls.trn[0])] = 0;
  orbit[cls.trn[1]] = 1;
  orbit[phi.map(cls.trn[1])] = 1;
  const auto letters = w.letters();
  for (std::size_t t = 0; t + 1 < letters.size(); ++t)
    if (orbit[letters[t]] == orbit[letters[t + 1]]) return false;
  return !has_square(w).has_value();
}

bool verify_free_prefix(std::string_view builtin_name, const Involution& phi, int k,
                        std::size_t prefix_len) {
  if (k < 2) throw BadExponentError("power exponent must be at least 2");
  if (prefix_len == 0) throw Error("prefix length must be positive");
  const Morphism h = builtin_morphism(builtin_name);
  if (!(h.alphabet() == phi.alphabet()))
    throw AlphabetMismatchError("involution alphabet differs from the morphism's");
  const Word w = fixed_point_prefix(h, 0, prefix_len).prefix(prefix_len);
  return !find_first(w, phi, k).has_value();
}

}  // namespace ppfree

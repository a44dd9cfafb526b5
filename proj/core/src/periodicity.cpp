#include "ppfree/periodicity.hpp"

#include <algorithm>
#include <map>

#include "internal.hpp"

namespace ppfree {

std::vector<std::uint32_t> compute_rmp(const Word& w) {
  return internal::rmp_from_ranges(w.size(), internal::square_ranges(w.letters()));
}

std::vector<std::uint32_t> compute_lmp(const Word& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  auto rmp = internal::rmp_from_ranges(rev.size(), internal::square_ranges(rev));
  std::reverse(rmp.begin(), rmp.end());
  return rmp;
}

std::vector<std::uint32_t> compute_cmp(const Word& w, const Involution& phi) {
  if (!(w.alphabet() == phi.alphabet()))
    throw AlphabetMismatchError("word and involution use different alphabets");
  return internal::phi_palindrome_radii(w.letters(), phi.table());
}

std::optional<SquareHit> has_square(const Word& w) {
  const auto rmp = compute_rmp(w);
  std::uint32_t best = period_infinity;
  std::size_t at = 0;
  for (std::size_t t = 0; t < rmp.size(); ++t) {
    if (rmp[t] < best) {
      best = rmp[t];
      at = t;
    }
  }
  if (best == period_infinity) return std::nullopt;
  return SquareHit{static_cast<std::uint32_t>(at + 1), best};
}

std::optional<CubeHit> has_cube(const Word& w) {
  auto ranges = internal::square_ranges(w.letters());
  std::sort(ranges.begin(), ranges.end(),
            [](const internal::SquareRange& a, const internal::SquareRange& b) {
              return a.period != b.period ? a.period < b.period : a.lo < b.lo;
            });
  // Per period: merge the start intervals, then intersect them with their
  // own copy shifted left by the period. Position s in the intersection
  // starts squares at s and s+p, i.e. a cube at s.
  std::size_t i = 0;
  while (i < ranges.size()) {
    const std::uint32_t p = ranges[i].period;
    std::vector<std::pair<long, long>> merged;
    for (; i < ranges.size() && ranges[i].period == p; ++i) {
      const long lo = ranges[i].lo, hi = ranges[i].hi;
      if (!merged.empty() && lo <= merged.back().second + 1)
        merged.back().second = std::max(merged.back().second, hi);
      else
        merged.emplace_back(lo, hi);
    }
    std::size_t a = 0, b = 0;
    while (a < merged.size() && b < merged.size()) {
      const long lo = std::max(merged[a].first, merged[b].first - p);
      const long hi = std::min(merged[a].second, merged[b].second - p);
      if (lo <= hi)
        return CubeHit{static_cast<std::uint32_t>(lo + 1), p};
      if (merged[a].second < merged[b].second - p)
        ++a;
      else
        ++b;
    }
  }
  return std::nullopt;
}

PeriodicityProfile compute_profile(const Word& w, const Involution& phi) {
  PeriodicityProfile p;
  p.word_len = w.size();
  p.rmp = compute_rmp(w);
  p.lmp = compute_lmp(w);
  p.cmp = compute_cmp(w, phi);
  return p;
}

}  // namespace ppfree

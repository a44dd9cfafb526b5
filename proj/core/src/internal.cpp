#include "internal.hpp"

#include <algorithm>
#include <numeric>

namespace ppfree::internal {

std::vector<std::uint32_t> z_function(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> z(n, 0);
  if (n == 0) return z;
  z[0] = static_cast<std::uint32_t>(n);
  std::size_t l = 0, r = 0;  // rightmost match window [l, r)
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min<std::size_t>(z[i - l], r - i);
    while (i + k < n && s[k] == s[i + k]) ++k;
    z[i] = static_cast<std::uint32_t>(k);
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
  return z;
}

namespace {

// Crossing squares of the window whose first copy ends at or before the
// split: for period p the relation w[x] == w[x+p] holds exactly on a
// contiguous interval around the anchor m-p, measured by a common-suffix
// extension to the left (z over the reversed left half) and an
// lcp-with-the-right-half extension to the right (z over right#window).
// A square of period p starting at s needs the relation on [s, s+p), plus
// s+p <= m (first copy inside the left half) and s+2p > m (crossing).
template <typename Emit>
void left_crossing(std::span<const Letter> w, std::size_t m, Emit&& emit) {
  const std::size_t n = w.size();
  if (m == 0 || n < 2) return;

  std::vector<Letter> ru(w.begin(), w.begin() + m);
  std::reverse(ru.begin(), ru.end());
  const auto z_ru = z_function(ru);

  std::vector<Letter> s;
  s.reserve(n - m + 1 + n);
  s.insert(s.end(), w.begin() + m, w.end());
  s.push_back(letter_sentinel);
  s.insert(s.end(), w.begin(), w.end());
  const auto z_s = z_function(s);
  const std::size_t base = (n - m) + 1;

  for (std::size_t p = 1; p <= m; ++p) {
    const long left = (p < m) ? static_cast<long>(z_ru[p]) : 0;
    const long right = static_cast<long>(z_s[base + (m - p)]);
    const long lm = static_cast<long>(m), lp = static_cast<long>(p);
    long lo = std::max({lm - lp - left, lm - 2 * lp + 1, 0L});
    long hi = std::min(lm - 2 * lp + right, lm - lp);
    if (lo <= hi)
      emit(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), p);
  }
}

void ranges_rec(std::span<const Letter> w, std::size_t lo, std::size_t hi,
                std::vector<SquareRange>& out) {
  const std::size_t n = hi - lo;
  if (n < 2) return;
  const std::size_t mid = n / 2;
  ranges_rec(w, lo, lo + mid, out);
  ranges_rec(w, lo + mid, hi, out);

  const auto window = w.subspan(lo, n);
  left_crossing(window, mid, [&](std::size_t a, std::size_t b, std::size_t p) {
    out.push_back({static_cast<std::uint32_t>(lo + a),
                   static_cast<std::uint32_t>(lo + b),
                   static_cast<std::uint32_t>(p)});
  });

  // Squares whose first copy sticks into the right half: the same scan on
  // the reversed window; a reversed start s' maps back to n - s' - 2p.
  std::vector<Letter> rev(window.begin(), window.end());
  std::reverse(rev.begin(), rev.end());
  left_crossing(rev, n - mid, [&](std::size_t a, std::size_t b, std::size_t p) {
    const std::size_t lo2 = n - b - 2 * p;
    const std::size_t hi2 = n - a - 2 * p;
    out.push_back({static_cast<std::uint32_t>(lo + lo2),
                   static_cast<std::uint32_t>(lo + hi2),
                   static_cast<std::uint32_t>(p)});
  });
}

}  // namespace

std::vector<SquareRange> square_ranges(std::span<const Letter> w) {
  std::vector<SquareRange> out;
  ranges_rec(w, 0, w.size(), out);
  return out;
}

std::vector<std::uint32_t> rmp_from_ranges(std::size_t n,
                                           std::vector<SquareRange> ranges) {
  std::vector<std::uint32_t> rmp(n, period_infinity);
  std::sort(ranges.begin(), ranges.end(),
            [](const SquareRange& a, const SquareRange& b) {
              return a.period < b.period;
            });
  // next[i]: leftmost unpainted position at or right of i (path halving)
  std::vector<std::uint32_t> next(n + 1);
  std::iota(next.begin(), next.end(), 0);
  auto hop = [&](std::uint32_t i) {
    while (next[i] != i) {
      next[i] = next[next[i]];
      i = next[i];
    }
    return i;
  };
  for (const auto& r : ranges) {
    for (std::uint32_t pos = hop(r.lo); pos <= r.hi; pos = hop(pos + 1)) {
      rmp[pos] = r.period;
      next[pos] = pos + 1;
    }
  }
  return rmp;
}

std::vector<std::uint32_t> phi_palindrome_radii(std::span<const Letter> w,
                                                std::span<const Letter> swap) {
  const long n = static_cast<long>(w.size());
  std::vector<std::uint32_t> d(n + 1, 0);
  long l = 0, r = -1;  // positions [l, r] covered by the rightmost match
  for (long g = 1; g < n; ++g) {
    long k = 0;
    if (g <= r) k = std::min<long>(d[l + r - g + 1], r - g + 1);
    while (g + k < n && g - k - 1 >= 0 && w[g + k] == swap[w[g - k - 1]]) ++k;
    d[g] = static_cast<std::uint32_t>(k);
    if (g + k - 1 > r) {
      l = g - k;
      r = g + k - 1;
    }
  }
  return d;
}

bool suffix_pseudo_power(std::span<const Letter> w, std::span<const Letter> swap,
                         int k) {
  const std::size_t len = w.size();
  const std::size_t kk = static_cast<std::size_t>(k);
  for (std::size_t y = 1; kk * y <= len; ++y) {
    const std::size_t base = len - kk * y;
    bool ok = true;
    for (std::size_t j = 1; j < kk && ok; ++j) {
      const std::size_t b = base + j * y;
      if (!block_eq(w, base, b, y) && !block_is_phi_image(w, base, b, y, swap))
        ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace ppfree::internal

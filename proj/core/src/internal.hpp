#pragma once

// Algorithm kernels shared by the library translation units. Everything
// here works on 0-based letter spans; the public entry points do the
// 1-based bookkeeping and alphabet checks.

#include <cstdint>
#include <span>
#include <vector>

#include "ppfree/alphabet.hpp"
#include "ppfree/periodicity.hpp"

namespace ppfree::internal {

// Letter value reserved as a separator in concatenated scratch strings;
// alphabets cap at 255 letters so real ids stop at 254.
inline constexpr Letter letter_sentinel = 0xff;

std::vector<std::uint32_t> z_function(std::span<const Letter> s);

// Inclusive range [lo, hi] of 0-based start positions of squares sharing
// one half length.
struct SquareRange {
  std::uint32_t lo;
  std::uint32_t hi;
  std::uint32_t period;
};

// Every square start in w is inside at least one emitted range (ranges may
// overlap and repeat). Divide and conquer, O(n log n) output.
std::vector<SquareRange> square_ranges(std::span<const Letter> w);

// Least square half length per 0-based start, period_infinity when none,
// painted from the ranges in ascending period order.
std::vector<std::uint32_t> rmp_from_ranges(std::size_t n,
                                           std::vector<SquareRange> ranges);

// Gap-indexed maximal radii (size n+1): entry g is the largest m with
// swap[w0[g-j]] == w0[g+j-1] for all j in 1..m (w0 0-based). Mirror-trick
// linear scan; valid because the relation is symmetric when swap is
// involutive.
std::vector<std::uint32_t> phi_palindrome_radii(std::span<const Letter> w,
                                                std::span<const Letter> swap);

inline bool block_eq(std::span<const Letter> w, std::size_t a, std::size_t b,
                     std::size_t len) {
  for (std::size_t t = 0; t < len; ++t)
    if (w[a + t] != w[b + t]) return false;
  return true;
}

// w[dst .. dst+len) equals phi of w[src .. src+len).
inline bool block_is_phi_image(std::span<const Letter> w, std::size_t src,
                               std::size_t dst, std::size_t len,
                               std::span<const Letter> swap) {
  for (std::size_t t = 0; t < len; ++t)
    if (w[dst + t] != swap[w[src + len - 1 - t]]) return false;
  return true;
}

// Some pseudo k-th power ends exactly at the last letter of w. k >= 2.
bool suffix_pseudo_power(std::span<const Letter> w, std::span<const Letter> swap,
                         int k);

}  // namespace ppfree::internal

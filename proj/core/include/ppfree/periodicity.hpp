#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ppfree/alphabet.hpp"
#include "ppfree/involution.hpp"

namespace ppfree {

/// Sentinel for "no such square": strictly larger than any valid half
/// length (at most N/2).
inline constexpr std::uint32_t period_infinity =
    std::numeric_limits<std::uint32_t>::max();

struct SquareHit {
  std::uint32_t start;     // 1-based position of the first letter
  std::uint32_t half_len;  // the square is w[start .. start+2*half_len-1]

  friend bool operator==(const SquareHit&, const SquareHit&) = default;
};

struct CubeHit {
  std::uint32_t start;      // 1-based
  std::uint32_t third_len;  // the cube is w[start .. start+3*third_len-1]

  friend bool operator==(const CubeHit&, const CubeHit&) = default;
};

/// Entry t (0-based) is the least half length of a square starting at
/// position t+1, or period_infinity. O(N log N).
std::vector<std::uint32_t> compute_rmp(const Word& w);

/// Entry t (0-based) is the least half length of a square ending at
/// position t+1, or period_infinity. Equals reverse(compute_rmp(reverse(w))).
std::vector<std::uint32_t> compute_lmp(const Word& w);

/// Gap-indexed maximal radii, one entry per gap 0..N (entry g is the gap
/// between positions g and g+1). Entry g is the largest m such that
/// phi(w[g-m+1 .. g]) = w[g+1 .. g+m]; letterwise that is
/// phi(w[g-j+1]) = w[g+j] for all j <= m. Entries 0 and N are 0. O(N).
std::vector<std::uint32_t> compute_cmp(const Word& w, const Involution& phi);

/// Some square occurrence, or nullopt for square-free words. The returned
/// occurrence is the one with the least half length (leftmost among ties).
std::optional<SquareHit> has_square(const Word& w);

/// Same for cubes: least third length, leftmost among ties.
std::optional<CubeHit> has_cube(const Word& w);

struct PeriodicityProfile {
  std::size_t word_len = 0;
  std::vector<std::uint32_t> rmp;
  std::vector<std::uint32_t> lmp;
  std::vector<std::uint32_t> cmp;
};

PeriodicityProfile compute_profile(const Word& w, const Involution& phi);

}  // namespace ppfree

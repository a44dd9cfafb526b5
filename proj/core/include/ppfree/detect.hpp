#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppfree/alphabet.hpp"
#include "ppfree/involution.hpp"

namespace ppfree {

/// How block j of a pseudo power relates to block 1.
enum class BlockTag : std::uint8_t { same, phi };

/// Occurrence of a pseudo k-th power w[start .. start+k*block_len-1]:
/// k consecutive blocks u_1..u_k of length block_len where every u_j is
/// u_1 itself (same) or phi(u_1) (phi). pattern has k entries and
/// pattern[0] is always same; when a block equals both u_1 and phi(u_1),
/// same wins.
struct PseudoPowerHit {
  std::uint32_t start = 0;  // 1-based
  std::uint32_t block_len = 0;
  std::uint32_t exponent = 0;
  std::vector<BlockTag> pattern;

  friend bool operator==(const PseudoPowerHit&, const PseudoPowerHit&) = default;
};

/// Doubling family of match tables. Level e answers, for 1-based i and j,
/// whether w[i .. i+2^e-1] equals w[j .. j+2^e-1] (equal) or equals
/// phi(w[j .. j+2^e-1]) (phi_match). Built in O(N^2 log N / 64) with
/// O(N^2 log N) bits; see matrix_word_cap for the practical size bound.
class MatchMatrix {
 public:
  MatchMatrix() = default;

  std::size_t word_len() const { return n_; }
  /// Number of levels, floor(lg N) + 1 (0 for the empty word).
  std::size_t levels() const { return levels_; }

  /// 1-based positions; false whenever a block of length 2^level would
  /// overrun the word.
  bool equal(std::size_t i, std::size_t j, std::size_t level) const {
    return i >= 1 && j >= 1 && equal0(i - 1, j - 1, level);
  }
  bool phi_match(std::size_t i, std::size_t j, std::size_t level) const {
    return i >= 1 && j >= 1 && phi_match0(i - 1, j - 1, level);
  }

  /// 0-based twins of the accessors above.
  bool equal0(std::size_t i, std::size_t j, std::size_t level) const;
  bool phi_match0(std::size_t i, std::size_t j, std::size_t level) const;

 private:
  friend MatchMatrix build_match_matrix(const Word&, const Involution&);

  std::size_t n_ = 0;
  std::size_t levels_ = 0;
  std::size_t words_per_row_ = 0;
  // bits_[level], row-major: row i holds bit j at word j/64, bit j%64
  std::vector<std::vector<std::uint64_t>> eq_;
  std::vector<std::vector<std::uint64_t>> phi_;
};

/// Memory grows as N^2 lg N bits, about 44 MB at this cap. The automatic
/// algorithm choice switches to the scan route past it; building a bigger
/// matrix explicitly still works if the memory is there.
inline constexpr std::size_t matrix_word_cap = 4096;

/// Start-position bitmap for pseudo squares of one half length: bits[t]
/// (0-based t, N-2*half_len+1 entries) says whether w[t+1 .. t+2*half_len]
/// is a pseudo square.
struct PseudoSquareBitmap {
  std::uint32_t half_len = 0;
  std::vector<std::uint8_t> bits;
};

/// Complete list of pseudo k-th power occurrences by direct block
/// comparison, sorted by (start, block_len). O(N^3 / k) worst case.
/// Throws BadExponentError for k < 2.
std::vector<PseudoPowerHit> naive_find(const Word& w, const Involution& phi, int k);

MatchMatrix build_match_matrix(const Word& w, const Involution& phi);

/// One bitmap per half length 1..N/2, derived from the match tables by
/// splitting each block into power-of-two chunks.
std::vector<PseudoSquareBitmap> build_bitmaps(const MatchMatrix& a, const Word& w,
                                              const Involution& phi);

/// Same bitmaps without the matrix, in O(N^2) time and O(N) working space
/// per half length: the equal side from per-shift match-run lengths, the
/// phi side from the gap radii of compute_cmp.
std::vector<PseudoSquareBitmap> scan_bitmaps(const Word& w, const Involution& phi);

/// Chains of k-1 consecutive set bits with stride half_len mark pseudo
/// k-th powers. Hit list equals naive_find's (start, block_len) for the
/// same input; patterns are rebuilt by k-1 block comparisons per hit.
std::vector<PseudoPowerHit> find_k_powers(const std::vector<PseudoSquareBitmap>& bitmaps,
                                          int k, const Word& w, const Involution& phi);

/// Linear-time pseudo-square test: w has a pseudo square iff it has a
/// square or two adjacent letters a, phi(a). Returns some occurrence or
/// nullopt when pseudo-square-free.
std::optional<PseudoPowerHit> is_pseudo_square_free(const Word& w, const Involution& phi);

/// Quadratic pseudo-cube test via the three periodicity vectors: cubes,
/// then phi(x)xx (rmp against the gap radius on the left), xxphi(x) (lmp
/// against the gap radius on the right), and x phi(x) x (two stacked gap
/// radii). Returns some occurrence or nullopt when pseudo-cube-free.
std::optional<PseudoPowerHit> is_pseudo_cube_free(const Word& w, const Involution& phi);

/// True iff |w| is divisible by k and all k blocks of length |w|/k have
/// identical letter counts. Throws BadExponentError for k < 2.
bool is_abelian_k_power(const Word& w, int k);

enum class Algorithm {
  automatic,  // linear for k=2, quadratic for k=3, else matrix/scan by size
  naive,
  matrix,
  linear,     // k = 2 only
  quadratic,  // k = 3 only
};

/// First hit of the selected algorithm, nullopt when w is free of pseudo
/// k-th powers. Enumerating algorithms report the least (start, block_len)
/// hit; the linear and quadratic tests report their own witness.
std::optional<PseudoPowerHit> find_first(const Word& w, const Involution& phi, int k,
                                         Algorithm algo = Algorithm::automatic);

/// Complete hit list; algo must be naive, matrix, or automatic (the
/// single-witness algorithms cannot enumerate and raise BadSettingError).
std::vector<PseudoPowerHit> find_all(const Word& w, const Involution& phi, int k,
                                     Algorithm algo = Algorithm::automatic);

}  // namespace ppfree

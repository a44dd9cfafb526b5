#include "ppfree/detect.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "internal.hpp"
#include "ppfree/periodicity.hpp"

namespace ppfree {

namespace {

void require_exponent(int k) {
  if (k < 2) throw BadExponentError("power exponent must be at least 2");
}

void require_same_alphabet(const Word& w, const Involution& phi) {
  if (!(w.alphabet() == phi.alphabet()))
    throw AlphabetMismatchError("word and involution use different alphabets");
}

// Block tags for a confirmed hit, by direct comparison. Blocks matching
// both u_1 and phi(u_1) are tagged same.
std::vector<BlockTag> rebuild_pattern(std::span<const Letter> w,
                                      std::span<const Letter> swap,
                                      std::size_t start0, std::size_t y, int k) {
  std::vector<BlockTag> pattern(static_cast<std::size_t>(k), BlockTag::same);
  for (std::size_t j = 1; j < static_cast<std::size_t>(k); ++j) {
    const std::size_t b = start0 + j * y;
    if (internal::block_eq(w, start0, b, y)) continue;
    assert(internal::block_is_phi_image(w, start0, b, y, swap));
    pattern[j] = BlockTag::phi;
  }
  return pattern;
}

}  // namespace

std::vector<PseudoPowerHit> naive_find(const Word& w, const Involution& phi, int k) {
  require_exponent(k);
  require_same_alphabet(w, phi);
  const auto letters = w.letters();
  const auto swap = phi.table();
  const std::size_t n = letters.size();
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<PseudoPowerHit> hits;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t y = 1; s + kk * y <= n; ++y) {
      std::vector<BlockTag> pattern(kk, BlockTag::same);
      bool ok = true;
      for (std::size_t j = 1; j < kk && ok; ++j) {
        const std::size_t b = s + j * y;
        if (internal::block_eq(letters, s, b, y)) continue;
        if (internal::block_is_phi_image(letters, s, b, y, swap))
          pattern[j] = BlockTag::phi;
        else
          ok = false;
      }
      if (ok)
        hits.push_back({static_cast<std::uint32_t>(s + 1),
                        static_cast<std::uint32_t>(y),
                        static_cast<std::uint32_t>(k), std::move(pattern)});
    }
  }
  return hits;
}

bool MatchMatrix::equal0(std::size_t i, std::size_t j, std::size_t level) const {
  if (level >= levels_) return false;
  const std::size_t span = std::size_t{1} << level;
  if (i + span > n_ || j + span > n_) return false;
  const auto& rows = eq_[level];
  return (rows[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
}

bool MatchMatrix::phi_match0(std::size_t i, std::size_t j, std::size_t level) const {
  if (level >= levels_) return false;
  const std::size_t span = std::size_t{1} << level;
  if (i + span > n_ || j + span > n_) return false;
  const auto& rows = phi_[level];
  return (rows[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
}

namespace {

// dst[j] = a[j] & b[j + shift] over whole packed rows.
void and_shifted(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                 std::size_t words, std::size_t shift) {
  const std::size_t ws = shift / 64, bs = shift % 64;
  for (std::size_t t = 0; t < words; ++t) {
    std::uint64_t lo = (t + ws < words) ? b[t + ws] : 0;
    if (bs) {
      const std::uint64_t hi = (t + ws + 1 < words) ? b[t + ws + 1] : 0;
      lo = (lo >> bs) | (hi << (64 - bs));
    }
    dst[t] = a[t] & lo;
  }
}

}  // namespace

MatchMatrix build_match_matrix(const Word& w, const Involution& phi) {
  require_same_alphabet(w, phi);
  MatchMatrix a;
  const auto letters = w.letters();
  const auto swap = phi.table();
  const std::size_t n = letters.size();
  a.n_ = n;
  if (n == 0) return a;
  a.levels_ = static_cast<std::size_t>(std::bit_width(n));
  const std::size_t wpr = (n + 63) / 64;
  a.words_per_row_ = wpr;
  a.eq_.resize(a.levels_);
  a.phi_.resize(a.levels_);

  // Level 0 rows come from per-letter position masks: row i of the equal
  // table is the mask of j with w[j] == w[i]; for the reversed table, of j
  // with swap[w[j]] == w[i].
  const std::size_t sigma = w.alphabet().size();
  std::vector<std::uint64_t> mask_eq(sigma * wpr, 0), mask_phi(sigma * wpr, 0);
  for (std::size_t j = 0; j < n; ++j) {
    mask_eq[letters[j] * wpr + j / 64] |= std::uint64_t{1} << (j % 64);
    mask_phi[swap[letters[j]] * wpr + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  a.eq_[0].resize(n * wpr);
  a.phi_[0].resize(n * wpr);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(mask_eq.begin() + letters[i] * wpr, wpr, a.eq_[0].begin() + i * wpr);
    std::copy_n(mask_phi.begin() + letters[i] * wpr, wpr, a.phi_[0].begin() + i * wpr);
  }

  // Doubling step. Equal blocks split into two same-orientation halves.
  // Reversed blocks swap halves: w[i..) matches the phi image of the
  // second half of w[j..), and w[i+h..) the phi image of the first half,
  // both at the previous level.
  for (std::size_t level = 1; level < a.levels_; ++level) {
    const std::size_t h = std::size_t{1} << (level - 1);
    const std::size_t span = std::size_t{1} << level;
    a.eq_[level].assign(n * wpr, 0);
    a.phi_[level].assign(n * wpr, 0);
    const auto& peq = a.eq_[level - 1];
    const auto& pph = a.phi_[level - 1];
    for (std::size_t i = 0; i + span <= n; ++i) {
      and_shifted(&peq[i * wpr], &peq[(i + h) * wpr], &a.eq_[level][i * wpr], wpr, h);
      and_shifted(&pph[(i + h) * wpr], &pph[i * wpr], &a.phi_[level][i * wpr], wpr, h);
    }
  }
  return a;
}

std::vector<PseudoSquareBitmap> build_bitmaps(const MatchMatrix& a, const Word& w,
                                              const Involution& phi) {
  require_same_alphabet(w, phi);
  if (a.word_len() != w.size())
    throw Error("match matrix was built for a different word length");
  const std::size_t n = w.size();
  std::vector<PseudoSquareBitmap> out;
  out.reserve(n / 2);
  // Chunk lengths: half_len split into descending powers of two.
  std::vector<std::pair<std::size_t, std::size_t>> chunks;  // (len, level)
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    chunks.clear();
    for (std::size_t bit = std::bit_width(half); bit-- > 0;)
      if (half & (std::size_t{1} << bit))
        chunks.emplace_back(std::size_t{1} << bit, bit);

    PseudoSquareBitmap bm;
    bm.half_len = static_cast<std::uint32_t>(half);
    bm.bits.assign(n - 2 * half + 1, 0);
    for (std::size_t t = 0; t < bm.bits.size(); ++t) {
      // Equal case: chunks of the two halves line up at offset +half.
      bool hit = true;
      std::size_t off = 0;
      for (const auto& [len, level] : chunks) {
        if (!a.equal0(t + off, t + half + off, level)) {
          hit = false;
          break;
        }
        off += len;
      }
      if (!hit) {
        // Reversed case: the chunk of the first half starting at offset
        // `off` maps to the chunk of the second half ending at offset
        // 2*half - off, so it starts at t + 2*half - off - len.
        hit = true;
        off = 0;
        for (const auto& [len, level] : chunks) {
          if (!a.phi_match0(t + off, t + 2 * half - off - len, level)) {
            hit = false;
            break;
          }
          off += len;
        }
      }
      bm.bits[t] = hit ? 1 : 0;
    }
    out.push_back(std::move(bm));
  }
  return out;
}

std::vector<PseudoSquareBitmap> scan_bitmaps(const Word& w, const Involution& phi) {
  require_same_alphabet(w, phi);
  const auto letters = w.letters();
  const auto swap = phi.table();
  const std::size_t n = letters.size();
  const auto radii = internal::phi_palindrome_radii(letters, swap);

  std::vector<PseudoSquareBitmap> out;
  out.reserve(n / 2);
  std::vector<std::uint32_t> run(n + 1);  // match-run lengths for one shift
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    // run[p] = largest r with w[p..p+r) == w[p+half..p+half+r)
    run[n - half] = 0;
    for (std::size_t p = n - half; p-- > 0;)
      run[p] = (letters[p] == letters[p + half]) ? run[p + 1] + 1 : 0;

    PseudoSquareBitmap bm;
    bm.half_len = static_cast<std::uint32_t>(half);
    bm.bits.assign(n - 2 * half + 1, 0);
    for (std::size_t t = 0; t < bm.bits.size(); ++t)
      bm.bits[t] = (run[t] >= half || radii[t + half] >= half) ? 1 : 0;
    out.push_back(std::move(bm));
  }
  return out;
}

std::vector<PseudoPowerHit> find_k_powers(const std::vector<PseudoSquareBitmap>& bitmaps,
                                          int k, const Word& w, const Involution& phi) {
  require_exponent(k);
  require_same_alphabet(w, phi);
  const auto letters = w.letters();
  const auto swap = phi.table();
  const std::size_t chain = static_cast<std::size_t>(k) - 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> found;  // (start0, half)
  for (const auto& bm : bitmaps) {
    const std::size_t y = bm.half_len;
    const std::size_t len = bm.bits.size();
    for (std::size_t r = 0; r < y && r < len; ++r) {
      std::size_t running = 0;
      for (std::size_t t = r; t < len; t += y) {
        running = bm.bits[t] ? running + 1 : 0;
        if (running >= chain)
          found.emplace_back(static_cast<std::uint32_t>(t - (chain - 1) * y),
                             static_cast<std::uint32_t>(y));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<PseudoPowerHit> hits;
  hits.reserve(found.size());
  for (auto [start0, y] : found)
    hits.push_back({start0 + 1, y, static_cast<std::uint32_t>(k),
                    rebuild_pattern(letters, swap, start0, y, k)});
  return hits;
}

std::optional<PseudoPowerHit> is_pseudo_square_free(const Word& w, const Involution& phi) {
  require_same_alphabet(w, phi);
  if (auto sq = has_square(w))
    return PseudoPowerHit{sq->start, sq->half_len, 2,
                          {BlockTag::same, BlockTag::same}};
  const auto letters = w.letters();
  const auto swap = phi.table();
  for (std::size_t t = 0; t + 1 < letters.size(); ++t)
    if (letters[t + 1] == swap[letters[t]])
      return PseudoPowerHit{static_cast<std::uint32_t>(t + 1), 1, 2,
                            {BlockTag::same, BlockTag::phi}};
  return std::nullopt;
}

std::optional<PseudoPowerHit> is_pseudo_cube_free(const Word& w, const Involution& phi) {
  require_same_alphabet(w, phi);
  if (auto cube = has_cube(w))
    return PseudoPowerHit{cube->start, cube->third_len, 3,
                          {BlockTag::same, BlockTag::same, BlockTag::same}};
  const auto rmp = compute_rmp(w);
  const auto lmp = compute_lmp(w);
  const auto cmp = compute_cmp(w, phi);
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i) {
    // phi(x) x x: a square starts at i and the gap before i carries a
    // radius covering its half.
    if (rmp[i - 1] != period_infinity && rmp[i - 1] <= cmp[i - 1]) {
      const std::uint32_t y = rmp[i - 1];
      return PseudoPowerHit{static_cast<std::uint32_t>(i - y), y, 3,
                            {BlockTag::same, BlockTag::phi, BlockTag::phi}};
    }
    // x x phi(x): a square ends at i and the gap after i covers its half.
    if (lmp[i - 1] != period_infinity && lmp[i - 1] <= cmp[i]) {
      const std::uint32_t y = lmp[i - 1];
      return PseudoPowerHit{static_cast<std::uint32_t>(i - 2 * y + 1), y, 3,
                            {BlockTag::same, BlockTag::same, BlockTag::phi}};
    }
    // x phi(x) x: radii at gaps i and i+d both reach d.
    for (std::uint32_t d = 1; d <= cmp[i]; ++d) {
      if (d <= cmp[i + d])
        return PseudoPowerHit{static_cast<std::uint32_t>(i - d + 1), d, 3,
                              {BlockTag::same, BlockTag::phi, BlockTag::same}};
    }
  }
  return std::nullopt;
}

bool is_abelian_k_power(const Word& w, int k) {
  require_exponent(k);
  const std::size_t kk = static_cast<std::size_t>(k);
  if (w.size() % kk != 0) return false;
  const std::size_t y = w.size() / kk;
  const auto letters = w.letters();
  std::vector<std::size_t> first(w.alphabet().size(), 0), block(w.alphabet().size());
  for (std::size_t t = 0; t < y; ++t) ++first[letters[t]];
  for (std::size_t j = 1; j < kk; ++j) {
    std::fill(block.begin(), block.end(), 0);
    for (std::size_t t = 0; t < y; ++t) ++block[letters[j * y + t]];
    if (block != first) return false;
  }
  return true;
}

namespace {

std::vector<PseudoPowerHit> bitmap_route(const Word& w, const Involution& phi, int k,
                                         bool force_matrix) {
  if (force_matrix || w.size() <= matrix_word_cap) {
    auto a = build_match_matrix(w, phi);
    return find_k_powers(build_bitmaps(a, w, phi), k, w, phi);
  }
  return find_k_powers(scan_bitmaps(w, phi), k, w, phi);
}

// Early-exit twin of naive_find for emptiness-style queries.
std::optional<PseudoPowerHit> naive_first(const Word& w, const Involution& phi, int k) {
  const auto letters = w.letters();
  const auto swap = phi.table();
  const std::size_t n = letters.size();
  const std::size_t kk = static_cast<std::size_t>(k);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t y = 1; s + kk * y <= n; ++y) {
      bool ok = true;
      for (std::size_t j = 1; j < kk && ok; ++j) {
        const std::size_t b = s + j * y;
        ok = internal::block_eq(letters, s, b, y) ||
             internal::block_is_phi_image(letters, s, b, y, swap);
      }
      if (ok)
        return PseudoPowerHit{static_cast<std::uint32_t>(s + 1),
                              static_cast<std::uint32_t>(y),
                              static_cast<std::uint32_t>(k),
                              rebuild_pattern(letters, swap, s, y, k)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PseudoPowerHit> find_first(const Word& w, const Involution& phi, int k,
                                         Algorithm algo) {
  require_exponent(k);
  require_same_alphabet(w, phi);
  switch (algo) {
    case Algorithm::naive:
      return naive_first(w, phi, k);
    case Algorithm::matrix: {
      auto hits = bitmap_route(w, phi, k, true);
      if (hits.empty()) return std::nullopt;
      return std::move(hits.front());
    }
    case Algorithm::linear:
      if (k != 2) throw BadExponentError("the linear test handles k = 2 only");
      return is_pseudo_square_free(w, phi);
    case Algorithm::quadratic:
      if (k != 3) throw BadExponentError("the quadratic test handles k = 3 only");
      return is_pseudo_cube_free(w, phi);
    case Algorithm::automatic:
      if (k == 2) return is_pseudo_square_free(w, phi);
      if (k == 3) return is_pseudo_cube_free(w, phi);
      {
        auto hits = bitmap_route(w, phi, k, false);
        if (hits.empty()) return std::nullopt;
        return std::move(hits.front());
      }
  }
  throw Error("unhandled algorithm");
}

std::vector<PseudoPowerHit> find_all(const Word& w, const Involution& phi, int k,
                                     Algorithm algo) {
  require_exponent(k);
  require_same_alphabet(w, phi);
  switch (algo) {
    case Algorithm::naive:
      return naive_find(w, phi, k);
    case Algorithm::matrix:
      return bitmap_route(w, phi, k, true);
    case Algorithm::automatic:
      return bitmap_route(w, phi, k, false);
    case Algorithm::linear:
    case Algorithm::quadratic:
      throw BadSettingError("enumeration needs the naive or matrix algorithm");
  }
  throw Error("unhandled algorithm");
}

}  // namespace ppfree

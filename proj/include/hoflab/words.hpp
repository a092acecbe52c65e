#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoflab/common.hpp"
#include "hoflab/recurrences.hpp"

namespace hoflab {

/// A letter of the alphabet {1, ..., k}.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Largest k for which words can be materialised.
inline constexpr unsigned max_word_k = 65535;

/// Image of w under tau_k: k -> k1, i -> i+1 (i < k).
/// Throws std::invalid_argument on letters outside 1..k.
Word substitute(unsigned k, std::span<const Letter> w);

/// tau_k^j(k), built with tau_k^j(k) = tau_k^{j-1}(k) tau_k^{j-k}(k) once j >= k.
/// Throws std::length_error if the word would exceed the memory cap.
Word substitute_pow_k(unsigned k, Nat j);

/// S[j] = L_k^j(1) = |tau_k^j(k)| for 0 <= j <= j_max:
/// S[j] = j + 1 up to j = k, then S[j] = S[j-1] + S[j-k].
class BlockLengthTable {
 public:
  /// Throws std::overflow_error if some S[j] reaches 2^63.
  BlockLengthTable(unsigned k, Nat j_max);

  unsigned k() const noexcept { return k_; }
  Nat j_max() const noexcept { return static_cast<Nat>(lengths_.size()) - 1; }
  Nat operator[](Nat j) const { return lengths_.at(j); }

  /// |tau_k^j(i)|: 1 while i + j < k, else S[i + j - k] (tau_k^{k-i}(i) = k).
  Nat image_length(Letter i, Nat j) const;

  std::span<const Nat> lengths() const noexcept { return lengths_; }

 private:
  unsigned k_;
  std::vector<Nat> lengths_;
};

/// Lazy generator of the fixed point x_k.
///
/// x_k is also the fixed point of tau_k^{k-1}, and tau_k^{k-1}(i) = k 1 2 ... (i-1),
/// so x_k is a run of blocks whose lengths are the letters of x_k itself.
/// Each level of the generator walks one block and pulls the next block
/// length from a lagging copy of itself one level down. Level d sits near
/// position n / beta_k^{(k-1)d}, so the state is O(log n) levels of two
/// small integers and each letter costs amortised O(1).
///
/// Copyable: a copy resumes from the same position, which is what
/// checkpointed count tables rely on.
class WordStream {
 public:
  explicit WordStream(unsigned k);

  unsigned k() const noexcept { return k_; }

  /// Position of the next letter to be emitted.
  Nat position() const noexcept { return position_; }

  /// Returns x_k[position()] and advances.
  /// Throws std::length_error if the level stack would exceed the memory cap.
  Letter next();

  /// Skips `count` letters.
  void advance(Nat count);

  std::size_t depth() const noexcept { return levels_.size(); }

 private:
  struct Level {
    Letter block = 0;   // letter whose block is being emitted
    Letter offset = 0;  // letters of the block already emitted
    bool started = false;
  };

  Letter next_at(std::size_t level);

  unsigned k_;
  Nat position_ = 0;
  std::vector<Level> levels_;
};

Letter stream_next(WordStream& stream);

/// x_k[0:n).
Word prefix(unsigned k, Nat n);

/// x_k[n] read off the differences of F_k iterates: the least j < k with
/// dF^{j-1}(n) = 1 and dF^j(n) = 0, or k when there is none.
/// Needs n + 1 <= table.n_max().
Letter letter_at_via_delta(const FTable& table, Nat n);

/// L_k^j(n) = |tau_k^j(x_k[0:n))|. n = 1 is read from the block lengths;
/// otherwise n letters are streamed.
Nat l_iter(unsigned k, Nat j, Nat n);

/// L_k^j(0..n_max) for one (k, j), from a prefix of x_k of length >= n_max.
std::vector<Nat> l_values(std::span<const Letter> word, const BlockLengthTable& blocks, Nat j,
                          Nat n_max);

/// Text rendering: letters 1..9 as digits, larger letters as "[12]".
std::string format_word(std::span<const Letter> w);

/// Inverse of format_word. Throws std::invalid_argument on malformed text.
Word parse_word(std::string_view text);

}  // namespace hoflab

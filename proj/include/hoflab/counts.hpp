#pragma once

#include <vector>

#include "hoflab/common.hpp"
#include "hoflab/recurrences.hpp"
#include "hoflab/words.hpp"

namespace hoflab {

/// Exact fraction num/den.
struct Rational {
  Nat num = 0;
  Nat den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class CountStorage {
  automatic,   // dense up to dense_count_limit(), checkpointed beyond
  dense,       // every prefix length stored
  checkpoint,  // running totals every 2^16 letters plus a resumable stream
};

/// Largest n_max stored densely in automatic mode.
inline constexpr Nat dense_count_limit = 1'000'000;

/// Prefix letter counts C_k^{(=i)}(n) for 0 <= n <= n_max and every letter.
///
/// Dense storage keeps one cumulative array per letter. Checkpoint storage
/// keeps the per-letter totals and a copy of the word stream every 2^16
/// positions and answers a point query by resuming from the nearest
/// checkpoint.
class CountTable {
 public:
  static constexpr Nat checkpoint_stride = Nat{1} << 16;

  CountTable(unsigned k, Nat n_max, CountStorage storage = CountStorage::automatic);

  unsigned k() const noexcept { return k_; }
  Nat n_max() const noexcept { return n_max_; }
  bool dense() const noexcept { return !cum_.empty(); }

  /// C_k^{(=i)}(n). Letters above k never occur, so they count 0.
  /// Throws std::invalid_argument for i = 0 and std::out_of_range past n_max.
  Nat count(unsigned i, Nat n) const;

  /// C_k^{(>j)}(n) for 0 <= j <= k.
  Nat count_gt(unsigned j, Nat n) const;

  /// All counts at n, index 0 unused.
  std::vector<Nat> counts_at(Nat n) const;

 private:
  struct Checkpoint {
    WordStream stream;
    std::vector<Nat> totals;  // index 1..k
  };

  void check_position(Nat n) const;

  unsigned k_;
  Nat n_max_;
  std::vector<std::vector<Nat>> cum_;  // cum_[i][n], i in 1..k
  std::vector<Checkpoint> checkpoints_;
};

CountTable build_count_table(unsigned k, Nat n_max, CountStorage storage = CountStorage::automatic);

Nat count_gt(const CountTable& table, unsigned j, Nat n);

/// U_k(n) = n - F_k^{k-1}(n-1): the number of values below n with exactly
/// one F_k-preimage. Needs 1 <= n <= n_max + 1.
Nat unique_antecedents(const FTable& table, Nat n);

/// C_k^{(=i)}(n) / n, unreduced. Throws std::invalid_argument for n = 0.
Rational freq_estimate(const CountTable& table, unsigned i, Nat n);

}  // namespace hoflab

#pragma once

#include <span>
#include <vector>

#include "hoflab/common.hpp"

namespace hoflab {

/// Values F_k(0..n_max) of the nested recurrence
///   F_k(0) = 0,  F_k(n) = n - F_k^k(n-1),
/// where F_k^k is the k-fold functional iterate. Immutable once built, so a
/// table can be shared between sweep workers.
class FTable {
 public:
  /// Bottom-up fill; the k-fold iterate at n-1 only reads indices < n.
  /// Throws std::invalid_argument for k == 0 and std::length_error when the
  /// table would exceed the memory cap.
  FTable(unsigned k, Nat n_max);

  unsigned k() const noexcept { return k_; }
  Nat n_max() const noexcept { return static_cast<Nat>(values_.size()) - 1; }

  /// Unchecked F_k(n).
  Nat operator[](Nat n) const noexcept { return values_[n]; }

  /// Checked F_k(n); throws std::out_of_range past n_max.
  Nat at(Nat n) const;

  /// F_k^j(n) by repeated lookup. 0 and 1 are fixed points, so large j
  /// costs at most O(n) lookups.
  Nat iterate(Nat j, Nat n) const;

  /// F_k^j(n+1) - F_k^j(n), always 0 or 1.
  unsigned delta(Nat j, Nat n) const;

  std::span<const Nat> values() const noexcept { return values_; }

 private:
  unsigned k_;
  std::vector<Nat> values_;
};

FTable build_f_table(unsigned k, Nat n_max);

Nat f_iter(const FTable& table, Nat j, Nat n);

unsigned delta_f(const FTable& table, Nat j, Nat n);

/// Closed forms for the two families that have one:
///   k = 1: ceil(n/2)
///   k = 2: floor((n+1)/phi), decided exactly with integer arithmetic.
/// Throws std::invalid_argument for other k.
Nat f_closed_form(unsigned k, Nat n);

}  // namespace hoflab

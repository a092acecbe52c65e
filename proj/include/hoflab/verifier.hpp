#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoflab/common.hpp"

namespace hoflab {

/// Every relation a sweep can assert. The names describe the pointwise
/// statement; Counterexample carries the point it failed at.
enum class Relation {
  table_recurrence,    // F_k(n) = n - F_k^k(n-1)
  iterate_lower,       // F_k^j(n) >= 1 for n >= 1
  iterate_below,       // F_k^j(n) < n for n >= 2, j >= 1
  iterate_small,       // F_k^j(1) = F_k^j(2) = 1 for j >= 1
  delta_recurrence,    // dF_k(n) = 1 - dF_k^k(n-1) for n >= 1
  delta_vanishes,      // dF_k^n(n) = 0 for n >= 1
  delta_binary,        // dF_k^j(n) in {0, 1}
  closed_form,         // F_k(n) equals its closed form (k = 1, 2)
  l_increasing,        // L_k^j(n+1) > L_k^j(n)
  l_above_identity,    // L_k^j(n) >= n, equality iff j = 0 or n = 0
  l_increasing_in_j,   // L_k^{j+1}(1) > L_k^j(1)
  substituted_prefix,  // tau_k(x_k[0:n)) = x_k[0:L_k(n)), letter at position n
  theorem1_lower,      // L_k^j(F_k^j(n) - 1) < n
  theorem1_upper,      // n <= L_k^j(F_k^j(n))
  preimage_start,      // F_k^j(L_k^j(n-1) + 1) = n
  galois_insertion,    // F_k^j(L_k^j(n)) = n
  lower_adjoint,       // F_k^j(n) = min { m : L_k^j(m) >= n }
  galois_pair,         // F_k^j(n) <= m  <=>  n <= L_k^j(m), with m = aux
  l_of_f,              // L_k(F_k(n)) = n + 1 - dF_k(n)
  l_ge,                // L_k^j(n) >= L_k2^j2(n)
  l_lt,                // L_k^j(n) < L_k2^j2(n)
  l_le,                // L_k^j(n) <= L_k2^j2(n)
  l_eq,                // L_k^j(n) = L_k2^j2(n)
  l_gt,                // L_k^j(n) > L_k2^j2(n)
  kk1_identity,        // L_{k+1}^{k+1}(n) - L_k^k(n) = L_{k+1}^k(n) - L_k^{k-1}(n)
  f_le,                // F_k^j(n) <= F_k2^j2(n)
  f_ge,                // F_k^j(n) >= F_k2^j2(n)
  f_eq,                // F_k^j(n) = F_k2^j2(n)
  f_ne,                // F_k^j(n) != F_k2^j2(n)
  f_lt,                // F_k^j(n) < F_k2^j2(n)
  f_gt,                // F_k^j(n) > F_k2^j2(n)
  f_lt_next,           // F_k^j(n) < F_k2^j2(n+1)
  lkj1_formula,        // L_{k+1}^{j+1}(1) - L_k^j(1) matches its closed form
  lkj1_negative,       // L_{k+1}^{j+1}(1) - L_k^j(1) < 0
  count_top,           // F_k^{k-1}(n) = C_k^{(=k)}(n)
  count_above,         // F_k^j(n) = C_k^{(>j)}(n)
  count_shifted,       // F_k^{k+i-1}(n) = C_k^{(=i)}(n+i), i = j
  count_step,          // F_k^{j-1}(n) - F_k^j(n) = C_k^{(=j)}(n)
  l_counts_top,        // L_k(n) = n + C_k^{(=k)}(n)
  count_ones,          // F_k(n) = n - C_k^{(=1)}(n)
  ones_mark_flat,      // dF_k(n) = 0  <=>  x_k[n] = 1
  letter_agreement,    // streamed x_k[n] = letter read off dF_k^j(n)
  letter_delta,        // x_k[n] = j  <=>  dF^{j-1}(n) = 1 and dF^j(n) = 0
  no_double_zero,      // dF_k(n) + dF_k(n+1) >= 1
  no_long_run,         // dF_k(n) + ... + dF_k(n+k) <= k
  count_partition,     // sum_i C_k^{(=i)}(n) = n
  count_ge,            // C_k^{(=j)}(n) >= C_k2^{(=j2)}(n)
  count_gt,            // C_k^{(=j)}(n) > C_k2^{(=j2)}(n)
  duality_a,           // L_k^j(n) <= L'(n)  <=>  F'(m) <= F_k^j(m), m = L_k^j(n)
  duality_b,           // L_k^j(n) < L'(n)   <=>  F'(m) < F_k^j(m),  m = L'(n)
  duality_c,           // L_k^j(m) <= L'(m), m = F_k^j(n)  =>  F'(n) <= F_k^j(n)
  duality_d,           // F_k^j(n) < F'(n)  =>  L'(m) < L_k^j(m), m = F_k^j(n)
  slope_condition,     // a sufficient condition on alpha_k implies its conclusion
  limit_slope,         // |F_k(n)/n - alpha_k| <= tolerance
  limit_improves,      // deviation of F_k(n)/n at n is below the one at aux
  limit_frequency,     // |C_k^{(=j)}(n)/n - freq_k(j)| <= tolerance
  limit_unique,        // |U_k(n)/n - (2 - beta_k)| <= tolerance
};

std::string_view relation_name(Relation r);

/// A point at which a relation failed. Fields unused by a relation stay 0.
struct Counterexample {
  Relation relation = Relation::f_le;
  unsigned k = 1;
  Nat j = 0;
  Nat n = 0;
  unsigned k2 = 0;
  Nat j2 = 0;
  Nat aux = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct Evaluation {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

/// Re-evaluates the relation at the recorded point from scratch: fresh
/// F tables sized to the point, streamed words, freshly bisected roots.
Evaluation evaluate_directly(const Counterexample& point);

/// True when direct evaluation also fails, with the recorded sides.
bool reproduces(const Counterexample& point);

enum class CheckStatus { pass, fail, exhausted };

std::string_view to_string(CheckStatus s);

struct CheckReport {
  std::string check_name;
  CheckStatus status = CheckStatus::pass;
  std::string ranges;
  /// Conjecture scans never claim more than "no counterexample in range".
  bool conjecture = false;
  std::optional<Counterexample> first_counterexample;
  std::vector<std::string> notes;
  Nat comparisons = 0;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return status == CheckStatus::pass; }
};

/// j ranges are linear in k: j <= per_k * k + offset.
struct JRule {
  Nat per_k = 3;
  Nat offset = 2;

  Nat operator()(unsigned k) const { return per_k * k + offset; }
  std::string label() const;
};

struct SweepConfig {
  unsigned k_min = 1;
  unsigned k_max = 8;
  JRule j_max_rule{};
  Nat n_max = 100'000;
  unsigned parallel_width = 1;

  /// Throws std::invalid_argument on empty ranges.
  void validate() const;
};

// -- theorem and identity sweeps -------------------------------------------

/// Table invariants, basic properties of F_k^j and L_k^j, closed forms and
/// the substituted-prefix property.
CheckReport check_basic(const SweepConfig& cfg);

/// L_k^j(F_k^j(m) - 1) < m <= L_k^j(F_k^j(m)) and the preimage-interval form.
CheckReport check_theorem1(const SweepConfig& cfg);

/// F_k^j(n) <= m <=> n <= L_k^j(m) (exactly, via the lower adjoint), the
/// insertion F_k^j(L_k^j(n)) = n and L_k(F_k(n)) in {n, n+1}.
CheckReport check_galois(const SweepConfig& cfg);

/// L_k >= L_{k+1}, L_k^j < L_{k+1}^{j+1} for j <= k, L_k^j >= L_{k+1}^j and
/// the kk1 identity.
CheckReport check_monotone_L(const SweepConfig& cfg);

/// F_k^j <= F_{k+1}^j and F_k^j >= F_{k+1}^{j+1} for j <= k.
CheckReport check_theorem2(const SweepConfig& cfg);

/// Closed form of L_{k+1}^{j+1}(1) - L_k^j(1) for j <= 3k, negativity for
/// 2k+2 <= j <= negative_factor * k.
CheckReport check_lemma_Lkj1(unsigned k_max, Nat negative_factor = 5);

/// Pointwise order duality between F and L iterates (items a-d).
CheckReport check_duality(const SweepConfig& cfg);

/// Letter-count identities and their F counterparts, letters read off
/// differences, and the proved count monotonicities.
CheckReport check_counts_and_letters(const SweepConfig& cfg);

/// Streamed x_k against letters recovered from F_k differences and against
/// tau_k^j(k) prefixes.
CheckReport check_cross_generation(const SweepConfig& cfg);

// -- incomparability -------------------------------------------------------

struct IncomparabilityWitness {
  unsigned k = 1;
  Nat j = 0;
  // L_k^j(n_j) > L_{k+1}^{j+1}(n_j)
  Nat n_j = 0;
  Nat l_k = 0;
  Nat l_k1 = 0;
  // F_k^j(m) < F_{k+1}^{j+1}(m) at m = L_k^j(n_j)
  Nat f_point = 0;
  Nat f_k = 0;
  Nat f_k1 = 0;
  // Only for k+2 <= j <= 2k: L_k^j(1) < L_{k+1}^{j+1}(1), and
  // F_k^j(m) > F_{k+1}^{j+1}(m) at m = L_{k+1}^{j+1}(1).
  struct Reverse {
    Nat l_k = 0;
    Nat l_k1 = 0;
    Nat f_point = 0;
    Nat f_k = 0;
    Nat f_k1 = 0;
  };
  std::optional<Reverse> reverse;
  bool verified = false;
};

/// Needs j >= k + 2.
IncomparabilityWitness find_incomparability_witnesses(unsigned k, Nat j);

struct LetterCountWitness {
  unsigned k = 1;
  unsigned letter = 1;
  Nat n_less = 0;  // C_k^{(=i)}(n) < C_{k+1}^{(=i)}(n)
  Nat less_k = 0;
  Nat less_k1 = 0;
  Nat n_greater = 0;  // C_k^{(=i)}(n) > C_{k+1}^{(=i)}(n)
  Nat greater_k = 0;
  Nat greater_k1 = 0;
  bool verified = false;
};

/// Needs 3 <= i < k.
LetterCountWitness find_letter_count_witnesses(unsigned k, unsigned i);

/// Lemma witnesses for k in range, k+2 <= j <= j_max_rule(k), letter-count
/// witnesses, and the explicit incomparable values.
CheckReport check_witnesses(const SweepConfig& cfg);

// -- conjectures and infinitary statements ---------------------------------

/// N_k = (k+1)(k+6)/2.
Nat conjectured_threshold(unsigned k);

/// F_k(N_k) = F_{k+1}(N_k) and L_{k+1}(N_k) = L_{k+2}(N_k) exactly; then no
/// F_k(n) = F_{k+1}(n) for N_k < n <= n_cap, F_k(n) < F_{k+1}(n+1) for
/// 2 <= n <= n_cap and L_{k+1}(n) > L_{k+2}(n) for N_k < n <= n_cap.
CheckReport scan_conjecture_Nk(unsigned k, Nat n_cap);

/// scan_conjecture_Nk over the configured k range with n_cap = n_max.
CheckReport check_conjecture_Nk(const SweepConfig& cfg);

/// F_k^{k+1} >= F_{k+1}^{k+2} and the equality L_k^{k+1}(k+1) = L_{k+1}^{k+2}(k+1).
CheckReport scan_conjecture_kk1(const SweepConfig& cfg);

/// F_k^j <= F_{k+1}^{j+1} for 2k < j <= j_max_rule(k).
CheckReport scan_conjecture_beyond_2k(const SweepConfig& cfg);

/// C_k^{(=2)} >= C_{k+1}^{(=2)} for k >= 3.
CheckReport scan_conjecture_letter2(const SweepConfig& cfg);

/// Empirical thresholds of the ultimately-smaller relations, checked
/// against the slope order of the algebraic constants.
CheckReport check_eventual_comparisons(const SweepConfig& cfg, Nat n_floor);

struct LimitTolerances {
  Nat n_small = 1000;
  double slope = 1e-3;
  double frequency = 1e-3;
  double unique = 1e-2;
};

/// F_k(n)/n, letter frequencies and U_k(n)/n at n = cfg.n_max against
/// alpha_k, alpha_k^{k+i-1} and 2 - beta_k.
CheckReport check_limits(const SweepConfig& cfg, const LimitTolerances& tol = {});

// -- registry --------------------------------------------------------------

/// Names accepted by run_check, in canonical order.
const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown name.
CheckReport run_check(std::string_view name, const SweepConfig& cfg);

std::string render_text(const CheckReport& report);
std::string render_json(const std::vector<CheckReport>& reports);

}  // namespace hoflab

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bel/approx_length.hpp"
#include "bel/braid_word.hpp"
#include "bel/ttp.hpp"

namespace bel {

struct AttackConfig {
  /// Exponent scan stops after this many consecutive increases on a side.
  int window = 3;
  int max_iterations = kDefaultApproxIterations;
  /// Consecutive delta = 0 moves allowed; negative means 2n.
  int plateau_budget = -1;
  /// Tuple conjugations evaluated (each delta_sigma costs one).
  std::size_t step_cap = 50'000;
  /// Seconds; 0 disables the limit. Non-zero limits make outcomes
  /// machine-dependent.
  double wall_time_limit = 0.0;

  int plateau_for(int strands) const { return plateau_budget < 0 ? 2 * strands : plateau_budget; }
};

struct ExponentChoice {
  std::size_t word_index = 0;
  int exponent = 0;
  std::size_t minimized_length = 0;
  /// Witness for Delta^{2p} X.
  BraidWord minimized;
};

enum class FailureReason { none, step_cap, exhausted, wall_time, reduction_cap };

std::string to_string(FailureReason r);
FailureReason failure_reason_from_string(const std::string& s);

struct AttackOutcome {
  bool success = false;
  BraidWord zeta{2};
  std::vector<int> v_exponents;
  std::vector<int> w_exponents;
  std::optional<CommutingPair> separation;
  std::size_t steps = 0;
  std::size_t moves = 0;  // conjugations applied to zeta, including backtracked ones
  std::size_t backtracks = 0;
  double wall_time = 0.0;
  FailureReason failure_reason = FailureReason::none;
};

/// Scans j outward from 0 minimizing |Delta^{2j} X|_a. Ties prefer smaller
/// |j|, then negative j. A side stops early when a reduction hits its step cap.
ExponentChoice recover_exponent(const BraidWord& x, int window = 3,
                                int max_iterations = kDefaultApproxIterations);

/// t^g = (g^-1 t_1 g, ..., g^-1 t_N g), freely reduced.
BraidTuple conjugate_tuple(const BraidTuple& t, const BraidWord& g);

/// |x^s|_a + |y^s|_a - (|x|_a + |y|_a).
long delta_sigma(const BraidTuple& x, const BraidTuple& y, Letter sigma,
                 int max_iterations = kDefaultApproxIterations);

/// Fully reduces every entry and returns the CommutingPair spanned by the
/// letters of each tuple, if the two letter sets are at distance >= 2.
std::optional<CommutingPair> separation_check(const BraidTuple& x, const BraidTuple& y);
/// As separation_check, but on the exact element supports, so independent of
/// the words chosen to represent the entries.
std::optional<CommutingPair> element_separation(const BraidTuple& x, const BraidTuple& y);
/// Depth-first length-based search for zeta with x^zeta, y^zeta separated.
AttackOutcome conjugator_descent(const BraidTuple& x, const BraidTuple& y,
                                 const AttackConfig& config = {});

/// Exponent recovery on every published word, then conjugator descent.
AttackOutcome full_attack(const PublicView& pub, const AttackConfig& config = {});

/// Delta^{2p} X for each published word, as plain concatenations.
BraidTuple corrected_tuple(std::span<const BraidWord> published, std::span<const int> exponents);

/// Re-checks a claimed SCSSP solution from public data only: the literal
/// check first, then the exact supports.
std::optional<CommutingPair> verify_solution(const PublicView& pub,
                                             std::span<const int> v_exponents,
                                             std::span<const int> w_exponents,
                                             const BraidWord& zeta);

}  // namespace bel

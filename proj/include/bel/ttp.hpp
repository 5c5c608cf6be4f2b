#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bel/braid_word.hpp"

namespace bel {

/// Generator index sets for two elementwise-commuting subgroups B_A, B_B.
struct CommutingPair {
  std::vector<int> left_indices;
  std::vector<int> right_indices;

  /// Every cross pair is at distance >= 2.
  bool is_commuting() const;

  friend bool operator==(const CommutingPair&, const CommutingPair&) = default;
};

/// left = {1..split-1}, right = {split+1..n-1}.
CommutingPair choose_commuting_pair(int strands, int split);

struct TtpParameters {
  int strands = 16;
  int count = 8;  // N
  std::size_t z_length = 67;
  std::size_t secret_length = 67;
  int split = 8;
  std::uint64_t seed = 0;
};

struct PublicView {
  std::vector<BraidWord> v;  // V_1..V_N
  std::vector<BraidWord> w;  // W_1..W_N

  int strands() const { return v.front().strands(); }
};

struct TtpInstance {
  TtpParameters parameters;
  BraidWord z;
  CommutingPair subgroups;
  std::vector<BraidWord> v_secret;
  std::vector<BraidWord> w_secret;
  std::vector<BraidWord> v_public;
  std::vector<BraidWord> w_public;
  // V_i = Delta^{2 k_i} z v_i z^-1 in B_n (likewise for W).
  std::vector<int> v_delta_exponents;
  std::vector<int> w_delta_exponents;
};

/// Disguises an element: left normal form, reduced mod Delta^2, written back
/// as a word. Returns the word and the k with word = Delta^{2k} x.
std::pair<BraidWord, int> disguise(const BraidWord& x);

TtpInstance generate_instance(const TtpParameters& params);
/// As above but with an explicit conjugator (used for degenerate cases).
TtpInstance generate_instance(const TtpParameters& params, const BraidWord& z);

PublicView public_view(const TtpInstance& instance);

}  // namespace bel

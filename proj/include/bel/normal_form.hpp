#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bel/braid_word.hpp"

namespace bel {

inline constexpr int kMaxNormalFormStrands = 64;

/// A positive permutation braid, stored as the strand permutation it induces:
/// image(pos) is the starting position of the strand that ends at `pos`.
class PermutationBraid {
 public:
  static PermutationBraid identity(int strands);
  static PermutationBraid delta(int strands);
  static PermutationBraid generator(int strands, int index);
  /// Delta * s_index^-1.
  static PermutationBraid delta_over_generator(int strands, int index);
  /// Throws unless `image` is a permutation of 0..n-1.
  static PermutationBraid from_image(std::span<const int> image);

  int strands() const { return strands_; }
  int operator()(int pos) const { return image_[static_cast<std::size_t>(pos)]; }
  std::vector<int> image() const;

  bool is_identity() const;
  bool is_delta() const;

  /// i such that this = A s_i (the last crossing can be s_i).
  bool has_right_descent(int index) const { return image_[index - 1] > image_[index]; }
  /// The canonical positive word: repeatedly strip the smallest left descent.
  BraidWord to_word() const;
  /// Conjugation by Delta (s_i -> s_{n-i}).
  PermutationBraid flipped() const;
  /// A^-1 Delta.
  PermutationBraid right_complement() const;
  /// Generators occurring in any positive word for this factor.
  std::vector<bool> letter_set() const;

  friend bool operator==(const PermutationBraid& a, const PermutationBraid& b);

 private:
  friend class NormalFormBuilder;
  explicit PermutationBraid(int strands) : strands_(strands) {}

  int strands_ = 0;
  std::array<std::uint8_t, kMaxNormalFormStrands> image_{};
};

/// Left normal form Delta^inf A_1 ... A_k.
struct NormalForm {
  int strands = 2;
  int inf = 0;
  std::vector<PermutationBraid> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm left_normal_form(const BraidWord& w);
BraidWord nf_to_word(const NormalForm& nf);
/// inf -> inf mod 2 (in {0, 1}); factors untouched.
NormalForm reduce_mod_delta_squared(const NormalForm& nf);
/// The k with inf(nf) = 2k + inf(reduce_mod_delta_squared(nf)).
int delta_squared_quotient(const NormalForm& nf);
bool equal_in_braid_group(const BraidWord& u, const BraidWord& w);

/// Sorted generator indices of the smallest standard parabolic subgroup that
/// contains the element. Read off the reduced fraction N^-1 P (N, P positive,
/// no common left divisor) obtained from the left normal form; positive braid
/// relations preserve letter sets, so this does not depend on the input word.
std::vector<int> element_support(const NormalForm& nf);
std::vector<int> element_support(const BraidWord& w);

/// Each adjacent pair is left-weighted and no factor is trivial or Delta.
bool is_left_weighted(const NormalForm& nf);

}  // namespace bel

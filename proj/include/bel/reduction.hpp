#pragma once

#include <cstddef>

#include "bel/braid_word.hpp"

namespace bel {

inline constexpr std::size_t kDefaultReductionStepCap = 1'000'000;

struct ReductionReport {
  std::size_t input_length = 0;
  std::size_t output_length = 0;
  // Reduction sweeps run and handle rewrites applied by them.
  std::size_t passes = 0;
  std::size_t rewrites = 0;
};

/// Smallest generator index occurring in w. Throws on the empty word.
int main_generator(const BraidWord& w);

/// True iff the main generator occurs with a single sign.
bool is_dehornoy_reduced(const BraidWord& w);

/// Removes every handle s_i^e v s_i^-e (v free of s_i, s_{i-1}) by always
/// rewriting the handle whose right end is leftmost. The result contains no
/// handle of any index, hence is Dehornoy reduced.
BraidWord remove_handles(const BraidWord& w, std::size_t step_cap = kDefaultReductionStepCap,
                         std::size_t* steps = nullptr);

/// Dehornoy's algorithm: repeatedly reduce the first handle of the main
/// generator, after clearing handles inside it, until the main generator has
/// a single sign.
BraidWord dehornoy_reduce(const BraidWord& w, std::size_t step_cap = kDefaultReductionStepCap);

/// D(w): the shortest of the left-to-right handle removal of w, the inverse
/// of the handle removal of w^-1, dehornoy_reduce(w), and the handle removal
/// of dehornoy_reduce(w). Never longer than dehornoy_reduce(w), and never
/// longer than w when w is itself Dehornoy reduced.
BraidWord full_reduce(const BraidWord& w, std::size_t step_cap = kDefaultReductionStepCap,
                      ReductionReport* report = nullptr);

}  // namespace bel

#pragma once

#include <cstddef>

#include "bel/braid_word.hpp"
#include "bel/reduction.hpp"

namespace bel {

inline constexpr int kDefaultApproxIterations = 8;

struct ApproxLengthResult {
  std::size_t length = 0;
  BraidWord witness;
  int iterations = 0;
};

/// |w|_a. Alternates full reduction with Delta-conjugation for
/// `max_iterations` reductions, stopping early only once the sequence starts
/// to cycle. The witness is the shortest word seen, conjugated back by Delta
/// when needed so that it equals w in B_n.
ApproxLengthResult approximate_length(const BraidWord& w,
                                      int max_iterations = kDefaultApproxIterations,
                                      std::size_t step_cap = kDefaultReductionStepCap);

/// Sum of member approximate lengths.
std::size_t tuple_approx_length(const BraidTuple& t, int max_iterations = kDefaultApproxIterations);

}  // namespace bel

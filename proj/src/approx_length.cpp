#include "bel/approx_length.hpp"

#include <optional>

namespace bel {

ApproxLengthResult approximate_length(const BraidWord& w, int max_iterations,
                                      std::size_t step_cap) {
  if (max_iterations < 1) throw BraidError("approximate length needs max_iterations >= 1");

  BraidWord best = w;
  bool best_flipped = false;
  BraidWord current = w;
  bool flipped = false;
  // Reductions from one and two iterations back. Once a reduction repeats
  // the one two steps earlier, the remaining iterations would cycle.
  std::optional<BraidWord> last, before_last;
  int iterations = 0;
  while (iterations < max_iterations) {
    ++iterations;
    BraidWord reduced = full_reduce(current, step_cap);
    if (reduced.size() < best.size()) {
      best = reduced;
      best_flipped = flipped;
    }
    if (before_last && *before_last == reduced) break;
    before_last = std::move(last);
    last = reduced;
    current = delta_conjugate(reduced);
    flipped = !flipped;
  }
  // An odd number of Delta-conjugations leaves Delta^-1 w Delta; one more
  // gives Delta^-2 w Delta^2 = w.
  if (best_flipped) best = delta_conjugate(best);
  return {best.size(), std::move(best), iterations};
}

std::size_t tuple_approx_length(const BraidTuple& t, int max_iterations) {
  std::size_t total = 0;
  for (const auto& w : t) total += approximate_length(w, max_iterations).length;
  return total;
}

}  // namespace bel

#include "bel/reduction.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bel {

namespace {

// Incremental handle remover. `out_` is kept handle-free; every incoming
// letter either extends it or closes exactly one handle, whose rewritten
// interior is pushed back onto the input.
class HandleRemover {
 public:
  HandleRemover(int strands, std::size_t step_cap)
      : strands_(strands), step_cap_(step_cap), occurrences_(static_cast<std::size_t>(strands) + 1) {}

  std::vector<Letter> run(std::span<const Letter> input) {
    out_.clear();
    for (auto& o : occurrences_) o.clear();
    pending_.assign(input.rbegin(), input.rend());
    while (!pending_.empty()) {
      const Letter x = pending_.back();
      pending_.pop_back();
      feed(x);
    }
    return std::move(out_);
  }

  std::size_t steps() const { return steps_; }

 private:
  int last_position(int index) const {
    if (index < 1) return -1;
    const auto& o = occurrences_[static_cast<std::size_t>(index)];
    return o.empty() ? -1 : o.back();
  }

  void feed(Letter x) {
    const int i = x.index();
    const int start = std::max(last_position(i), last_position(i - 1));
    if (start < 0 || out_[static_cast<std::size_t>(start)] != x.inverse()) {
      occurrences_[static_cast<std::size_t>(i)].push_back(static_cast<int>(out_.size()));
      out_.push_back(x);
      return;
    }

    if (++steps_ > step_cap_) {
      throw BraidError("handle reduction exceeded step cap of " + std::to_string(step_cap_));
    }

    // out_[start] = s_i^e, x = s_i^-e. Rewrite s_{i+1}^d -> s_{i+1}^-e s_i^d s_{i+1}^e
    // inside the handle and drop both ends.
    const int e = out_[static_cast<std::size_t>(start)].sign();
    const auto begin = static_cast<std::size_t>(start) + 1;
    // Pushed in reverse so the first rewritten letter is processed next.
    for (std::size_t k = out_.size(); k-- > begin;) {
      const Letter y = out_[k];
      if (y.index() == i + 1) {
        pending_.emplace_back(i + 1, e);
        pending_.emplace_back(i, y.sign());
        pending_.emplace_back(i + 1, -e);
      } else {
        pending_.push_back(y);
      }
    }
    truncate(static_cast<std::size_t>(start));
  }

  void truncate(std::size_t length) {
    while (out_.size() > length) {
      occurrences_[static_cast<std::size_t>(out_.back().index())].pop_back();
      out_.pop_back();
    }
  }

  int strands_;
  std::size_t step_cap_;
  std::size_t steps_ = 0;
  std::vector<Letter> out_;
  std::vector<Letter> pending_;
  std::vector<std::vector<int>> occurrences_;
};

std::vector<Letter> inverse_letters(std::span<const Letter> w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& l : out) l = l.inverse();
  return out;
}

}  // namespace

int main_generator(const BraidWord& w) {
  if (w.empty()) throw BraidError("main generator of the empty word is undefined");
  int m = w[0].index();
  for (auto l : w.letters()) m = std::min(m, l.index());
  return m;
}

bool is_dehornoy_reduced(const BraidWord& w) {
  if (w.empty()) return true;
  const int m = main_generator(w);
  int seen = 0;
  for (auto l : w.letters()) {
    if (l.index() != m) continue;
    if (seen != 0 && seen != l.sign()) return false;
    seen = l.sign();
  }
  return true;
}

BraidWord remove_handles(const BraidWord& w, std::size_t step_cap, std::size_t* steps) {
  HandleRemover remover(w.strands(), step_cap);
  auto out = remover.run(w.letters());
  if (steps) *steps += remover.steps();
  return BraidWord(w.strands(), std::move(out));
}

BraidWord dehornoy_reduce(const BraidWord& w, std::size_t step_cap) {
  const BraidWord start = free_reduce(w);
  std::vector<Letter> word(start.letters().begin(), start.letters().end());
  std::size_t steps = 0;
  const int n = w.strands();
  for (;;) {
    if (word.empty()) break;
    int m = word[0].index();
    for (auto l : word) m = std::min(m, l.index());

    // First pair of consecutive s_m letters with opposite signs.
    std::size_t p = 0, q = 0;
    bool found = false;
    std::size_t prev = word.size();
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (word[k].index() != m) continue;
      if (prev != word.size() && word[prev].sign() != word[k].sign()) {
        p = prev;
        q = k;
        found = true;
        break;
      }
      prev = k;
    }
    if (!found) break;

    if (++steps > step_cap) {
      throw BraidError("Dehornoy reduction exceeded step cap of " + std::to_string(step_cap));
    }
    // Clear inner handles so that the s_m handle is permitted.
    std::vector<Letter> inner(word.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                              word.begin() + static_cast<std::ptrdiff_t>(q));
    HandleRemover remover(n, step_cap);
    inner = remover.run(inner);
    steps += remover.steps();

    const int e = word[p].sign();
    std::vector<Letter> rewritten;
    rewritten.reserve(word.size() + 2 * inner.size());
    rewritten.insert(rewritten.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
    for (auto y : inner) {
      if (y.index() == m + 1) {
        rewritten.emplace_back(m + 1, -e);
        rewritten.emplace_back(m, y.sign());
        rewritten.emplace_back(m + 1, e);
      } else {
        rewritten.push_back(y);
      }
    }
    rewritten.insert(rewritten.end(), word.begin() + static_cast<std::ptrdiff_t>(q) + 1, word.end());
    const BraidWord next = free_reduce(BraidWord(n, std::move(rewritten)));
    word.assign(next.letters().begin(), next.letters().end());
  }
  return BraidWord(n, std::move(word));
}

BraidWord full_reduce(const BraidWord& w, std::size_t step_cap, ReductionReport* report) {
  std::size_t steps = 0;
  HandleRemover forward(w.strands(), step_cap);
  auto best = forward.run(w.letters());
  steps += forward.steps();

  HandleRemover backward(w.strands(), step_cap);
  auto reversed = inverse_letters(backward.run(inverse_letters(w.letters())));
  steps += backward.steps();
  if (reversed.size() < best.size()) best = std::move(reversed);

  BraidWord result(w.strands(), std::move(best));
  auto main_first = dehornoy_reduce(w, step_cap);
  if (main_first.size() < result.size()) result = main_first;
  HandleRemover cleanup(w.strands(), step_cap);
  auto cleaned = cleanup.run(main_first.letters());
  steps += cleanup.steps();
  if (cleaned.size() < result.size()) result = BraidWord(w.strands(), std::move(cleaned));
  if (result.size() > w.size() && is_dehornoy_reduced(w)) result = free_reduce(w);
  if (report) {
    report->input_length = w.size();
    report->output_length = result.size();
    report->passes = 4;
    report->rewrites = steps;
  }
  return result;
}

}  // namespace bel

#include "bel/attack.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "bel/normal_form.hpp"

namespace bel {

namespace {

using Clock = std::chrono::steady_clock;

BraidWord conjugate_by_letter(const BraidWord& w, Letter sigma) {
  std::vector<Letter> out;
  out.reserve(w.size() + 2);
  out.push_back(sigma.inverse());
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  out.push_back(sigma);
  return free_reduce(BraidWord(w.strands(), std::move(out)));
}

std::uint64_t hash_state(const std::vector<BraidWord>& words) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto step = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  for (const auto& w : words) {
    for (auto l : w.letters()) step(static_cast<std::uint64_t>(l.value() + 0x8000));
    step(0xffffULL);
  }
  return h;
}

std::vector<bool> literal_support(std::span<const BraidWord> words, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& w : words) {
    for (auto l : w.letters()) used[static_cast<std::size_t>(l.index())] = true;
  }
  return used;
}

std::optional<CommutingPair> pair_if_separated(const std::vector<bool>& left,
                                               const std::vector<bool>& right) {
  CommutingPair pair;
  for (std::size_t i = 1; i < left.size(); ++i) {
    if (left[i]) pair.left_indices.push_back(static_cast<int>(i));
    if (right[i]) pair.right_indices.push_back(static_cast<int>(i));
  }
  if (!pair.is_commuting()) return std::nullopt;
  return pair;
}

std::optional<CommutingPair> literal_split(std::span<const BraidWord> x, std::span<const BraidWord> y,
                                           int n) {
  return pair_if_separated(literal_support(x, n), literal_support(y, n));
}

std::optional<CommutingPair> element_split(std::span<const BraidWord> x, std::span<const BraidWord> y,
                                           int n) {
  auto support_of = [&](std::span<const BraidWord> words) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& w : words) {
      for (int i : element_support(w)) used[static_cast<std::size_t>(i)] = true;
    }
    return used;
  };
  return pair_if_separated(support_of(x), support_of(y));
}

struct Candidate {
  long delta;
  Letter sigma;
  std::vector<BraidWord> words;  // kept only for delta <= 0
};

struct Frame {
  std::vector<BraidWord> words;
  long total;
  int plateau_run;
  std::vector<Candidate> candidates;
  std::size_t next = 0;
};

class Descent {
 public:
  Descent(const BraidTuple& x, const BraidTuple& y, const AttackConfig& config)
      : n_(x.strands()), half_(x.size()), config_(config), start_(Clock::now()) {
    if (x.strands() != y.strands()) throw BraidError("tuples over different braid groups");
    for (const auto& w : x) initial_.push_back(approximate_length(w, config_.max_iterations).witness);
    for (const auto& w : y) initial_.push_back(approximate_length(w, config_.max_iterations).witness);
  }

  AttackOutcome run() {
    AttackOutcome out;
    out.zeta = BraidWord(n_);
    if (auto p = check(initial_)) {
      out.success = true;
      out.separation = std::move(p);
      return finish(out);
    }

    std::unordered_set<std::uint64_t> visited{hash_state(initial_)};
    std::vector<Letter> path;
    std::vector<Frame> stack;
    long total0 = 0;
    for (const auto& w : initial_) total0 += static_cast<long>(w.size());
    stack.push_back(expand(initial_, total0, 0, std::nullopt, out));
    const std::size_t plateau = static_cast<std::size_t>(config_.plateau_for(n_));

    while (!stack.empty() && out.failure_reason == FailureReason::none) {
      Frame& f = stack.back();
      if (f.next >= f.candidates.size() || f.candidates[f.next].delta > 0) {
        stack.pop_back();
        if (!path.empty()) {
          path.pop_back();
          ++out.backtracks;
        }
        continue;
      }
      Candidate& c = f.candidates[f.next++];
      const int run = c.delta == 0 ? f.plateau_run + 1 : 0;
      if (static_cast<std::size_t>(run) > plateau) continue;
      if (!visited.insert(hash_state(c.words)).second) continue;

      path.push_back(c.sigma);
      ++out.moves;
      std::vector<BraidWord> words = std::move(c.words);
      if (auto p = check(words)) {
        out.success = true;
        out.separation = std::move(p);
        out.zeta = BraidWord(n_, path);
        return finish(out);
      }
      const long total = f.total + c.delta;
      Frame child = expand(std::move(words), total, run, c.sigma, out);
      stack.push_back(std::move(child));
    }
    if (out.failure_reason == FailureReason::none) out.failure_reason = FailureReason::exhausted;
    out.zeta = BraidWord(n_, path);
    return finish(out);
  }

 private:
  std::optional<CommutingPair> check(const std::vector<BraidWord>& words) const {
    std::span<const BraidWord> all(words);
    return literal_split(all.subspan(0, half_), all.subspan(half_), n_);
  }

  Frame expand(std::vector<BraidWord> words, long total, int plateau_run,
               std::optional<Letter> last, AttackOutcome& out) {
    Frame f{std::move(words), total, plateau_run, {}, 0};
    for (int i = 1; i < n_; ++i) {
      for (int s : {1, -1}) {
        const Letter sigma(i, s);
        if (last && sigma == last->inverse()) continue;
        if (!budget_left(out)) return f;
        ++out.steps;
        std::vector<BraidWord> next;
        next.reserve(f.words.size());
        long sum = 0;
        try {
          for (const auto& w : f.words) {
            next.push_back(
                approximate_length(conjugate_by_letter(w, sigma), config_.max_iterations).witness);
            sum += static_cast<long>(next.back().size());
          }
        } catch (const BraidError&) {
          out.failure_reason = FailureReason::reduction_cap;
          return f;
        }
        Candidate c{sum - total, sigma, {}};
        if (c.delta <= 0) c.words = std::move(next);
        f.candidates.push_back(std::move(c));
      }
    }
    std::stable_sort(f.candidates.begin(), f.candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.delta < b.delta; });
    return f;
  }

  bool budget_left(AttackOutcome& out) {
    if (out.failure_reason != FailureReason::none) return false;
    if (out.steps >= config_.step_cap) {
      out.failure_reason = FailureReason::step_cap;
      return false;
    }
    if (config_.wall_time_limit > 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > config_.wall_time_limit) {
      out.failure_reason = FailureReason::wall_time;
      return false;
    }
    return true;
  }

  AttackOutcome& finish(AttackOutcome& out) const {
    out.wall_time = std::chrono::duration<double>(Clock::now() - start_).count();
    if (out.success) out.failure_reason = FailureReason::none;
    return out;
  }

  int n_;
  std::size_t half_;
  AttackConfig config_;
  Clock::time_point start_;
  std::vector<BraidWord> initial_;
};

}  // namespace

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::step_cap: return "step-cap";
    case FailureReason::exhausted: return "no-descending-move-after-backtrack";
    case FailureReason::wall_time: return "wall-time";
    case FailureReason::reduction_cap: return "reduction-step-cap";
  }
  return "none";
}

FailureReason failure_reason_from_string(const std::string& s) {
  for (auto r : {FailureReason::none, FailureReason::step_cap, FailureReason::exhausted,
                 FailureReason::wall_time, FailureReason::reduction_cap}) {
    if (to_string(r) == s) return r;
  }
  throw BraidError("unknown failure reason '" + s + "'");
}

ExponentChoice recover_exponent(const BraidWord& x, int window, int max_iterations) {
  if (window < 1) throw BraidError("exponent window must be >= 1");
  const int n = x.strands();
  const auto base = approximate_length(x, max_iterations);
  const std::size_t delta_sq = static_cast<std::size_t>(n * (n - 1));
  const int hard = 1 + static_cast<int>((x.size() + delta_sq - 1) / delta_sq);

  ExponentChoice best{0, 0, base.length, base.witness};
  auto consider = [&](int j, ApproxLengthResult r) {
    const int aj = j < 0 ? -j : j;
    const int ab = best.exponent < 0 ? -best.exponent : best.exponent;
    if (r.length < best.minimized_length ||
        (r.length == best.minimized_length && (aj < ab || (aj == ab && j < best.exponent)))) {
      best.exponent = j;
      best.minimized_length = r.length;
      best.minimized = std::move(r.witness);
    }
  };

  for (int dir : {-1, 1}) {
    std::size_t prev = base.length;
    int increases = 0;
    for (int s = 1; s <= hard; ++s) {
      const int j = dir * s;
      std::optional<ApproxLengthResult> r;
      try {
        r = approximate_length(concat(delta_power(n, 2 * j), base.witness), max_iterations);
      } catch (const BraidError&) {
        // Reduction cap hit; larger |j| only costs more.
        break;
      }
      increases = r->length > prev ? increases + 1 : 0;
      prev = r->length;
      consider(j, std::move(*r));
      if (increases >= window) break;
    }
  }
  return best;
}

BraidTuple conjugate_tuple(const BraidTuple& t, const BraidWord& g) {
  const BraidWord gi = invert(g);
  std::vector<BraidWord> out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(free_reduce(concat(concat(gi, w), g)));
  return BraidTuple(std::move(out));
}

long delta_sigma(const BraidTuple& x, const BraidTuple& y, Letter sigma, int max_iterations) {
  if (x.strands() != y.strands()) throw BraidError("tuples over different braid groups");
  const BraidWord s(x.strands(), {sigma.value()});
  const auto before = tuple_approx_length(x, max_iterations) + tuple_approx_length(y, max_iterations);
  const auto after = tuple_approx_length(conjugate_tuple(x, s), max_iterations) +
                     tuple_approx_length(conjugate_tuple(y, s), max_iterations);
  return static_cast<long>(after) - static_cast<long>(before);
}

std::optional<CommutingPair> separation_check(const BraidTuple& x, const BraidTuple& y) {
  if (x.strands() != y.strands()) throw BraidError("tuples over different braid groups");
  auto reduce_all = [](const BraidTuple& t) {
    std::vector<BraidWord> out;
    for (const auto& w : t) out.push_back(full_reduce(w));
    return out;
  };
  return literal_split(reduce_all(x), reduce_all(y), x.strands());
}

std::optional<CommutingPair> element_separation(const BraidTuple& x, const BraidTuple& y) {
  if (x.strands() != y.strands()) throw BraidError("tuples over different braid groups");
  return element_split(x.entries(), y.entries(), x.strands());
}

AttackOutcome conjugator_descent(const BraidTuple& x, const BraidTuple& y,
                                 const AttackConfig& config) {
  return Descent(x, y, config).run();
}

BraidTuple corrected_tuple(std::span<const BraidWord> published, std::span<const int> exponents) {
  if (published.size() != exponents.size()) throw BraidError("one exponent per published word");
  std::vector<BraidWord> out;
  for (std::size_t i = 0; i < published.size(); ++i) {
    const int n = published[i].strands();
    out.push_back(concat(delta_power(n, 2 * exponents[i]), published[i]));
  }
  return BraidTuple(std::move(out));
}

AttackOutcome full_attack(const PublicView& pub, const AttackConfig& config) {
  if (pub.v.empty() || pub.w.empty()) throw BraidError("attack needs non-empty public lists");
  const auto start = Clock::now();
  std::vector<BraidWord> vx, wx;
  std::vector<int> vp, wp;
  for (std::size_t i = 0; i < pub.v.size(); ++i) {
    auto c = recover_exponent(pub.v[i], config.window, config.max_iterations);
    vp.push_back(c.exponent);
    vx.push_back(std::move(c.minimized));
  }
  for (std::size_t i = 0; i < pub.w.size(); ++i) {
    auto c = recover_exponent(pub.w[i], config.window, config.max_iterations);
    wp.push_back(c.exponent);
    wx.push_back(std::move(c.minimized));
  }
  AttackOutcome out = conjugator_descent(BraidTuple(std::move(vx)), BraidTuple(std::move(wx)), config);
  out.v_exponents = std::move(vp);
  out.w_exponents = std::move(wp);
  out.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::optional<CommutingPair> verify_solution(const PublicView& pub,
                                             std::span<const int> v_exponents,
                                             std::span<const int> w_exponents,
                                             const BraidWord& zeta) {
  const BraidTuple x = conjugate_tuple(corrected_tuple(pub.v, v_exponents), zeta);
  const BraidTuple y = conjugate_tuple(corrected_tuple(pub.w, w_exponents), zeta);
  if (auto p = separation_check(x, y)) return p;
  return element_separation(x, y);
}

}  // namespace bel

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bel/approx_length.hpp"
#include "bel/normal_form.hpp"
#include "bel/random.hpp"
#include "oracles.hpp"

using namespace bel;

namespace {

BraidWord sample(int n, std::size_t len, std::uint64_t a, std::uint64_t b) {
  return random_freely_reduced({n, len, derive_seed({0xa1e, std::uint64_t(n), a, b})});
}

}  // namespace

TEST_CASE("small inputs") {
  CHECK(approximate_length(BraidWord(5)).length == 0);
  CHECK(approximate_length(BraidWord(5, {3})).length == 1);
  CHECK(approximate_length(BraidWord(5, {2, -2})).length == 0);
  CHECK(approximate_length(BraidWord(4, {1, 2, 1, -2, -1, -2})).length == 0);
  CHECK_THROWS_AS(approximate_length(BraidWord(4, {1}), 0), BraidError);
}

TEST_CASE("witness equals the input and is bounded by D(w)") {
  for (int n : {4, 8, 16}) {
    for (int t = 0; t < 20; ++t) {
      const auto w = sample(n, 10 + 20 * static_cast<std::size_t>(t), 1, static_cast<std::uint64_t>(t));
      const auto r = approximate_length(w);
      CHECK(r.length == r.witness.size());
      CHECK(r.length <= full_reduce(w).size());
      CHECK(r.length <= w.size());
      CHECK(equal_in_braid_group(r.witness, w));
      CHECK(oracle::burau_equal(r.witness, w));
      CHECK(r.iterations >= 1);
      CHECK(r.iterations <= kDefaultApproxIterations);
    }
  }
}

TEST_CASE("more iterations never give a longer result") {
  for (int t = 0; t < 20; ++t) {
    const auto w = sample(10, 150, 2, static_cast<std::uint64_t>(t));
    CHECK(approximate_length(w, 8).length <= approximate_length(w, 1).length);
    CHECK(approximate_length(w, 1).length == std::min(w.size(), full_reduce(w).size()));
  }
}

TEST_CASE("Delta-conjugate inputs get the same treatment") {
  for (int t = 0; t < 10; ++t) {
    const auto w = sample(8, 80, 3, static_cast<std::uint64_t>(t));
    const auto r = approximate_length(delta_conjugate(w));
    CHECK(equal_in_braid_group(r.witness, delta_conjugate(w)));
  }
}

TEST_CASE("normal form blow-up barely moves the approximate length") {
  std::vector<double> ratios;
  int close = 0;
  for (int t = 0; t < 100; ++t) {
    const auto u = sample(8, 100, 4, static_cast<std::uint64_t>(t));
    const auto w = nf_to_word(left_normal_form(u));
    CHECK(w.size() > u.size());
    const double a = static_cast<double>(approximate_length(w).length);
    const double b = static_cast<double>(approximate_length(u).length);
    ratios.push_back(a / b);
    if (std::abs(a / b - 1.0) <= 0.15) ++close;
  }
  std::sort(ratios.begin(), ratios.end());
  const double median = (ratios[49] + ratios[50]) / 2;
  CHECK(close >= 90);
  CHECK(median >= 0.85);
  CHECK(median <= 1.15);
}

TEST_CASE("tuple lengths add up") {
  const BraidTuple empties({BraidWord(6), BraidWord(6)});
  CHECK(tuple_approx_length(empties) == 0);
  const auto a = sample(6, 40, 5, 0);
  const auto b = sample(6, 40, 5, 1);
  CHECK(tuple_approx_length(BraidTuple({a})) == approximate_length(a).length);
  CHECK(tuple_approx_length(BraidTuple({a, b})) ==
        tuple_approx_length(BraidTuple({a})) + tuple_approx_length(BraidTuple({b})));
}

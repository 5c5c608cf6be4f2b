#include <doctest.h>

#include "bel/normal_form.hpp"
#include "bel/random.hpp"
#include "bel/reduction.hpp"
#include "oracles.hpp"

using namespace bel;

namespace {

BraidWord sample(int n, std::size_t len, std::uint64_t a, std::uint64_t b) {
  return random_freely_reduced({n, len, derive_seed({0x5eed, std::uint64_t(n), a, b})});
}

}  // namespace

TEST_CASE("main generator") {
  CHECK(main_generator(BraidWord(5, {2, 3, -2})) == 2);
  CHECK(main_generator(BraidWord(6, {-5})) == 5);
  CHECK(main_generator(BraidWord(5, {4, 1, 4})) == 1);
  CHECK_THROWS_AS(main_generator(BraidWord(5)), BraidError);
}

TEST_CASE("Dehornoy reducedness") {
  CHECK(is_dehornoy_reduced(BraidWord(3, {1, 2, 1})));
  CHECK_FALSE(is_dehornoy_reduced(BraidWord(3, {1, 2, -1})));
  CHECK(is_dehornoy_reduced(BraidWord(3)));
  CHECK(is_dehornoy_reduced(BraidWord(4, {2, -3, 2, 3})));
}

TEST_CASE("dehornoy_reduce examples") {
  CHECK(dehornoy_reduce(BraidWord(3, {1, 2, 1})) == BraidWord(3, {1, 2, 1}));
  CHECK(dehornoy_reduce(BraidWord(3, {1, -1, 2})) == BraidWord(3, {2}));
  const BraidWord w(3, {1, 2, -1});
  const auto r = dehornoy_reduce(w);
  CHECK(is_dehornoy_reduced(r));
  CHECK(equal_in_braid_group(r, w));
  CHECK(oracle::burau_equal(r, w));
  // s1 s2 s1^-1 = s2^-1 s1 s2
  CHECK(r == BraidWord(3, {-2, 1, 2}));
}

TEST_CASE("full_reduce of the empty word") {
  CHECK(full_reduce(BraidWord(7)).empty());
  ReductionReport rep;
  full_reduce(BraidWord(4, {1, 2, -1}), kDefaultReductionStepCap, &rep);
  CHECK(rep.input_length == 3);
  CHECK(rep.output_length == 3);
  CHECK(rep.passes >= 1);
  full_reduce(BraidWord(4, {1, 2, 1, -2, -1, -2}), kDefaultReductionStepCap, &rep);
  CHECK(rep.rewrites >= 1);
  CHECK(rep.output_length == 0);
}

TEST_CASE("reductions preserve the element and remove handles") {
  for (int n : {3, 4, 8, 16}) {
    for (int t = 0; t < 25; ++t) {
      const auto w = sample(n, 10 + 15 * static_cast<std::size_t>(t), 1, static_cast<std::uint64_t>(t));
      const auto d = dehornoy_reduce(w);
      const auto h = remove_handles(w);
      const auto f = full_reduce(w);
      CHECK(is_dehornoy_reduced(d));
      CHECK(is_dehornoy_reduced(f));
      CHECK_FALSE(oracle::has_handle(h));
      CHECK(oracle::burau_equal(d, w));
      CHECK(oracle::burau_equal(h, w));
      CHECK(oracle::burau_equal(f, w));
      CHECK(equal_in_braid_group(f, w));
      CHECK(f.size() <= d.size());
      CHECK(full_reduce(w) == f);
    }
  }
}

TEST_CASE("full_reduce never lengthens a Dehornoy reduced word") {
  for (int n : {4, 8, 16}) {
    for (int t = 0; t < 40; ++t) {
      const auto w = dehornoy_reduce(sample(n, 200, 2, static_cast<std::uint64_t>(t)));
      CHECK(full_reduce(w).size() <= w.size());
    }
  }
}

TEST_CASE("free cancellation is subsumed") {
  const BraidWord w(5, {2, 3, -3, -2, 4});
  CHECK(full_reduce(w) == BraidWord(5, {4}));
  CHECK(remove_handles(w) == BraidWord(5, {4}));
}

TEST_CASE("long conjugates shrink") {
  int shrank = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto x = sample(8, 20, 3, t);
    auto g = sample(8, 190, 4, t);
    const auto w = conjugate(x, g);
    if (full_reduce(w).size() < w.size()) ++shrank;
  }
  CHECK(shrank >= 95);
}

TEST_CASE("step cap is enforced") {
  const auto w = sample(8, 400, 5, 0);
  CHECK_THROWS_AS(full_reduce(w, 3), BraidError);
  CHECK_THROWS_AS(dehornoy_reduce(w, 3), BraidError);
}

#include <doctest.h>

#include "bel/attack.hpp"
#include "bel/json_io.hpp"
#include "bel/normal_form.hpp"
#include "bel/random.hpp"
#include "oracles.hpp"

using namespace bel;

namespace {

BraidWord sample(int n, std::size_t len, std::uint64_t a, std::uint64_t b) {
  return random_freely_reduced({n, len, derive_seed({0xa77, std::uint64_t(n), a, b})});
}

// Exhaustive scan of j in [-4, 4]; ties as in recover_exponent.
int exhaustive_exponent(const BraidWord& x) {
  int best = 0;
  std::size_t best_len = approximate_length(x).length;
  for (int j : {-1, 1, -2, 2, -3, 3, -4, 4}) {
    const auto len = approximate_length(concat(delta_power(x.strands(), 2 * j), x)).length;
    if (len < best_len) {
      best = j;
      best_len = len;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("exponent of the empty word") {
  const auto c = recover_exponent(BraidWord(8));
  CHECK(c.exponent == 0);
  CHECK(c.minimized_length == 0);
  CHECK_THROWS_AS(recover_exponent(BraidWord(8), 0), BraidError);
}

TEST_CASE("a visible Delta squared is stripped") {
  for (int t = 0; t < 10; ++t) {
    const auto u = sample(8, 10, 1, static_cast<std::uint64_t>(t));
    const auto x = concat(delta_power(8, 2), u);
    const auto c = recover_exponent(x);
    CHECK(c.exponent == -1);
    CHECK(c.exponent == exhaustive_exponent(x));
    CHECK(c.minimized_length <= 10);
    CHECK(c.minimized_length == c.minimized.size());
    CHECK(equal_in_braid_group(c.minimized, u));
  }
}

TEST_CASE("a disguised Delta squared is found") {
  for (int t = 0; t < 10; ++t) {
    const auto u = sample(8, 10, 2, static_cast<std::uint64_t>(t));
    const auto x = nf_to_word(left_normal_form(concat(delta_power(8, -4), u)));
    const auto c = recover_exponent(x);
    CHECK(c.exponent == 2);
    CHECK(c.exponent == exhaustive_exponent(x));
  }
}

TEST_CASE("recovered exponents are at least as good as the true ones") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate_instance({8, 2, 20, 20, 4, seed});
    for (std::size_t i = 0; i < inst.v_public.size(); ++i) {
      const auto& x = inst.v_public[i];
      const auto c = recover_exponent(x);
      const auto truth = approximate_length(concat(delta_power(8, -2 * inst.v_delta_exponents[i]), x));
      CHECK(c.minimized_length <= truth.length);
      CHECK(equal_in_braid_group(c.minimized, concat(delta_power(8, 2 * c.exponent), x)));
    }
  }
}

TEST_CASE("tuple conjugation orientation") {
  const BraidTuple t({BraidWord(4, {2})});
  const BraidWord g(4, {1});
  CHECK(conjugate_tuple(t, g)[0] == BraidWord(4, {-1, 2, 1}));
  CHECK(conjugate_tuple(conjugate_tuple(t, g), invert(g)) == t);
}

TEST_CASE("delta_sigma") {
  const BraidTuple e({BraidWord(8)});
  CHECK(delta_sigma(e, e, Letter(3), 8) == 0);
  const BraidTuple x({BraidWord(8, {3})});
  const BraidTuple y({BraidWord(8, {5})});
  // s1 commutes with both entries
  CHECK(delta_sigma(x, y, Letter(1), 8) == 0);
  CHECK(delta_sigma(x, y, Letter(4), 8) >= 0);
  for (int t = 0; t < 10; ++t) {
    const BraidTuple a({sample(8, 30, 3, static_cast<std::uint64_t>(t))});
    const BraidTuple b({sample(8, 30, 4, static_cast<std::uint64_t>(t))});
    const Letter s(1 + t % 7, t % 2 ? 1 : -1);
    const BraidWord sw(8, {s.value()});
    const auto a1 = conjugate_tuple(a, sw);
    const auto b1 = conjugate_tuple(b, sw);
    CHECK(delta_sigma(a, b, s, 8) + delta_sigma(a1, b1, s.inverse(), 8) == 0);
  }
  CHECK_THROWS_AS(delta_sigma(BraidTuple({BraidWord(5)}), e, Letter(1), 8), BraidError);
}

TEST_CASE("separation check") {
  const BraidTuple x({BraidWord(8, {1, 2, -1}), BraidWord(8, {2})});
  const BraidTuple y({BraidWord(8, {5, -6}), BraidWord(8, {6})});
  const auto p = separation_check(x, y);
  REQUIRE(p);
  CHECK(p->left_indices == std::vector<int>{1, 2});
  CHECK(p->right_indices == std::vector<int>{5, 6});

  const BraidTuple x3({BraidWord(8, {1, 2, 3})});
  const BraidTuple y45({BraidWord(8, {4, 5})});
  CHECK_FALSE(separation_check(x3, y45));
  CHECK_FALSE(element_separation(x3, y45));

  // cancelling letters do not count against separation
  const BraidTuple noisy({BraidWord(8, {1, 6, 5, -5, -6})});
  CHECK(separation_check(noisy, y));
  CHECK(element_separation(noisy, y));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = generate_instance({10, 3, 10, 15, 5, seed});
    CHECK(separation_check(BraidTuple(inst.v_secret), BraidTuple(inst.w_secret)));
  }
}

TEST_CASE("secret tuples need no descent") {
  const auto inst = generate_instance({8, 3, 10, 15, 4, 1});
  const auto out = conjugator_descent(BraidTuple(inst.v_secret), BraidTuple(inst.w_secret));
  CHECK(out.success);
  CHECK(out.steps == 0);
  CHECK(out.zeta.empty());
  CHECK(out.failure_reason == FailureReason::none);
}

TEST_CASE("trivial instances") {
  const auto inst = generate_instance({8, 1, 0, 10, 4, 2});
  const auto out = full_attack(public_view(inst));
  CHECK(out.success);
  CHECK(out.zeta.empty());
  CHECK(verify_solution(public_view(inst), out.v_exponents, out.w_exponents, out.zeta));
}

TEST_CASE("short conjugators are recovered in small groups") {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = generate_instance({8, 2, 6, 10, 4, seed});
    const auto pub = public_view(inst);
    const auto out = full_attack(pub);
    if (!out.success) continue;
    ++successes;
    REQUIRE(out.separation);
    CHECK(out.separation->is_commuting());
    CHECK(verify_solution(pub, out.v_exponents, out.w_exponents, out.zeta));
    // the candidate tuples commute pairwise in B_8
    const auto x = conjugate_tuple(corrected_tuple(pub.v, out.v_exponents), out.zeta);
    const auto y = conjugate_tuple(corrected_tuple(pub.w, out.w_exponents), out.zeta);
    const oracle::Burau burau;
    for (const auto& a : x) {
      CHECK(burau.supported_on(a, out.separation->left_indices));
      for (const auto& b : y) CHECK(equal_in_braid_group(concat(a, b), concat(b, a)));
    }
  }
  CHECK(successes >= 4);
}

TEST_CASE("wrong exponents or conjugators do not verify") {
  const auto inst = generate_instance({8, 2, 6, 10, 4, 3});
  const auto pub = public_view(inst);
  const auto out = full_attack(pub);
  REQUIRE(out.success);
  CHECK_FALSE(verify_solution(pub, out.v_exponents, out.w_exponents, concat(out.zeta, BraidWord(8, {4, 4}))));
  CHECK_THROWS_AS(verify_solution(pub, std::vector<int>{0}, out.w_exponents, out.zeta), BraidError);
}

TEST_CASE("step cap stops the search") {
  const auto inst = generate_instance({16, 4, 80, 80, 8, 4});
  AttackConfig cfg;
  cfg.step_cap = 5;
  const auto out = full_attack(public_view(inst), cfg);
  CHECK_FALSE(out.success);
  CHECK(out.failure_reason == FailureReason::step_cap);
  CHECK(out.steps == 5);
}

TEST_CASE("attack is deterministic") {
  const auto inst = generate_instance({8, 2, 8, 10, 4, 5});
  const auto a = full_attack(public_view(inst));
  const auto b = full_attack(public_view(inst));
  CHECK(a.success == b.success);
  CHECK(a.zeta == b.zeta);
  CHECK(a.steps == b.steps);
  CHECK(a.v_exponents == b.v_exponents);
}

TEST_CASE("failure reasons and outcome JSON") {
  for (auto r : {FailureReason::none, FailureReason::step_cap, FailureReason::exhausted, FailureReason::wall_time,
                 FailureReason::reduction_cap}) {
    CHECK(failure_reason_from_string(to_string(r)) == r);
  }
  CHECK(to_string(FailureReason::exhausted) == "no-descending-move-after-backtrack");
  CHECK_THROWS_AS(failure_reason_from_string("bogus"), BraidError);

  const auto inst = generate_instance({8, 2, 6, 10, 4, 3});
  const auto out = full_attack(public_view(inst));
  const auto back = attack_outcome_from_json(Json::parse(to_json(out).dump()));
  CHECK(back.success == out.success);
  CHECK(back.zeta == out.zeta);
  CHECK(back.v_exponents == out.v_exponents);
  CHECK(back.w_exponents == out.w_exponents);
  CHECK(back.steps == out.steps);
  CHECK(back.failure_reason == out.failure_reason);
  CHECK(back.separation == out.separation);
}

TEST_CASE("attack config JSON") {
  AttackConfig cfg;
  cfg.window = 5;
  cfg.step_cap = 123;
  const auto back = attack_config_from_json(to_json(cfg));
  CHECK(back.window == 5);
  CHECK(back.step_cap == 123);
  CHECK(back.plateau_for(16) == 32);
  const auto partial = attack_config_from_json(Json::parse(R"({"max_iterations": 3})"));
  CHECK(partial.max_iterations == 3);
  CHECK(partial.window == 3);
  CHECK_THROWS_AS(attack_config_from_json(Json::parse(R"({"window": 0})")), BraidError);
}

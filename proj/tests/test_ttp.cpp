#include <doctest.h>

#include "bel/json_io.hpp"
#include "bel/normal_form.hpp"
#include "bel/ttp.hpp"
#include "oracles.hpp"

using namespace bel;

TEST_CASE("commuting pairs") {
  const auto p = choose_commuting_pair(16, 8);
  CHECK(p.left_indices == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(p.right_indices == std::vector<int>{9, 10, 11, 12, 13, 14, 15});
  CHECK(p.is_commuting());
  const auto small = choose_commuting_pair(4, 2);
  CHECK(small.left_indices == std::vector<int>{1});
  CHECK(small.right_indices == std::vector<int>{3});
  for (int n = 4; n <= 12; ++n) {
    for (int s = 2; s <= n - 2; ++s) CHECK(choose_commuting_pair(n, s).is_commuting());
  }
  CHECK_THROWS_AS(choose_commuting_pair(8, 1), BraidError);
  CHECK_THROWS_AS(choose_commuting_pair(8, 7), BraidError);
  CHECK_FALSE(CommutingPair{{1, 2, 3}, {4, 5}}.is_commuting());
}

TEST_CASE("parameter validation") {
  TtpParameters p{8, 0, 10, 10, 4, 1};
  CHECK_THROWS_AS(generate_instance(p), BraidError);
  p.count = 2;
  p.secret_length = 0;
  CHECK_THROWS_AS(generate_instance(p), BraidError);
  p.secret_length = 5;
  p.split = 7;
  CHECK_THROWS_AS(generate_instance(p), BraidError);
}

TEST_CASE("empty conjugator publishes disguised secrets") {
  const TtpParameters p{8, 1, 0, 12, 4, 3};
  const auto inst = generate_instance(p);
  CHECK(inst.z.empty());
  const auto expected = disguise(inst.v_secret[0]).first;
  CHECK(inst.v_public[0] == expected);
  CHECK(inst.v_public[0] == nf_to_word(reduce_mod_delta_squared(left_normal_form(inst.v_secret[0]))));
}

TEST_CASE("instances satisfy the TTP invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TtpParameters p{8, 3, 15, 12, 4, seed};
    const auto inst = generate_instance(p);
    CHECK(inst.z.size() == 15);
    CHECK(inst.z.is_freely_reduced());
    REQUIRE(inst.v_public.size() == 3);
    REQUIRE(inst.w_public.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (auto l : inst.v_secret[i].letters()) CHECK(l.index() < 4);
      for (auto l : inst.w_secret[i].letters()) CHECK(l.index() > 4);
      const auto true_v = conjugate(inst.v_secret[i], inst.z);
      const auto true_w = conjugate(inst.w_secret[i], inst.z);
      const auto pv = concat(delta_power(8, 2 * inst.v_delta_exponents[i]), true_v);
      const auto pw = concat(delta_power(8, 2 * inst.w_delta_exponents[i]), true_w);
      CHECK(equal_in_braid_group(inst.v_public[i], pv));
      CHECK(equal_in_braid_group(inst.w_public[i], pw));
      CHECK(oracle::burau_equal(inst.v_public[i], pv));
      // the published word is a normal-form word with inf in {0, 1}
      const int inf = left_normal_form(inst.v_public[i]).inf;
      CHECK((inf == 0 || inf == 1));
      for (std::size_t j = 0; j < 3; ++j) {
        const auto& v = inst.v_secret[i];
        const auto& w = inst.w_secret[j];
        CHECK(equal_in_braid_group(concat(v, w), concat(w, v)));
      }
    }
  }
}

TEST_CASE("generation is deterministic per seed") {
  const TtpParameters p{10, 2, 20, 20, 5, 77};
  const auto a = generate_instance(p);
  const auto b = generate_instance(p);
  CHECK(a.v_public == b.v_public);
  CHECK(a.w_public == b.w_public);
  CHECK(a.z == b.z);
  auto q = p;
  q.seed = 78;
  CHECK(generate_instance(q).z != a.z);
}

TEST_CASE("default-size conjugates are about 200 letters before disguise") {
  const TtpParameters p{16, 8, 67, 67, 8, 5};
  const auto inst = generate_instance(p);
  double total = 0;
  for (const auto& v : inst.v_secret) total += static_cast<double>(conjugate(v, inst.z).size());
  const double mean = total / 8;
  CHECK(mean > 150);
  CHECK(mean <= 201);
}

TEST_CASE("public view and JSON") {
  const TtpParameters p{8, 2, 10, 10, 4, 9};
  const auto inst = generate_instance(p);
  const auto pub = public_view(inst);
  CHECK(pub.v.size() + pub.w.size() == 4);
  CHECK(pub.strands() == 8);
  const auto j = to_json(pub);
  CHECK_FALSE(j.contains("z"));
  CHECK_FALSE(j.contains("secret"));
  const auto back = public_view_from_json(Json::parse(j.dump()));
  CHECK(back.v == pub.v);
  CHECK(back.w == pub.w);

  const auto full = to_json(inst);
  CHECK(full.contains("public"));
  CHECK(full.contains("secret"));
  const auto nested = public_view_from_json(full);
  CHECK(nested.v == pub.v);
  CHECK_THROWS(public_view_from_json(Json::parse(R"({"n": 8, "V": ["8:[9]"], "W": []})")));
}

TEST_CASE("normal form and pair JSON round trip") {
  const auto nf = left_normal_form(BraidWord(6, {1, -3, 5, 2, -1}));
  CHECK(normal_form_from_json(Json::parse(to_json(nf).dump())) == nf);
  const auto pair = choose_commuting_pair(10, 4);
  CHECK(commuting_pair_from_json(to_json(pair)) == pair);
}

#include "bel/ttp.hpp"

#include <string>

#include "bel/normal_form.hpp"
#include "bel/random.hpp"

namespace bel {

namespace {

enum SeedStream : std::uint64_t { kConjugator = 1, kLeftSecret = 2, kRightSecret = 3 };

void check_parameters(const TtpParameters& p) {
  if (p.count < 1) throw BraidError("TTP needs N >= 1");
  if (p.secret_length < 1) throw BraidError("TTP secret length must be >= 1");
  choose_commuting_pair(p.strands, p.split);
}

}  // namespace

bool CommutingPair::is_commuting() const {
  for (int a : left_indices) {
    for (int b : right_indices) {
      if (a - b < 2 && b - a < 2) return false;
    }
  }
  return true;
}

CommutingPair choose_commuting_pair(int strands, int split) {
  if (split < 2 || split > strands - 2) {
    throw BraidError("split " + std::to_string(split) + " outside 2.." +
                     std::to_string(strands - 2));
  }
  CommutingPair pair;
  for (int i = 1; i < split; ++i) pair.left_indices.push_back(i);
  for (int i = split + 1; i < strands; ++i) pair.right_indices.push_back(i);
  return pair;
}

std::pair<BraidWord, int> disguise(const BraidWord& x) {
  const NormalForm nf = left_normal_form(x);
  const int dropped = delta_squared_quotient(nf);
  return {nf_to_word(reduce_mod_delta_squared(nf)), -dropped};
}

TtpInstance generate_instance(const TtpParameters& params) {
  check_parameters(params);
  const BraidWord z =
      params.z_length == 0
          ? BraidWord(params.strands)
          : random_freely_reduced(
                {params.strands, params.z_length, derive_seed({params.seed, kConjugator})});
  return generate_instance(params, z);
}

TtpInstance generate_instance(const TtpParameters& params, const BraidWord& z) {
  check_parameters(params);
  if (z.strands() != params.strands) throw BraidError("conjugator strand count mismatch");

  TtpInstance inst{params, z, choose_commuting_pair(params.strands, params.split), {}, {}, {}, {},
                   {}, {}};
  const auto& left = inst.subgroups.left_indices;
  const auto& right = inst.subgroups.right_indices;
  for (int i = 0; i < params.count; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    inst.v_secret.push_back(random_freely_reduced({params.strands, params.secret_length,
                                                   derive_seed({params.seed, kLeftSecret, idx}),
                                                   left.front(), left.back()}));
    inst.w_secret.push_back(random_freely_reduced({params.strands, params.secret_length,
                                                   derive_seed({params.seed, kRightSecret, idx}),
                                                   right.front(), right.back()}));
  }
  for (int i = 0; i < params.count; ++i) {
    auto [vp, vk] = disguise(conjugate(inst.v_secret[static_cast<std::size_t>(i)], z));
    inst.v_public.push_back(std::move(vp));
    inst.v_delta_exponents.push_back(vk);
    auto [wp, wk] = disguise(conjugate(inst.w_secret[static_cast<std::size_t>(i)], z));
    inst.w_public.push_back(std::move(wp));
    inst.w_delta_exponents.push_back(wk);
  }
  return inst;
}

PublicView public_view(const TtpInstance& instance) {
  return {instance.v_public, instance.w_public};
}

}  // namespace bel

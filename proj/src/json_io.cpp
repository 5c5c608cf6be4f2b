#include "bel/json_io.hpp"

#include <fstream>

namespace bel {

namespace {

std::vector<std::string> words_to_strings(std::span<const BraidWord> words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

std::vector<BraidWord> words_from_json(const Json& j) {
  std::vector<BraidWord> out;
  for (const auto& s : j) out.push_back(BraidWord::parse(s.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) factors.push_back(f.image());
  return {{"n", nf.strands}, {"inf", nf.inf}, {"factors", factors}};
}

NormalForm normal_form_from_json(const Json& j) {
  NormalForm nf;
  nf.strands = j.at("n").get<int>();
  nf.inf = j.at("inf").get<int>();
  for (const auto& f : j.at("factors")) {
    const auto image = f.get<std::vector<int>>();
    if (static_cast<int>(image.size()) != nf.strands) {
      throw BraidError("normal form factor has wrong size");
    }
    nf.factors.push_back(PermutationBraid::from_image(image));
  }
  return nf;
}

Json to_json(const CommutingPair& pair) {
  return {{"left", pair.left_indices}, {"right", pair.right_indices}};
}

CommutingPair commuting_pair_from_json(const Json& j) {
  return {j.at("left").get<std::vector<int>>(), j.at("right").get<std::vector<int>>()};
}

Json to_json(const PublicView& pub) {
  return {{"n", pub.strands()},
          {"N", pub.v.size()},
          {"V", words_to_strings(pub.v)},
          {"W", words_to_strings(pub.w)}};
}

PublicView public_view_from_json(const Json& j) {
  const Json& body = j.contains("public") ? j.at("public") : j;
  PublicView pub{words_from_json(body.at("V")), words_from_json(body.at("W"))};
  if (pub.v.empty() || pub.w.empty()) throw BraidError("public view needs non-empty V and W");
  const int n = body.at("n").get<int>();
  for (const auto* list : {&pub.v, &pub.w}) {
    for (const auto& w : *list) {
      if (w.strands() != n) throw BraidError("public word strand count disagrees with n");
    }
  }
  return pub;
}

Json secret_to_json(const TtpInstance& inst) {
  const auto& p = inst.parameters;
  return {{"parameters",
           {{"n", p.strands},
            {"N", p.count},
            {"len_z", p.z_length},
            {"len_secret", p.secret_length},
            {"split", p.split},
            {"seed", p.seed}}},
          {"z", inst.z.to_string()},
          {"subgroups", to_json(inst.subgroups)},
          {"v", words_to_strings(inst.v_secret)},
          {"w", words_to_strings(inst.w_secret)},
          {"v_delta_exponents", inst.v_delta_exponents},
          {"w_delta_exponents", inst.w_delta_exponents}};
}

Json to_json(const TtpInstance& inst) {
  return {{"public", to_json(public_view(inst))}, {"secret", secret_to_json(inst)}};
}

Json to_json(const AttackConfig& c) {
  return {{"window", c.window},
          {"max_iterations", c.max_iterations},
          {"plateau_budget", c.plateau_budget},
          {"step_cap", c.step_cap},
          {"wall_time_limit", c.wall_time_limit}};
}

AttackConfig attack_config_from_json(const Json& j) {
  AttackConfig c;
  c.window = j.value("window", c.window);
  c.max_iterations = j.value("max_iterations", c.max_iterations);
  c.plateau_budget = j.value("plateau_budget", c.plateau_budget);
  c.step_cap = j.value("step_cap", c.step_cap);
  c.wall_time_limit = j.value("wall_time_limit", c.wall_time_limit);
  if (c.window < 1 || c.max_iterations < 1 || c.step_cap < 1) {
    throw BraidError("attack config: window, max_iterations and step_cap must be positive");
  }
  return c;
}

Json to_json(const AttackOutcome& o) {
  return {{"success", o.success},
          {"zeta", o.zeta.to_string()},
          {"v_exponents", o.v_exponents},
          {"w_exponents", o.w_exponents},
          {"separation", o.separation ? to_json(*o.separation) : Json(nullptr)},
          {"steps", o.steps},
          {"moves", o.moves},
          {"backtracks", o.backtracks},
          {"wall_time", o.wall_time},
          {"failure_reason", to_string(o.failure_reason)}};
}

AttackOutcome attack_outcome_from_json(const Json& j) {
  AttackOutcome o;
  o.success = j.at("success").get<bool>();
  o.zeta = BraidWord::parse(j.at("zeta").get<std::string>());
  o.v_exponents = j.at("v_exponents").get<std::vector<int>>();
  o.w_exponents = j.at("w_exponents").get<std::vector<int>>();
  if (j.contains("separation") && !j.at("separation").is_null()) {
    o.separation = commuting_pair_from_json(j.at("separation"));
  }
  o.steps = j.value("steps", std::size_t{0});
  o.moves = j.value("moves", std::size_t{0});
  o.backtracks = j.value("backtracks", std::size_t{0});
  o.wall_time = j.value("wall_time", 0.0);
  o.failure_reason = failure_reason_from_string(j.value("failure_reason", std::string("none")));
  return o;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace bel

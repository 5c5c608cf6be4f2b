// Command-line front end: TTP generation, the SCSSP attack, approximate
// lengths, experiment sweeps and independent verification.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bel/approx_length.hpp"
#include "bel/attack.hpp"
#include "bel/experiments.hpp"
#include "bel/json_io.hpp"
#include "bel/ttp.hpp"

namespace {

struct GenOptions {
  bel::TtpParameters params;
  std::string out;
  std::string secret_out;
};

int run_gen(const GenOptions& o) {
  const auto inst = bel::generate_instance(o.params);
  bel::write_json_file(o.out, bel::to_json(bel::public_view(inst)));
  if (!o.secret_out.empty()) bel::write_json_file(o.secret_out, bel::to_json(inst));
  return 0;
}

int run_attack(const std::string& pub_path, const std::string& config_path, const std::string& out) {
  const auto pub = bel::public_view_from_json(bel::read_json_file(pub_path));
  const auto config = config_path.empty() ? bel::AttackConfig{}
                                          : bel::attack_config_from_json(bel::read_json_file(config_path));
  const auto outcome = bel::full_attack(pub, config);
  const auto j = bel::to_json(outcome);
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    bel::write_json_file(out, j);
  }
  std::cerr << (outcome.success ? "success" : "failure (" + bel::to_string(outcome.failure_reason) + ")")
            << " after " << outcome.steps << " steps\n";
  return 0;
}

int run_alen(const std::string& word, int iters) {
  const auto w = bel::BraidWord::parse(word);
  const auto r = bel::approximate_length(w, iters);
  std::cout << bel::Json{{"length", r.length},
                         {"witness", r.witness.to_string()},
                         {"iterations", r.iterations},
                         {"input_length", w.size()}}
                   .dump()
            << '\n';
  return 0;
}

int run_exp(const std::string& kind, const std::string& config_path, const std::string& out) {
  auto config = config_path.empty() ? bel::ExperimentConfig{}
                                    : bel::experiment_config_from_json(bel::read_json_file(config_path));
  config.kind = bel::experiment_kind_from_string(kind);
  const auto table = bel::run_experiment(config);
  if (out.empty()) {
    std::cout << bel::emit_csv(table);
  } else {
    bel::emit_csv(table, out);
  }
  return 0;
}

// Exit status 0 iff the outcome claims success and the claim checks out.
int run_verify(const std::string& pub_path, const std::string& outcome_path) {
  const auto pub = bel::public_view_from_json(bel::read_json_file(pub_path));
  const auto outcome = bel::attack_outcome_from_json(bel::read_json_file(outcome_path));
  if (outcome.v_exponents.size() != pub.v.size() || outcome.w_exponents.size() != pub.w.size()) {
    throw bel::BraidError("outcome exponents do not match the public lists");
  }
  const auto pair = bel::verify_solution(pub, outcome.v_exponents, outcome.w_exponents, outcome.zeta);
  bel::Json j{{"claimed", outcome.success}, {"verified", pair.has_value()}};
  j["separation"] = pair ? bel::to_json(*pair) : bel::Json(nullptr);
  std::cout << j.dump() << '\n';
  return outcome.success && pair ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-group length-based attack toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a TTP instance");
  gen_cmd->add_option("--n", gen.params.strands, "Strand count")->required();
  gen_cmd->add_option("--N", gen.params.count, "Conjugates per list")->required();
  gen_cmd->add_option("--len-z", gen.params.z_length, "Conjugator length")->required();
  gen_cmd->add_option("--len-secret", gen.params.secret_length, "Secret word length")->required();
  gen_cmd->add_option("--split", gen.params.split, "Subgroup split generator")->required();
  gen_cmd->add_option("--seed", gen.params.seed, "Seed")->required();
  gen_cmd->add_option("--out", gen.out, "Public JSON output")->required();
  gen_cmd->add_option("--secret-out", gen.secret_out, "Full instance JSON output");

  std::string pub_path, config_path, out_path, outcome_path, word, kind;
  int iters = bel::kDefaultApproxIterations;

  auto* attack_cmd = app.add_subcommand("attack", "Run the SCSSP attack on a public view");
  attack_cmd->add_option("--pub", pub_path)->required();
  attack_cmd->add_option("--config", config_path);
  attack_cmd->add_option("--out", out_path);

  auto* alen_cmd = app.add_subcommand("alen", "Approximate length of a word");
  alen_cmd->add_option("--word", word, "Word in n:[i,-j,...] form")->required();
  alen_cmd->add_option("--iters", iters)->check(CLI::PositiveNumber);

  auto* exp_cmd = app.add_subcommand("exp", "Run an experiment sweep");
  exp_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"length-ratio", "tlnf", "triangle", "attack-sweep", "z-sweep"}));
  exp_cmd->add_option("--config", config_path);
  exp_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check an attack outcome from public data");
  verify_cmd->add_option("--pub", pub_path)->required();
  verify_cmd->add_option("--outcome", outcome_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*attack_cmd) return run_attack(pub_path, config_path, out_path);
    if (*alen_cmd) return run_alen(word, iters);
    if (*exp_cmd) return run_exp(kind, config_path, out_path);
    if (*verify_cmd) return run_verify(pub_path, outcome_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

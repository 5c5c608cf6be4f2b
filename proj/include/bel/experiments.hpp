#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bel/attack.hpp"

namespace bel {

enum class ExperimentKind { length_ratio, tlnf, triangle, attack_sweep, z_sweep };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::length_ratio;
  /// Braid indices for the word-level studies.
  std::vector<int> ranks{8, 16, 24, 32, 40, 48};
  /// Word lengths, or target conjugate lengths for the attack sweep.
  std::vector<std::size_t> lengths{25, 50, 100, 200, 400, 800, 1600};
  /// N values for the attack sweeps.
  std::vector<int> counts{2, 4, 6, 8, 10};
  /// |z| values for the conjugator-length sweep.
  std::vector<std::size_t> z_lengths{25, 50, 75, 100, 125, 150};
  /// 2|z| + |v| held fixed in the conjugator-length sweep.
  std::size_t total_length = 350;
  int attack_rank = 16;
  /// 0 means n/2.
  int split = 0;
  int trials = 100;
  std::uint64_t base_seed = 1;
  int max_iterations = kDefaultApproxIterations;
  AttackConfig attack;
  /// Relative band used by the Tlnf check.
  double tlnf_tolerance = 0.15;
  /// 0 means BEL_WORKERS or the hardware concurrency.
  int workers = 0;
};

/// One row of an experiment table. The meaning of `aux`/`aux2` depends on the
/// experiment:
///   length-ratio  mean |D(w)|,                 mean |w|_a
///   tlnf          fraction within tolerance,   mean |Tlnf(w)| / |w|
///   triangle      fraction with |xy|_a > |x|_a + |y|_a, mean |xy|_a
///   attack/z      mean |z v z^-1|,             mean published length
struct DataPoint {
  std::string experiment;
  int rank = 0;
  std::size_t length = 0;
  int conjugates = 0;
  std::size_t z_length = 0;
  std::size_t secret_length = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string statistic;
  double mean = 0.0;
  double stddev = 0.0;
  double median = 0.0;
  double aux = 0.0;
  double aux2 = 0.0;

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

using Table = std::vector<DataPoint>;

/// Seed for one trial of one data point; independent of execution order.
std::uint64_t trial_seed(std::uint64_t base_seed, ExperimentKind kind,
                         std::initializer_list<std::uint64_t> coordinates, int trial);

/// Number of worker threads: explicit request, else BEL_WORKERS, else the
/// hardware concurrency.
int resolve_workers(int requested);

/// Runs f(0..count-1) on up to `workers` threads; results are stored by index.
void parallel_for(int count, int workers, const std::function<void(int)>& f);

Table run_length_ratio(const ExperimentConfig& config);
Table run_tlnf_insensitivity(const ExperimentConfig& config);
Table run_triangle(const ExperimentConfig& config);
Table run_attack_sweep(const ExperimentConfig& config);
Table run_z_length_sweep(const ExperimentConfig& config);
Table run_experiment(const ExperimentConfig& config);

/// A single data point of `config.kind`, re-runnable in isolation.
/// `length` is the word/conjugate length, or |z| for the z-sweep.
DataPoint run_point(const ExperimentConfig& config, int rank, std::size_t length, int conjugates);

std::string csv_header();
std::string csv_row(const DataPoint& p);
std::string emit_csv(const Table& table);
void emit_csv(const Table& table, const std::filesystem::path& path);
Table parse_csv(const std::string& text);

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

}  // namespace bel

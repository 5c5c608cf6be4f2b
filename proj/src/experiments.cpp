#include "bel/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

#include "bel/json_io.hpp"
#include "bel/normal_form.hpp"
#include "bel/random.hpp"

namespace bel {

namespace {

struct Summary {
  double mean = 0, stddev = 0, median = 0;
};

Summary summarize(std::vector<double> xs) {
  Summary s;
  if (xs.empty()) return s;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) s.mean += x;
  s.mean /= n;
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (n - 1));
  }
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  s.median = xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
  return s;
}

double mean_of(const std::vector<double>& xs) { return summarize(xs).mean; }

int split_for(const ExperimentConfig& c, int n) { return c.split > 0 ? c.split : n / 2; }

void check_config(const ExperimentConfig& c) {
  if (c.trials < 1) throw BraidError("experiment needs trials >= 1");
  if (c.max_iterations < 1) throw BraidError("experiment needs max_iterations >= 1");
}

DataPoint make_point(const ExperimentConfig& c, int rank, std::size_t length, int conjugates,
                     const char* statistic) {
  DataPoint p;
  p.experiment = to_string(c.kind);
  p.rank = rank;
  p.length = length;
  p.conjugates = conjugates;
  p.trials = c.trials;
  p.seed = c.base_seed;
  p.statistic = statistic;
  return p;
}

void fill(DataPoint& p, const std::vector<double>& values) {
  const auto s = summarize(values);
  p.mean = s.mean;
  p.stddev = s.stddev;
  p.median = s.median;
}

DataPoint length_ratio_point(const ExperimentConfig& c, int rank, std::size_t length) {
  std::vector<double> ratio(static_cast<std::size_t>(c.trials)), dlen(ratio.size()), alen(ratio.size());
  parallel_for(c.trials, resolve_workers(c.workers), [&](int t) {
    const auto seed = trial_seed(c.base_seed, c.kind, {std::uint64_t(rank), length}, t);
    const BraidWord w = random_freely_reduced({rank, length, seed});
    const auto d = full_reduce(w).size();
    const auto a = approximate_length(w, c.max_iterations).length;
    const auto i = static_cast<std::size_t>(t);
    ratio[i] = d == 0 ? 1.0 : static_cast<double>(a) / static_cast<double>(d);
    dlen[i] = static_cast<double>(d);
    alen[i] = static_cast<double>(a);
  });
  DataPoint p = make_point(c, rank, length, 0, "approx_over_full_reduction");
  fill(p, ratio);
  p.aux = mean_of(dlen);
  p.aux2 = mean_of(alen);
  return p;
}

DataPoint tlnf_point(const ExperimentConfig& c, int rank, std::size_t length) {
  std::vector<double> ratio(static_cast<std::size_t>(c.trials)), within(ratio.size()), blowup(ratio.size());
  parallel_for(c.trials, resolve_workers(c.workers), [&](int t) {
    const auto seed = trial_seed(c.base_seed, c.kind, {std::uint64_t(rank), length}, t);
    const BraidWord w = random_freely_reduced({rank, length, seed});
    const BraidWord tw = nf_to_word(left_normal_form(w));
    const auto a = approximate_length(w, c.max_iterations).length;
    const auto b = approximate_length(tw, c.max_iterations).length;
    const auto i = static_cast<std::size_t>(t);
    ratio[i] = a == 0 ? 1.0 : static_cast<double>(b) / static_cast<double>(a);
    within[i] = std::abs(ratio[i] - 1.0) <= c.tlnf_tolerance ? 1.0 : 0.0;
    blowup[i] = w.empty() ? 1.0 : static_cast<double>(tw.size()) / static_cast<double>(w.size());
  });
  DataPoint p = make_point(c, rank, length, 0, "tlnf_approx_over_approx");
  fill(p, ratio);
  p.aux = mean_of(within);
  p.aux2 = mean_of(blowup);
  return p;
}

DataPoint triangle_point(const ExperimentConfig& c, int rank, std::size_t length) {
  std::vector<double> err(static_cast<std::size_t>(c.trials)), fails(err.size()), xylen(err.size());
  parallel_for(c.trials, resolve_workers(c.workers), [&](int t) {
    const auto seed = trial_seed(c.base_seed, c.kind, {std::uint64_t(rank), length}, t);
    // Resample the (measure-zero) case |xy|_a = 0, e.g. y = x^-1.
    for (std::uint64_t attempt = 0;; ++attempt) {
      const BraidWord x = random_freely_reduced({rank, length, derive_seed({seed, 1, attempt})});
      const BraidWord y = random_freely_reduced({rank, length, derive_seed({seed, 2, attempt})});
      const auto xy = approximate_length(concat(x, y), c.max_iterations).length;
      if (xy == 0) continue;
      const auto sum = approximate_length(x, c.max_iterations).length +
                       approximate_length(y, c.max_iterations).length;
      const auto i = static_cast<std::size_t>(t);
      err[i] = 100.0 * (static_cast<double>(xy) - static_cast<double>(sum)) / static_cast<double>(xy);
      fails[i] = xy > sum ? 1.0 : 0.0;
      xylen[i] = static_cast<double>(xy);
      break;
    }
  });
  DataPoint p = make_point(c, rank, length, 0, "triangle_relative_error_percent");
  fill(p, err);
  p.aux = mean_of(fails);
  p.aux2 = mean_of(xylen);
  return p;
}

DataPoint attack_point(const ExperimentConfig& c, int conjugates, std::size_t z_length,
                       std::size_t secret_length, std::size_t label_length) {
  const int n = c.attack_rank;
  std::vector<double> success(static_cast<std::size_t>(c.trials)), conj(success.size()), pub(success.size());
  parallel_for(c.trials, resolve_workers(c.workers), [&](int t) {
    const auto seed = trial_seed(c.base_seed, c.kind,
                                 {std::uint64_t(n), label_length, std::uint64_t(conjugates), z_length}, t);
    const TtpParameters params{n, conjugates, z_length, secret_length, split_for(c, n), seed};
    const TtpInstance inst = generate_instance(params);
    double clen = 0, plen = 0;
    for (int i = 0; i < conjugates; ++i) {
      const auto k = static_cast<std::size_t>(i);
      clen += static_cast<double>(conjugate(inst.v_secret[k], inst.z).size() +
                                  conjugate(inst.w_secret[k], inst.z).size());
      plen += static_cast<double>(inst.v_public[k].size() + inst.w_public[k].size());
    }
    const AttackOutcome out = full_attack(public_view(inst), c.attack);
    const auto i = static_cast<std::size_t>(t);
    success[i] = out.success ? 1.0 : 0.0;
    conj[i] = clen / (2.0 * conjugates);
    pub[i] = plen / (2.0 * conjugates);
  });
  DataPoint p = make_point(c, n, label_length, conjugates, "success_rate");
  p.z_length = z_length;
  p.secret_length = secret_length;
  fill(p, success);
  p.aux = mean_of(conj);
  p.aux2 = mean_of(pub);
  return p;
}

std::size_t third(std::size_t length) { return std::max<std::size_t>(1, (length + 1) / 3); }

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::length_ratio: return "length-ratio";
    case ExperimentKind::tlnf: return "tlnf";
    case ExperimentKind::triangle: return "triangle";
    case ExperimentKind::attack_sweep: return "attack-sweep";
    case ExperimentKind::z_sweep: return "z-sweep";
  }
  return "length-ratio";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (auto k : {ExperimentKind::length_ratio, ExperimentKind::tlnf, ExperimentKind::triangle,
                 ExperimentKind::attack_sweep, ExperimentKind::z_sweep}) {
    if (to_string(k) == name) return k;
  }
  throw BraidError("unknown experiment '" + name + "'");
}

std::uint64_t trial_seed(std::uint64_t base_seed, ExperimentKind kind,
                         std::initializer_list<std::uint64_t> coordinates, int trial) {
  std::uint64_t h = derive_seed({base_seed, static_cast<std::uint64_t>(kind)});
  for (auto c : coordinates) h = derive_seed({h, c});
  return derive_seed({h, static_cast<std::uint64_t>(trial)});
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BEL_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, int workers, const std::function<void(int)>& f) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

DataPoint run_point(const ExperimentConfig& c, int rank, std::size_t length, int conjugates) {
  check_config(c);
  switch (c.kind) {
    case ExperimentKind::length_ratio: return length_ratio_point(c, rank, length);
    case ExperimentKind::tlnf: return tlnf_point(c, rank, length);
    case ExperimentKind::triangle: return triangle_point(c, rank, length);
    case ExperimentKind::attack_sweep:
      return attack_point(c, conjugates, third(length), third(length), length);
    case ExperimentKind::z_sweep: {
      if (2 * length >= c.total_length) {
        throw BraidError("z-sweep needs 2|z| < total length");
      }
      return attack_point(c, conjugates, length, c.total_length - 2 * length, c.total_length);
    }
  }
  throw BraidError("unknown experiment");
}

namespace {

Table word_level(const ExperimentConfig& c) {
  Table t;
  for (int rank : c.ranks) {
    for (auto length : c.lengths) t.push_back(run_point(c, rank, length, 0));
  }
  return t;
}

}  // namespace

Table run_length_ratio(const ExperimentConfig& config) {
  auto c = config;
  c.kind = ExperimentKind::length_ratio;
  return word_level(c);
}

Table run_tlnf_insensitivity(const ExperimentConfig& config) {
  auto c = config;
  c.kind = ExperimentKind::tlnf;
  return word_level(c);
}

Table run_triangle(const ExperimentConfig& config) {
  auto c = config;
  c.kind = ExperimentKind::triangle;
  return word_level(c);
}

Table run_attack_sweep(const ExperimentConfig& config) {
  auto c = config;
  c.kind = ExperimentKind::attack_sweep;
  Table t;
  for (int count : c.counts) {
    for (auto length : c.lengths) t.push_back(run_point(c, c.attack_rank, length, count));
  }
  return t;
}

Table run_z_length_sweep(const ExperimentConfig& config) {
  auto c = config;
  c.kind = ExperimentKind::z_sweep;
  Table t;
  for (int count : c.counts) {
    for (auto z : c.z_lengths) t.push_back(run_point(c, c.attack_rank, z, count));
  }
  return t;
}

Table run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::length_ratio: return run_length_ratio(config);
    case ExperimentKind::tlnf: return run_tlnf_insensitivity(config);
    case ExperimentKind::triangle: return run_triangle(config);
    case ExperimentKind::attack_sweep: return run_attack_sweep(config);
    case ExperimentKind::z_sweep: return run_z_length_sweep(config);
  }
  throw BraidError("unknown experiment");
}

// CSV ----------------------------------------------------------------------

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(const std::string& s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw BraidError("bad CSV number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string csv_header() {
  return "experiment,rank,length,conjugates,z_length,secret_length,trials,seed,statistic,mean,"
         "stddev,median,aux,aux2";
}

std::string csv_row(const DataPoint& p) {
  std::ostringstream out;
  out << p.experiment << ',' << p.rank << ',' << p.length << ',' << p.conjugates << ','
      << p.z_length << ',' << p.secret_length << ',' << p.trials << ',' << p.seed << ','
      << p.statistic << ',' << format_double(p.mean) << ',' << format_double(p.stddev) << ','
      << format_double(p.median) << ',' << format_double(p.aux) << ',' << format_double(p.aux2);
  return out.str();
}

std::string emit_csv(const Table& table) {
  std::string out = csv_header() + "\n";
  for (const auto& p : table) out += csv_row(p) + "\n";
  return out;
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV to " + path.string());
  out << emit_csv(table);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Table parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw BraidError("unexpected CSV header");
  Table t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) f.push_back(cell);
    if (f.size() != 14) throw BraidError("CSV row has " + std::to_string(f.size()) + " fields");
    DataPoint p;
    p.experiment = f[0];
    p.rank = parse_number<int>(f[1]);
    p.length = parse_number<std::size_t>(f[2]);
    p.conjugates = parse_number<int>(f[3]);
    p.z_length = parse_number<std::size_t>(f[4]);
    p.secret_length = parse_number<std::size_t>(f[5]);
    p.trials = parse_number<int>(f[6]);
    p.seed = parse_number<std::uint64_t>(f[7]);
    p.statistic = f[8];
    p.mean = parse_number<double>(f[9]);
    p.stddev = parse_number<double>(f[10]);
    p.median = parse_number<double>(f[11]);
    p.aux = parse_number<double>(f[12]);
    p.aux2 = parse_number<double>(f[13]);
    t.push_back(std::move(p));
  }
  return t;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  if (j.contains("experiment")) c.kind = experiment_kind_from_string(j.at("experiment").get<std::string>());
  c.ranks = j.value("ranks", c.ranks);
  c.lengths = j.value("lengths", c.lengths);
  c.counts = j.value("counts", c.counts);
  c.z_lengths = j.value("z_lengths", c.z_lengths);
  c.total_length = j.value("total_length", c.total_length);
  c.attack_rank = j.value("attack_rank", c.attack_rank);
  c.split = j.value("split", c.split);
  c.trials = j.value("trials", c.trials);
  c.base_seed = j.value("seed", c.base_seed);
  c.max_iterations = j.value("max_iterations", c.max_iterations);
  c.tlnf_tolerance = j.value("tlnf_tolerance", c.tlnf_tolerance);
  c.workers = j.value("workers", c.workers);
  if (j.contains("attack")) c.attack = attack_config_from_json(j.at("attack"));
  if (c.ranks.empty() || c.lengths.empty() || c.counts.empty() || c.z_lengths.empty()) {
    throw BraidError("experiment grids must be non-empty");
  }
  check_config(c);
  return c;
}

}  // namespace bel

#include "cellcut/baselines.hpp"

#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>

#include "evolve.hpp"

namespace cellcut {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Feasible beats infeasible; then lower traffic among feasible solutions,
/// higher fitness among infeasible ones.
bool better(const Evaluation& a, const Evaluation& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.feasible) return a.traffic < b.traffic;
  return a.raw_fitness > b.raw_fitness;
}

class EdgeGenomeOps {
 public:
  EdgeGenomeOps(const Problem& problem, const GAParams& params)
      : problem_(problem), params_(params), fitness_(problem.fitness) {
    fitness_.tuning = params.tuning;
  }

  std::vector<EdgeMask> initial(Rng& rng) const {
    const std::size_t edges = problem_.graph.edge_count();
    const auto size = static_cast<std::size_t>(params_.population_size);
    if (edges < 63 && size > (std::uint64_t{1} << edges)) {
      throw std::invalid_argument("population size exceeds the number of distinct edge masks");
    }
    std::vector<EdgeMask> population;
    population.reserve(size);
    std::set<EdgeMask> seen;
    for (std::size_t attempt = 0; population.size() < size; ++attempt) {
      if (attempt >= 1000 * size) {
        throw std::invalid_argument("could not fill the edge-based population");
      }
      EdgeMask mask = random(rng);
      if (seen.insert(mask).second) population.push_back(std::move(mask));
    }
    return population;
  }

  EdgeMask random(Rng& rng) const {
    EdgeMask mask(problem_.graph.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) {
      if (rng.coin()) mask.set(e);
    }
    return mask;
  }

  void canonicalize(EdgeMask&) const {}

  std::pair<EdgeMask, EdgeMask> crossover(const EdgeMask& a, const EdgeMask& b,
                                          Rng& rng) const {
    const std::size_t n = a.size();
    if (n < 2) return {a, b};
    const std::size_t point = 1 + rng.below(n - 1);
    EdgeMask c1 = a;
    EdgeMask c2 = b;
    for (std::size_t e = point; e < n; ++e) {
      c1[e] = b[e];
      c2[e] = a[e];
    }
    return {std::move(c1), std::move(c2)};
  }

  void mutate(EdgeMask& mask, Rng& rng) const {
    if (!mask.empty()) mask.flip(rng.below(mask.size()));
  }

  // Marked edges inside a decoded cell are not intercellular; scoring the
  // decoded partition counts only edges between cells.
  Evaluation evaluate(const EdgeMask& mask) const {
    return evaluate_partition(problem_.graph, problem_.instance,
                              decode_partition(problem_.graph, mask), fitness_);
  }

 private:
  const Problem& problem_;
  const GAParams& params_;
  FitnessConfig fitness_;
};

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

}  // namespace

GAResult run_ega(const Problem& problem, const GAParams& params) {
  EdgeGenomeOps ops(problem, params);
  return detail::evolve<EdgeMask>(params, ops);
}

GAResult run_ega(const Instance& inst, const GAParams& params) {
  return run_ega(make_problem(inst, params.tuning), params);
}

std::vector<int> lloyd_kmeans(const std::vector<std::vector<double>>& rows, int k,
                              Rng& rng, int max_iterations) {
  const int n = static_cast<int>(rows.size());
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, number of rows]");

  // k distinct rows as initial centroids.
  std::vector<int> index(n);
  for (int i = 0; i < n; ++i) index[i] = i;
  std::vector<std::vector<double>> centroids;
  for (int c = 0; c < k; ++c) {
    const int j = c + static_cast<int>(rng.below(n - c));
    std::swap(index[c], index[j]);
    centroids.push_back(rows[index[c]]);
  }

  std::vector<int> assign(n, -1);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    std::vector<int> count(k, 0);
    for (int i = 0; i < n; ++i) {
      int nearest = 0;
      double best = squared_distance(rows[i], centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double d = squared_distance(rows[i], centroids[c]);
        if (d < best) {
          best = d;
          nearest = c;
        }
      }
      changed = changed || assign[i] != nearest;
      assign[i] = nearest;
      ++count[nearest];
    }

    // Empty clusters take the point farthest from its centroid.
    for (int c = 0; c < k; ++c) {
      if (count[c] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        if (count[assign[i]] < 2) continue;
        const double d = squared_distance(rows[i], centroids[assign[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --count[assign[far]];
      assign[far] = c;
      count[c] = 1;
      centroids[c] = rows[far];
      changed = true;
    }

    if (!changed) break;

    for (auto& centroid : centroids) std::fill(centroid.begin(), centroid.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      auto& centroid = centroids[assign[i]];
      for (std::size_t d = 0; d < centroid.size(); ++d) centroid[d] += rows[i][d];
    }
    for (int c = 0; c < k; ++c) {
      for (double& x : centroids[c]) x /= count[c];
    }
  }
  return assign;
}

BaselineResult run_multikmeans(const Problem& problem, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");
  const auto start = Clock::now();
  const Instance& inst = problem.instance;
  const int m = inst.machine_count;

  std::vector<std::vector<double>> rows;
  for (int i = 0; i < m; ++i) rows.push_back(problem.traffic.row_as_double(i));

  Rng rng(seed);
  const int lo = compute_k(m, inst.max_cell_size);
  const int hi = std::max(lo, m - 1);
  BaselineResult result;
  bool have = false;
  for (int k = lo; k <= hi; ++k) {
    for (int r = 0; r < restarts; ++r) {
      const auto labels = lloyd_kmeans(rows, k, rng);
      Evaluation ev = evaluate_partition(problem.graph, inst,
                                         Partition::from_labels(labels), problem.fitness);
      if (!have || better(ev, result.best)) {
        result.best = std::move(ev);
        have = true;
      }
    }
  }
  result.feasible_found = result.best.feasible;
  result.wall_time_s = seconds_since(start);
  return result;
}

BaselineResult exhaustive_oracle(const Problem& problem) {
  const Instance& inst = problem.instance;
  const FlowGraph& g = problem.graph;
  const int m = inst.machine_count;
  if (m > kOracleMaxMachines) {
    throw std::invalid_argument("exhaustive oracle is limited to " +
                                std::to_string(kOracleMaxMachines) + " machines, got " +
                                std::to_string(m));
  }
  const auto start = Clock::now();

  // Scaled integer arithmetic: Y * scale = (B - Z) * scale + (u - v) * B * scale.
  const std::int64_t bound = (problem.fitness.bound * g.weight_scale).numerator();
  const int u = problem.fitness.constraint_count;

  std::vector<int> label(m, 0);      // restricted growth string
  std::vector<int> prefix_max(m, 0);  // max label over positions [0, i]
  std::vector<int> size(m, 0);
  std::vector<int> best_feasible;
  std::vector<int> best_any;
  std::int64_t best_traffic = std::numeric_limits<std::int64_t>::max();
  std::int64_t best_score = std::numeric_limits<std::int64_t>::min();

  while (true) {
    std::int64_t traffic = 0;
    for (const Edge& e : g.edges) {
      if (label[e.first] != label[e.second]) traffic += e.scaled_weight;
    }
    std::fill(size.begin(), size.end(), 0);
    for (int v = 0; v < m; ++v) ++size[label[v]];
    int violations = 0;
    for (int c = 0; c <= prefix_max[m - 1]; ++c) violations += size[c] > inst.max_cell_size;
    for (const auto& [a, b] : inst.cohabitation_pairs) violations += label[a] != label[b];
    for (const auto& [a, b] : inst.non_cohabitation_pairs) violations += label[a] == label[b];

    if (violations == 0 && traffic < best_traffic) {
      best_traffic = traffic;
      best_feasible = label;
    }
    if (best_feasible.empty()) {
      const std::int64_t score = (bound - traffic) + (u - violations) * bound;
      if (score > best_score) {
        best_score = score;
        best_any = label;
      }
    }

    // Next restricted growth string.
    int i = m - 1;
    while (i > 0 && label[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (int j = i + 1; j < m; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }

  BaselineResult result;
  const auto& chosen = best_feasible.empty() ? best_any : best_feasible;
  result.best = evaluate_partition(g, inst, Partition::from_labels(chosen), problem.fitness);
  result.feasible_found = !best_feasible.empty();
  result.wall_time_s = seconds_since(start);
  return result;
}

BaselineResult exhaustive_oracle(const Instance& inst) {
  return exhaustive_oracle(make_problem(inst));
}

}  // namespace cellcut

#include "cellcut/evaluation.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cellcut/problem.hpp"

namespace cellcut {

Tuning Tuning::parse(std::string_view text) {
  if (text == "identity") return {};
  constexpr std::string_view prefix = "power:";
  if (text.starts_with(prefix)) {
    const std::string gamma_text(text.substr(prefix.size()));
    std::size_t used = 0;
    double gamma = 0.0;
    try {
      gamma = std::stod(gamma_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == gamma_text.size() && used > 0 && gamma > 0.0 && std::isfinite(gamma)) {
      return Tuning{Kind::power, gamma};
    }
  }
  throw std::invalid_argument("tuning must be 'identity' or 'power:<gamma>' with gamma > 0, got '" +
                              std::string(text) + "'");
}

std::string Tuning::to_string() const {
  if (kind == Kind::identity) return "identity";
  std::ostringstream out;
  out << "power:" << gamma;
  return out.str();
}

double Tuning::apply(const Rational& raw) const {
  const double y = to_double(raw);
  return kind == Kind::identity ? y : std::pow(y, gamma);
}

FitnessConfig make_fitness_config(const FlowGraph& g, const Instance& inst,
                                  Tuning tuning) {
  FitnessConfig cfg;
  cfg.bound = g.total_weight();
  if (cfg.bound == Rational(0)) cfg.bound = Rational(1);
  cfg.constraint_count = inst.machine_count +
                         static_cast<int>(inst.cohabitation_pairs.size()) +
                         static_cast<int>(inst.non_cohabitation_pairs.size());
  cfg.tuning = tuning;
  return cfg;
}

ViolationCounts violation_breakdown(const Partition& p, const Instance& inst) {
  ViolationCounts v;
  for (const auto& cell : p.cells) {
    if (static_cast<int>(cell.size()) > inst.max_cell_size) ++v.oversized_cells;
  }
  for (const auto& [a, b] : inst.cohabitation_pairs) {
    if (p.cell_of[a] != p.cell_of[b]) ++v.split_cohabitations;
  }
  for (const auto& [a, b] : inst.non_cohabitation_pairs) {
    if (p.cell_of[a] == p.cell_of[b]) ++v.joined_separations;
  }
  return v;
}

Rational intercellular_traffic(const FlowGraph& g, const EdgeMask& mask) {
  if (mask.size() != g.edge_count()) {
    throw std::invalid_argument("edge mask length does not match the graph");
  }
  std::int64_t sum = 0;
  for (auto e = mask.find_first(); e != EdgeMask::npos; e = mask.find_next(e)) {
    sum += g.edges[e].scaled_weight;
  }
  return Rational(sum, g.weight_scale);
}

Rational fitness(const Rational& traffic, int violations, const FitnessConfig& cfg) {
  if (traffic < Rational(0) || traffic > cfg.bound) {
    throw std::logic_error("traffic " + format_rational(traffic) +
                           " outside [0, B = " + format_rational(cfg.bound) + "]");
  }
  if (violations < 0 || violations > cfg.constraint_count) {
    throw std::logic_error("violation count " + std::to_string(violations) +
                           " outside [0, u = " +
                           std::to_string(cfg.constraint_count) + "]");
  }
  return (cfg.bound - traffic) + Rational(cfg.constraint_count - violations) * cfg.bound;
}

namespace {

Evaluation score(Partition partition, Rational traffic, const Instance& inst,
                 const FitnessConfig& cfg) {
  Evaluation ev;
  ev.violation_counts = violation_breakdown(partition, inst);
  ev.violations = ev.violation_counts.total();
  ev.feasible = ev.violations == 0;
  ev.partition = std::move(partition);
  ev.traffic = traffic;
  ev.raw_fitness = fitness(ev.traffic, ev.violations, cfg);
  ev.fitness = cfg.tuning.apply(ev.raw_fitness);
  return ev;
}

}  // namespace

Evaluation evaluate(const FlowGraph& g, const Instance& inst,
                    const EdgeMask& intercellular, const FitnessConfig& cfg) {
  return score(decode_partition(g, intercellular), intercellular_traffic(g, intercellular),
               inst, cfg);
}

Evaluation evaluate_partition(const FlowGraph& g, const Instance& inst,
                              Partition partition, const FitnessConfig& cfg) {
  const Rational traffic = intercellular_traffic(g, boundary_mask(g, partition));
  return score(std::move(partition), traffic, inst, cfg);
}

Problem make_problem(Instance inst, Tuning tuning) {
  Problem p;
  p.traffic = compute_traffic(inst);
  p.graph = build_graph(inst, p.traffic);
  p.fitness = make_fitness_config(p.graph, inst, tuning);
  p.instance = std::move(inst);
  return p;
}

}  // namespace cellcut

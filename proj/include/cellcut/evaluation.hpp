#pragma once

#include <string>
#include <string_view>

#include "cellcut/cut_space.hpp"
#include "cellcut/instance.hpp"

namespace cellcut {

/// Order-preserving transform applied to the raw fitness before selection.
struct Tuning {
  enum class Kind { identity, power };
  Kind kind = Kind::identity;
  double gamma = 1.0;

  static Tuning parse(std::string_view text);  // "identity" | "power:<g>"
  std::string to_string() const;
  double apply(const Rational& raw) const;
};

struct FitnessConfig {
  Rational bound;            // B: upper bound of the intercellular traffic
  int constraint_count = 0;  // u
  Tuning tuning;
};

/// B = total flow (1 if there is no flow), u = m + |SC| + |SN|.
FitnessConfig make_fitness_config(const FlowGraph& g, const Instance& inst,
                                  Tuning tuning = {});

struct ViolationCounts {
  int oversized_cells = 0;
  int split_cohabitations = 0;
  int joined_separations = 0;

  int total() const {
    return oversized_cells + split_cohabitations + joined_separations;
  }
};

ViolationCounts violation_breakdown(const Partition& p, const Instance& inst);

inline int count_violations(const Partition& p, const Instance& inst) {
  return violation_breakdown(p, inst).total();
}

/// Sum of the weights of the marked edges.
Rational intercellular_traffic(const FlowGraph& g, const EdgeMask& mask);

/// Y = (B - Z) + (u - v) * B, before tuning. Throws std::logic_error when
/// Z > B, Z < 0, or v is outside [0, u].
Rational fitness(const Rational& traffic, int violations,
                 const FitnessConfig& cfg);

struct Evaluation {
  Partition partition;
  Rational traffic;
  ViolationCounts violation_counts;
  int violations = 0;
  bool feasible = false;
  Rational raw_fitness;  // Y before tuning
  double fitness = 0.0;  // tuned; drives selection
};

/// Decodes the mask and scores the resulting partition.
Evaluation evaluate(const FlowGraph& g, const Instance& inst,
                    const EdgeMask& intercellular, const FitnessConfig& cfg);

/// Scores a partition given directly (cells need not be connected).
Evaluation evaluate_partition(const FlowGraph& g, const Instance& inst,
                              Partition partition, const FitnessConfig& cfg);

}  // namespace cellcut

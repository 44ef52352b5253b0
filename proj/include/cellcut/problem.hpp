#pragma once

#include "cellcut/cut_space.hpp"
#include "cellcut/evaluation.hpp"
#include "cellcut/flow_graph.hpp"
#include "cellcut/instance.hpp"

namespace cellcut {

/// Everything a solver derives from an instance before searching.
struct Problem {
  Instance instance;
  TrafficMatrix traffic{0};
  FlowGraph graph;
  FitnessConfig fitness;
};

Problem make_problem(Instance inst, Tuning tuning = {});

}  // namespace cellcut

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellcut/baselines.hpp"
#include "cellcut/bench.hpp"
#include "cellcut/cut_space.hpp"
#include "cellcut/ga.hpp"
#include "cellcut/instance.hpp"
#include "cellcut/problem.hpp"

namespace py = pybind11;
using namespace cellcut;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

std::vector<std::vector<int>> cells_one_based(const Partition& p) {
  auto cells = p.cells;
  for (auto& cell : cells) {
    for (int& m : cell) ++m;
  }
  return cells;
}

std::vector<int> mask_bits(const EdgeMask& mask) {
  std::vector<int> bits(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) bits[i] = mask.test(i) ? 1 : 0;
  return bits;
}

EdgeMask to_mask(const std::vector<int>& bits) {
  EdgeMask mask(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) mask[i] = bits[i] != 0;
  return mask;
}

py::dict outcome_dict(const RunOutcome& r) {
  py::dict d;
  d["cells"] = cells_one_based(r.best.partition);
  d["traffic"] = fraction(r.best.traffic);
  d["feasible"] = r.best.feasible;
  d["violations"] = r.best.violations;
  d["fitness"] = fraction(r.best.raw_fitness);
  d["feasible_found"] = r.feasible_found;
  d["wall_time_s"] = r.wall_time_s;
  d["best_history"] = r.best_history;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cellcut, m) {
  m.doc() = "Cut-based genetic algorithm for manufacturing cell formation";

  py::class_<Instance>(m, "Instance")
      .def_readonly("machine_count", &Instance::machine_count)
      .def_readonly("max_cell_size", &Instance::max_cell_size)
      .def_property_readonly("part_count", [](const Instance& i) { return i.parts.size(); })
      .def_property_readonly("routings",
                             [](const Instance& inst) {
                               std::vector<std::vector<int>> out;
                               for (const auto& p : inst.parts) {
                                 auto r = p.routing;
                                 for (int& x : r) ++x;
                                 out.push_back(std::move(r));
                               }
                               return out;
                             })
      .def_property_readonly("volumes",
                             [](const Instance& inst) {
                               py::list out;
                               for (const auto& p : inst.parts) out.append(fraction(p.volume));
                               return out;
                             })
      .def("serialize", [](const Instance& i) { return serialize_instance(i); })
      .def("warnings", &validation_warnings)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def_static("parse", [](const std::string& text) { return parse_instance(text); },
                  py::arg("text"))
      .def_static("generate", &generate_instance, py::arg("machines"), py::arg("parts"),
                  py::arg("max_cell_size"), py::arg("max_routing_len"), py::arg("seed"));

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);

  py::class_<Problem>(m, "Problem")
      .def(py::init([](const Instance& inst, const std::string& tuning) {
             return make_problem(inst, Tuning::parse(tuning));
           }),
           py::arg("instance"), py::arg("tuning") = "identity")
      .def_property_readonly("instance", [](const Problem& p) { return p.instance; })
      .def_property_readonly("edges",
                             [](const Problem& p) {
                               py::list out;
                               for (const auto& e : p.graph.edges) {
                                 out.append(py::make_tuple(e.first + 1, e.second + 1,
                                                           fraction(e.weight), e.fictive,
                                                           e.in_sc, e.in_sn));
                               }
                               return out;
                             })
      .def_property_readonly("bound", [](const Problem& p) { return fraction(p.fitness.bound); })
      .def_property_readonly("constraint_count",
                             [](const Problem& p) { return p.fitness.constraint_count; })
      .def("cut_from_index",
           [](const Problem& p, std::uint64_t n) {
             return mask_bits(cut_from_index(build_basis(p.graph), n).edges);
           })
      .def("decode_partition",
           [](const Problem& p, const std::vector<int>& bits) {
             return cells_one_based(decode_partition(p.graph, to_mask(bits)));
           })
      .def("decode_chromosome",
           [](const Problem& p, const std::vector<std::uint64_t>& parts) {
             return cells_one_based(
                 decode_chromosome(Chromosome{parts}, build_basis(p.graph), p.graph));
           })
      .def("traffic", [](const Problem& p, const std::vector<int>& bits) {
        return fraction(intercellular_traffic(p.graph, to_mask(bits)));
      });

  m.def("compute_k", &compute_k, py::arg("machines"), py::arg("max_cell_size"));
  m.def(
      "sort_chromosome",
      [](const std::vector<std::uint64_t>& parts) {
        return sort_chromosome(Chromosome{parts}).parts;
      },
      py::arg("parts"));

  m.def(
      "solve",
      [](const Problem& problem, const std::string& method, int pop, int gens, double pc,
         double pm, std::uint64_t seed, int restarts) {
        SolveOptions opts;
        opts.method = parse_method(method);
        opts.population_size = pop;
        opts.generations = gens;
        opts.crossover_rate = pc;
        opts.mutation_rate = pm;
        opts.seed = seed;
        opts.restarts = restarts;
        RunOutcome r;
        {
          py::gil_scoped_release release;
          r = solve(problem, opts);
        }
        return outcome_dict(r);
      },
      py::arg("problem"), py::arg("method") = "scga", py::arg("pop") = 100,
      py::arg("gens") = 100, py::arg("pc") = 0.7, py::arg("pm") = 0.03, py::arg("seed") = 0,
      py::arg("restarts") = 1);

  m.def(
      "bench_csv",
      [](const Problem& problem, const std::vector<std::string>& methods,
         const std::vector<int>& pops, const std::vector<int>& gens, int reps,
         std::uint64_t seed, bool timing) {
        BenchConfig cfg;
        cfg.methods.clear();
        for (const auto& name : methods) cfg.methods.push_back(parse_method(name));
        cfg.populations = pops;
        cfg.generations = gens;
        cfg.replications = reps;
        cfg.base_seed = seed;
        std::vector<BenchRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_bench(problem, cfg);
        }
        std::ostringstream out;
        write_bench_csv(rows, out, timing);
        return out.str();
      },
      py::arg("problem"), py::arg("methods"), py::arg("pops"), py::arg("gens"),
      py::arg("reps") = 20, py::arg("seed") = 0, py::arg("timing") = true);
}

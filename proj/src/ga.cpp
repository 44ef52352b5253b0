#include "cellcut/ga.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "evolve.hpp"

namespace cellcut {
namespace {

// Saturating arithmetic for the distinct-individual count.
constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

/// Number of distinct chromosomes the initializer can produce.
std::uint64_t distinct_individuals(Variant variant, int width, int k) {
  if (variant == Variant::cga) {
    const long bits = static_cast<long>(width) * k;
    return bits >= 64 ? kSaturated : std::uint64_t{1} << bits;
  }
  // Canonical forms: sets of at most k distinct nonzero part values.
  const std::uint64_t values =
      width >= 64 ? kSaturated : (std::uint64_t{1} << width) - 1;
  std::uint64_t total = 1;
  std::uint64_t choose = 1;
  for (int j = 1; j <= k && static_cast<std::uint64_t>(j) <= values; ++j) {
    if (choose == kSaturated || values == kSaturated) return kSaturated;
    // C(values, j) = C(values, j-1) * (values - j + 1) / j; exact at each step.
    const std::uint64_t numer = sat_mul(choose, values - j + 1);
    if (numer == kSaturated) return kSaturated;
    choose = numer / j;
    total = sat_add(total, choose);
  }
  return total;
}

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << bits) - 1;
}

class CutGenomeOps {
 public:
  CutGenomeOps(const Problem& problem, const GAParams& params)
      : problem_(problem),
        params_(params),
        basis_(build_basis(problem.graph)),
        width_(basis_.dimension()),
        k_(compute_k(problem.instance.machine_count, problem.instance.max_cell_size)),
        fitness_(problem.fitness) {
    fitness_.tuning = params.tuning;
  }

  std::vector<Chromosome> initial(Rng& rng) {
    return init_population(params_, problem_.instance.machine_count, k_, rng);
  }

  Chromosome random(Rng& rng) const {
    Chromosome ch;
    ch.parts.resize(k_);
    for (auto& part : ch.parts) part = rng.bits(width_);
    return ch;
  }

  void canonicalize(Chromosome& ch) const {
    if (params_.variant == Variant::scga) ch = sort_chromosome(std::move(ch));
  }

  std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                              const Chromosome& b, Rng& rng) const {
    return rng.coin() ? crossover_any(a, b, width_, rng) : crossover_boundary(a, b, rng);
  }

  void mutate(Chromosome& ch, Rng& rng) const { ch = cellcut::mutate(std::move(ch), width_, rng); }

  Evaluation evaluate(const Chromosome& ch) const {
    return cellcut::evaluate(problem_.graph, problem_.instance, chromosome_mask(ch, basis_),
                             fitness_);
  }

 private:
  const Problem& problem_;
  const GAParams& params_;
  CutBasis basis_;
  int width_;
  int k_;
  FitnessConfig fitness_;
};

}  // namespace

int compute_k(int machines, int max_cell_size) {
  if (machines < 1 || max_cell_size < 1) {
    throw std::invalid_argument("compute_k needs positive arguments");
  }
  return (machines + max_cell_size - 1) / max_cell_size;
}

std::uint64_t part_to_basis_index(std::uint64_t part, int width) {
  std::uint64_t index = 0;
  for (int i = 0; i < width; ++i) {
    index = (index << 1) | ((part >> i) & 1U);
  }
  return index;
}

EdgeMask chromosome_mask(const Chromosome& ch, const CutBasis& basis) {
  EdgeMask mask(basis.edge_count());
  EdgeMask cut(basis.edge_count());
  for (std::uint64_t part : ch.parts) {
    if (part == 0) continue;
    const std::uint64_t index = part_to_basis_index(part, basis.dimension());
    cut.reset();
    for (std::uint64_t bits = index; bits != 0; bits &= bits - 1) {
      cut ^= basis[std::countr_zero(bits)].edges;
    }
    mask |= cut;
  }
  return mask;
}

Partition decode_chromosome(const Chromosome& ch, const CutBasis& basis,
                            const FlowGraph& g) {
  std::vector<Cut> cuts;
  for (std::uint64_t part : ch.parts) {
    if (part != 0) {
      cuts.push_back(cut_from_index(basis, part_to_basis_index(part, basis.dimension())));
    }
  }
  return decode_partition(g, union_cuts(cuts, g.edge_count()));
}

Chromosome sort_chromosome(Chromosome ch) {
  std::sort(ch.parts.begin(), ch.parts.end(), std::greater<>());
  const auto end = std::unique(ch.parts.begin(), ch.parts.end());
  std::fill(end, ch.parts.end(), 0);
  return ch;
}

std::vector<Chromosome> init_population(const GAParams& params, int machines,
                                        int k, Rng& rng) {
  const int width = machines - 1;
  const auto size = static_cast<std::uint64_t>(params.population_size);
  if (size > distinct_individuals(params.variant, width, k)) {
    throw std::invalid_argument("population size " + std::to_string(size) +
                                " exceeds the number of distinct individuals");
  }

  std::vector<Chromosome> population;
  population.reserve(size);
  std::set<Chromosome> seen;
  const std::uint64_t max_attempts = 1000 * size;
  for (std::uint64_t attempt = 0; population.size() < size; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::invalid_argument("could not fill a population of " +
                                  std::to_string(size) + " distinct individuals");
    }
    Chromosome ch;
    ch.parts.resize(k);
    for (auto& part : ch.parts) part = rng.bits(width);
    if (params.variant == Variant::scga) ch = sort_chromosome(std::move(ch));
    if (seen.insert(ch).second) population.push_back(std::move(ch));
  }
  return population;
}

std::vector<Chromosome> init_population(const GAParams& params, int machines, int k) {
  Rng rng(params.seed);
  return init_population(params, machines, k, rng);
}

namespace {

std::size_t pick_from_prefix(const std::vector<double>& prefix, double u) {
  const double target = u * prefix.back();
  const auto it = std::upper_bound(prefix.begin(), prefix.end(), target);
  if (it == prefix.end()) {
    // u * total rounded up to total: take the last slot with positive width.
    std::size_t i = prefix.size() - 1;
    while (i > 0 && prefix[i] == prefix[i - 1]) --i;
    return i;
  }
  return static_cast<std::size_t>(it - prefix.begin());
}

std::vector<double> wheel(std::span<const double> fitnesses) {
  if (fitnesses.empty()) throw std::invalid_argument("roulette over an empty population");
  std::vector<double> prefix(fitnesses.size());
  double total = 0.0;
  for (std::size_t i = 0; i < fitnesses.size(); ++i) {
    if (fitnesses[i] < 0.0) throw std::invalid_argument("negative fitness on the roulette wheel");
    total += fitnesses[i];
    prefix[i] = total;
  }
  if (total <= 0.0) {
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = static_cast<double>(i + 1);
  }
  return prefix;
}

}  // namespace

std::size_t roulette_pick(std::span<const double> fitnesses, double u) {
  return pick_from_prefix(wheel(fitnesses), u);
}

std::vector<std::size_t> roulette_select(std::span<const double> fitnesses,
                                         std::size_t count, Rng& rng) {
  const auto prefix = wheel(fitnesses);
  std::vector<std::size_t> picks(count);
  for (auto& p : picks) p = pick_from_prefix(prefix, rng.uniform());
  return picks;
}

std::pair<Chromosome, Chromosome> crossover_any_at(const Chromosome& a,
                                                   const Chromosome& b, int width,
                                                   int point) {
  const int k = static_cast<int>(a.parts.size());
  if (b.parts.size() != a.parts.size()) {
    throw std::invalid_argument("crossover parents differ in length");
  }
  if (point < 1 || point >= k * width) {
    throw std::out_of_range("crossover point outside the allele chain");
  }
  Chromosome c1 = a;
  Chromosome c2 = b;
  const int split_part = point / width;
  const int kept = point % width;  // leading alleles of split_part kept
  for (int i = split_part; i < k; ++i) {
    if (i == split_part && kept != 0) {
      const std::uint64_t tail = low_mask(width - kept);
      c1.parts[i] = (a.parts[i] & ~tail) | (b.parts[i] & tail);
      c2.parts[i] = (b.parts[i] & ~tail) | (a.parts[i] & tail);
    } else {
      c1.parts[i] = b.parts[i];
      c2.parts[i] = a.parts[i];
    }
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover_any(const Chromosome& a,
                                                const Chromosome& b, int width,
                                                Rng& rng) {
  const int length = static_cast<int>(a.parts.size()) * width;
  if (length < 2) return {a, b};
  const int point = 1 + static_cast<int>(rng.below(length - 1));
  return crossover_any_at(a, b, width, point);
}

std::pair<Chromosome, Chromosome> crossover_boundary_at(const Chromosome& a,
                                                        const Chromosome& b,
                                                        int boundary) {
  const int k = static_cast<int>(a.parts.size());
  if (b.parts.size() != a.parts.size()) {
    throw std::invalid_argument("crossover parents differ in length");
  }
  if (boundary < 1 || boundary >= k) throw std::out_of_range("part boundary out of range");
  Chromosome c1 = a;
  Chromosome c2 = b;
  for (int i = boundary; i < k; ++i) std::swap(c1.parts[i], c2.parts[i]);
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover_boundary(const Chromosome& a,
                                                     const Chromosome& b, Rng& rng) {
  const int k = static_cast<int>(a.parts.size());
  if (k < 2) return {a, b};
  return crossover_boundary_at(a, b, 1 + static_cast<int>(rng.below(k - 1)));
}

Chromosome mutate(Chromosome ch, int width, Rng& rng) {
  if (ch.parts.empty()) return ch;
  ch.parts[rng.below(ch.parts.size())] = rng.bits(width);
  return ch;
}

GAResult run_ga(const Problem& problem, const GAParams& params) {
  CutGenomeOps ops(problem, params);
  return detail::evolve<Chromosome>(params, ops);
}

GAResult run_ga(const Instance& inst, const GAParams& params) {
  return run_ga(make_problem(inst, params.tuning), params);
}

std::string_view to_string(Variant v) { return v == Variant::cga ? "cga" : "scga"; }

}  // namespace cellcut

#include "cellcut/instance.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cellcut/rng.hpp"

namespace cellcut {
namespace {

std::string pair_text(const MachinePair& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) +
         ")";
}

void normalize_pairs(std::vector<MachinePair>& pairs) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

void check_pairs(const std::vector<MachinePair>& pairs, int m,
                 std::string_view label) {
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw InstanceError(std::string(label) + " pair " + pair_text({a, b}) +
                          " is a self-loop");
    }
    if (a < 0 || b >= m) {
      throw InstanceError(std::string(label) + " pair " + pair_text({a, b}) +
                          " references a machine outside [1, " +
                          std::to_string(m) + "]");
    }
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    if (line[i] == ':') {
      tokens.push_back(line.substr(i, 1));
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != ':') {
      ++i;
    }
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, int line, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer " + std::string(what) + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

void validate(Instance& inst) {
  const int m = inst.machine_count;
  if (m < 2) throw InstanceError("machine count must be at least 2");
  if (inst.max_cell_size < 1) throw InstanceError("max cell size must be at least 1");

  for (std::size_t k = 0; k < inst.parts.size(); ++k) {
    const Part& part = inst.parts[k];
    const std::string label = "part " + std::to_string(k + 1);
    if (part.routing.empty()) throw InstanceError(label + " has an empty routing");
    if (part.volume < Rational(0)) throw InstanceError(label + " has a negative volume");
    for (std::size_t i = 0; i < part.routing.size(); ++i) {
      if (part.routing[i] < 0 || part.routing[i] >= m) {
        throw InstanceError(label + " references machine " +
                            std::to_string(part.routing[i] + 1) +
                            " outside [1, " + std::to_string(m) + "]");
      }
      if (i > 0 && part.routing[i] == part.routing[i - 1]) {
        throw InstanceError(label + " repeats machine " +
                            std::to_string(part.routing[i] + 1) +
                            " on consecutive operations");
      }
    }
  }

  normalize_pairs(inst.cohabitation_pairs);
  normalize_pairs(inst.non_cohabitation_pairs);
  check_pairs(inst.cohabitation_pairs, m, "cohabitation");
  check_pairs(inst.non_cohabitation_pairs, m, "non-cohabitation");

  for (const auto& p : inst.cohabitation_pairs) {
    if (std::binary_search(inst.non_cohabitation_pairs.begin(),
                           inst.non_cohabitation_pairs.end(), p)) {
      throw InstanceError("SC and SN overlap on pair " + pair_text(p));
    }
  }
}

std::vector<std::string> validation_warnings(const Instance& inst) {
  std::vector<std::string> warnings;
  std::vector<int> parent(inst.machine_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : inst.cohabitation_pairs) {
    parent[find_root(parent, a)] = find_root(parent, b);
  }
  std::vector<int> group_size(inst.machine_count, 0);
  for (int i = 0; i < inst.machine_count; ++i) ++group_size[find_root(parent, i)];
  for (int i = 0; i < inst.machine_count; ++i) {
    if (group_size[i] > inst.max_cell_size) {
      warnings.push_back("cohabitation group containing machine " +
                         std::to_string(i + 1) + " has " +
                         std::to_string(group_size[i]) +
                         " machines, more than max_cell_size " +
                         std::to_string(inst.max_cell_size) +
                         "; no feasible partition exists");
    }
  }
  return warnings;
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_machines = false;
  bool have_size = false;
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0];

    if (key == "machines" || key == "max_cell_size") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected '" + std::string(key) + " <n>'");
      }
      bool& seen = key == "machines" ? have_machines : have_size;
      if (seen) throw ParseError(line_no, "duplicate '" + std::string(key) + "'");
      seen = true;
      const int value = parse_int(tokens[1], line_no, key);
      (key == "machines" ? inst.machine_count : inst.max_cell_size) = value;
    } else if (key == "part") {
      if (tokens.size() < 4 || tokens[2] != ":") {
        throw ParseError(line_no, "expected 'part <volume> : <machine> ...'");
      }
      Part part;
      try {
        part.volume = parse_rational(tokens[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        const int machine = parse_int(tokens[i], line_no, "machine index") - 1;
        if (!part.routing.empty() && part.routing.back() == machine) {
          throw ParseError(line_no, "machine " + std::to_string(machine + 1) +
                                        " follows itself in the routing");
        }
        part.routing.push_back(machine);
      }
      inst.parts.push_back(std::move(part));
    } else if (key == "cohabit" || key == "separate") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected '" + std::string(key) + " <i> <j>'");
      }
      const MachinePair pair{parse_int(tokens[1], line_no, "machine index") - 1,
                             parse_int(tokens[2], line_no, "machine index") - 1};
      (key == "cohabit" ? inst.cohabitation_pairs : inst.non_cohabitation_pairs)
          .push_back(pair);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!have_machines) throw ParseError(line_no, "missing 'machines' line");
  if (!have_size) throw ParseError(line_no, "missing 'max_cell_size' line");
  validate(inst);
  return inst;
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
  out << "machines " << inst.machine_count << '\n';
  out << "max_cell_size " << inst.max_cell_size << '\n';
  for (const Part& part : inst.parts) {
    out << "part " << format_rational(part.volume) << " :";
    for (int machine : part.routing) out << ' ' << machine + 1;
    out << '\n';
  }
  for (const auto& [a, b] : inst.cohabitation_pairs) {
    out << "cohabit " << a + 1 << ' ' << b + 1 << '\n';
  }
  for (const auto& [a, b] : inst.non_cohabitation_pairs) {
    out << "separate " << a + 1 << ' ' << b + 1 << '\n';
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  serialize_instance(inst, out);
  return out.str();
}

Instance generate_instance(int machines, int parts, int max_cell_size,
                           int max_routing_len, std::uint64_t seed) {
  if (machines < 2 || parts < 1 || max_cell_size < 1 || max_routing_len < 2) {
    throw std::invalid_argument(
        "generate_instance needs machines >= 2, parts >= 1, max_cell_size >= 1, "
        "max_routing_len >= 2");
  }
  Rng rng(seed);
  Instance inst;
  inst.machine_count = machines;
  inst.max_cell_size = max_cell_size;
  inst.parts.reserve(parts);
  for (int k = 0; k < parts; ++k) {
    Part part;
    const auto length = static_cast<int>(rng.between(2, max_routing_len));
    part.routing.push_back(static_cast<int>(rng.below(machines)));
    while (static_cast<int>(part.routing.size()) < length) {
      // Uniform over the machines other than the previous one.
      auto next = static_cast<int>(rng.below(machines - 1));
      if (next >= part.routing.back()) ++next;
      part.routing.push_back(next);
    }
    part.volume = Rational(rng.between(1, 10));
    inst.parts.push_back(std::move(part));
  }
  return inst;
}

}  // namespace cellcut

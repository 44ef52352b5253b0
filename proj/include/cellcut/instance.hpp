#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellcut/rational.hpp"

namespace cellcut {

/// Unordered machine pair, stored 0-based with first < second.
using MachinePair = std::pair<int, int>;

struct Part {
  std::vector<int> routing;  // 0-based machine indices, no adjacent repeats
  Rational volume;           // mean production volume per time unit

  bool operator==(const Part&) const = default;
};

/// A cell formation problem. Machine indices are 0-based in memory and
/// 1-based in every external format.
struct Instance {
  int machine_count = 0;
  std::vector<Part> parts;
  std::vector<MachinePair> cohabitation_pairs;      // sorted, unique
  std::vector<MachinePair> non_cohabitation_pairs;  // sorted, unique
  int max_cell_size = 1;

  bool operator==(const Instance&) const = default;
};

/// Syntax error in an instance file.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Violated semantic invariant (overlapping SC/SN, out-of-range index, ...).
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Normalizes pair order and sorts/dedups the constraint sets, then checks
/// every invariant. Throws InstanceError.
void validate(Instance& inst);

/// Non-fatal diagnostics, e.g. a cohabitation group larger than the cell size.
std::vector<std::string> validation_warnings(const Instance& inst);

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

/// Random instance with routing lengths uniform in [2, max_routing_len] and
/// integer volumes uniform in [1, 10]; no SC/SN pairs.
Instance generate_instance(int machines, int parts, int max_cell_size,
                           int max_routing_len, std::uint64_t seed);

}  // namespace cellcut

#include "cellcut/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace cellcut {
namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  if (digits.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.front() == '-') {
    throw std::invalid_argument("negative value '" + std::string(text) + "'");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    const std::int64_t d = parse_digits(den, text);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_digits(num, text), d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (!all_digits(int_part) || !all_digits(frac_part) || frac_part.size() > 15 ||
        (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / scale) {
      throw std::invalid_argument("number out of range '" + std::string(text) + "'");
    }
    return Rational(whole * scale + frac, scale);
  }
  if (!all_digits(text)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return Rational(parse_digits(text, text));
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

}  // namespace cellcut

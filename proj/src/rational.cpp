#include "fvinv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fvinv {

std::string to_string(const Coefficient& c) { return c.str(); }

std::string to_string(const Integer& z) { return z.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

} // namespace

Coefficient parse_coefficient(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  const Integer q{std::string(den)};
  if (q == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Coefficient(Integer{std::string(num)}, q);
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

} // namespace fvinv

#include "hexalab/rational.hpp"

#include <charconv>
#include <ostream>

#include "hexalab/error.hpp"

namespace hexalab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto n = parse_int(trim(s.substr(0, slash)), text);
    const auto d = parse_int(trim(s.substr(slash + 1)), text);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (frac_part.size() > 17 || frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::int64_t whole = 0;
    if (!int_part.empty() && int_part != "-" && int_part != "+") whole = parse_int(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    Rational r = Rational(whole) + Rational(negative ? -frac : frac, scale);
    return r;
  }
  return Rational(parse_int(s, text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hexalab

#include "kcut/weight.hpp"

#include <cctype>
#include <cstddef>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Weight> try_parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  size_t slash = s.find('/');
  size_t dot = s.find('.');
  Weight value;
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Weight(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = mpz_class(std::string(whole), 10) * scale + mpz_class(std::string(frac), 10);
    value = Weight(num, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Weight(mpz_class(std::string(s), 10));
  }
  if (negative) value = -value;
  return value;
}

Weight parse_rational(std::string_view text, std::string_view what) {
  auto value = try_parse_rational(text);
  if (!value) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(text) +
                     "' (expected 'p', 'p/q' or a decimal literal)");
  }
  return *value;
}

std::string rational_str(const Weight& q) { return q.get_str(); }

}  // namespace kcut

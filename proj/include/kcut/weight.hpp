#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kcut {

// Exact rational scalar used for every weight, ratio and threshold in the
// library. Backed by GMP; arithmetic never rounds and comparisons are exact,
// so strict-inequality thresholds are decidable.
using Weight = mpq_class;

// num/den in lowest terms.
inline Weight rational(long num, long den = 1) {
  Weight q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "p/q" and decimal literals ("3.25"), all parsed exactly.
// Returns nullopt on anything else.
std::optional<Weight> try_parse_rational(std::string_view text);

// Same, but throws InputError mentioning `what` on malformed input.
Weight parse_rational(std::string_view text, std::string_view what = "rational");

// Canonical text form: "p" for integers, "p/q" in lowest terms otherwise.
std::string rational_str(const Weight& q);

}  // namespace kcut

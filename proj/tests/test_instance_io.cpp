#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "kcut/errors.hpp"
#include "kcut/generators.hpp"
#include "kcut/instance_io.hpp"

using namespace kcut;
using namespace kcut::tests;

namespace {

const char* kStarText =
    "# the small star\n"
    "p mwc 4 3 3\n"
    "t 1\n"
    "t 2\n"
    "t 3\n"
    "e 1 4 1\n"
    "e 2 4 1\n"
    "e 3 4 2\n";

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parses the star") {
  Instance inst = parse_instance(kStarText);
  CHECK(inst == star_112());
}

TEST_CASE("rational and decimal weights parse exactly") {
  Instance inst = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 3/2\n");
  CHECK(inst.edge(0).w == rational(3, 2));
  Instance dec = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 0.1\n");
  CHECK(dec.edge(0).w == rational(1, 10));
}

TEST_CASE("duplicate edge lines merge by weight sum") {
  Instance inst = parse_instance("p mwc 2 2 2\nt 1\nt 2\ne 1 2 1/3\ne 2 1 2/3\n");
  CHECK(inst.edge_count() == 1);
  CHECK(inst.edge(0).w == 1);
}

TEST_CASE("each malformed input is a distinct error with its line") {
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 0\n"),
                       doctest::Contains("nonpositive weight"), ParseError);
  CHECK(parse_error_line("p mwc 2 1 2\nt 1\nt 2\ne 1 2 0\n") == 4);

  CHECK_THROWS_WITH_AS(parse_instance("p mwc x 1 2\n"), doctest::Contains("malformed header"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("q mwc 2 1 2\n"), doctest::Contains("expected header"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 3 0 3\nt 1\nt 2\nz 3\n"),
                       doctest::Contains("unknown line tag"), ParseError);
  CHECK(parse_error_line("p mwc 3 0 3\nt 1\nt 2\nz 3\n") == 4);

  CHECK_THROWS_WITH_AS(parse_instance("p mwc 3 0 3\nt 1\nt 2\n"),
                       doctest::Contains("terminal lines"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 2\n"),
                       doctest::Contains("edge lines"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 9\ne 1 2 1\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 5 1\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 1 1\n"),
                       doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 1\ne 1 2 1\n"),
                       doctest::Contains("duplicate terminal"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 1/0\n"),
                       doctest::Contains("malformed weight"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance(""), doctest::Contains("missing header"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("p mwc 3 0 1\nt 1\n"), doctest::Contains("at least 2"),
                       ParseError);
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize_instance(star_112()) ==
        "p mwc 4 3 3\nt 1\nt 2\nt 3\ne 1 4 1\ne 2 4 1\ne 3 4 2\n");
  // Lowest terms on output.
  Instance ugly = parse_instance("p mwc 2 1 2\nt 1\nt 2\ne 1 2 10/4\n");
  CHECK(serialize_instance(ugly) == "p mwc 2 1 2\nt 1\nt 2\ne 1 2 5/2\n");
}

TEST_CASE("round trip identity") {
  Instance tight = tight_instance(3, rational(1, 2));
  CHECK(parse_instance(serialize_instance(tight)) == tight);
  CHECK(parse_instance(serialize_instance(star_113())) == star_113());

  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomGraphSpec spec;
    spec.n = 9;
    spec.k = 4;
    spec.edge_prob = rational(2, 5);
    spec.wmin = rational(1, 3);
    spec.wmax = rational(17, 2);
    spec.seed = seed;
    Instance inst = random_instance(spec);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

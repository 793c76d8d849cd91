#pragma once

#include <string>
#include <string_view>

#include "kcut/graph.hpp"

namespace kcut {

// Text format, bit-exact for rational weights:
//
//   # comment lines allowed anywhere
//   p mwc <n> <m> <k>
//   t <vertex-id>          exactly k lines, order defines t_1..t_k
//   e <u> <v> <weight>     exactly m lines; weight is 'p', 'p/q' or decimal
//
// Vertex ids are 1-based in files. Duplicate edge lines merge by weight sum.
// Every malformed input raises ParseError with the offending line number.
Instance parse_instance(std::string_view text);

// Canonical form: terminals in order, edges sorted by (u, v), weights in
// lowest terms. parse_instance(serialize_instance(inst)) == inst.
std::string serialize_instance(const Instance& inst);

// Reads a file ("-" means standard input). Throws InputError when the file
// cannot be read, ParseError when it does not parse.
Instance load_instance_file(const std::string& path);

// Writes serialize_instance(inst) to a file ("-" means standard output).
void write_instance_file(const Instance& inst, const std::string& path);

}  // namespace kcut

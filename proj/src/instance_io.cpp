#include "kcut/instance_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

bool parse_int(const std::string& token, int& out) {
  if (token.empty() || token.size() > 9) return false;
  int value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  int lineno = 0;

  bool have_header = false;
  int n = 0, m = 0, k = 0;
  std::vector<VertexId> terminals;
  std::vector<Edge> edges;

  while (std::getline(input, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& tag = toks[0];

    if (!have_header) {
      if (tag != "p") throw ParseError(lineno, "expected header 'p mwc <n> <m> <k>'");
      if (toks.size() != 5 || toks[1] != "mwc" || !parse_int(toks[2], n) ||
          !parse_int(toks[3], m) || !parse_int(toks[4], k)) {
        throw ParseError(lineno, "malformed header (want 'p mwc <n> <m> <k>')");
      }
      if (k < 2) throw ParseError(lineno, "terminal count k must be at least 2");
      if (k > n) throw ParseError(lineno, "terminal count k exceeds vertex count");
      have_header = true;
      continue;
    }

    if (tag == "t") {
      if (static_cast<int>(terminals.size()) == k) {
        throw ParseError(lineno, "more than " + std::to_string(k) + " terminal lines");
      }
      int v;
      if (toks.size() != 2 || !parse_int(toks[1], v)) throw ParseError(lineno, "malformed terminal line");
      if (v < 1 || v > n) throw ParseError(lineno, "terminal id out of range");
      for (VertexId t : terminals) {
        if (t == v - 1) throw ParseError(lineno, "duplicate terminal");
      }
      terminals.push_back(v - 1);
    } else if (tag == "e") {
      if (static_cast<int>(edges.size()) == m) {
        throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
      }
      int u, v;
      if (toks.size() != 4 || !parse_int(toks[1], u) || !parse_int(toks[2], v)) {
        throw ParseError(lineno, "malformed edge line (want 'e <u> <v> <weight>')");
      }
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      auto w = try_parse_rational(toks[3]);
      if (!w) throw ParseError(lineno, "malformed weight '" + toks[3] + "'");
      if (!(*w > 0)) throw ParseError(lineno, "nonpositive weight");
      edges.push_back(Edge{u - 1, v - 1, std::move(*w)});
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }

  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'p mwc <n> <m> <k>'");
  if (static_cast<int>(terminals.size()) != k) {
    throw ParseError(lineno, "expected " + std::to_string(k) + " terminal lines, got " +
                                 std::to_string(terminals.size()));
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(edges.size()));
  }
  return Instance(n, std::move(edges), std::move(terminals));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "p mwc " << inst.vertex_count() << ' ' << inst.edge_count() << ' '
     << inst.terminal_count() << '\n';
  for (VertexId t : inst.terminals()) os << "t " << t + 1 << '\n';
  for (const Edge& e : inst.edges()) {
    os << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << rational_str(e.w) << '\n';
  }
  return os.str();
}

Instance load_instance_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_instance(buffer.str());
}

void write_instance_file(const Instance& inst, const std::string& path) {
  if (path == "-") {
    std::cout << serialize_instance(inst);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace kcut

#pragma once

#include <stdexcept>
#include <string>

#include "mop/certify.hpp"
#include "mop/family.hpp"

namespace mop {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// Plain-text family format:
//   family <t> <n>
//   graph <k> [d=<d>]     (k counts up from 0)
//   <u> <v>               (one per edge, u < v, sorted lexicographically)
// '#' starts a comment, single spaces separate fields, trailing newline.
// Emission is a pure function of the family, so written files are stable
// golden bytes.
std::string emit_family(const Family& f);

// Inverse of emit_family. Strict mode insists on canonical bytes (u < v,
// sorted, no stray whitespace); lenient mode normalizes pair order and
// sorting. Duplicate edges, bad labels, and malformed lines are rejected
// in both modes, reporting the line number.
Family parse_family(const std::string& text, bool strict = false);

// Standard graph6 encoding, small format only (n <= 62).
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// Graphviz output. With a certificate the vertices are pinned on a circle
// in outer-cycle order and chords drawn dashed, mirroring the usual way
// these graphs are pictured.
std::string emit_dot(const Graph& g, const MopCertificate* cert = nullptr);

}  // namespace mop

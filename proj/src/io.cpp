#include "mop/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mop {

std::string emit_family(const Family& f) {
  f.validate();
  std::ostringstream out;
  out << "family " << f.t() << " " << f.n << "\n";
  for (int k = 0; k < f.t(); ++k) {
    const Member& m = f.members[static_cast<std::size_t>(k)];
    out << "graph " << k;
    if (m.step.has_value()) out << " d=" << *m.step;
    out << "\n";
    for (const Edge& e : m.edges) out << e.u << " " << e.v << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos == tok.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
}

}  // namespace

Family parse_family(const std::string& text, bool strict) {
  Family f;
  int expected_t = -1;
  int member_index = -1;
  bool saw_header = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;

    if (!saw_header) {
      if (tok.size() != 3 || tok[0] != "family") {
        throw ParseError(line_no, "expected 'family <t> <n>'");
      }
      expected_t = parse_int(tok[1], line_no, "member count");
      f.n = parse_int(tok[2], line_no, "order");
      if (expected_t < 0) throw ParseError(line_no, "negative member count");
      if (f.n < 1) throw ParseError(line_no, "order must be positive");
      saw_header = true;
      continue;
    }

    if (tok[0] == "graph") {
      if (tok.size() < 2 || tok.size() > 3) {
        throw ParseError(line_no, "expected 'graph <k> [d=<d>]'");
      }
      int k = parse_int(tok[1], line_no, "member index");
      if (k != member_index + 1) {
        throw ParseError(line_no, "member index " + std::to_string(k) + " out of sequence");
      }
      Member m;
      if (tok.size() == 3) {
        if (tok[2].rfind("d=", 0) != 0) {
          throw ParseError(line_no, "expected 'd=<d>', got '" + tok[2] + "'");
        }
        int d = parse_int(tok[2].substr(2), line_no, "step");
        if (d < 1) throw ParseError(line_no, "step must be positive");
        m.step = d;
      }
      f.members.push_back(std::move(m));
      ++member_index;
      continue;
    }

    if (member_index < 0) throw ParseError(line_no, "edge before any 'graph' line");
    if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    int u = parse_int(tok[0], line_no, "vertex label");
    int v = parse_int(tok[1], line_no, "vertex label");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u < 0 || v < 0 || u >= f.n || v >= f.n) {
      throw ParseError(line_no, "label outside {0,...," + std::to_string(f.n - 1) + "}");
    }
    if (strict && u > v) {
      throw ParseError(line_no, "edge not in canonical order (smaller label first)");
    }
    auto& edges = f.members.back().edges;
    Edge e(u, v);
    if (strict && !edges.empty() && !(edges.back() < e)) {
      throw ParseError(line_no, "edges not sorted");
    }
    edges.push_back(e);
  }

  if (!saw_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'family' header");
  if (member_index + 1 != expected_t) {
    throw ParseError(line_no, "header promises " + std::to_string(expected_t) + " members, found " +
                                  std::to_string(member_index + 1));
  }
  for (int k = 0; k < f.t(); ++k) {
    auto& edges = f.members[static_cast<std::size_t>(k)].edges;
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw ParseError(line_no, "member " + std::to_string(k) + " repeats edge {" +
                                    std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
  }
  return f;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) {
    throw std::invalid_argument("graph6 small format covers n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 1 || n > 62) throw std::invalid_argument("unsupported graph6 order byte");
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  long long need = (pairs + 5) / 6;
  if (static_cast<long long>(text.size()) != 1 + need) {
    throw std::invalid_argument("graph6 length mismatch");
  }
  Graph g(n);
  long long at = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++at) {
      int c = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + at / 6)]) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6 byte out of range");
      if ((c >> (5 - at % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits past the triangle must be zero.
  for (long long rest = at; rest < need * 6; ++rest) {
    int c = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + rest / 6)]) - 63;
    if ((c >> (5 - rest % 6)) & 1) throw std::invalid_argument("graph6 padding not zero");
  }
  return g;
}

std::string emit_dot(const Graph& g, const MopCertificate* cert) {
  std::ostringstream out;
  out << "graph mop {\n";
  out << "  node [shape=circle fontsize=10];\n";
  int n = g.order();
  std::vector<int> pos;
  if (cert != nullptr && static_cast<int>(cert->outer_cycle.size()) == n) {
    pos.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      int v = cert->outer_cycle[static_cast<std::size_t>(i)];
      pos[static_cast<std::size_t>(v)] = i;
      double angle = 3.14159265358979323846 * (0.5 - 2.0 * i / n);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.4f,%.4f!", 2.0 * std::cos(angle),
                    2.0 * std::sin(angle));
      out << "  " << v << " [pos=\"" << buf << "\"];\n";
    }
  } else {
    for (int v = 0; v < n; ++v) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (!pos.empty()) {
      int gap = pos[static_cast<std::size_t>(e.u)] - pos[static_cast<std::size_t>(e.v)];
      if (gap < 0) gap = -gap;
      if (gap != 1 && gap != n - 1) out << " [style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mop

#include "mop/rotation.hpp"

#include <algorithm>
#include <string>

#include "mop/certify.hpp"

namespace mop {
namespace {

void require_positive(int t) {
  if (t < 1) throw std::invalid_argument("member count must be positive, got " + std::to_string(t));
}

// Internal vertices of the quadrant arc between apexes q*t and (q+1)*t,
// listed in outer-cycle order. The labels (q+1)t+1 .. (q+2)t-1 are woven
// so that consecutive cycle vertices sit far apart numerically; rotating
// the whole picture then never reuses an edge.
std::vector<int> quadrant_arc(int t, int q) {
  std::vector<int> woven;
  int lo = (q + 1) * t + 1;
  int hi = (q + 2) * t - 1;
  bool take_hi = true;
  while (lo <= hi) {
    if (take_hi) {
      woven.push_back(hi--);
    } else {
      woven.push_back(lo++);
    }
    take_hi = !take_hi;
  }
  std::reverse(woven.begin(), woven.end());
  int n = 4 * t;
  for (int& v : woven) v %= n;
  return woven;
}

}  // namespace

std::vector<int> rotation_base_cycle(int t) {
  require_positive(t);
  std::vector<int> cycle;
  cycle.reserve(static_cast<std::size_t>(4 * t));
  for (int q = 0; q < 4; ++q) {
    cycle.push_back(q * t);
    for (int v : quadrant_arc(t, q)) cycle.push_back(v);
  }
  return cycle;
}

Graph rotation_base(int t) {
  require_positive(t);
  int n = 4 * t;
  Graph g(n);
  std::vector<int> cycle = rotation_base_cycle(t);
  for (int i = 0; i < n; ++i) {
    g.add_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)]);
  }
  for (int q = 0; q < 4; ++q) {
    g.add_edge(q * t, ((q + 1) % 4) * t);  // apex square
    for (int v : quadrant_arc(t, q)) g.add_edge(q * t, v);  // apex fan
  }
  return g;
}

Graph rotation_graph(int t, int i) {
  require_positive(t);
  int n = 4 * t;
  if (i < 0 || i >= t) {
    throw std::invalid_argument("member index " + std::to_string(i) +
                                " outside {0,...," + std::to_string(t - 1) + "}");
  }
  Graph base = rotation_base(t);
  Graph g(n);
  for (const Edge& e : base.edges()) g.add_edge((e.u + i) % n, (e.v + i) % n);
  g.add_edge(i, i + 2 * t);  // the long diagonal
  return g;
}

std::vector<Edge> rotation_missing_matching(int t) {
  require_positive(t);
  std::vector<Edge> missing;
  for (int i = t; i < 2 * t; ++i) missing.emplace_back(i, i + 2 * t);
  return missing;
}

Family rotation_family(int t) {
  require_positive(t);
  Family f;
  f.n = 4 * t;
  for (int i = 0; i < t; ++i) {
    Member m;
    m.edges = rotation_graph(t, i).edges();
    f.members.push_back(std::move(m));
  }

  for (int i = 0; i < t; ++i) {
    CertifyResult cert = certify_mop(f.member_graph(i));
    if (!cert.ok()) {
      throw std::logic_error("rotation member " + std::to_string(i) +
                             " failed certification: " + describe(cert.reject));
    }
  }
  if (auto hit = find_collision(f)) {
    throw std::logic_error("rotation members " + std::to_string(hit->first_member) + " and " +
                           std::to_string(hit->second_member) + " share an edge");
  }
  Graph expected = complete_minus_matching(f.n, rotation_missing_matching(t));
  if (!(family_union(f) == expected)) {
    throw std::logic_error("rotation union differs from the complete graph minus its matching");
  }
  return f;
}

}  // namespace mop

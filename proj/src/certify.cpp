#include "mop/certify.hpp"

#include <algorithm>

namespace mop {

const char* describe(MopReject r) {
  switch (r) {
    case MopReject::None:
      return "accepted";
    case MopReject::TooFewVertices:
      return "fewer than 3 vertices";
    case MopReject::WrongEdgeCount:
      return "edge count differs from 2n-3";
    case MopReject::BadCommonNeighborCount:
      return "an edge's endpoints share 0 or more than 2 neighbors";
    case MopReject::OuterEdgesNotHamiltonian:
      return "outer-edge candidates do not form a spanning cycle";
    case MopReject::CrossingChords:
      return "two chords cross";
  }
  return "unknown";
}

namespace {

int common_neighbor_count(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  int count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Walks the candidate outer edges from vertex 0; they must induce degree 2
// everywhere and close into one spanning cycle.
std::optional<std::vector<int>> hamiltonian_cycle_of(const std::vector<Edge>& outer, int n) {
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  for (const Edge& e : outer) {
    nbr[static_cast<std::size_t>(e.u)].push_back(e.v);
    nbr[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : nbr) {
    if (row.size() != 2) return std::nullopt;
    std::sort(row.begin(), row.end());
  }
  std::vector<int> cycle;
  cycle.reserve(static_cast<std::size_t>(n));
  int prev = 0;
  int cur = nbr[0][0];  // smaller neighbor fixes the orientation
  cycle.push_back(0);
  while (cur != 0) {
    cycle.push_back(cur);
    const auto& row = nbr[static_cast<std::size_t>(cur)];
    int next = (row[0] == prev) ? row[1] : row[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(cycle.size()) != n) return std::nullopt;
  return cycle;
}

}  // namespace

EdgeSplit split_by_common_neighbors(const Graph& g) {
  EdgeSplit split;
  for (const Edge& e : g.edges()) {
    switch (common_neighbor_count(g, e.u, e.v)) {
      case 1:
        split.outer.push_back(e);
        break;
      case 2:
        split.chords.push_back(e);
        break;
      default:
        split.clean = false;
        return split;
    }
  }
  return split;
}

bool chords_cross(const std::vector<int>& positions, const Edge& a, const Edge& b) {
  int a1 = positions[static_cast<std::size_t>(a.u)];
  int a2 = positions[static_cast<std::size_t>(a.v)];
  int b1 = positions[static_cast<std::size_t>(b.u)];
  int b2 = positions[static_cast<std::size_t>(b.v)];
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

CertifyResult certify_mop(const Graph& g) {
  CertifyResult result;
  int n = g.order();
  if (n < 3) {
    result.reject = MopReject::TooFewVertices;
    return result;
  }
  if (g.edge_count() != static_cast<std::size_t>(2 * n - 3)) {
    result.reject = MopReject::WrongEdgeCount;
    return result;
  }
  EdgeSplit split = split_by_common_neighbors(g);
  if (!split.clean) {
    result.reject = MopReject::BadCommonNeighborCount;
    return result;
  }
  if (static_cast<int>(split.outer.size()) != n) {
    result.reject = MopReject::OuterEdgesNotHamiltonian;
    return result;
  }
  auto cycle = hamiltonian_cycle_of(split.outer, n);
  if (!cycle) {
    result.reject = MopReject::OuterEdgesNotHamiltonian;
    return result;
  }
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>((*cycle)[static_cast<std::size_t>(i)])] = i;
  for (std::size_t i = 0; i < split.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < split.chords.size(); ++j) {
      if (chords_cross(pos, split.chords[i], split.chords[j])) {
        result.reject = MopReject::CrossingChords;
        return result;
      }
    }
  }
  result.certificate = MopCertificate{std::move(*cycle), std::move(split.chords)};
  return result;
}

bool verify_certificate(const Graph& g, const MopCertificate& c) {
  int n = g.order();
  if (n < 3) return false;
  if (g.edge_count() != static_cast<std::size_t>(2 * n - 3)) return false;
  if (static_cast<int>(c.outer_cycle.size()) != n) return false;
  if (static_cast<int>(c.chords.size()) != n - 3) return false;

  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = c.outer_cycle[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = i;
  }
  if (c.outer_cycle[0] != 0) return false;
  if (c.outer_cycle[1] > c.outer_cycle[static_cast<std::size_t>(n - 1)]) return false;

  for (int i = 0; i < n; ++i) {
    int u = c.outer_cycle[static_cast<std::size_t>(i)];
    int v = c.outer_cycle[static_cast<std::size_t>((i + 1) % n)];
    if (!g.has_edge(u, v)) return false;
  }
  for (std::size_t i = 0; i < c.chords.size(); ++i) {
    const Edge& e = c.chords[i];
    if (!(Edge(e.u, e.v) == e)) return false;  // canonical orientation
    if (i > 0 && !(c.chords[i - 1] < e)) return false;
    if (!g.has_edge(e.u, e.v)) return false;
    int gap = pos[static_cast<std::size_t>(e.u)] - pos[static_cast<std::size_t>(e.v)];
    if (gap < 0) gap = -gap;
    if (gap == 1 || gap == n - 1) return false;  // cycle edge posing as a chord
    for (std::size_t j = 0; j < i; ++j) {
      if (chords_cross(pos, c.chords[j], e)) return false;
    }
  }
  // n cycle edges plus n-3 distinct chords account for all 2n-3 edges.
  return true;
}

}  // namespace mop

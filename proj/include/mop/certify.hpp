#pragma once

#include <optional>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

// Witness that a graph is maximal outerplanar: its unique Hamiltonian outer
// cycle plus the n-3 pairwise non-crossing chords. The cycle starts at
// vertex 0 and runs toward 0's smaller cycle neighbor, so the certificate
// is a pure function of the graph.
struct MopCertificate {
  std::vector<int> outer_cycle;
  std::vector<Edge> chords;
};

enum class MopReject {
  None,
  TooFewVertices,
  WrongEdgeCount,
  BadCommonNeighborCount,
  OuterEdgesNotHamiltonian,
  CrossingChords,
};

const char* describe(MopReject r);

struct CertifyResult {
  std::optional<MopCertificate> certificate;
  MopReject reject = MopReject::None;

  bool ok() const { return certificate.has_value(); }
};

// Splits edges by how many neighbors their endpoints share. In a maximal
// outerplanar graph every outer-cycle edge has exactly one common neighbor
// and every chord exactly two, so the split is a cheap candidate partition;
// certify_mop re-derives the cycle and crossing structure from scratch and
// never trusts the counts alone.
struct EdgeSplit {
  std::vector<Edge> outer;
  std::vector<Edge> chords;
  bool clean = true;  // false when some edge has a count other than 1 or 2
};

EdgeSplit split_by_common_neighbors(const Graph& g);

// Decides maximal outerplanarity and produces the certificate. Rejects
// n < 3 outright; K_2 is conventionally excluded along with everything
// below it.
CertifyResult certify_mop(const Graph& g);

// Recomputes every certificate property against g, trusting no field:
// the cycle must be Hamiltonian in g and canonically oriented, the chords
// must be exactly the remaining edges, sorted, and pairwise non-crossing.
bool verify_certificate(const Graph& g, const MopCertificate& c);

// positions maps each vertex to its index on the outer cycle. Two chords
// cross when their endpoints interleave around the cycle; sharing an
// endpoint does not count as crossing.
bool chords_cross(const std::vector<int>& positions, const Edge& a, const Edge& b);

}  // namespace mop

#pragma once

#include <iosfwd>
#include <optional>

#include "mop/bounds.hpp"
#include "mop/certify.hpp"
#include "mop/family.hpp"
#include "mop/limits.hpp"

namespace mop {

struct MemberVerdict {
  int index = 0;
  long long edges = 0;
  int max_degree = 0;
  bool maximal = false;                  // certified maximal outerplanar
  std::optional<MopCertificate> certificate;
  MopReject reject = MopReject::None;
  // Fallback oracle verdict, filled only when not maximal and the member
  // fits under the oracle cap.
  std::optional<bool> outerplanar;
};

struct VerificationReport {
  int t = 0;
  int n = 0;
  std::vector<MemberVerdict> members;
  std::optional<EdgeCollision> collision;
  long long union_edges = 0;
  long long optimal_edges = 0;  // t (2n - 3)
  int union_max_degree = 0;
  BoundReport bound;

  bool disjoint() const { return !collision.has_value(); }
  // allow_outerplanar accepts members that are outerplanar without being
  // maximal; otherwise every member must carry a certificate.
  bool valid(bool allow_outerplanar = false) const;
};

struct VerifyOptions {
  bool parallel = true;
  int oracle_cap = limits::kOuterplanarOracleMaxN;
};

// Certifies every member (in parallel across members when enabled; the
// per-member work is independent, so the report is identical either way),
// finds the first edge collision, and fills the union statistics.
VerificationReport verify_family(const Family& f, const VerifyOptions& opts = {});

// Deterministic plain-text rendering, one line per member.
void print_report(std::ostream& out, const VerificationReport& r, bool allow_outerplanar = false);

}  // namespace mop

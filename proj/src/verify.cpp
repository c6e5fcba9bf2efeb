#include "mop/verify.hpp"

#include <ostream>

#include "mop/outerplanar.hpp"

namespace mop {

bool VerificationReport::valid(bool allow_outerplanar) const {
  if (!disjoint()) return false;
  for (const MemberVerdict& m : members) {
    if (m.maximal) continue;
    if (allow_outerplanar && m.outerplanar.has_value() && *m.outerplanar) continue;
    return false;
  }
  return true;
}

VerificationReport verify_family(const Family& f, const VerifyOptions& opts) {
  f.validate();
  VerificationReport report;
  report.t = f.t();
  report.n = f.n;
  report.members.resize(static_cast<std::size_t>(f.t()));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
  for (int k = 0; k < f.t(); ++k) {
    Graph g = f.member_graph(k);
    MemberVerdict verdict;
    verdict.index = k;
    verdict.edges = static_cast<long long>(g.edge_count());
    verdict.max_degree = g.max_degree();
    CertifyResult cert = certify_mop(g);
    verdict.maximal = cert.ok();
    verdict.reject = cert.reject;
    if (cert.ok()) {
      verdict.certificate = std::move(cert.certificate);
    } else if (g.order() <= opts.oracle_cap) {
      verdict.outerplanar = is_outerplanar_small(g, opts.oracle_cap);
    }
    report.members[static_cast<std::size_t>(k)] = std::move(verdict);
  }

  report.collision = find_collision(f);
  Graph u = family_union(f);
  report.union_edges = static_cast<long long>(u.edge_count());
  report.union_max_degree = u.max_degree();
  report.optimal_edges = static_cast<long long>(f.t()) * (2LL * f.n - 3);
  if (f.n >= 3) report.bound = counting_check(f.t(), f.n);
  return report;
}

void print_report(std::ostream& out, const VerificationReport& r, bool allow_outerplanar) {
  out << "family t=" << r.t << " n=" << r.n << "\n";
  for (const MemberVerdict& m : r.members) {
    out << "member " << m.index << ": edges=" << m.edges << " max_degree=" << m.max_degree;
    if (m.maximal) {
      out << " maximal-outerplanar";
    } else {
      out << " not-maximal (" << describe(m.reject) << ")";
      if (m.outerplanar.has_value()) {
        out << (*m.outerplanar ? " outerplanar" : " not-outerplanar");
      }
    }
    out << "\n";
  }
  if (r.collision.has_value()) {
    out << "collision: members " << r.collision->first_member << " and "
        << r.collision->second_member << " share {" << r.collision->edge.u << ","
        << r.collision->edge.v << "}\n";
  } else {
    out << "pairwise-disjoint: yes\n";
  }
  out << "union: edges=" << r.union_edges << " of " << r.optimal_edges
      << " max_degree=" << r.union_max_degree << "\n";
  out << "bound: total=" << r.bound.total << " capacity=" << r.bound.capacity << " "
      << (r.bound.feasible() ? "feasible" : "infeasible") << "\n";
  out << "verdict: " << (r.valid(allow_outerplanar) ? "VALID" : "INVALID") << "\n";
}

}  // namespace mop

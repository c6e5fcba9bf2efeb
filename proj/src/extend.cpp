#include "mop/extend.hpp"

#include <algorithm>
#include <string>

#include "mop/certify.hpp"

namespace mop {

ExtensionPlan plan_extension(const Family& f) {
  ExtensionPlan plan;
  plan.new_vertex = f.n;
  std::vector<bool> blocked(static_cast<std::size_t>(f.n), false);
  for (int k = 0; k < f.t(); ++k) {
    CertifyResult cert = certify_mop(f.member_graph(k));
    if (!cert.ok()) {
      throw std::invalid_argument("cannot plan around member " + std::to_string(k) +
                                  ", not maximal outerplanar: " + describe(cert.reject));
    }
    const auto& cycle = cert.certificate->outer_cycle;
    Edge best;
    bool have = false;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int u = cycle[j];
      int v = cycle[(j + 1) % cycle.size()];
      if (blocked[static_cast<std::size_t>(u)] || blocked[static_cast<std::size_t>(v)]) continue;
      Edge e(u, v);
      if (!have || e < best) {
        best = e;
        have = true;
      }
    }
    if (!have) {
      throw PlanningError("member " + std::to_string(k) +
                          " has no unblocked outer edge at order " + std::to_string(f.n));
    }
    blocked[static_cast<std::size_t>(best.u)] = true;
    blocked[static_cast<std::size_t>(best.v)] = true;
    plan.matching.push_back(best);
  }
  return plan;
}

Family extend_family(const Family& f, const ExtensionPlan& p) {
  if (static_cast<int>(p.matching.size()) != f.t()) {
    throw std::invalid_argument("plan covers " + std::to_string(p.matching.size()) +
                                " members, family has " + std::to_string(f.t()));
  }
  if (p.new_vertex != f.n) {
    throw std::invalid_argument("plan grows to label " + std::to_string(p.new_vertex) +
                                ", family order is " + std::to_string(f.n));
  }
  std::vector<bool> used(static_cast<std::size_t>(f.n), false);
  for (int k = 0; k < f.t(); ++k) {
    const Edge& e = p.matching[static_cast<std::size_t>(k)];
    if (e.u < 0 || e.v >= f.n) {
      throw std::invalid_argument("plan edge outside the vertex range");
    }
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) {
      throw std::invalid_argument("plan edges share a vertex");
    }
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
    const auto& edges = f.members[static_cast<std::size_t>(k)].edges;
    if (!std::binary_search(edges.begin(), edges.end(), e)) {
      throw std::invalid_argument("plan edge missing from member " + std::to_string(k));
    }
  }

  Family out;
  out.n = f.n + 1;
  for (int k = 0; k < f.t(); ++k) {
    Member m;
    m.edges = f.members[static_cast<std::size_t>(k)].edges;
    const Edge& e = p.matching[static_cast<std::size_t>(k)];
    m.edges.emplace_back(e.u, f.n);
    m.edges.emplace_back(e.v, f.n);
    std::sort(m.edges.begin(), m.edges.end());
    out.members.push_back(std::move(m));
  }
  return out;
}

Family extend_to(const Family& f, int n_target, bool verify_each_step) {
  if (n_target < f.n) {
    throw std::invalid_argument("target order " + std::to_string(n_target) +
                                " below the current order " + std::to_string(f.n));
  }
  Family cur = f;
  while (cur.n < n_target) {
    ExtensionPlan plan = plan_extension(cur);
    cur = extend_family(cur, plan);
    if (verify_each_step) {
      for (int k = 0; k < cur.t(); ++k) {
        CertifyResult cert = certify_mop(cur.member_graph(k));
        if (!cert.ok()) {
          throw std::logic_error("member " + std::to_string(k) + " broke at order " +
                                 std::to_string(cur.n) + ": " + describe(cert.reject));
        }
      }
      if (auto hit = find_collision(cur)) {
        throw std::logic_error("members " + std::to_string(hit->first_member) + " and " +
                               std::to_string(hit->second_member) +
                               " collided at order " + std::to_string(cur.n));
      }
    }
  }
  return cur;
}

}  // namespace mop

#include "mop/doubling.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mop/certify.hpp"

namespace mop {
namespace {

void require_level(int s, int max_level) {
  if (s < 0) throw std::invalid_argument("level must be nonnegative, got " + std::to_string(s));
  if (s > max_level) {
    throw std::invalid_argument("level " + std::to_string(s) + " exceeds the doubling cap " +
                                std::to_string(max_level));
  }
}

int order_at(int s) { return 1 << (s + 2); }

}  // namespace

bool has_step_cycle(const Graph& g, int step) {
  int n = g.order();
  if (step <= 0 || step % 2 == 0) return false;
  for (int j = 0; j < n; ++j) {
    int a = static_cast<int>((static_cast<long long>(j) * step) % n);
    int b = static_cast<int>((static_cast<long long>(j + 1) * step) % n);
    if (!g.has_edge(a, b)) return false;
  }
  return true;
}

StarMember double_member(const StarMember& m, DoublingVariant variant) {
  int n = m.graph.order();
  if (!has_step_cycle(m.graph, m.step) || !certify_mop(m.graph).ok()) {
    throw std::invalid_argument("doubling input lacks the arithmetic outer cycle");
  }
  int n2 = 2 * n;
  bool odd = (variant == DoublingVariant::Odd);
  auto relabel = [&](int v) { return (odd ? 2 * v + 1 : 2 * v) % n2; };
  int shift = odd ? m.step + n : m.step;  // new vertex sits this far past each cycle vertex

  Graph out(n2);
  for (const Edge& e : m.graph.edges()) out.add_edge(relabel(e.u), relabel(e.v));
  for (int j = 0; j < n; ++j) {
    int u = static_cast<int>((static_cast<long long>(j) * m.step) % n);
    int a = relabel(u);
    int x = (a + shift) % n2;
    int b = relabel((u + m.step) % n);
    out.add_edge(a, x);
    out.add_edge(x, b);
  }

  StarMember child;
  child.graph = std::move(out);
  child.step = shift;
  child.index = m.index;  // final position is assigned by the caller
  return child;
}

Family base_family() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(0, 2);
  Family f;
  f.n = 4;
  Member m;
  m.edges = g.edges();
  m.step = 1;
  f.members.push_back(std::move(m));
  return f;
}

Graph doubling_target(int s) {
  int n = order_at(s);
  std::vector<Edge> missing;
  int quarter = 1 << s;
  for (int i = quarter; i < 2 * quarter; ++i) missing.emplace_back(i, i + n / 2);
  return complete_minus_matching(n, missing);
}

Family doubling_family(int s, int max_level) {
  require_level(s, max_level);

  std::vector<StarMember> level;
  {
    Family base = base_family();
    StarMember root;
    root.graph = base.member_graph(0);
    root.step = 1;
    root.index = 0;
    level.push_back(std::move(root));
  }
  for (int cur = 0; cur < s; ++cur) {
    int width = 1 << cur;
    std::vector<StarMember> next(static_cast<std::size_t>(2 * width));
    for (int k = 0; k < width; ++k) {
      StarMember even = double_member(level[static_cast<std::size_t>(k)], DoublingVariant::Even);
      even.index = k;
      StarMember odd = double_member(level[static_cast<std::size_t>(k)], DoublingVariant::Odd);
      odd.index = width + k;
      next[static_cast<std::size_t>(even.index)] = std::move(even);
      next[static_cast<std::size_t>(odd.index)] = std::move(odd);
    }
    level = std::move(next);
  }

  Family f;
  f.n = order_at(s);
  for (const StarMember& m : level) {
    Member member;
    member.edges = m.graph.edges();
    member.step = m.step;
    f.members.push_back(std::move(member));
  }

  for (int k = 0; k < f.t(); ++k) {
    Graph g = f.member_graph(k);
    if (!certify_mop(g).ok() || !has_step_cycle(g, *f.members[static_cast<std::size_t>(k)].step)) {
      throw std::logic_error("doubling member " + std::to_string(k) +
                             " failed certification at level " + std::to_string(s));
    }
  }
  if (auto hit = find_collision(f)) {
    throw std::logic_error("doubling members " + std::to_string(hit->first_member) + " and " +
                           std::to_string(hit->second_member) + " share an edge at level " +
                           std::to_string(s));
  }
  if (!(family_union(f) == doubling_target(s))) {
    throw std::logic_error("doubling union differs from its target at level " + std::to_string(s));
  }
  return f;
}

namespace {

// Shared validation for the coverage checks: a power-of-two order >= 4 and
// a verified odd step on every member.
std::vector<int> verified_steps(const Family& f) {
  int n = f.n;
  if (n < 4 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("coverage checks need a power-of-two order >= 4");
  }
  std::vector<int> steps;
  for (int k = 0; k < f.t(); ++k) {
    const Member& m = f.members[static_cast<std::size_t>(k)];
    if (!m.step.has_value()) {
      throw std::invalid_argument("member " + std::to_string(k) + " carries no step metadata");
    }
    if (!has_step_cycle(f.member_graph(k), *m.step)) {
      throw std::invalid_argument("member " + std::to_string(k) +
                                  " step metadata does not match its edges");
    }
    steps.push_back(*m.step % n);
  }
  return steps;
}

}  // namespace

bool covers_odd_steps(const Family& f) {
  int n = f.n;
  std::set<int> seen;
  for (int d : verified_steps(f)) {
    seen.insert(d);
    seen.insert((n - d) % n);
  }
  for (int r = 1; r < n; r += 2) {
    if (seen.find(r) == seen.end()) return false;
  }
  return static_cast<int>(seen.size()) == n / 2;
}

bool covers_middle_edges(const Family& f) {
  int n = f.n;
  verified_steps(f);  // shared validation
  int quarter = n / 4;
  for (int i = 0; i < quarter; ++i) {
    bool present = false;
    for (int k = 0; k < f.t() && !present; ++k) {
      const auto& edges = f.members[static_cast<std::size_t>(k)].edges;
      present = std::binary_search(edges.begin(), edges.end(), Edge(i, i + n / 2));
    }
    if (!present) return false;
  }
  return true;
}

}  // namespace mop

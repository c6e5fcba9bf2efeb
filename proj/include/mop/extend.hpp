#pragma once

#include <stdexcept>

#include "mop/family.hpp"

namespace mop {

// One growth round: matching[i] is the outer-cycle edge of member i that
// the fresh vertex attaches to. No two chosen edges share a vertex, so the
// members stay edge-disjoint after the attachment.
struct ExtensionPlan {
  std::vector<Edge> matching;
  int new_vertex = 0;  // always the current order
};

struct PlanningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scans members in order and takes each member's lexicographically smallest
// outer-cycle edge avoiding all previously chosen endpoints. Throws
// PlanningError when a member has every outer edge blocked (cannot happen
// at order >= 4t, where at most 4i endpoints are taken when member i
// chooses among its n outer edges) and std::invalid_argument when a member
// is not certified maximal outerplanar.
ExtensionPlan plan_extension(const Family& f);

// Adds vertex n joined to both endpoints of each member's chosen edge,
// turning that outer edge into a triangle ear. Step metadata is dropped:
// the grown outer cycles are no longer arithmetic.
Family extend_family(const Family& f, const ExtensionPlan& p);

// Plans and applies rounds until the family reaches order n_target. With
// verify_each_step every intermediate family is fully re-checked
// (certificates and disjointness) and a defect reports its order.
Family extend_to(const Family& f, int n_target, bool verify_each_step = false);

}  // namespace mop

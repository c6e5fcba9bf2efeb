#include "mop/limits.hpp"

#include <cstdlib>
#include <string>

namespace mop::limits {

long long node_budget_from_env() {
  const char* raw = std::getenv("MOPKIT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
  try {
    std::size_t pos = 0;
    long long value = std::stoll(raw, &pos);
    if (pos == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  return kDefaultNodeBudget;
}

}  // namespace mop::limits

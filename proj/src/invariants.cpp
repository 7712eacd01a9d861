#include "indegraph/invariants.hpp"

#include <functional>
#include <map>

namespace indegraph {

std::uint64_t degree_sum(const std::vector<DegreeRun>& runs) {
  std::uint64_t total = 0;
  for (const auto& r : runs) total += r.degree * r.count;
  return total;
}

std::vector<DegreeRun> degree_runs(const std::vector<std::uint64_t>& degrees) {
  std::map<std::uint64_t, std::uint64_t, std::greater<>> hist;
  for (auto d : degrees) ++hist[d];
  std::vector<DegreeRun> out;
  out.reserve(hist.size());
  for (const auto& [d, c] : hist) out.push_back({d, c});
  return out;
}

}  // namespace indegraph

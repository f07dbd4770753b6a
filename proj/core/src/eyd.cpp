#include "selt/eyd.hpp"

#include <algorithm>
#include <deque>

#include "selt/error.hpp"

namespace selt {

ExcitedDiagram initial_diagram(const StrictPartition& lambda, const StrictPartition& mu) {
  if (!contains(lambda, mu)) {
    throw ContainmentError(lambda.to_string() + " is not contained in " + mu.to_string());
  }
  ExcitedDiagram d{mu, {}};
  for (const Box& b : lambda.boxes()) d.pluses.insert(b);
  return d;
}

std::vector<ExcitedDiagram> local_moves(const ExcitedDiagram& d) {
  auto free_box = [&](Box b) { return d.ambient.has_box(b) && !d.pluses.contains(b); };
  std::vector<ExcitedDiagram> out;
  for (const Box& b : d.pluses) {
    const Box east{b.row, b.col + 1};
    const Box target{b.row + 1, b.col + 1};
    const Box south{b.row + 1, b.col};
    if (!free_box(east) || !free_box(target)) continue;
    if (d.ambient.has_box(south) && d.pluses.contains(south)) continue;
    ExcitedDiagram next = d;
    next.pluses.erase(b);
    next.pluses.insert(target);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<ExcitedDiagram> enumerate_eyd(const StrictPartition& lambda, const StrictPartition& mu,
                                          Traversal order) {
  if (!contains(lambda, mu)) return {};
  std::set<ExcitedDiagram> seen;
  std::deque<ExcitedDiagram> frontier{initial_diagram(lambda, mu)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    ExcitedDiagram cur;
    if (order == Traversal::kBreadthFirst) {
      cur = std::move(frontier.front());
      frontier.pop_front();
    } else {
      cur = std::move(frontier.back());
      frontier.pop_back();
    }
    for (ExcitedDiagram& next : local_moves(cur)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t count_eyd(const StrictPartition& lambda, const StrictPartition& mu) {
  return enumerate_eyd(lambda, mu).size();
}

std::uint64_t frakd_localization(const StrictPartition& lambda, const StrictPartition& mu) {
  const std::uint64_t diagrams = count_eyd(mu, rho(lambda.length()));
  return diagrams << (mu.size() - mu.length());
}

}  // namespace selt

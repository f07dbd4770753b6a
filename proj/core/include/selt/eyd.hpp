#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "selt/partition.hpp"

// Excited Young diagrams of a strict partition inside a shifted ambient shape.

namespace selt {

struct ExcitedDiagram {
  StrictPartition ambient;
  std::set<Box> pluses;

  bool operator==(const ExcitedDiagram&) const = default;
  auto operator<=>(const ExcitedDiagram& o) const { return pluses <=> o.pluses; }
};

/// +'s on the boxes of lambda. Throws ContainmentError unless lambda is
/// contained in mu.
ExcitedDiagram initial_diagram(const StrictPartition& lambda, const StrictPartition& mu);

/// Every diagram one local move away. A + at (i,j) moves to (i+1,j+1) when
/// (i,j+1) and (i+1,j+1) are free boxes of the ambient shape and (i+1,j) is
/// free or outside it.
std::vector<ExcitedDiagram> local_moves(const ExcitedDiagram& d);

enum class Traversal { kBreadthFirst, kDepthFirst };

/// The closure of the initial diagram under local moves, sorted. Empty when
/// lambda is not contained in mu.
std::vector<ExcitedDiagram> enumerate_eyd(const StrictPartition& lambda, const StrictPartition& mu,
                                          Traversal order = Traversal::kBreadthFirst);

std::uint64_t count_eyd(const StrictPartition& lambda, const StrictPartition& mu);

/// #E_{rho_{l(lambda)}}(mu) * 2^{|mu| - l(mu)}.
std::uint64_t frakd_localization(const StrictPartition& lambda, const StrictPartition& mu);

}  // namespace selt

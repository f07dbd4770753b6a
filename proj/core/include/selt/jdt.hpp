#pragma once

#include <cstdint>
#include <vector>

#include "selt/partition.hpp"
#include "selt/tableau.hpp"

namespace selt {

/// Which local move carried the hole one step.
enum class SlideRule {
  kSouth = 1,         // (1) south label moves up
  kEast = 2,          // (2) east label moves west
  kDiagonalEast = 3,  // (3) diagonal box, east label smaller than the edge set
  kEdgeAbsorb = 4,    // (4) diagonal box, smallest edge label moves up; terminal
};

struct SlideRecord {
  Box corner;
  /// Boxes occupied by the hole, in order, starting with the corner.
  std::vector<Box> path;
  std::vector<SlideRule> rules;
  /// True when the slide ended by absorbing an edge label (rule (4)); false
  /// when the hole ran out of labels and its box left the outer shape.
  bool absorbed_edge_label = false;
};

/// jdt_c applied in place. Throws NotACorner unless c is an inner corner.
SlideRecord slide_in_place(EdgeTableau& t, Box corner);

/// jdt_c(T) as a new tableau.
EdgeTableau jdt_slide(const EdgeTableau& t, Box corner, SlideRecord* record = nullptr);

/// The inner corner row rectification slides next: the last box of the last
/// inner row. Requires a nonempty inner shape.
Box southmost_inner_corner(const SkewShape& shape);

struct RectificationTrace {
  /// T_0 = T, T_1, ..., T_{|inner|}.
  std::vector<EdgeTableau> states;
  std::vector<Box> corners;
  std::vector<SlideRecord> slides;

  const EdgeTableau& result() const { return states.back(); }
};

/// Row rectification with the full trace. Validates the input (throws
/// InvalidTableau).
RectificationTrace rectify(const EdgeTableau& t);

/// Rect(T) without recording intermediate states and without validating the
/// input; the fast path for exhaustive sweeps.
EdgeTableau rect(EdgeTableau t);

/// d^nu_{lambda,mu}: the number of tableaux in SELT(nu/lambda, |mu|) whose
/// rectification is S_mu, by exhaustive enumeration. Zero when lambda is not
/// contained in nu or |mu| is too small to fill nu/lambda. `jobs` > 1 splits
/// the enumeration across threads.
std::uint64_t count_d(const StrictPartition& lambda, const StrictPartition& mu,
                      const StrictPartition& nu, int jobs = 1);

}  // namespace selt

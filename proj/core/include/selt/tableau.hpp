#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "selt/partition.hpp"

namespace selt {

/// A shifted edge labeled tableau: one label per box of the skew shape and a
/// (possibly empty) sorted label set on each diagonal edge of the outer shape.
///
/// Boxes of the inner shape hold no label (stored as 0). The storage can also
/// represent malformed fillings (labels inside the inner shape, labels on a
/// nonexistent edge, repeated labels) so that validate() can report them.
class EdgeTableau {
 public:
  EdgeTableau() = default;
  /// Empty filling of `shape` over the label set [label_count].
  EdgeTableau(SkewShape shape, int label_count);

  const SkewShape& shape() const { return shape_; }
  int label_count() const { return label_count_; }

  /// Label in (row, col); 0 when empty or outside the outer shape.
  int at(int row, int col) const {
    if (!shape_.outer().has_box(row, col)) return 0;
    return rows_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - row)];
  }
  int at(Box b) const { return at(b.row, b.col); }

  /// Writes a label into a box of the outer shape (0 clears it).
  void set(Box b, int label);

  /// Labels on diagonal edge i (1-based), ascending. Empty past the end.
  const std::vector<int>& edge(int i) const;
  /// Number of stored edge slots; equals length(outer) for well-formed data.
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  /// Replaces edge i. Indices beyond length(outer) are stored so that
  /// validation can flag them.
  void set_edge(int i, std::vector<int> labels);
  void insert_edge_label(int i, int label);
  void erase_edge_label(int i, int label);

  /// Removes the empty last box of `row` from the outer shape (and the edge
  /// under it, which must be empty, when the row disappears).
  void remove_outer_box(int row);
  /// Moves the inner corner at the end of inner row `row` into the skew part.
  void remove_inner_box(int row) { shape_.remove_inner_box(row); }

  /// Position index of every label: boxes of the skew shape in row-major
  /// order come first, then edges 1, 2, ... This "position word" is the
  /// canonical serialization used to order enumeration streams.
  std::vector<int> position_word() const;

  bool operator==(const EdgeTableau&) const = default;

 private:
  SkewShape shape_;
  int label_count_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> edges_;
};

enum class Axiom { kOneLabelPerBox, kEdgeSets, kEachLabelOnce, kIncreasing };

/// "(i)" ... "(iv)".
std::string axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::string message;
  std::optional<Box> box;
  std::optional<int> edge;
};

/// Every violation of axioms (i)-(iv); empty means valid.
std::vector<Violation> validate(const EdgeTableau& t);
inline bool is_valid(const EdgeTableau& t) { return validate(t).empty(); }

/// Throws InvalidTableau listing the violations.
void require_valid(const EdgeTableau& t);

/// Restricts an enumeration to one shard of the search tree. Prefixes reached
/// at `depth` labels are dealt round-robin over `count` shards.
struct Shard {
  int index = 0;
  int count = 1;
  int depth = 2;
};

using TableauVisitor = std::function<void(const EdgeTableau&)>;

/// Visits every tableau of SELT(shape, n) exactly once, in increasing
/// lexicographic order of position_word(). Labels are placed in increasing
/// order; a placement that would break axiom (iv) is never made.
/// Throws CapacityError if n is smaller than the number of boxes.
void for_each_selt(const SkewShape& shape, int n, const TableauVisitor& visit,
                   const Shard& shard = {});

std::vector<EdgeTableau> enumerate_selt(const SkewShape& shape, int n);
std::uint64_t count_selt(const SkewShape& shape, int n);

/// Boxes of mu filled 1..|mu| in English reading order, no edge labels.
EdgeTableau superstandard(const StrictPartition& mu);

/// True iff t has straight shape mu and equals superstandard(mu).
bool is_superstandard(const EdgeTableau& t, const StrictPartition& mu);

/// E_k(T) together with the labels of column k in rows 1..k. Sorted.
/// Throws IndexError unless 1 <= k <= outer_1 (the last column).
std::vector<int> col_set(const EdgeTableau& t, int k);

/// Labels in row r of a straight-shape tableau. Sorted. Throws IndexError
/// for rows outside the shape.
std::vector<int> row_set(const EdgeTableau& t, int r);

}  // namespace selt

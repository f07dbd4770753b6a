#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace selt {

/// A box of a shifted diagram in 1-based matrix coordinates. Row i of a
/// shifted shape occupies columns i, i+1, ..., i + part_i - 1.
struct Box {
  int row = 0;
  int col = 0;

  bool is_diagonal() const { return row == col; }
  auto operator<=>(const Box&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Box& b);

/// Strictly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws InvalidArgument unless `parts` is strictly decreasing and positive.
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Part i (1-based); zero past the end.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
  }

  /// True iff (row, col) is a box of the shifted diagram.
  bool has_box(int row, int col) const {
    return row >= 1 && row <= length() && col >= row &&
           col <= row + part(row) - 1;
  }
  bool has_box(Box b) const { return has_box(b.row, b.col); }

  /// Boxes in row-major order.
  std::vector<Box> boxes() const;

  std::string to_string() const;

  /// Removes the last box of `row`. Throws InvalidArgument if the result
  /// would not be a strict partition.
  void remove_last_box(int row);

  auto operator<=>(const StrictPartition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const StrictPartition& p);

/// (n, n-1, ..., 1). Throws InvalidArgument for negative n.
StrictPartition rho(int n);

/// First m parts of rho(n). Requires 0 <= m <= n.
StrictPartition rho_nm(int n, int m);

/// Containment of shifted diagrams.
bool contains(const StrictPartition& inner, const StrictPartition& outer);

/// Skew shape outer/inner. Diagonal edges belong to the outer shape: edge i
/// exists whenever (i,i) is a box of outer, even if that box lies in inner.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws ContainmentError unless inner is contained in outer.
  SkewShape(StrictPartition outer, StrictPartition inner);

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }

  bool in_skew(int row, int col) const {
    return outer_.has_box(row, col) && !inner_.has_box(row, col);
  }
  bool in_skew(Box b) const { return in_skew(b.row, b.col); }

  std::vector<Box> boxes() const;
  int box_count() const { return outer_.size() - inner_.size(); }
  /// Indices 1..length(outer).
  int edge_count() const { return outer_.length(); }
  std::vector<int> diagonal_edges() const;

  bool is_straight() const { return inner_.empty(); }

  /// In-place shrinking used by jeu de taquin.
  void remove_inner_box(int row) { inner_.remove_last_box(row); }
  void remove_outer_box(int row) { outer_.remove_last_box(row); }

  bool operator==(const SkewShape&) const = default;

 private:
  StrictPartition outer_;
  StrictPartition inner_;
};

/// Convenience wrapper that validates containment.
SkewShape skew(const StrictPartition& nu, const StrictPartition& lambda);

/// Maximally southeast boxes of the inner shape, north to south.
std::vector<Box> inner_corners(const SkewShape& shape);

/// All strict partitions of exactly `size`, in reverse lexicographic order of
/// parts (largest first part first).
std::vector<StrictPartition> strict_partitions_of(int size);

/// All strict partitions with size <= max_size, grouped by increasing size.
std::vector<StrictPartition> strict_partitions_up_to(int max_size);

/// All strict partitions contained in rho(n) (parts bounded by n).
std::vector<StrictPartition> strict_partitions_in_rho(int n);

std::int64_t binomial(int n, int k);

}  // namespace selt

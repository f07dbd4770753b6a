#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "selt/jdt.hpp"
#include "selt/partition.hpp"
#include "selt/tableau.hpp"

// Calculus on tableaux of shape rho_n/rho_n carrying the labels of
// S_{rho_{n,m}} on their diagonal edges: the all-edges tableau U_{n,m},
// I-slides between neighbouring edges, slide decompositions and the
// slidability criterion that decides which of these tableaux rectify to
// S_{rho_{n,m}}.

namespace selt {

/// The pair (n, m) indexing a staircase computation.
struct Staircase {
  int n = 0;
  int m = 0;

  /// Throws InvalidArgument unless 0 <= m <= n.
  static Staircase make(int n, int m);
  /// Recovers (n, m) from a tableau of shape rho_n/lambda whose label count is
  /// |rho_{n,m}|. Throws InvalidArgument when no such m exists.
  static Staircase of(const EdgeTableau& t);

  int label_count() const;
  /// Column of label j in S_{rho_{n,m}}.
  int s_column(int j) const;
  /// Row of label j in S_{rho_{n,m}}.
  int s_row(int j) const;
  /// row_r(S_{rho_{n,m}}) for 1 <= r <= m; empty otherwise.
  std::vector<int> row(int r) const;
  /// Label of S_{rho_{n,m}} in (row, col).
  int entry(int r, int c) const;

  bool operator==(const Staircase&) const = default;
};

/// U_{n,m}: shape rho_n/rho_n with E_i = col_i(S_{rho_{n,m}}).
EdgeTableau u_tableau(int n, int m);

/// Sl_I(T): moves I from edge h to edge h+1. T must have shape rho_n/rho_n.
/// Throws IndexError unless 1 <= h <= n-1 and NotASubset unless I is
/// contained in E_h(T).
EdgeTableau i_slide(const EdgeTableau& t, int h, const std::vector<int>& labels);

/// A label sitting strictly west of its column in S_{rho_{n,m}}.
struct BadWitness {
  int label = 0;
  int s_column = 0;  // its column in S_{rho_{n,m}}
  int t_column = 0;  // the column of T holding it
};

/// The smallest witness that T is bad, or nothing when T is good. T may have
/// any shape rho_n/lambda with |rho_{n,m}| labels.
std::optional<BadWitness> bad_witness(const EdgeTableau& t);
inline bool is_bad(const EdgeTableau& t) { return bad_witness(t).has_value(); }
inline bool is_good(const EdgeTableau& t) { return !is_bad(t); }

/// I(T) = (I_1, ..., I_{n-1}).
struct SlideDecomposition {
  std::vector<std::vector<int>> sets;

  /// I_k for 1 <= k <= n-1.
  const std::vector<int>& at(int k) const { return sets[static_cast<size_t>(k - 1)]; }
  bool operator==(const SlideDecomposition&) const = default;
};

/// Closed form I_l = { j : s_column(j) <= l < edge(j) }, checked by rebuilding
/// T from U_{n,m}. Throws BadTableau for bad T.
SlideDecomposition slide_decomposition(const EdgeTableau& t);

/// (Sl_{I_{n-1}} o ... o Sl_{I_1})(U_{n,m}).
EdgeTableau apply_decomposition(const Staircase& p, const SlideDecomposition& d);

/// T^{(k)} = (Sl_{I_{k-1}} o ... o Sl_{I_1})(U_{n,m}) for 1 <= k <= n.
EdgeTableau partial_tableau(const Staircase& p, const SlideDecomposition& d, int k);

/// shift_j on a rectification state of shape rho_n/lambda'. Acts when j lies
/// in col_{h+1} and the state's box (h,h) is empty or holds a label below j:
/// j moves to E_h, the entries of column h+1 at or after j move up one place,
/// and the lowest box takes the smallest label of E_{h+1}. When E_{h+1} is
/// empty the lowest box is removed instead (identity if it is not the last box
/// of its row). Otherwise the identity.
EdgeTableau shift_op(const EdgeTableau& state, int j, int h);

/// shift_J = shift_{j_l} o ... o shift_{j_1} for J = {j_1 < ... < j_l}.
EdgeTableau shift_set(const EdgeTableau& state, std::vector<int> labels, int h);

/// r-compatibility: no label of rows 1..r of S_{rho_{n,m}}, with column c
/// there, ever sits in box (c'-2, c') for c' > c in the states T_1, T_2, ...
/// of T's rectification.
bool is_r_compatible(const EdgeTableau& t, int r);
/// Same check on a precomputed trace of T.
bool is_r_compatible(const Staircase& p, const RectificationTrace& trace, int r);

/// The candidate set for step k: the smallest label of each row of
/// S_{rho_{n,m}} among rows 1..k found on E_k(T^{(k)}).
std::vector<int> slidable_candidates(const Staircase& p, const EdgeTableau& partial, int k);

struct SlidableStep {
  int k = 0;
  std::vector<int> edge;        // E_k(T^{(k)})
  std::vector<int> candidates;  // lighter-shaded entries
  std::vector<int> chosen;      // I(T)_k
  bool ok = false;
};

struct SlidableReport {
  bool slidable = true;
  SlideDecomposition decomposition;
  std::vector<SlidableStep> steps;
};

/// Per-step slidability of I(T). Throws BadTableau for bad T.
SlidableReport slidable_report(const EdgeTableau& t);
inline bool is_slidable(const EdgeTableau& t) { return slidable_report(t).slidable; }

/// Subset of the boxes in the first n-1 columns of rho_{n,m}. A box is stored
/// as (column, row), column i and row r of S_{rho_{n,m}}.
struct Shading {
  int n = 0;
  int m = 0;
  std::set<std::pair<int, int>> shaded;

  bool operator==(const Shading&) const = default;
};

/// Boxes that may be shaded, ordered by column then row.
std::vector<std::pair<int, int>> shadable_boxes(const Staircase& p);

/// Builds T by choosing, for each shaded (i, r), the smallest label of row r
/// of S_{rho_{n,m}} on E_i(T^{(i)}) for I(T)_i. Throws InvalidArgument for
/// boxes outside the first n-1 columns of rho_{n,m}.
EdgeTableau shading_to_tableau(const Shading& s);

/// Inverse of shading_to_tableau. Throws BadTableau or NotSlidable.
Shading tableau_to_shading(const EdgeTableau& t);

/// Visits every slidable decomposition for (n, m) together with its tableau.
void for_each_slidable(const Staircase& p,
                       const std::function<void(const SlideDecomposition&, const EdgeTableau&)>& visit);

/// d^{rho_n}_{rho_n, rho_{n,m}} counted as the number of slidable slide
/// decompositions; no rectification involved.
std::uint64_t count_d_staircase(int n, int m);

/// Every good tableau in Tab(rho_n/rho_n, |rho_{n,m}|).
void for_each_good(const Staircase& p, const std::function<void(const EdgeTableau&)>& visit);

}  // namespace selt

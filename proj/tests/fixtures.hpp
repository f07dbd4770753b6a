#pragma once

// Hand-transcribed tableaux from published worked examples.

#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "selt/partition.hpp"
#include "selt/tableau.hpp"

namespace fixtures {

struct Entry {
  int row, col, label;
};
struct EdgeLabels {
  int edge;
  std::vector<int> labels;
};

inline selt::EdgeTableau make(selt::StrictPartition outer, selt::StrictPartition inner, int n,
                              std::initializer_list<Entry> boxes,
                              std::initializer_list<EdgeLabels> edges) {
  selt::EdgeTableau t(selt::SkewShape(std::move(outer), std::move(inner)), n);
  for (const Entry& e : boxes) t.set({e.row, e.col}, e.label);
  for (const EdgeLabels& e : edges) t.set_edge(e.edge, e.labels);
  return t;
}

// Shape (5,3,2)/(3,2) with 8 labels: one valid tableau and three that break
// axioms (ii), (iii) and (iv) respectively.
inline selt::EdgeTableau axioms_valid() {
  return make({5, 3, 2}, {3, 2}, 8, {{1, 4, 2}, {1, 5, 6}, {2, 4, 5}, {3, 3, 4}, {3, 4, 7}},
              {{2, {1, 3}}, {3, {8}}});
}
// Labels 1 and 3 sit on an edge that is not the southern edge of a diagonal
// box of the outer shape.
inline selt::EdgeTableau axioms_break_ii() {
  return make({5, 3, 2}, {3, 2}, 8, {{1, 4, 2}, {1, 5, 6}, {2, 4, 5}, {3, 3, 4}, {3, 4, 7}},
              {{4, {1, 3}}, {3, {8}}});
}
inline selt::EdgeTableau axioms_break_iii() {
  return make({5, 3, 2}, {3, 2}, 8, {{1, 4, 2}, {1, 5, 6}, {2, 4, 5}, {3, 3, 4}, {3, 4, 7}},
              {{2, {1, 3}}, {3, {6, 8}}});
}
inline selt::EdgeTableau axioms_break_iv() {
  return make({5, 3, 2}, {3, 2}, 8, {{1, 4, 2}, {1, 5, 6}, {2, 4, 5}, {3, 3, 4}, {3, 4, 7}},
              {{2, {1}}, {3, {3, 8}}});
}

// Shape (3,2,1)/(2): the slide from (1,2) moves 1 up, 3 west, 5 up and
// finally pulls 7 off the third edge.
inline selt::EdgeTableau jdt_path_start() {
  return make({3, 2, 1}, {2}, 7, {{1, 3, 2}, {2, 2, 1}, {2, 3, 3}, {3, 3, 5}},
              {{2, {4, 6}}, {3, {7}}});
}
inline selt::EdgeTableau jdt_path_end() {
  return make({3, 2, 1}, {1}, 7, {{1, 2, 1}, {1, 3, 2}, {2, 2, 3}, {2, 3, 5}, {3, 3, 7}},
              {{2, {4, 6}}});
}

// The two tableaux of shape (3,2)/(2,1) with 5 labels rectifying to S_(3,2).
inline selt::EdgeTableau rectifying_first() {
  return make({3, 2}, {2, 1}, 5, {{1, 3, 3}, {2, 3, 5}}, {{1, {1}}, {2, {2, 4}}});
}
inline selt::EdgeTableau rectifying_second() {
  return make({3, 2}, {2, 1}, 5, {{1, 3, 3}, {2, 3, 5}}, {{2, {1, 2, 4}}});
}

inline selt::EdgeTableau staircase_edges(int n, int labels, std::initializer_list<EdgeLabels> edges) {
  return make(selt::rho(n), selt::rho(n), labels, {}, edges);
}

// (n,m) = (4,4) tableau used for the shift operator, and the rectification
// state with index 7 of its {8}-slide at h = 3 before and after shift_8.
inline selt::EdgeTableau shift_source() {
  return staircase_edges(4, 10, {{2, {2, 5}}, {3, {1, 3, 6, 8}}, {4, {4, 7, 9, 10}}});
}
inline selt::EdgeTableau shift_state() {
  return make({4, 3, 2, 1}, {3}, 10,
              {{1, 4, 4}, {2, 2, 1}, {2, 3, 3}, {2, 4, 7}, {3, 3, 6}, {3, 4, 8}, {4, 4, 9}},
              {{2, {2, 5}}, {4, {10}}});
}
inline selt::EdgeTableau shift_state_shifted() {
  return make({4, 3, 2, 1}, {3}, 10,
              {{1, 4, 4}, {2, 2, 1}, {2, 3, 3}, {2, 4, 7}, {3, 3, 6}, {3, 4, 9}, {4, 4, 10}},
              {{2, {2, 5}}, {3, {8}}});
}

// (n,m) = (4,4): the slidable candidates at k = 3 are {1, 5, 8}.
inline selt::EdgeTableau candidates_example() {
  return staircase_edges(4, 10, {{2, {2}}, {3, {1, 3, 5, 6, 8}}, {4, {4, 7, 9, 10}}});
}

// (n,m) = (3,3): T is slidable, T' fails at k = 2.
inline selt::EdgeTableau slidable_t() {
  return staircase_edges(3, 6, {{1, {1}}, {2, {4}}, {3, {2, 3, 5, 6}}});
}
inline selt::EdgeTableau slidable_t_prime() {
  return staircase_edges(3, 6, {{2, {1, 4}}, {3, {2, 3, 5, 6}}});
}

// (n,m) = (4,2): shading {(1,1),(2,1),(3,2)} and its tableau.
inline selt::EdgeTableau shading_tableau() {
  return staircase_edges(4, 7, {{2, {2, 5}}, {3, {1, 3}}, {4, {4, 6, 7}}});
}

}  // namespace fixtures

#include "selt/tableau.hpp"

#include <algorithm>
#include <map>

#include "selt/error.hpp"

namespace selt {

namespace {

const std::vector<int> kNoLabels;

std::string box_str(Box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

}  // namespace

EdgeTableau::EdgeTableau(SkewShape shape, int label_count)
    : shape_(std::move(shape)), label_count_(label_count) {
  if (label_count < 0) throw InvalidArgument("label count must be nonnegative");
  const StrictPartition& outer = shape_.outer();
  rows_.resize(static_cast<size_t>(outer.length()));
  for (int i = 1; i <= outer.length(); ++i) {
    rows_[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(outer.part(i)), 0);
  }
  edges_.resize(static_cast<size_t>(outer.length()));
}

void EdgeTableau::set(Box b, int label) {
  if (!shape_.outer().has_box(b)) {
    throw IndexError("box " + box_str(b) + " is outside " + shape_.outer().to_string());
  }
  rows_[static_cast<size_t>(b.row - 1)][static_cast<size_t>(b.col - b.row)] = label;
}

const std::vector<int>& EdgeTableau::edge(int i) const {
  if (i < 1 || i > edge_slots()) return kNoLabels;
  return edges_[static_cast<size_t>(i - 1)];
}

void EdgeTableau::set_edge(int i, std::vector<int> labels) {
  if (i < 1) throw IndexError("edge index must be positive");
  if (i > edge_slots()) edges_.resize(static_cast<size_t>(i));
  std::sort(labels.begin(), labels.end());
  edges_[static_cast<size_t>(i - 1)] = std::move(labels);
}

void EdgeTableau::insert_edge_label(int i, int label) {
  if (i < 1) throw IndexError("edge index must be positive");
  if (i > edge_slots()) edges_.resize(static_cast<size_t>(i));
  auto& e = edges_[static_cast<size_t>(i - 1)];
  e.insert(std::upper_bound(e.begin(), e.end(), label), label);
}

void EdgeTableau::erase_edge_label(int i, int label) {
  if (i < 1 || i > edge_slots()) throw IndexError("no edge " + std::to_string(i));
  auto& e = edges_[static_cast<size_t>(i - 1)];
  auto it = std::lower_bound(e.begin(), e.end(), label);
  if (it == e.end() || *it != label) {
    throw NotASubset("label " + std::to_string(label) + " is not on edge " + std::to_string(i));
  }
  e.erase(it);
}

void EdgeTableau::remove_outer_box(int row) {
  const int len = shape_.outer().part(row);
  if (len == 0) throw IndexError("no row " + std::to_string(row));
  auto& cells = rows_[static_cast<size_t>(row - 1)];
  if (cells.back() != 0) throw InvalidArgument("removed box must be empty");
  if (len == 1 && !edge(row).empty()) {
    throw InvalidArgument("removing diagonal box " + std::to_string(row) +
                          " would drop a labeled edge");
  }
  shape_.remove_outer_box(row);
  cells.pop_back();
  if (cells.empty()) {
    rows_.pop_back();
    if (edge_slots() >= row) edges_.erase(edges_.begin() + (row - 1));
  }
}

std::vector<int> EdgeTableau::position_word() const {
  std::vector<int> word(static_cast<size_t>(label_count_), -1);
  int pos = 0;
  auto record = [&](int label) {
    if (label >= 1 && label <= label_count_) word[static_cast<size_t>(label - 1)] = pos;
  };
  for (const Box& b : shape_.boxes()) {
    record(at(b));
    ++pos;
  }
  for (int i = 1; i <= edge_slots(); ++i) {
    for (int v : edge(i)) record(v);
    ++pos;
  }
  return word;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kOneLabelPerBox: return "(i)";
    case Axiom::kEdgeSets: return "(ii)";
    case Axiom::kEachLabelOnce: return "(iii)";
    case Axiom::kIncreasing: return "(iv)";
  }
  return "?";
}

std::vector<Violation> validate(const EdgeTableau& t) {
  std::vector<Violation> out;
  const SkewShape& shape = t.shape();
  const StrictPartition& outer = shape.outer();
  std::map<int, int> seen;

  for (const Box& b : outer.boxes()) {
    const int v = t.at(b);
    const bool skew_box = shape.in_skew(b);
    if (skew_box && v == 0) {
      out.push_back({Axiom::kOneLabelPerBox, "box " + box_str(b) + " has no label", b, {}});
    } else if (!skew_box && v != 0) {
      out.push_back({Axiom::kOneLabelPerBox,
                     "box " + box_str(b) + " lies in the inner shape but holds a label", b, {}});
    }
    if (v != 0) ++seen[v];
  }

  for (int i = 1; i <= t.edge_slots(); ++i) {
    const auto& e = t.edge(i);
    if (i > outer.length() && !e.empty()) {
      out.push_back({Axiom::kEdgeSets,
                     "labels placed on edge " + std::to_string(i) + ", which is not a diagonal edge",
                     {}, i});
    }
    for (int v : e) ++seen[v];
  }

  for (const auto& [v, count] : seen) {
    if (v < 1 || v > t.label_count()) {
      out.push_back({Axiom::kEachLabelOnce,
                     "label " + std::to_string(v) + " is outside [" +
                         std::to_string(t.label_count()) + "]",
                     {}, {}});
    } else if (count > 1) {
      out.push_back({Axiom::kEachLabelOnce,
                     "label " + std::to_string(v) + " appears " + std::to_string(count) + " times",
                     {}, {}});
    }
  }
  for (int v = 1; v <= t.label_count(); ++v) {
    if (!seen.contains(v)) {
      out.push_back({Axiom::kEachLabelOnce, "label " + std::to_string(v) + " is missing", {}, {}});
    }
  }

  for (const Box& b : shape.boxes()) {
    const int v = t.at(b);
    if (v == 0) continue;
    const Box east{b.row, b.col + 1};
    const Box south{b.row + 1, b.col};
    if (shape.in_skew(east) && t.at(east) != 0 && t.at(east) <= v) {
      out.push_back({Axiom::kIncreasing,
                     "row decreases between " + box_str(b) + " and " + box_str(east), b, {}});
    }
    if (shape.in_skew(south) && t.at(south) != 0 && t.at(south) <= v) {
      out.push_back({Axiom::kIncreasing,
                     "column decreases between " + box_str(b) + " and " + box_str(south), b, {}});
    }
  }
  for (int i = 1; i <= std::min(outer.length(), t.edge_slots()); ++i) {
    for (int j = 1; j <= i; ++j) {
      const Box north{j, i};
      if (!shape.in_skew(north) || t.at(north) == 0) continue;
      for (int v : t.edge(i)) {
        if (v <= t.at(north)) {
          out.push_back({Axiom::kIncreasing,
                         "edge label " + std::to_string(v) + " on edge " + std::to_string(i) +
                             " does not exceed " + std::to_string(t.at(north)) + " in " +
                             box_str(north),
                         north, i});
        }
      }
    }
  }
  return out;
}

void require_valid(const EdgeTableau& t) {
  const auto violations = validate(t);
  if (violations.empty()) return;
  std::string msg = "invalid tableau:";
  for (const auto& v : violations) msg += " " + axiom_name(v.axiom) + " " + v.message + ";";
  throw InvalidTableau(msg);
}

namespace {

// Backtracking over label placements. Positions are the skew boxes in
// row-major order followed by the diagonal edges; label v is placed only
// after 1..v-1, so the increasing conditions reduce to "west and north
// neighbours already filled" and "column above an edge already complete".
class SeltSearch {
 public:
  SeltSearch(const SkewShape& shape, int n, const TableauVisitor& visit, const Shard& shard)
      : tableau_(shape, n), n_(n), visit_(visit), shard_(shard) {
    const auto boxes = shape.boxes();
    const int edges = shape.edge_count();
    column_boxes_.resize(static_cast<size_t>(edges) + 1);
    for (size_t k = 0; k < boxes.size(); ++k) {
      const Box b = boxes[k];
      Slot s;
      s.box = b;
      s.west = index_of(boxes, {b.row, b.col - 1});
      s.north = index_of(boxes, {b.row - 1, b.col});
      s.edge = b.col <= edges ? b.col : 0;
      if (s.edge) column_boxes_[static_cast<size_t>(s.edge)].push_back(static_cast<int>(k));
      slots_.push_back(s);
    }
    filled_.assign(slots_.size(), false);
    edge_sizes_.assign(static_cast<size_t>(edges) + 1, 0);
    empty_boxes_ = static_cast<int>(slots_.size());
    shard_depth_ = std::min(shard_.depth, n_);
  }

  void run() { place(1); }

 private:
  struct Slot {
    Box box;
    int west = -1;
    int north = -1;
    int edge = 0;
  };

  static int index_of(const std::vector<Box>& boxes, Box b) {
    auto it = std::find(boxes.begin(), boxes.end(), b);
    return it == boxes.end() ? -1 : static_cast<int>(it - boxes.begin());
  }

  void place(int v) {
    if (shard_.count > 1 && v - 1 == shard_depth_) {
      if (prefix_counter_++ % static_cast<std::uint64_t>(shard_.count) !=
          static_cast<std::uint64_t>(shard_.index)) {
        return;
      }
    }
    if (v > n_) {
      visit_(tableau_);
      return;
    }
    // After placing v, n - v labels remain for the empty boxes.
    for (size_t k = 0; k < slots_.size(); ++k) {
      const Slot& s = slots_[k];
      if (filled_[k]) continue;
      if (s.west >= 0 && !filled_[static_cast<size_t>(s.west)]) continue;
      if (s.north >= 0 && !filled_[static_cast<size_t>(s.north)]) continue;
      if (s.edge && edge_sizes_[static_cast<size_t>(s.edge)] > 0) continue;
      if (n_ - v < empty_boxes_ - 1) continue;
      filled_[k] = true;
      --empty_boxes_;
      tableau_.set(s.box, v);
      place(v + 1);
      tableau_.set(s.box, 0);
      ++empty_boxes_;
      filled_[k] = false;
    }
    if (n_ - v < empty_boxes_) return;
    for (size_t e = 1; e < edge_sizes_.size(); ++e) {
      bool column_done = true;
      for (int k : column_boxes_[e]) column_done = column_done && filled_[static_cast<size_t>(k)];
      if (!column_done) continue;
      ++edge_sizes_[e];
      tableau_.insert_edge_label(static_cast<int>(e), v);
      place(v + 1);
      tableau_.erase_edge_label(static_cast<int>(e), v);
      --edge_sizes_[e];
    }
  }

  EdgeTableau tableau_;
  int n_;
  const TableauVisitor& visit_;
  Shard shard_;
  int shard_depth_ = 0;
  std::uint64_t prefix_counter_ = 0;
  std::vector<Slot> slots_;
  std::vector<std::vector<int>> column_boxes_;
  std::vector<bool> filled_;
  std::vector<int> edge_sizes_;
  int empty_boxes_ = 0;
};

}  // namespace

void for_each_selt(const SkewShape& shape, int n, const TableauVisitor& visit, const Shard& shard) {
  if (n < shape.box_count()) {
    throw CapacityError(std::to_string(n) + " labels cannot fill " +
                        std::to_string(shape.box_count()) + " boxes");
  }
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw InvalidArgument("bad shard");
  }
  SeltSearch(shape, n, visit, shard).run();
}

std::vector<EdgeTableau> enumerate_selt(const SkewShape& shape, int n) {
  std::vector<EdgeTableau> out;
  for_each_selt(shape, n, [&](const EdgeTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_selt(const SkewShape& shape, int n) {
  std::uint64_t count = 0;
  for_each_selt(shape, n, [&](const EdgeTableau&) { ++count; });
  return count;
}

EdgeTableau superstandard(const StrictPartition& mu) {
  EdgeTableau t(SkewShape(mu, {}), mu.size());
  int next = 1;
  for (const Box& b : mu.boxes()) t.set(b, next++);
  return t;
}

bool is_superstandard(const EdgeTableau& t, const StrictPartition& mu) {
  if (!t.shape().is_straight() || t.shape().outer() != mu) return false;
  int next = 1;
  for (const Box& b : mu.boxes()) {
    if (t.at(b) != next++) return false;
  }
  for (int i = 1; i <= t.edge_slots(); ++i) {
    if (!t.edge(i).empty()) return false;
  }
  return true;
}

std::vector<int> col_set(const EdgeTableau& t, int k) {
  const SkewShape& shape = t.shape();
  if (k < 1 || k > shape.outer().part(1)) {
    throw IndexError("column " + std::to_string(k) + " is outside the shape");
  }
  std::vector<int> out = t.edge(k);
  for (int i = 1; i <= k; ++i) {
    if (shape.in_skew(i, k) && t.at(i, k) != 0) out.push_back(t.at(i, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> row_set(const EdgeTableau& t, int r) {
  const StrictPartition& outer = t.shape().outer();
  if (r < 1 || r > outer.length()) {
    throw IndexError("row " + std::to_string(r) + " is outside the shape");
  }
  std::vector<int> out;
  for (int c = r; c <= r + outer.part(r) - 1; ++c) {
    if (t.shape().in_skew(r, c)) out.push_back(t.at(r, c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace selt

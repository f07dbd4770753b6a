#include "selt/slide_calc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "selt/error.hpp"

namespace selt {

namespace {

// Offset of row r of S_{rho_{n,m}}: the number of labels in rows 1..r-1.
int row_offset(int n, int r) {
  int off = 0;
  for (int i = 1; i < r; ++i) off += n - i + 1;
  return off;
}

bool is_subset(const std::vector<int>& sub, const std::vector<int>& sorted_super) {
  return std::all_of(sub.begin(), sub.end(), [&](int v) {
    return std::binary_search(sorted_super.begin(), sorted_super.end(), v);
  });
}

void require_staircase_edges_only(const EdgeTableau& t) {
  const SkewShape& s = t.shape();
  if (s.outer() != s.inner() || s.outer() != rho(s.outer().length())) {
    throw InvalidArgument("expected a tableau of shape rho_n/rho_n, got " +
                          s.outer().to_string() + "/" + s.inner().to_string());
  }
}

// Smallest label of `edge` lying in row r of S_{rho_{n,m}}; 0 if none.
int min_in_row(const Staircase& p, const std::vector<int>& edge, int r) {
  if (r < 1 || r > p.m) return 0;
  const int lo = row_offset(p.n, r) + 1;
  const int hi = lo + p.n - r;
  auto it = std::lower_bound(edge.begin(), edge.end(), lo);
  return it != edge.end() && *it <= hi ? *it : 0;
}

}  // namespace

Staircase Staircase::make(int n, int m) {
  rho_nm(n, m);  // validates
  return {n, m};
}

Staircase Staircase::of(const EdgeTableau& t) {
  const StrictPartition& outer = t.shape().outer();
  const int n = outer.length();
  if (outer != rho(n)) {
    throw InvalidArgument("outer shape " + outer.to_string() + " is not a staircase");
  }
  for (int m = 0; m <= n; ++m) {
    if (rho_nm(n, m).size() == t.label_count()) return {n, m};
  }
  throw InvalidArgument(std::to_string(t.label_count()) + " labels is not |rho_{" +
                        std::to_string(n) + ",m}| for any m");
}

int Staircase::label_count() const { return rho_nm(n, m).size(); }

int Staircase::s_row(int j) const {
  if (j < 1 || j > label_count()) throw IndexError("label " + std::to_string(j) + " not in S");
  int r = 1;
  while (j > row_offset(n, r + 1)) ++r;
  return r;
}

int Staircase::s_column(int j) const {
  const int r = s_row(j);
  return r + (j - row_offset(n, r) - 1);
}

std::vector<int> Staircase::row(int r) const {
  std::vector<int> out;
  if (r < 1 || r > m) return out;
  const int lo = row_offset(n, r) + 1;
  for (int v = lo; v <= lo + n - r; ++v) out.push_back(v);
  return out;
}

int Staircase::entry(int r, int c) const {
  if (r < 1 || r > m || c < r || c > n) {
    throw IndexError("no box (" + std::to_string(r) + "," + std::to_string(c) + ") in rho_{" +
                     std::to_string(n) + "," + std::to_string(m) + "}");
  }
  return row_offset(n, r) + (c - r) + 1;
}

EdgeTableau u_tableau(int n, int m) {
  const Staircase p = Staircase::make(n, m);
  const StrictPartition staircase = rho(n);
  EdgeTableau t(SkewShape(staircase, staircase), p.label_count());
  for (int j = 1; j <= p.label_count(); ++j) t.insert_edge_label(p.s_column(j), j);
  return t;
}

EdgeTableau i_slide(const EdgeTableau& t, int h, const std::vector<int>& labels) {
  require_staircase_edges_only(t);
  const int n = t.shape().outer().length();
  if (h < 1 || h > n - 1) {
    throw IndexError("slide edge " + std::to_string(h) + " outside [1," + std::to_string(n - 1) +
                     "]");
  }
  if (!is_subset(labels, t.edge(h))) throw NotASubset("I is not contained in E_h(T)");
  EdgeTableau out = t;
  for (int v : labels) {
    out.erase_edge_label(h, v);
    out.insert_edge_label(h + 1, v);
  }
  return out;
}

std::optional<BadWitness> bad_witness(const EdgeTableau& t) {
  const Staircase p = Staircase::of(t);
  std::optional<BadWitness> best;
  const int columns = t.shape().outer().part(1);
  for (int k = 1; k <= columns; ++k) {
    for (int j : col_set(t, k)) {
      const int sc = p.s_column(j);
      if (sc > k && (!best || j < best->label)) best = BadWitness{j, sc, k};
    }
  }
  return best;
}

SlideDecomposition slide_decomposition(const EdgeTableau& t) {
  require_staircase_edges_only(t);
  const Staircase p = Staircase::of(t);
  if (auto w = bad_witness(t)) {
    throw BadTableau("label " + std::to_string(w->label) + " sits in column " +
                     std::to_string(w->t_column) + ", west of its column " +
                     std::to_string(w->s_column) + " in S");
  }
  SlideDecomposition d;
  d.sets.assign(static_cast<size_t>(std::max(p.n - 1, 0)), {});
  for (int e = 1; e <= p.n; ++e) {
    for (int j : t.edge(e)) {
      for (int l = p.s_column(j); l < e; ++l) d.sets[static_cast<size_t>(l - 1)].push_back(j);
    }
  }
  for (auto& s : d.sets) std::sort(s.begin(), s.end());
  if (apply_decomposition(p, d) != t) {
    throw std::logic_error("slide decomposition does not rebuild the tableau");
  }
  return d;
}

EdgeTableau partial_tableau(const Staircase& p, const SlideDecomposition& d, int k) {
  EdgeTableau t = u_tableau(p.n, p.m);
  for (int l = 1; l < k; ++l) t = i_slide(t, l, d.at(l));
  return t;
}

EdgeTableau apply_decomposition(const Staircase& p, const SlideDecomposition& d) {
  return partial_tableau(p, d, p.n);
}

EdgeTableau shift_op(const EdgeTableau& state, int j, int h) {
  const SkewShape& shape = state.shape();
  const int col = h + 1;
  if (h < 1 || h > shape.outer().length()) return state;

  std::vector<Box> boxes;
  for (int r = 1; r <= col; ++r) {
    if (shape.in_skew(r, col) && state.at(r, col) != 0) boxes.push_back({r, col});
  }
  const std::vector<int>& upper_edge = state.edge(col);
  auto in_box = std::find_if(boxes.begin(), boxes.end(),
                             [&](Box b) { return state.at(b) == j; });
  const bool in_edge = std::binary_search(upper_edge.begin(), upper_edge.end(), j);
  if (in_box == boxes.end() && !in_edge) return state;

  const int diag = shape.in_skew(h, h) ? state.at(h, h) : 0;
  if (diag != 0 && diag >= j) return state;

  EdgeTableau out = state;
  if (in_edge) {
    out.erase_edge_label(col, j);
  } else {
    for (auto it = in_box; it + 1 != boxes.end(); ++it) out.set(*it, state.at(*(it + 1)));
    const Box bottom = boxes.back();
    if (!upper_edge.empty()) {
      const int refill = upper_edge.front();
      out.set(bottom, refill);
      out.erase_edge_label(col, refill);
    } else if (bottom.col == bottom.row + shape.outer().part(bottom.row) - 1) {
      // Nothing left to pull up: the vacated box leaves the shape, as in a
      // jdt slide that runs out of labels.
      out.set(bottom, 0);
      out.remove_outer_box(bottom.row);
    } else {
      return state;
    }
  }
  out.insert_edge_label(h, j);
  return out;
}

EdgeTableau shift_set(const EdgeTableau& state, std::vector<int> labels, int h) {
  std::sort(labels.begin(), labels.end());
  EdgeTableau out = state;
  for (int j : labels) out = shift_op(out, j, h);
  return out;
}

bool is_r_compatible(const Staircase& p, const RectificationTrace& trace, int r) {
  for (size_t i = 1; i < trace.states.size(); ++i) {
    const EdgeTableau& s = trace.states[i];
    for (int c2 = 3; c2 <= s.shape().outer().part(1); ++c2) {
      const int v = s.shape().in_skew(c2 - 2, c2) ? s.at(c2 - 2, c2) : 0;
      if (v == 0 || v > p.label_count()) continue;
      if (p.s_row(v) <= r && p.s_column(v) < c2) return false;
    }
  }
  return true;
}

bool is_r_compatible(const EdgeTableau& t, int r) {
  if (r <= 0) return true;
  return is_r_compatible(Staircase::of(t), rectify(t), r);
}

std::vector<int> slidable_candidates(const Staircase& p, const EdgeTableau& partial, int k) {
  std::vector<int> out;
  for (int i = 1; i <= std::min(k, p.m); ++i) {
    if (int v = min_in_row(p, partial.edge(k), i)) out.push_back(v);
  }
  return out;
}

SlidableReport slidable_report(const EdgeTableau& t) {
  const Staircase p = Staircase::of(t);
  SlidableReport report;
  report.decomposition = slide_decomposition(t);
  EdgeTableau partial = u_tableau(p.n, p.m);
  for (int k = 1; k <= p.n - 1; ++k) {
    SlidableStep step;
    step.k = k;
    step.edge = partial.edge(k);
    step.candidates = slidable_candidates(p, partial, k);
    step.chosen = report.decomposition.at(k);
    step.ok = is_subset(step.chosen, step.candidates);
    report.slidable = report.slidable && step.ok;
    partial = i_slide(partial, k, step.chosen);
    report.steps.push_back(std::move(step));
  }
  return report;
}

std::vector<std::pair<int, int>> shadable_boxes(const Staircase& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.n - 1; ++i) {
    for (int r = 1; r <= std::min(i, p.m); ++r) out.emplace_back(i, r);
  }
  return out;
}

EdgeTableau shading_to_tableau(const Shading& s) {
  const Staircase p = Staircase::make(s.n, s.m);
  for (const auto& [i, r] : s.shaded) {
    if (i < 1 || i > p.n - 1 || r < 1 || r > std::min(i, p.m)) {
      throw InvalidArgument("box (" + std::to_string(i) + "," + std::to_string(r) +
                            ") is not in the first n-1 columns of rho_{n,m}");
    }
  }
  EdgeTableau t = u_tableau(p.n, p.m);
  for (int i = 1; i <= p.n - 1; ++i) {
    std::vector<int> chosen;
    for (int r = 1; r <= std::min(i, p.m); ++r) {
      if (!s.shaded.contains({i, r})) continue;
      const int v = min_in_row(p, t.edge(i), r);
      if (v == 0) throw std::logic_error("edge lost a row of S");
      chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    t = i_slide(t, i, chosen);
  }
  return t;
}

Shading tableau_to_shading(const EdgeTableau& t) {
  const Staircase p = Staircase::of(t);
  const SlidableReport report = slidable_report(t);
  if (!report.slidable) throw NotSlidable("slide decomposition is not slidable");
  Shading s{p.n, p.m, {}};
  for (const SlidableStep& step : report.steps) {
    for (int r = 1; r <= std::min(step.k, p.m); ++r) {
      const int v = min_in_row(p, step.edge, r);
      if (v != 0 && std::binary_search(step.chosen.begin(), step.chosen.end(), v)) {
        s.shaded.insert({step.k, r});
      }
    }
  }
  return s;
}

void for_each_slidable(
    const Staircase& p,
    const std::function<void(const SlideDecomposition&, const EdgeTableau&)>& visit) {
  SlideDecomposition d;
  d.sets.assign(static_cast<size_t>(std::max(p.n - 1, 0)), {});
  std::function<void(int, const EdgeTableau&)> step = [&](int k, const EdgeTableau& t) {
    if (k >= p.n) {
      visit(d, t);
      return;
    }
    const auto cands = slidable_candidates(p, t, k);
    const unsigned subsets = 1u << cands.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<int> chosen;
      for (size_t b = 0; b < cands.size(); ++b) {
        if (mask & (1u << b)) chosen.push_back(cands[b]);
      }
      d.sets[static_cast<size_t>(k - 1)] = chosen;
      step(k + 1, i_slide(t, k, chosen));
    }
    d.sets[static_cast<size_t>(k - 1)].clear();
  };
  step(1, u_tableau(p.n, p.m));
}

std::uint64_t count_d_staircase(int n, int m) {
  std::uint64_t count = 0;
  for_each_slidable(Staircase::make(n, m),
                    [&](const SlideDecomposition&, const EdgeTableau&) { ++count; });
  return count;
}

void for_each_good(const Staircase& p, const std::function<void(const EdgeTableau&)>& visit) {
  const StrictPartition staircase = rho(p.n);
  EdgeTableau t(SkewShape(staircase, staircase), p.label_count());
  std::function<void(int)> place = [&](int j) {
    if (j > p.label_count()) {
      visit(t);
      return;
    }
    for (int e = p.s_column(j); e <= p.n; ++e) {
      t.insert_edge_label(e, j);
      place(j + 1);
      t.erase_edge_label(e, j);
    }
  };
  place(1);
}

}  // namespace selt

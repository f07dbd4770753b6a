#include "selt/jdt.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "selt/error.hpp"
#include "selt/parallel.hpp"

namespace selt {

int default_jobs() {
  if (const char* env = std::getenv("SSL_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

bool is_inner_corner(const SkewShape& shape, Box c) {
  const StrictPartition& lam = shape.inner();
  return c.row >= 1 && c.row <= lam.length() && c.col == c.row + lam.part(c.row) - 1 &&
         (lam.part(c.row + 1) == 0 || lam.part(c.row + 1) < lam.part(c.row) - 1);
}

[[noreturn]] void rule_conflict(Box at) {
  throw std::logic_error("jeu de taquin: no unique rule applies at (" + std::to_string(at.row) +
                         "," + std::to_string(at.col) + ")");
}

}  // namespace

namespace {

// One jdt slide; records the hole's path and the rules applied when `rec` is
// non-null.
void slide_core(EdgeTableau& t, Box corner, SlideRecord* rec) {
  if (!is_inner_corner(t.shape(), corner)) {
    throw NotACorner("(" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                     ") is not an inner corner of " + t.shape().inner().to_string());
  }
  t.remove_inner_box(corner.row);

  Box hole = corner;
  if (rec) {
    rec->corner = corner;
    rec->path.push_back(hole);
  }
  auto note = [&](SlideRule r) {
    if (rec) rec->rules.push_back(r);
  };
  while (true) {
    const Box east{hole.row, hole.col + 1};
    const int a = t.at(east);
    if (hole.is_diagonal()) {
      const auto& edge = t.edge(hole.row);
      const int s = edge.empty() ? 0 : edge.front();
      if (a != 0 && (s == 0 || a < s)) {
        t.set(hole, a);
        hole = east;
        note(SlideRule::kDiagonalEast);
      } else if (s != 0 && (a == 0 || s < a)) {
        t.set(hole, s);
        t.erase_edge_label(hole.row, s);
        note(SlideRule::kEdgeAbsorb);
        if (rec) rec->absorbed_edge_label = true;
        return;
      } else if (a == 0 && s == 0) {
        break;
      } else {
        rule_conflict(hole);
      }
    } else {
      const Box south{hole.row + 1, hole.col};
      const int b = t.at(south);
      if (b != 0 && (a == 0 || b < a)) {
        t.set(hole, b);
        hole = south;
        note(SlideRule::kSouth);
      } else if (a != 0 && (b == 0 || a < b)) {
        t.set(hole, a);
        hole = east;
        note(SlideRule::kEast);
      } else if (a == 0 && b == 0) {
        break;
      } else {
        rule_conflict(hole);
      }
    }
    if (rec) rec->path.push_back(hole);
  }
  t.set(hole, 0);
  t.remove_outer_box(hole.row);
}

}  // namespace

SlideRecord slide_in_place(EdgeTableau& t, Box corner) {
  SlideRecord rec;
  slide_core(t, corner, &rec);
  return rec;
}

EdgeTableau jdt_slide(const EdgeTableau& t, Box corner, SlideRecord* record) {
  EdgeTableau out = t;
  SlideRecord rec = slide_in_place(out, corner);
  if (record) *record = std::move(rec);
  return out;
}

Box southmost_inner_corner(const SkewShape& shape) {
  const StrictPartition& lam = shape.inner();
  if (lam.empty()) throw NotACorner("straight shapes have no inner corner");
  const int r = lam.length();
  return {r, r + lam.part(r) - 1};
}

RectificationTrace rectify(const EdgeTableau& t) {
  require_valid(t);
  RectificationTrace trace;
  trace.states.reserve(static_cast<size_t>(t.shape().inner().size()) + 1);
  trace.states.push_back(t);
  EdgeTableau cur = t;
  while (!cur.shape().is_straight()) {
    const Box c = southmost_inner_corner(cur.shape());
    trace.corners.push_back(c);
    trace.slides.push_back(slide_in_place(cur, c));
    trace.states.push_back(cur);
  }
  return trace;
}

EdgeTableau rect(EdgeTableau t) {
  while (!t.shape().is_straight()) slide_core(t, southmost_inner_corner(t.shape()), nullptr);
  return t;
}

std::uint64_t count_d(const StrictPartition& lambda, const StrictPartition& mu,
                      const StrictPartition& nu, int jobs) {
  if (!contains(lambda, nu)) return 0;
  const SkewShape shape(nu, lambda);
  const int n = mu.size();
  if (n < shape.box_count()) return 0;
  return parallel_sum(jobs, [&](int index, int count) {
    std::uint64_t hits = 0;
    for_each_selt(
        shape, n,
        [&](const EdgeTableau& t) {
          if (is_superstandard(rect(t), mu)) ++hits;
        },
        Shard{index, count, 3});
    return hits;
  });
}

}  // namespace selt

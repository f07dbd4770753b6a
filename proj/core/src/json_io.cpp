#include "selt/json_io.hpp"

#include <limits>
#include <string>

#include "selt/error.hpp"

namespace selt {

namespace {

Json box_json(Box b) { return Json::array({b.row, b.col}); }

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) out.push_back(get_int(v, what));
  return out;
}

const char* rule_name(SlideRule r) {
  switch (r) {
    case SlideRule::kSouth: return "south";
    case SlideRule::kEast: return "east";
    case SlideRule::kDiagonalEast: return "diagonal-east";
    case SlideRule::kEdgeAbsorb: return "edge-absorb";
  }
  return "?";
}

}  // namespace

Json to_json(const StrictPartition& p) { return Json(p.parts()); }

StrictPartition partition_from_json(const Json& j) {
  return StrictPartition(int_list(j, "partition"));
}

Json to_json(const EdgeTableau& t) {
  Json boxes = Json::array();
  for (const Box& b : t.shape().outer().boxes()) {
    if (const int v = t.at(b)) boxes.push_back({{"row", b.row}, {"col", b.col}, {"label", v}});
  }
  Json edges = Json::object();
  const int slots = std::max(t.edge_slots(), t.shape().edge_count());
  for (int i = 1; i <= slots; ++i) edges[std::to_string(i)] = t.edge(i);
  return {{"shape", {{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}}},
          {"boxes", boxes},
          {"edges", edges},
          {"n", t.label_count()}};
}

EdgeTableau tableau_from_json(const Json& j) {
  const Json& shape = field(j, "shape");
  SkewShape s(partition_from_json(field(shape, "outer")), partition_from_json(field(shape, "inner")));
  EdgeTableau t(std::move(s), get_int(field(j, "n"), "n"));
  if (j.contains("boxes")) {
    for (const Json& b : j.at("boxes")) {
      const Box box{get_int(field(b, "row"), "row"), get_int(field(b, "col"), "col")};
      if (!t.shape().outer().has_box(box)) {
        throw InvalidArgument("box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                              ") lies outside the outer shape");
      }
      t.set(box, get_int(field(b, "label"), "label"));
    }
  }
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_object()) throw InvalidArgument("edges must be an object");
    for (const auto& [key, labels] : edges.items()) {
      int index = 0;
      try {
        size_t used = 0;
        index = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InvalidArgument("edge key \"" + key + "\" is not an integer");
      }
      if (index < 1) throw InvalidArgument("edge indices start at 1");
      const std::vector<int> list = int_list(labels, "edge labels");
      if (!list.empty() || index <= t.shape().edge_count()) t.set_edge(index, list);
    }
  }
  return t;
}

Json to_json(const Violation& v) {
  Json out = {{"axiom", axiom_name(v.axiom)}, {"message", v.message}};
  if (v.box) out["box"] = box_json(*v.box);
  if (v.edge) out["edge"] = *v.edge;
  return out;
}

Json to_json(const SlideRecord& r) {
  Json path = Json::array();
  for (const Box& b : r.path) path.push_back(box_json(b));
  Json rules = Json::array();
  for (SlideRule rule : r.rules) rules.push_back(rule_name(rule));
  return {{"corner", box_json(r.corner)},
          {"path", path},
          {"rules", rules},
          {"absorbed_edge_label", r.absorbed_edge_label}};
}

Json to_json(const RectificationTrace& trace) {
  Json states = Json::array();
  for (const EdgeTableau& s : trace.states) states.push_back(to_json(s));
  Json corners = Json::array();
  for (const Box& b : trace.corners) corners.push_back(box_json(b));
  Json slides = Json::array();
  for (const SlideRecord& r : trace.slides) slides.push_back(to_json(r));
  return {{"states", states}, {"corners", corners}, {"slides", slides}};
}

Json to_json(const Shading& s) {
  Json shaded = Json::array();
  for (const auto& [col, row] : s.shaded) shaded.push_back({col, row});
  return {{"n", s.n}, {"m", s.m}, {"shaded", shaded}};
}

Shading shading_from_json(const Json& j) {
  Shading s{get_int(field(j, "n"), "n"), get_int(field(j, "m"), "m"), {}};
  if (s.m < 0 || s.m > s.n) throw InvalidArgument("shading needs 0 <= m <= n");
  const Json& shaded = field(j, "shaded");
  if (!shaded.is_array()) throw InvalidArgument("shaded must be an array");
  for (const Json& b : shaded) {
    const std::vector<int> pair = int_list(b, "shaded box");
    if (pair.size() != 2) throw InvalidArgument("shaded boxes are [column,row] pairs");
    s.shaded.insert({pair[0], pair[1]});
  }
  return s;
}

Json to_json(const SlideDecomposition& d) { return Json(d.sets); }

Json to_json(const SlidableReport& r) {
  Json steps = Json::array();
  for (const SlidableStep& s : r.steps) {
    steps.push_back({{"k", s.k},
                     {"edge", s.edge},
                     {"candidates", s.candidates},
                     {"chosen", s.chosen},
                     {"ok", s.ok}});
  }
  return {{"slidable", r.slidable}, {"decomposition", to_json(r.decomposition)}, {"steps", steps}};
}

Json to_json(const ExcitedDiagram& d) {
  Json pluses = Json::array();
  for (const Box& b : d.pluses) pluses.push_back(box_json(b));
  return {{"ambient", to_json(d.ambient)}, {"pluses", pluses}};
}

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json to_json(const SigmaExpansion& e) {
  Json terms = Json::array();
  for (const auto& [nu, poly] : e.terms) {
    for (auto it = poly.coefficients().rbegin(); it != poly.coefficients().rend(); ++it) {
      terms.push_back({{"nu", to_json(nu)}, {"coeff", to_json(it->second)}, {"z_power", it->first}});
    }
  }
  return {{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}, {"terms", terms}};
}

}  // namespace selt

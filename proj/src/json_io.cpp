#include "ibox/json_io.hpp"

namespace ibox {

Json to_json(const IBox& b) { return Json::array({b.x, b.y}); }

IBox box_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("expected a box [x,y], got " + j.dump());
  }
  return {j[0].get<Position>(), j[1].get<Position>()};
}

Json to_json(const Family& f) {
  Json out;
  out["range"] = Json::array({f.range().lo, f.range().hi});
  Json boxes = Json::array(), efe = Json::array(), frozen = Json::array(), ex = Json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    boxes.push_back(to_json(f.box(k)));
    efe.push_back(f.efe(k));
    (f.is_frozen(k) ? frozen : ex).push_back(to_json(f.box(k)));
  }
  out["boxes"] = boxes;
  out["efe"] = efe;
  out["frozen"] = frozen;
  out["exchangeable"] = ex;
  return out;
}

Family family_from_json(const SequencePtr& seq, const Json& j) {
  if (!j.is_object() || !j.contains("range") || !j.contains("boxes")) {
    throw std::invalid_argument("family file needs \"range\" and \"boxes\"");
  }
  const IBox r = box_from_json(j["range"]);
  std::vector<IBox> boxes;
  for (const Json& b : j["boxes"]) boxes.push_back(box_from_json(b));
  return Family::from_boxes(seq, Interval{r.x, r.y}, boxes);
}

Json to_json(const ExchangeMatrix& m) {
  Json out;
  Json boxes = Json::array(), ex = Json::array(), entries = Json::array();
  for (const IBox& b : m.boxes()) boxes.push_back(to_json(b));
  for (std::size_t c : m.exchangeable()) ex.push_back(to_json(m.box(c)));
  for (const auto& row : m.tilde()) entries.push_back(row);
  out["boxes"] = boxes;
  out["exchangeable"] = ex;
  out["entries"] = entries;
  return out;
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [b, e] : m.factors()) out.push_back({{"box", to_json(b)}, {"exponent", e}});
  return out;
}

namespace {

Json labeled(const std::vector<LabeledBox>& parts) {
  Json out = Json::array();
  for (const LabeledBox& p : parts) out.push_back({{"box", to_json(p.box)}, {"part", p.part}});
  return out;
}

}  // namespace

Json to_json(const VerticalReport& r, const CartanMatrix& cartan) {
  Json out;
  out["box"] = to_json(r.box);
  out["context"] = name(r.context);
  Json colors = Json::array();
  for (const ColorReport& c : r.colors) {
    Json e;
    e["color"] = cartan.labels().at(c.color);
    e["branch"] = c.branch;
    e["in"] = labeled(c.vin);
    e["out"] = labeled(c.vout);
    if (c.z) e["z"] = *c.z;
    if (c.w) e["w"] = *c.w;
    if (c.u) e["u"] = *c.u;
    Json corners = Json::array();
    for (const IBox& b : c.corners) corners.push_back(to_json(b));
    e["corners"] = corners;
    e["diagnostics"] = c.diagnostics;
    colors.push_back(e);
  }
  out["colors"] = colors;
  return out;
}

Json to_json(const ConsistencyReport& r) {
  Json out;
  out["chain"] = r.chain.to_string();
  out["moved"] = r.moved.to_string();
  out["k"] = r.k0;
  out["kind"] = r.kind == MoveKind::Mutation ? "mutation" : "transposition";
  if (r.old_box) out["old"] = to_json(*r.old_box);
  if (r.new_box) out["new"] = to_json(*r.new_box);
  out["verdict"] = r.verdict == Verdict::Pass ? (r.kind == MoveKind::Mutation ? "pass" : "family-invariant") : "fail";
  if (!r.message.empty()) out["message"] = r.message;
  if (r.mismatch) {
    out["mismatch"] = {{"row", to_json(r.mismatch->row)},
                       {"col", to_json(r.mismatch->col)},
                       {"mutated", r.mismatch->expected},
                       {"moved", r.mismatch->actual}};
  }
  if (r.side != TSystemSide::None) {
    out["t_system"] = {{"dropped", r.side == TSystemSide::DropLeft ? "[x_+,y]" : "[x,y_-]"}, {"ok", r.tsystem_ok}};
  }
  out["before"] = to_json(r.before);
  out["after"] = to_json(r.after);
  return out;
}

Json to_json(const SweepSummary& s) {
  Json out;
  out["chains"] = s.chains;
  out["moves"] = s.moves;
  out["transpositions"] = s.transpositions;
  out["mutations"] = s.mutations;
  out["failures"] = s.failures;
  out["t_system_checks"] = s.tsystem_checks;
  out["t_system_mismatches"] = s.tsystem_mismatches;
  out["mirror_checks"] = s.mirror_checks;
  out["mirror_mismatches"] = s.mirror_mismatches;
  out["families"] = s.families;
  out["vertical_boxes"] = s.vertical_boxes;
  out["vertical_mismatches"] = s.vertical_mismatches;
  out["structural_failures"] = s.structural_failures;
  out["max_vertical_weight"] = s.max_vertical_weight;
  out["contexts"] = s.context_hits;
  out["branches"] = s.branch_hits;
  if (!s.first_failure.empty()) out["first_failure"] = s.first_failure;
  return out;
}

CartanMatrix cartan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c")) throw std::invalid_argument("Cartan file needs a \"c\" matrix");
  const auto entries = j["c"].get<std::vector<std::vector<int>>>();
  std::vector<std::string> labels;
  if (j.contains("index")) {
    for (const Json& l : j["index"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  } else {
    for (std::size_t k = 0; k < entries.size(); ++k) labels.push_back(std::to_string(k + 1));
  }
  std::optional<std::vector<int>> d;
  if (j.contains("d")) d = j["d"].get<std::vector<int>>();
  return make_cartan(std::move(labels), entries, d);
}

}  // namespace ibox

#include "vknot/json_io.hpp"

#include "vknot/errors.hpp"

namespace vknot {

Json arc_to_json(ArcRef a) {
  return Json{{"component", a.component}, {"position", a.position}};
}

ArcRef arc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("component") || !j.contains("position"))
    fail("bad_argument", "arc must be {\"component\": c, \"position\": p}");
  return {j["component"].get<int>(), j["position"].get<int>()};
}

Json site_to_json(const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Add:
      return Json{{"kind", "r1_add"},
                  {"arc", arc_to_json(site.arc1)},
                  {"sign", site.sign},
                  {"order", site.order == R1Order::OverFirst ? "over_first"
                                                             : "under_first"}};
    case MoveKind::R1Remove:
      return Json{{"kind", "r1_remove"}, {"crossing", site.c1}};
    case MoveKind::R2Add:
      return Json{{"kind", "r2_add"},
                  {"arc1", arc_to_json(site.arc1)},
                  {"arc2", arc_to_json(site.arc2)},
                  {"variant", site.variant == R2Variant::Parallel
                                  ? "parallel"
                                  : "antiparallel"}};
    case MoveKind::R2Remove:
      return Json{{"kind", "r2_remove"}, {"c1", site.c1}, {"c2", site.c2}};
    case MoveKind::R3:
      return Json{
          {"kind", "r3"}, {"c1", site.c1}, {"c2", site.c2}, {"c3", site.c3}};
  }
  fail("bad_argument", "unknown move kind");
}

MoveSite site_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    fail("bad_argument", "move site must be an object with a \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  MoveSite s;
  if (kind == "r1_add") {
    s.kind = MoveKind::R1Add;
    s.arc1 = arc_from_json(j.at("arc"));
    s.sign = j.at("sign").get<int>();
    std::string order = j.at("order").get<std::string>();
    if (order != "over_first" && order != "under_first")
      fail("bad_argument", "order must be over_first or under_first");
    s.order = order == "over_first" ? R1Order::OverFirst : R1Order::UnderFirst;
  } else if (kind == "r1_remove") {
    s.kind = MoveKind::R1Remove;
    s.c1 = j.at("crossing").get<int>();
  } else if (kind == "r2_add") {
    s.kind = MoveKind::R2Add;
    s.arc1 = arc_from_json(j.at("arc1"));
    s.arc2 = arc_from_json(j.at("arc2"));
    std::string variant = j.at("variant").get<std::string>();
    if (variant != "parallel" && variant != "antiparallel")
      fail("bad_argument", "variant must be parallel or antiparallel");
    s.variant =
        variant == "parallel" ? R2Variant::Parallel : R2Variant::Antiparallel;
  } else if (kind == "r2_remove") {
    s.kind = MoveKind::R2Remove;
    s.c1 = j.at("c1").get<int>();
    s.c2 = j.at("c2").get<int>();
  } else if (kind == "r3") {
    s.kind = MoveKind::R3;
    s.c1 = j.at("c1").get<int>();
    s.c2 = j.at("c2").get<int>();
    s.c3 = j.at("c3").get<int>();
  } else {
    fail("bad_argument", "unknown move kind \"" + kind + "\"");
  }
  return s;
}

Json event_to_json(const CobordismEvent& e) {
  if (std::holds_alternative<BirthEvent>(e)) return Json{{"op", "birth"}};
  if (const auto* d = std::get_if<DeathEvent>(&e))
    return Json{{"op", "death"}, {"component", d->component}};
  if (const auto* s = std::get_if<SaddleEvent>(&e))
    return Json{{"op", "saddle"},
                {"arc1", arc_to_json(s->a1)},
                {"arc2", arc_to_json(s->a2)}};
  const auto& iso = std::get<IsotopyEvent>(e);
  Json moves = Json::array();
  for (const auto& m : iso.moves) moves.push_back(site_to_json(m));
  return Json{{"op", "isotopy"}, {"moves", std::move(moves)}};
}

CobordismEvent event_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("op"))
    fail("bad_argument", "event must be an object with an \"op\"");
  std::string op = j["op"].get<std::string>();
  if (op == "birth") return BirthEvent{};
  if (op == "death") return DeathEvent{j.at("component").get<int>()};
  if (op == "saddle")
    return SaddleEvent{arc_from_json(j.at("arc1")), arc_from_json(j.at("arc2"))};
  if (op == "isotopy") {
    IsotopyEvent iso;
    for (const auto& m : j.at("moves")) iso.moves.push_back(site_from_json(m));
    return iso;
  }
  fail("bad_argument", "unknown event op \"" + op + "\"");
}

std::vector<CobordismEvent> events_from_json(const Json& j) {
  if (!j.is_array()) fail("bad_argument", "trace must be a JSON array of events");
  std::vector<CobordismEvent> events;
  events.reserve(j.size());
  for (const auto& e : j) events.push_back(event_from_json(e));
  return events;
}

Json exponent_to_json(const AffineExponent& e) {
  Json vars = Json::object();
  for (const auto& [v, c] : e.vars) vars[std::to_string(v)] = c;
  return Json{{"const", e.constant}, {"vars", std::move(vars)}};
}

Json polynomial_terms_to_json(const IndexPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, coeff] : p.terms)
    out.push_back(Json{{"coeff", coeff}, {"exponent", exponent_to_json(e)}});
  return out;
}

Json weights_to_json(const std::vector<CrossingWeight>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) {
    Json entry{{"crossing", w.crossing},
               {"sign", w.sign},
               {"weight", w.weight.to_string()},
               {"exponent", exponent_to_json(w.weight)}};
    if (w.parity)
      entry["parity"] = *w.parity == Parity::Odd ? "odd" : "even";
    else
      entry["parity"] = nullptr;
    out.push_back(std::move(entry));
  }
  return out;
}

Json spectrum_to_json(const WritheSpectrum& s) {
  Json out = Json::object();
  for (const auto& [n, count] : s.counts) out[std::to_string(n)] = count;
  return out;
}

Json report_to_json(const Diagram& d, const InvariantReport& report) {
  Json out;
  out["diagram"] = serialize(d);
  out["components"] = d.component_count();
  out["crossings"] = d.crossing_count();
  out["compatible"] = report.compatible;
  out["defects"] = report.defects;
  out["writhe"] = report.writhe;
  if (!report.compatible) return out;
  out["polynomial"] = report.polynomial.to_string();
  out["polynomial_terms"] = polynomial_terms_to_json(report.polynomial);
  out["weights"] = weights_to_json(report.weights);
  if (report.odd_writhe) out["odd_writhe"] = *report.odd_writhe;
  if (report.spectrum) {
    out["wr_spectrum"] = spectrum_to_json(*report.spectrum);
    out["wr_0"] = report.spectrum->wr0;
  }
  if (report.flat_polynomial) {
    out["flat_polynomial"] = report.flat_polynomial->to_string();
    Json exps = Json::array();
    for (long long e : report.flat_polynomial->terms) exps.push_back(e);
    out["flat_polynomial_terms"] = std::move(exps);
  }
  return out;
}

Json trace_report_to_json(const TraceReport& report) {
  Json out;
  if (report.genus.is_integer())
    out["genus"] = report.genus.num;
  else
    out["genus"] = static_cast<double>(report.genus.num) / report.genus.den;
  out["births"] = report.births;
  out["deaths"] = report.deaths;
  out["saddles"] = report.saddles;
  out["concordance_candidate"] = report.concordance_candidate;
  out["pairing_ok"] = report.pairing_ok;
  out["end_diagram"] = serialize(report.end);
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    Json entry{{"diagram", level.diagram}, {"components", level.components}};
    if (level.polynomial)
      entry["polynomial"] = *level.polynomial;
    else
      entry["polynomial"] = nullptr;
    levels.push_back(std::move(entry));
  }
  out["levels"] = std::move(levels);
  return out;
}

}  // namespace vknot

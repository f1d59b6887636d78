#include "pn/report.hpp"

namespace pn {

Json to_json(const Rat& r) { return Json{{"num", r.num}, {"den", r.den}}; }

Json to_json(const PAdicProfile& pr) {
  Json digits = Json::array();
  for (const auto& [mj, ij] : pr.digits) digits.push_back(Json::array({mj, ij}));
  return Json{{"p", pr.p}, {"m", pr.m},     {"l", pr.l},     {"pl", pr.pl}, {"K", pr.K},
              {"d", pr.d}, {"digits", digits}, {"b", pr.b}, {"m_b", pr.m_b}, {"i_b", pr.i_b}};
}

Json to_json(const BoundReport& br) {
  Json j{{"deg_h", br.deg_h}, {"regime", br.regime}, {"gate_passed", br.gate_passed}};
  Json variants = Json::object();
  if (br.eq_digit) variants["eq4"] = to_json(*br.eq_digit);
  if (br.eq_generic) variants["d1_alt"] = to_json(*br.eq_generic);
  if (br.split_generic) variants["eq5"] = to_json(*br.split_generic);
  if (br.split_digit) variants["eq6"] = to_json(*br.split_digit);
  j["itot_variants"] = variants;
  if (br.e_best) {
    j["e_num"] = br.e_best->num;
    j["e_den"] = br.e_best->den;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"verdict", verdict_name(v.kind)},
         {"via", route_name(v.via)},
         {"reason", v.reason},
         {"p", v.p},
         {"m_input", v.m_input},
         {"m_normalized", v.m_normalized}};
  if (v.kind == VerdictKind::GoldException) j["gold_l"] = v.gold_l;
  if (v.prof) j["profile"] = to_json(*v.prof);
  if (v.report) j["bounds"] = to_json(*v.report);
  return j;
}

Json to_json(const SingularPoint& pt) {
  Json loc;
  if (pt.at_infinity) {
    loc = Json{{"kind", "infinity"}, {"omega", pt.x0.str()}};
  } else {
    loc = Json{{"kind", "affine"}, {"x", pt.x0.str()}, {"y", pt.y0.str()}};
  }
  Json j{{"location", loc},
         {"mult_h", pt.mult_h},
         {"mult_f", pt.mult_f},
         {"type", sing_type_name(pt.type)},
         {"it_bound", to_json(pt.it_bound)},
         {"it_conditional", pt.it_conditional}};
  if (pt.cond3) j["cond3"] = *pt.cond3;
  return j;
}

Json to_json(const Table1Report& rep) {
  Json by_type = Json::object();
  for (const auto& pt : rep.points) {
    by_type[sing_type_name(pt.type)].push_back(to_json(pt));
  }
  Json counts = Json::object();
  for (const auto& [t, c] : rep.counts) counts[sing_type_name(t)] = c;
  return Json{{"p", rep.p},
              {"m", rep.m},
              {"s_affine", rep.s_affine},
              {"s_infinity", rep.s_infinity},
              {"points", by_type},
              {"counts", counts},
              {"caps",
               Json{{"Ia", rep.cap_ia},
                    {"Ib", rep.cap_ib},
                    {"IIa", rep.cap_iia},
                    {"IIIb", rep.cap_iiib},
                    {"IIIc", rep.cap_iiic},
                    {"n1", rep.n1},
                    {"n2_generic", rep.n2_generic},
                    {"affine", rep.affine_cap}}},
              {"affine_total", rep.affine_total},
              {"itot_observed", to_json(rep.itot_observed)}};
}

Json to_json(const PNResult& r) {
  return Json{{"p", r.p},
              {"n", r.n},
              {"m", r.m},
              {"is_pn", r.is_pn},
              {"is_apn", r.is_apn},
              {"max_preimage", r.max_preimage},
              {"a_checked", r.a_checked == AMode::OnlyAEquals1 ? "OnlyAEquals1" : "AllNonzeroA"}};
}

Json to_json(const ScanReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"p", r.p},
                        {"n", r.n},
                        {"m", r.m},
                        {"is_pn", r.is_pn},
                        {"is_apn", r.is_apn},
                        {"known_family", r.family},
                        {"verdict", r.verdict}});
  }
  Json cands = Json::array();
  for (const auto& c : rep.candidates) {
    cands.push_back(Json{{"m_normalized", c.m_normalized},
                         {"pn_at", c.pn_at},
                         {"family_shape", c.family_shape},
                         {"verdict", c.verdict}});
  }
  return Json{{"p", rep.p}, {"m_max", rep.m_max}, {"n_max", rep.n_max}, {"rows", rows},
              {"candidates", cands}};
}

Json to_json(const FactorizationResult& fr) {
  Json factors = Json::array();
  for (const auto& [g, mult] : fr.factors) {
    factors.push_back(Json{{"poly", g.str()}, {"multiplicity", mult}});
  }
  Json orbits = Json::array();
  for (const auto& o : fr.orbits) orbits.push_back(o);
  Json fp = Json::array();
  for (const auto& g : fr.fp_factors) fp.push_back(g.str());
  return Json{{"input", fr.input.str()},
              {"factors", factors},
              {"scalar", fr.scalar.str()},
              {"complete", fr.complete},
              {"orbits", orbits},
              {"fp_factors", fp}};
}

Json to_json(const std::vector<BandRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"n", r.n},
                       {"count", r.count},
                       {"q", r.q},
                       {"band_low", r.band_low},
                       {"band_high", r.band_high},
                       {"label", r.label}});
  }
  return arr;
}

Json make_envelope(const std::string& command, Json inputs, Json outputs,
                   const std::vector<std::string>& warnings) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"tool_version", kToolVersion},
              {"outputs", std::move(outputs)},
              {"warnings", warnings}};
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

bool validate_node(const Json& doc, const Json& schema, const std::string& path, std::string* why) {
  if (schema.contains("type")) {
    if (!type_matches(doc, schema["type"].get<std::string>())) {
      if (why) *why = path + ": expected type " + schema["type"].get<std::string>();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) {
      if (v == doc) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (why) *why = path + ": value not in enum";
      return false;
    }
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>())) {
          if (why) *why = path + ": missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
        if (doc.contains(it.key())) {
          if (!validate_node(doc[it.key()], it.value(), path + "/" + it.key(), why)) return false;
        }
      }
      if (schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
          if (!schema["properties"].contains(it.key())) {
            if (why) *why = path + ": unexpected key " + it.key();
            return false;
          }
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < doc.size(); ++i) {
      if (!validate_node(doc[i], schema["items"], path + "[" + std::to_string(i) + "]", why)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool validate_against_schema(const Json& doc, const Json& schema, std::string* why) {
  return validate_node(doc, schema, "$", why);
}

}  // namespace pn

#include "pogroup/json_io.hpp"

namespace pogroup {

namespace {

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(Err::Parse, "bad rational literal: " + s);
  if (q.get_den() == 0) fail(Err::Parse, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

} // namespace

Json descriptor_to_json(const Desc& d) {
  Json j;
  switch (d->kind) {
    case Kind::Int: j["kind"] = "Int"; break;
    case Kind::Rat: j["kind"] = "Rat"; break;
    case Kind::Matrix: j["kind"] = "Matrix"; break;
    case Kind::Free: {
      j["kind"] = "Free";
      j["generators"] = d->generators;
      Json vals = Json::array();
      for (const Rat& v : d->valuations) vals.push_back(v.get_str());
      j["valuations"] = std::move(vals);
      break;
    }
    case Kind::Prod: {
      j["kind"] = "Prod";
      j["mode"] = d->mode == ProdMode::Strict ? "strict" : "product";
      Json c = Json::array();
      for (const Desc& ch : d->children) c.push_back(descriptor_to_json(ch));
      j["children"] = std::move(c);
      break;
    }
    case Kind::Lex:
      j["kind"] = "Lex";
      j["first"] = descriptor_to_json(d->children[0]);
      j["second"] = descriptor_to_json(d->children[1]);
      break;
    case Kind::Trivial:
      j["kind"] = "Trivial";
      j["child"] = descriptor_to_json(d->children[0]);
      break;
  }
  return j;
}

Desc descriptor_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Int") return desc_int();
  if (kind == "Rat") return desc_rat();
  if (kind == "Matrix") return desc_matrix();
  if (kind == "Free") {
    std::vector<Rat> vals;
    for (const Json& v : j.at("valuations")) vals.push_back(rat_from_string(v.get<std::string>()));
    return desc_free(j.at("generators").get<int>(), std::move(vals));
  }
  if (kind == "Prod") {
    std::vector<Desc> children;
    for (const Json& c : j.at("children")) children.push_back(descriptor_from_json(c));
    return desc_prod(std::move(children), j.at("mode").get<std::string>() == "strict"
                                              ? ProdMode::Strict
                                              : ProdMode::Product);
  }
  if (kind == "Lex")
    return desc_lex(descriptor_from_json(j.at("first")), descriptor_from_json(j.at("second")));
  if (kind == "Trivial") return desc_trivial(descriptor_from_json(j.at("child")));
  fail(Err::Parse, "unknown descriptor kind: " + kind);
}

Json element_to_json(const Desc& d, const Element& e) {
  switch (d->kind) {
    case Kind::Int: return e.ival().get_str();
    case Kind::Rat: return e.qval().get_str();
    case Kind::Matrix: return Json{{"a", e.mval().a.get_str()}, {"b", e.mval().b.get_str()}};
    case Kind::Free: {
      Json w = Json::array();
      for (const Letter& l : e.wval()) w.push_back(Json::array({l.gen, l.sign}));
      return w;
    }
    case Kind::Prod:
    case Kind::Lex: {
      Json t = Json::array();
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(element_to_json(d->children[i], e.tval()[i]));
      return t;
    }
    case Kind::Trivial: return element_to_json(d->children[0], e);
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

Element element_from_json(const Desc& d, const Json& j) {
  switch (d->kind) {
    case Kind::Int: {
      Rat q = rat_from_string(j.get<std::string>());
      if (q.get_den() != 1) fail(Err::ShapeMismatch, "expected an integer");
      return Element::of_int(q.get_num());
    }
    case Kind::Rat: return Element::of_rat(rat_from_string(j.get<std::string>()));
    case Kind::Matrix:
      return Element::of_mat(Mat{rat_from_string(j.at("a").get<std::string>()),
                                 rat_from_string(j.at("b").get<std::string>())});
    case Kind::Free: {
      Word w;
      for (const Json& l : j) w.push_back(Letter{l.at(0).get<int>(), l.at(1).get<int>()});
      Element e = Element::of_word(std::move(w));
      check_shape(d, e);
      return e;
    }
    case Kind::Prod:
    case Kind::Lex: {
      if (!j.is_array() || j.size() != d->children.size())
        fail(Err::ShapeMismatch, "tuple arity mismatch");
      Element::Tuple t;
      for (std::size_t i = 0; i < d->children.size(); ++i)
        t.push_back(element_from_json(d->children[i], j[i]));
      return Element::of_tuple(std::move(t));
    }
    case Kind::Trivial: return element_from_json(d->children[0], j);
  }
  fail(Err::InvalidDescriptor, "bad kind");
}

Json equation_to_json(const Desc& d, const Equation& eq) {
  return Json{{"a1", element_to_json(d, eq.a1)},
              {"a2", element_to_json(d, eq.a2)},
              {"b1", element_to_json(d, eq.b1)},
              {"b2", element_to_json(d, eq.b2)}};
}

Equation equation_from_json(const Desc& d, const Json& j) {
  return Equation{element_from_json(d, j.at("a1")), element_from_json(d, j.at("a2")),
                  element_from_json(d, j.at("b1")), element_from_json(d, j.at("b2"))};
}

Json table_to_json(const Desc& d, const RdpTable& t) {
  return Json{{"c11", element_to_json(d, t.c11)},
              {"c12", element_to_json(d, t.c12)},
              {"c21", element_to_json(d, t.c21)},
              {"c22", element_to_json(d, t.c22)},
              {"equation", equation_to_json(d, t.eq)}};
}

RdpTable table_from_json(const Desc& d, const Json& j) {
  return RdpTable{element_from_json(d, j.at("c11")), element_from_json(d, j.at("c12")),
                  element_from_json(d, j.at("c21")), element_from_json(d, j.at("c22")),
                  equation_from_json(d, j.at("equation"))};
}

Json budget_to_json(const SearchBudget& b) {
  return Json{{"max_abs_coord", b.max_abs_coord},
              {"max_word_len", b.max_word_len},
              {"max_candidates", b.max_candidates},
              {"seed", b.seed}};
}

SearchBudget budget_from_json(const Json& j) {
  SearchBudget b;
  if (j.contains("max_abs_coord")) b.max_abs_coord = j["max_abs_coord"].get<std::int64_t>();
  if (j.contains("max_word_len")) b.max_word_len = j["max_word_len"].get<std::int64_t>();
  if (j.contains("max_candidates")) b.max_candidates = j["max_candidates"].get<std::int64_t>();
  if (j.contains("seed")) b.seed = j["seed"].get<std::uint64_t>();
  return b;
}

Json verdict_to_json(const Desc& d, const Verdict& v) {
  Json j;
  j["verdict"] = verdict_kind_name(v.kind);
  if (!v.evidence.empty()) {
    Json ev = Json::array();
    for (const Element& e : v.evidence) ev.push_back(element_to_json(d, e));
    j["evidence"] = std::move(ev);
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.budget) j["budget"] = budget_to_json(*v.budget);
  return j;
}

Json report_to_json(const Desc& d, const TableReport& r) {
  Json j;
  j["sums_ok"] = r.sums_ok;
  j["positivity"] = Json{{"c11", r.pos11}, {"c12", r.pos12}, {"c21", r.pos21}, {"c22", r.pos22}};
  if (r.rdp1) j["rdp1"] = verdict_to_json(d, *r.rdp1);
  if (r.rdp2) j["rdp2"] = verdict_to_json(d, *r.rdp2);
  return j;
}

Json trace_to_json(const SolverTrace& t) {
  Json aux = Json::object();
  for (const auto& [k, v] : t.aux) aux[k] = v;
  return Json{{"tag", t.tag}, {"aux", std::move(aux)}};
}

Json oracle_result_to_json(const Desc& d, const OracleResult& r) {
  Json j;
  j["verdict"] = verdict_kind_name(r.kind);
  if (r.table) j["table"] = table_to_json(d, *r.table);
  j["tested"] = r.tested;
  if (r.kind != VerdictKind::Found) j["budget"] = budget_to_json(r.budget);
  return j;
}

Json schemas() {
  Json rat = Json{{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  Json desc_schema = Json{
      {"type", "object"},
      {"required", Json::array({"kind"})},
      {"properties",
       Json{{"kind",
             Json{{"enum", Json::array({"Int", "Rat", "Matrix", "Free", "Prod", "Lex",
                                        "Trivial"})}}},
            {"generators", Json{{"type", "integer"}, {"minimum", 1}}},
            {"valuations", Json{{"type", "array"}, {"items", rat}}},
            {"mode", Json{{"enum", Json::array({"product", "strict"})}}},
            {"children", Json{{"type", "array"}, {"items", Json{{"$ref", "#"}}}}},
            {"first", Json{{"$ref", "#"}}},
            {"second", Json{{"$ref", "#"}}},
            {"child", Json{{"$ref", "#"}}}}}};
  Json element_schema = Json{
      {"description", "shape-directed: rational string, matrix object, word "
                      "array of [generator, sign], or tuple array"},
      {"anyOf",
       Json::array(
           {rat,
            Json{{"type", "object"},
                 {"required", Json::array({"a", "b"})},
                 {"properties", Json{{"a", rat}, {"b", rat}}}},
            Json{{"type", "array"}}})}};
  Json eq_props = Json::object();
  for (const char* kq : {"a1", "a2", "b1", "b2"}) eq_props[kq] = Json{{"$ref", "#/element"}};
  Json equation_schema = Json{{"type", "object"},
                              {"required", Json::array({"a1", "a2", "b1", "b2"})},
                              {"properties", eq_props}};
  Json table_props = Json::object();
  for (const char* kc : {"c11", "c12", "c21", "c22"}) table_props[kc] = Json{{"$ref", "#/element"}};
  table_props["equation"] = Json{{"$ref", "#/equation"}};
  Json table_schema = Json{
      {"type", "object"},
      {"required", Json::array({"c11", "c12", "c21", "c22", "equation"})},
      {"properties", table_props}};
  Json budget_schema =
      Json{{"type", "object"},
           {"properties", Json{{"max_abs_coord", Json{{"type", "integer"}}},
                               {"max_word_len", Json{{"type", "integer"}}},
                               {"max_candidates", Json{{"type", "integer"}}},
                               {"seed", Json{{"type", "integer"}}}}}};
  Json verdict_schema = Json{
      {"type", "object"},
      {"required", Json::array({"verdict"})},
      {"properties",
       Json{{"verdict",
             Json{{"enum",
                   Json::array({"holds", "holds-exact", "holds-sampled", "fails", "unknown",
                                "found", "not-found-exhaustive", "not-found-within-budget"})}}},
            {"evidence", Json{{"type", "array"}}},
            {"reason", Json{{"type", "string"}}},
            {"budget", Json{{"$ref", "#/budget"}}}}}};
  return Json{{"format", 1},
              {"descriptor", desc_schema},
              {"element", element_schema},
              {"equation", equation_schema},
              {"table", table_schema},
              {"budget", budget_schema},
              {"verdict", verdict_schema}};
}

} // namespace pogroup

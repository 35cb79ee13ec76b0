#include "sah/serialize.hpp"

namespace sah {

std::vector<Vec> parse_vectors(const std::string& text) {
  std::vector<Vec> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
  };
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("vector literal must start with '(' in '" + text + "'");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unclosed vector literal in '" + text + "'");
    std::string body = text.substr(pos + 1, close - pos - 1);
    Vec v;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = body.find(',', start);
      v.push_back(parse_rat(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!out.empty() && v.size() != out.front().size())
      throw AmbientError("vectors of different lengths in '" + text + "'");
    out.push_back(std::move(v));
    pos = close + 1;
    skip();
    if (pos < text.size()) {
      if (text[pos] != ';') throw ParseError("expected ';' between vectors in '" + text + "'");
      ++pos;
    }
  }
  return out;
}

Json to_json(const Rat& q) { return q.get_str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const Space& s) { return Json{{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}}; }

Json to_json(const Generator& g) { return to_json(g.vectors()); }

Json to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [g, c] : e.terms()) terms.push_back(Json{{"coefficient", c}, {"simplex", to_json(g)}});
  return Json{{"text", e.to_string()}, {"terms", terms}};
}

Json to_json(const Tensor& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json factors = Json::array();
    for (const auto& g : key) factors.push_back(to_json(g));
    terms.push_back(Json{{"coefficient", c}, {"factors", factors}});
  }
  return Json{{"text", t.to_string()}, {"arity", t.arity()}, {"terms", terms}};
}

Json to_json(const CoverReport& r) {
  Json j{{"samples", r.samples},   {"covered", r.covered}, {"unique_strict", r.unique_strict},
         {"ties", r.ties},         {"overlaps", r.overlaps}, {"pass", r.pass()}};
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["counterexample_point"] = r.counterexample_point ? to_json(*r.counterexample_point) : Json(nullptr);
  return j;
}

Json to_json(const HopfReport& r) {
  Json j{{"n", r.n},
         {"e1", r.e1.to_string()},
         {"expected", r.expected.to_string()},
         {"e2", r.e2.to_string()},
         {"termwise", r.termwise},
         {"transport", r.transport},
         {"cover", to_json(r.cover)},
         {"pass", r.pass()}};
  if (r.mismatch)
    j["mismatch"] = Json{{"subset", r.mismatch->subset},
                         {"computed", r.mismatch->computed.to_string()},
                         {"expected", r.mismatch->expected.to_string()}};
  else
    j["mismatch"] = nullptr;
  return j;
}

Json to_json(const LocateResult& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses)
    ws.push_back(Json{{"subset", w.subset}, {"a", to_json(w.a)}, {"b", to_json(w.b)}, {"strict", w.strict}});
  auto s = r.strict();
  return Json{{"witnesses", ws}, {"strict_subset", s ? Json(s->subset) : Json(nullptr)}, {"tie", r.is_tie()}};
}

Json to_json(const HomologyGroup& h) {
  Json tors = Json::array();
  for (const auto& d : h.torsion) tors.push_back(d.get_str());
  return Json{{"betti", h.betti}, {"torsion", tors}};
}

Json to_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& [flag, k] : c.terms) {
    Json f = Json::array();
    for (const auto& s : flag) f.push_back(to_json(s.basis()));
    terms.push_back(Json{{"coefficient", k}, {"flag", f}});
  }
  return Json{{"degree", c.degree}, {"terms", terms}};
}

Json to_json(const Angle& a, int digits) {
  return Json{{"value", a.value.to_string(digits)},
              {"pi_rational", a.pi_rational ? Json(a.pi_rational->get_str()) : Json(nullptr)}};
}

Json to_json(const DehnTensor& t, int digits) {
  Json terms = Json::array();
  for (const auto& term : t.terms)
    terms.push_back(Json{{"coefficient", term.coefficient},
                         {"left", to_json(term.left, digits)},
                         {"right", to_json(term.right, digits)}});
  return terms;
}

Json to_json(const RelationSearch& s) {
  Json rel = nullptr;
  if (s.relation) {
    rel = Json::array();
    for (const auto& c : *s.relation) rel.push_back(c.get_str());
  }
  return Json{{"inputs", s.count},
              {"bits", s.bits},
              {"height", s.height.get_str()},
              {"scale_bits", s.scale_bits},
              {"relation", rel},
              {"norm_bound_log2", s.norm_bound_log2},
              {"relation_norm_log2", s.relation_norm_log2},
              {"certified_none", s.certified_none}};
}

namespace {

Json rat_matrix(const std::vector<std::vector<Rat>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

}  // namespace

Json to_json(const CocommReport& r, int digits) {
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_json(b, digits));
  Json searches = Json::array();
  for (const auto& s : r.searches) searches.push_back(to_json(s));
  return Json{{"reduced", to_json(r.reduced, digits)},
              {"basis", basis},
              {"matrix", rat_matrix(r.matrix)},
              {"swapped", rat_matrix(r.swapped)},
              {"equal", r.equal},
              {"certified", r.certified},
              {"height", r.height.get_str()},
              {"bits", r.bits},
              {"searches", searches}};
}

}  // namespace sah

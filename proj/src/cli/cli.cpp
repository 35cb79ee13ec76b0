#include "sah/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sah/acceptance.hpp"
#include "sah/serialize.hpp"

namespace sah::cli {

namespace {

struct Report {
  Json data = Json::object();
  std::vector<std::string> lines;
  std::optional<bool> pass;
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    bool quote = a.find_first_of(" ;()") != std::string::npos || a.empty();
    s += quote ? "\"" + a + "\"" : a;
  }
  return s;
}

std::string rat_matrix_text(const std::vector<std::vector<Rat>>& m) {
  if (m.empty()) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? " " : "") + m[i][j].get_str();
  }
  return s + "]";
}

class Runner {
 public:
  explicit Runner(Config& cfg) : cfg_(cfg) {}

  std::vector<Vec> vectors(const std::string& text) const {
    auto vs = parse_vectors(text);
    if (vs.empty()) throw ParseError("no vectors given");
    std::size_t dim = vs.front().size();
    if (dim == 0) throw ParseError("empty vector literal");
    if (dim > cfg_.max_dim)
      throw CapacityError("ambient dimension " + std::to_string(dim) + " exceeds --max-dim " +
                          std::to_string(cfg_.max_dim));
    return vs;
  }

  Generator generator(const std::vector<Vec>& vs) const {
    auto g = normalize(vs, vs.front().size());
    if (!g) throw DegeneracyError("the vectors are linearly dependent");
    return g->first;
  }

  Report product(const std::string& left, const std::string& right) const {
    auto l = vectors(left), r = vectors(right);
    if (l.front().size() != r.front().size()) throw AmbientError("factors live in different ambients");
    std::size_t dim = l.front().size();
    Element p = mu(Element::from_tuple(l, dim), Element::from_tuple(r, dim));
    Report rep;
    rep.data["product"] = to_json(p);
    rep.lines.push_back("product: " + p.to_string());
    return rep;
  }

  Report coproduct(const std::string& text) const {
    auto t = vectors(text);
    Element x = Element::from_tuple(t, t.front().size());
    Tensor d = delta(x);
    Report rep;
    rep.data["element"] = to_json(x);
    rep.data["coproduct"] = to_json(d);
    rep.lines.push_back("element: " + x.to_string());
    rep.lines.push_back("coproduct: " + d.to_string());
    return rep;
  }

  Report antipode_cmd(const std::string& text) const {
    auto t = vectors(text);
    Element x = Element::from_tuple(t, t.front().size());
    Element a = antipode(x);
    Report rep;
    rep.data["element"] = to_json(x);
    rep.data["antipode"] = to_json(a);
    rep.lines.push_back("element: " + x.to_string());
    rep.lines.push_back("antipode: " + a.to_string());
    return rep;
  }

  static std::string cover_text(const CoverReport& c) {
    std::ostringstream os;
    os << c.covered << "/" << c.samples << " covered, " << c.unique_strict << " unique strict, " << c.ties
       << " ties, " << c.overlaps << " overlaps";
    if (c.counterexample) os << ", counterexample at sample " << *c.counterexample;
    return os.str();
  }

  Report hopf(const std::string& text, std::size_t samples) const {
    auto t = vectors(text);
    HopfReport h = hopf_check(t, samples, cfg_.seed);
    Report rep;
    rep.data = to_json(h);
    rep.pass = h.pass();
    rep.lines.push_back("mu(id x alpha)delta: " + h.e1.to_string());
    rep.lines.push_back("sphere decomposition: " + h.expected.to_string());
    rep.lines.push_back(std::string("termwise: ") + (h.termwise ? "equal" : "different"));
    if (h.mismatch)
      rep.lines.push_back("first mismatch at subset " + std::to_string(h.mismatch->subset) + ": " +
                          h.mismatch->computed.to_string() + " vs " + h.mismatch->expected.to_string());
    rep.lines.push_back("mu(alpha x id)delta: " + h.e2.to_string());
    rep.lines.push_back(std::string("antipode transport: ") + (h.transport ? "ok" : "failed"));
    rep.lines.push_back("cover (seed " + std::to_string(cfg_.seed) + "): " + cover_text(h.cover));
    return rep;
  }

  Report cover(const std::string& text, std::size_t samples) const {
    auto t = vectors(text);
    CoverReport c = cover_check(t, samples, cfg_.seed);
    Report rep;
    rep.data = to_json(c);
    rep.pass = c.pass();
    rep.lines.push_back("cover (seed " + std::to_string(cfg_.seed) + "): " + cover_text(c));
    if (c.counterexample_point) rep.lines.push_back("counterexample point: " + to_string(*c.counterexample_point));
    return rep;
  }

  Report bialg(const std::string& left, const std::string& right) const {
    auto l = vectors(left), r = vectors(right);
    if (l.front().size() != r.front().size()) throw AmbientError("factors live in different ambients");
    Generator x = generator(l), y = generator(r);
    if (!are_orthogonal(x.ambient(), y.ambient())) throw OrthogonalityError("the spans are not orthogonal");
    bool ok = bialg_check(x, y);
    Report rep;
    rep.data["x"] = to_json(x);
    rep.data["y"] = to_json(y);
    rep.data["compatible"] = ok;
    rep.pass = ok;
    rep.lines.push_back("x: " + x.to_string());
    rep.lines.push_back("y: " + y.to_string());
    rep.lines.push_back(std::string("delta(mu(x, y)) vs (mu x mu)(1 x tau x 1)(delta x delta): ") +
                        (ok ? "equal" : "different"));
    return rep;
  }

  Report locate_cmd(const std::string& text, const std::string& point) const {
    auto t = vectors(text);
    auto pts = parse_vectors(point);
    if (pts.size() != 1) throw ParseError("--point takes exactly one vector");
    if (pts.front().size() != t.front().size()) throw AmbientError("point and basis live in different ambients");
    LocateResult r = Locator(t).locate(pts.front());
    Report rep;
    rep.data = to_json(r);
    for (const auto& w : r.witnesses) {
      std::string s = "subset " + std::to_string(w.subset) + (w.strict ? " (strict)" : " (boundary)") + ": a=";
      s += to_string(w.a) + " b=" + to_string(w.b);
      rep.lines.push_back(s);
    }
    auto s = r.strict();
    rep.lines.push_back(s ? "unique strict cone: subset " + std::to_string(s->subset) : std::string("tie"));
    return rep;
  }

  Report homology_cmd(const std::string& text, std::size_t degree, bool closed) const {
    auto t = vectors(text);
    std::size_t dim = t.front().size();
    FlagComplex cx = build_complex(subset_span_lattice(t, dim, closed));
    HomologyGroup h = homology(cx, degree);
    Report rep;
    rep.data["lattice_size"] = cx.lattice().size();
    rep.data["cells"] = cx.cell_count();
    rep.data["degree"] = degree;
    rep.data["homology"] = to_json(h);
    rep.lines.push_back("lattice: " + std::to_string(cx.lattice().size()) + " subspaces, " +
                        std::to_string(cx.cell_count()) + " flags");
    std::string g = "H_" + std::to_string(degree) + " = Z^" + std::to_string(h.betti);
    for (const auto& d : h.torsion) g += " + Z/" + d.get_str();
    rep.lines.push_back(g);
    rep.lines.push_back("betti: " + std::to_string(h.betti));
    return rep;
  }

  Report apartment_cmd(const std::string& text) const {
    auto t = vectors(text);
    std::size_t dim = t.front().size();
    Chain apt = apartment_cycle(t, dim);
    FlagComplex cx = build_complex(subset_span_lattice(t, dim));
    HomologyBasis hb(cx, t.size());
    bool cycle = hb.is_cycle(apt);
    Report rep;
    rep.data["chain"] = to_json(apt);
    rep.data["cycle"] = cycle;
    rep.data["homology"] = to_json(hb.group());
    rep.pass = cycle;
    rep.lines.push_back("apartment: " + apt.to_string());
    rep.lines.push_back(std::string("relative cycle: ") + (cycle ? "yes" : "no"));
    if (cycle) {
      auto c = hb.free_coordinates(apt);
      Json cj = Json::array();
      std::string s;
      for (const auto& x : c) {
        cj.push_back(x.get_str());
        s += (s.empty() ? "" : " ") + x.get_str();
      }
      rep.data["coordinates"] = cj;
      rep.lines.push_back("coordinates in H_" + std::to_string(t.size()) + ": (" + s + ")");
    }
    return rep;
  }

  Report relation_cmd(const std::string& text, bool closed) const {
    auto t = vectors(text);
    RelationReport r = solomon_tits_relation(t, closed);
    Report rep;
    rep.data["relation"] = to_json(r.relation);
    rep.data["bounds"] = r.witness.has_value();
    rep.data["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    rep.lines.push_back("alternating apartment sum: " + r.relation.to_string());
    rep.lines.push_back(r.witness ? "bounds: yes, witness " + r.witness->to_string() : std::string("bounds: no"));
    return rep;
  }

  Report step(std::size_t instances) const {
    StepCheckSummary s = step_checks(cfg_.seed, instances, cfg_.max_dim);
    Report rep;
    rep.data = Json{{"instances", s.instances},   {"equivariance", s.equivariance}, {"operad", s.operad},
                    {"products", s.products},     {"defined", s.defined}};
    rep.pass = s.pass();
    std::ostringstream os;
    os << "seed " << cfg_.seed << ", " << s.instances << " instances, dimensions <= " << cfg_.max_dim;
    rep.lines.push_back(os.str());
    rep.lines.push_back("theta equivariance: " + std::to_string(s.equivariance) + " (" + std::to_string(s.defined) +
                        " off the basepoint)");
    rep.lines.push_back("operad compatibility: " + std::to_string(s.operad));
    rep.lines.push_back("product/coproduct: " + std::to_string(s.products));
    return rep;
  }

  Report dehn(const std::string& side) const {
    const long bits = cfg_.precision_bits;
    Angle a = parse_angle(side, bits);
    SphericalSimplex s = regular_tetra(a, bits);
    Angle d = dihedral(s, {0, 1});
    Angle f = tetra_dihedral_formula(a, bits);
    DehnTensor t = dehn_invariant(s);
    DehnTensor r = reduce_tensor(t, Int(static_cast<long>(cfg_.relation_height)), bits);
    Report rep;
    rep.data["side"] = to_json(a, cfg_.digits);
    rep.data["dihedral"] = to_json(d, cfg_.digits);
    rep.data["formula"] = to_json(f, cfg_.digits);
    rep.data["tensor"] = to_json(t, cfg_.digits);
    rep.data["reduced"] = to_json(r, cfg_.digits);
    rep.lines.push_back("side: " + a.to_string(cfg_.digits));
    rep.lines.push_back("dihedral: " + d.to_string(cfg_.digits));
    rep.lines.push_back("formula: " + f.to_string(cfg_.digits));
    rep.lines.push_back("tensor: " + t.to_string(cfg_.digits));
    rep.lines.push_back("dehn invariant: " + r.to_string(cfg_.digits) + " (reduced)");
    return rep;
  }

  Report cocomm(const std::string& side) const {
    const long bits = cfg_.precision_bits;
    Angle a = parse_angle(side, bits);
    DehnTensor t = dehn_invariant(regular_tetra(a, bits));
    CocommReport c = cocomm_test(t, Int(static_cast<long>(cfg_.relation_height)), bits);
    Report rep;
    rep.data["side"] = to_json(a, cfg_.digits);
    rep.data["tensor"] = to_json(t, cfg_.digits);
    rep.data["report"] = to_json(c, cfg_.digits);
    rep.lines.push_back("tensor: " + t.to_string(cfg_.digits));
    rep.lines.push_back("reduced: " + c.reduced.to_string(cfg_.digits));
    std::string basis;
    for (const auto& b : c.basis) basis += (basis.empty() ? "" : ", ") + b.to_string(cfg_.digits);
    rep.lines.push_back("basis mod piQ: {" + basis + "}");
    rep.lines.push_back("matrix: " + rat_matrix_text(c.matrix));
    rep.lines.push_back("swapped: " + rat_matrix_text(c.swapped));
    for (const auto& s : c.searches) {
      std::ostringstream os;
      os << "search over " << s.count << " values, height " << s.height.get_str() << ", " << s.bits << " bits: ";
      if (s.relation) {
        os << "relation (";
        for (std::size_t i = 0; i < s.relation->size(); ++i) os << (i ? " " : "") << (*s.relation)[i].get_str();
        os << ")";
      } else {
        os << "none; shortest lattice vector >= 2^" << std::fixed << std::setprecision(1) << s.norm_bound_log2
           << ", relations would give <= 2^" << s.relation_norm_log2
           << (s.certified_none ? " (certified)" : " (not certified)");
      }
      rep.lines.push_back(os.str());
    }
    rep.lines.push_back(std::string("cocommutative on this tensor: ") + (c.equal ? "equal" : "distinct"));
    return rep;
  }

  Report suite(const std::vector<int>& only) const {
    std::vector<int> ids = only;
    if (ids.empty())
      for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
    auto results = run_acceptance(ids, cfg_.seed);
    Report rep;
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : results) {
      Json row{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"detail", r.detail}};
      if (r.limit_seconds > 0) row["limit_seconds"] = r.limit_seconds;
      if (cfg_.timing) row["seconds"] = r.seconds;
      rows.push_back(row);
      all = all && r.pass();
      std::ostringstream os;
      os << std::setw(2) << r.id << "  " << (r.pass() ? "PASS" : "FAIL") << "  " << std::left << std::setw(30)
         << r.title << "  " << r.detail;
      if (cfg_.timing) os << "  [" << std::fixed << std::setprecision(2) << r.seconds << " s]";
      rep.lines.push_back(os.str());
    }
    rep.data["criteria"] = rows;
    rep.pass = all;
    return rep;
  }

 private:
  Config& cfg_;
};

Json error_json(const std::string& kind, const std::string& message, int code) {
  return Json{{"error", kind}, {"message", message}, {"exit_code", code}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact and arbitrary-precision experiments on the spherical scissors congruence Hopf algebra",
               "sah"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--bits", cfg.precision_bits, "binary precision of floating computations")->check(CLI::Range(64, 1 << 16));
  app.add_option("--height", cfg.relation_height, "coefficient bound for integer relations")
      ->check(CLI::Range(1LL, 1LL << 40));
  app.add_option("--max-dim", cfg.max_dim, "largest ambient dimension accepted")->check(CLI::Range(1, 8));
  app.add_option("--digits", cfg.digits, "decimal digits printed for floating values")->check(CLI::Range(1, 1000));
  app.add_flag("--json", cfg.json, "emit a JSON report");
  app.add_flag("--timing", cfg.timing, "include wall-clock times (output is then not reproducible)");

  Runner runner(cfg);
  std::function<Report()> action;
  std::string vecs, left, right, point, side;
  std::size_t samples = 1000, degree = 0, instances = 100;
  bool closed = false;
  std::vector<int> only;

  auto* c = app.add_subcommand("product", "join product of two simplices with orthogonal spans");
  c->add_option("--left", left, "first tuple, e.g. \"(1,0,0)\"")->required();
  c->add_option("--right", right, "second tuple")->required();
  c->callback([&] { action = [&] { return runner.product(left, right); }; });

  c = app.add_subcommand("coproduct", "Dehn face/link coproduct of a simplex");
  c->add_option("--vectors", vecs, "tuple such as \"(1,0);(1,1)\"")->required();
  c->callback([&] { action = [&] { return runner.coproduct(vecs); }; });

  c = app.add_subcommand("antipode", "antipode (dual simplex) of a simplex");
  c->add_option("--vectors", vecs, "tuple")->required();
  c->callback([&] { action = [&] { return runner.antipode_cmd(vecs); }; });

  c = app.add_subcommand("hopf-check", "antipode identity with the sphere decomposition certificate");
  c->add_option("--vectors", vecs, "basis")->required();
  c->add_option("--samples", samples, "sample points for the cover certificate")->capture_default_str();
  c->callback([&] { action = [&] { return runner.hopf(vecs, samples); }; });

  c = app.add_subcommand("cover-check", "sample the sphere decomposition cones");
  c->add_option("--vectors", vecs, "basis")->required();
  c->add_option("--samples", samples, "sample points")->capture_default_str();
  c->callback([&] { action = [&] { return runner.cover(vecs, samples); }; });

  c = app.add_subcommand("bialg-check", "bialgebra compatibility on two orthogonal simplices");
  c->add_option("--left", left, "first tuple")->required();
  c->add_option("--right", right, "second tuple")->required();
  c->callback([&] { action = [&] { return runner.bialg(left, right); }; });

  c = app.add_subcommand("locate", "cones of the sphere decomposition containing a point");
  c->add_option("--vectors", vecs, "basis")->required();
  c->add_option("--point", point, "point in the span, e.g. \"(1,2)\"")->required();
  c->callback([&] { action = [&] { return runner.locate_cmd(vecs, point); }; });

  c = app.add_subcommand("tits-homology", "homology of the flag complex of subset spans");
  c->add_option("--vectors", vecs, "vectors whose subset spans form the lattice")->required();
  c->add_option("--degree", degree, "homological degree")->required();
  c->add_flag("--closed", closed, "close the lattice under sums and intersections");
  c->callback([&] { action = [&] { return runner.homology_cmd(vecs, degree, closed); }; });

  c = app.add_subcommand("apartment", "apartment cycle of a basis and its homology coordinate");
  c->add_option("--vectors", vecs, "basis")->required();
  c->callback([&] { action = [&] { return runner.apartment_cmd(vecs); }; });

  c = app.add_subcommand("boundary-relation", "whether the n+1 vector apartment relation bounds (exploratory for n >= 3)");
  c->add_option("--vectors", vecs, "n+1 vectors in Q^n, every n of them independent")->required();
  c->add_flag("--closed", closed, "use the lattice closed under sums and intersections");
  c->callback([&] { action = [&] { return runner.relation_cmd(vecs, closed); }; });

  c = app.add_subcommand("step-check", "seeded step-function coalgebra checks");
  c->add_option("--instances", instances, "number of instances")->capture_default_str();
  c->callback([&] { action = [&] { return runner.step(instances); }; });

  c = app.add_subcommand("dehn-tetra", "Dehn invariant of the regular spherical tetrahedron");
  c->add_option("--side", side, "side length, e.g. pi/2, 1, arccos(1/3)")->required();
  c->callback([&] { action = [&] { return runner.dehn(side); }; });

  c = app.add_subcommand("cocomm", "compare the Dehn invariant with its swap in (R/piQ) x (R/piQ)");
  c->add_option("--side", side, "side length expression")->required();
  c->callback([&] { action = [&] { return runner.cocomm(side); }; });

  c = app.add_subcommand("suite", "run the acceptance battery");
  c->add_option("--only", only, "criterion numbers to run")->delimiter(',')->check(CLI::Range(1, kCriteria));
  c->callback([&] { action = [&] { return runner.suite(only); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what(), kUsage).dump() << "\n";
    return kUsage;
  }

  const std::string echo = join(args);
  Report rep;
  auto start = std::chrono::steady_clock::now();
  try {
    rep = action();
  } catch (const PrecisionError& e) {
    err << error_json(e.kind(), e.what(), kNumeric).dump() << "\n";
    return kNumeric;
  } catch (const GeometryError& e) {
    err << error_json(e.kind(), e.what(), kNumeric).dump() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    err << error_json(e.kind(), e.what(), kUsage).dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what(), kFailed).dump() << "\n";
    return kFailed;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.json) {
    Json j{{"command", echo},
           {"config",
            {{"seed", cfg.seed},
             {"bits", cfg.precision_bits},
             {"height", cfg.relation_height},
             {"max_dim", cfg.max_dim}}},
           {"pass", rep.pass ? Json(*rep.pass) : Json(nullptr)},
           {"result", rep.data}};
    if (cfg.timing) j["seconds"] = seconds;
    out << j.dump(2) << "\n";
  } else {
    out << "command: " << echo << "\n";
    for (const auto& l : rep.lines) out << l << "\n";
    if (rep.pass) out << "result: " << (*rep.pass ? "PASS" : "FAIL") << "\n";
    if (cfg.timing) out << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
  return rep.pass && !*rep.pass ? kFailed : kOk;
}

}  // namespace sah::cli

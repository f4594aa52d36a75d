#include "eulersym/report.hpp"

#include "eulersym/parse.hpp"

#include <chrono>
#include <stdexcept>

namespace eulersym {

namespace {

class Timings {
 public:
  explicit Timings(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto run(const char* name, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_) {
      std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      body_[name] = ms.count();
    }
    return result;
  }
  void attach(Json& j) const {
    if (enabled_) j["timings_ms"] = body_;
  }

 private:
  bool enabled_;
  Json body_ = Json::object();
};

Json sizes(const std::vector<std::size_t>& v) {
  Json j = Json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

Json blocks_json(const std::vector<std::vector<std::size_t>>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back(sizes(b));
  return j;
}

std::string text(const Source& s, const Polynomial& p) { return p.to_string(s.names); }

std::vector<std::string> dual_names(const Source& s) {
  std::vector<std::string> out;
  for (const auto& n : s.names) out.push_back("u_" + n);
  return out;
}

Json header(const Source& s, const char* command) {
  Json j;
  j["command"] = command;
  j["source"] = s.label;
  j["input"] = text(s, s.polynomial);
  j["degree"] = *s.polynomial.homogeneous_degree();
  j["num_vars"] = s.polynomial.num_vars();
  j["variables"] = s.names;
  return j;
}

Json symbol_json(const SymbolVerdict& v) {
  Json j;
  j["passed"] = v.passed;
  j["failure"] = v.failure;
  j["degree"] = v.degree ? Json(*v.degree) : Json(nullptr);
  j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  j["direction"] = v.direction ? Json(*v.direction + 1) : Json(nullptr);
  return j;
}

Json rank_symmetry_json(const RankSymmetryReport& r) {
  Json j;
  j["ranks"] = sizes(r.ranks);
  Json sym = Json::array();
  for (bool b : r.symmetric) sym.push_back(b);
  j["symmetric"] = sym;
  j["holds"] = r.holds;
  return j;
}

Json smoothness_items(const SmoothnessReport& rep) {
  Json items = Json::array();
  for (const auto& it : rep.items)
    items.push_back({{"id", it.id}, {"description", it.description}, {"outcome", to_string(it.outcome)}, {"detail", it.detail}});
  return items;
}

unsigned require_degree(const Source& s, unsigned minimum, const char* what) {
  unsigned r = *s.polynomial.homogeneous_degree();
  if (r < minimum) throw std::invalid_argument(std::string(what) + " needs degree at least " + std::to_string(minimum));
  return r;
}

LegendreConfig legendre_config(const ReportOptions& o) {
  LegendreConfig c;
  c.seed = o.seed;
  c.verify_points = o.points;
  c.certify = o.certify;
  return c;
}

Json entry_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.display_name();
  j["polynomial"] = e.polynomial.to_string(e.variable_names);
  j["variables"] = e.variable_names;
  j["reduced"] = e.reduced;
  j["factor_blocks"] = blocks_json(e.factor_blocks);
  Json x;
  x["degree"] = e.expected.degree;
  x["num_vars"] = e.expected.num_vars;
  x["profile"] = sizes(e.expected.profile);
  x["ambient_dimension"] = e.expected.ambient_dimension;
  x["label"] = e.expected.label;
  x["description"] = e.expected.description;
  x["factor_count"] = e.expected.factor_count;
  j["expected"] = x;
  j["classification"] = classify(e);
  return j;
}

}  // namespace

Source source_from_expression(std::string_view text) {
  auto parsed = parse_polynomial(text);
  require_homogeneous(parsed.polynomial);
  if (parsed.polynomial.degree() < 1) throw std::invalid_argument("polynomial must have degree at least 1");
  return {std::move(parsed.polynomial), std::move(parsed.names), std::nullopt, "expression"};
}

Source source_from_catalog(std::string_view list) {
  ProductSpec spec = parse_product(list);
  Source s{spec.polynomial, spec.variable_names, spec, std::string(list)};
  return s;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

Json to_json(const AmbientPoint& x) {
  Json j;
  j["t"] = to_json(x.t());
  j["w"] = to_json(x.w());
  Json dual = Json::array();
  for (unsigned k = 2; k < x.block_count(); ++k) dual.push_back(to_json(x.block(k)));
  j["dual"] = dual;
  return j;
}

AmbientPoint point_from_json(const Json& j, const AmbientSpace& a) {
  auto rational = [](const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("point: coordinates must be integers or \"p/q\" strings");
  };
  auto vec = [&](const Json& v) {
    if (!v.is_array()) throw std::invalid_argument("point: expected an array");
    Vector out;
    for (const auto& e : v) out.push_back(rational(e));
    return out;
  };
  if (!j.is_object() || !j.contains("t") || !j.contains("w"))
    throw std::invalid_argument("point: expected an object with \"t\", \"w\" and \"dual\"");
  std::vector<Vector> blocks{{rational(j.at("t"))}, vec(j.at("w"))};
  if (j.contains("dual"))
    for (const auto& b : j.at("dual")) blocks.push_back(vec(b));
  AmbientPoint x(std::move(blocks));
  a.require_compatible(x);
  if (x.is_zero()) throw std::invalid_argument("point: the zero vector is not a projective point");
  return x;
}

Report analyze_report(const Source& s, const ReportOptions& o) {
  Timings clock(o.timings);
  Report rep;
  rep.body = header(s, "analyze");
  auto sys = clock.run("symbol_system", [&] { return symbol_system_of(s.polynomial); });
  rep.body["profile"] = sizes(sys.profile());
  rep.body["ambient_dimension"] = sys.ambient_dimension();
  rep.body["raw_linear_rank"] = sys.raw_linear_rank.value_or(sys.num_vars);
  auto verdict = clock.run("symbol_verification", [&] { return verify_symbol_system(sys); });
  rep.body["symbol_system"] = symbol_json(verdict);
  auto symmetry = clock.run("rank_symmetry", [&] { return rank_symmetry_check(s.polynomial); });
  rep.body["rank_symmetry"] = rank_symmetry_json(symmetry);
  if (s.catalog) rep.body["classification"] = classify(*s.catalog);
  rep.body["seed"] = o.seed;
  clock.attach(rep.body);
  rep.passed = verdict.passed && symmetry.holds;
  return rep;
}

Report legendre_report(const Source& s, const ReportOptions& o) {
  require_degree(s, 2, "legendre");
  Timings clock(o.timings);
  Report rep;
  rep.body = header(s, "legendre");
  const auto config = legendre_config(o);
  auto res = clock.run("transform", [&] { return legendre_transform(s.polynomial, config); });
  Json l;
  l["status"] = to_string(res.status);
  l["p_star"] = res.transform ? Json(res.transform->to_string(dual_names(s))) : Json(nullptr);
  l["weight_classes"] = res.weight_classes;
  l["unknowns"] = res.unknowns;
  l["rounds"] = res.rounds;
  l["samples_used"] = res.samples_used;
  l["verified_points"] = res.verified_points;
  l["verification_passed"] = res.verification_passed;
  l["certified"] = res.certified;
  // Only a certified ekp verdict is unconditional; everything else rests on sampling.
  l["evidence"] = res.status == LegendreStatus::ekp && res.certified ? "certified (symbolic)" : "probabilistic (sampled)";
  if (res.status == LegendreStatus::degenerate_gradient_image) l["solution_dimension"] = res.solution_dimension;
  rep.body["legendre"] = l;
  rep.passed = res.status == LegendreStatus::ekp;
  if (rep.passed) {
    const bool symbolic = o.certify || s.polynomial.num_vars() <= 9;
    auto ids = clock.run("gradient_identities", [&] {
      return verify_gradient_identities(s.polynomial, *res.transform, symbolic ? CheckMode::symbolic : CheckMode::sampled,
                                        o.points, o.seed);
    });
    rep.body["gradient_identities"] = {{"mode", symbolic ? "symbolic" : "sampled"},
                                       {"forward", ids.forward},
                                       {"backward", ids.backward},
                                       {"points", ids.points}};
    auto back = clock.run("double_transform", [&] { return legendre_transform(*res.transform, config); });
    const bool round_trip = back.status == LegendreStatus::ekp && *back.transform == s.polynomial;
    rep.body["double_transform"] = {{"status", to_string(back.status)}, {"holds", round_trip}};
    rep.passed = ids.holds() && round_trip;
  }
  rep.body["seed"] = o.seed;
  clock.attach(rep.body);
  return rep;
}

Report smoothness_json(const Source& s, const ReportOptions& o) {
  require_degree(s, 2, "smooth-check");
  Timings clock(o.timings);
  Report rep;
  rep.body = header(s, "smooth-check");
  auto sr = clock.run("smoothness", [&] { return smoothness_report(s.polynomial, legendre_config(o)); });
  rep.body["smoothness"] = {{"items", smoothness_items(sr)}, {"verdict", sr.verdict}, {"passes_all", sr.passes_all}};
  rep.body["p_star"] = sr.p_star ? Json(sr.p_star->to_string(dual_names(s))) : Json(nullptr);
  if (s.catalog) rep.body["classification"] = classify(*s.catalog);
  rep.body["seed"] = o.seed;
  clock.attach(rep.body);
  rep.passed = sr.passes_all;
  return rep;
}

Report embed_report(const Source& s, const Rational& t, const Vector& w) {
  AmbientSpace a(s.polynomial);
  Report rep;
  rep.body = header(s, "embed");
  rep.body["layout"] = sizes(a.layout());
  auto x = embed(a, t, w);
  rep.body["point"] = to_json(x);
  rep.body["relations_hold"] = relation_membership(a, x);
  rep.passed = rep.body["relations_hold"].get<bool>();
  return rep;
}

Report act_report(const Source& s, const Vector& v, const AmbientPoint& x) {
  AmbientSpace a(s.polynomial);
  Report rep;
  rep.body = header(s, "act");
  rep.body["v"] = to_json(v);
  rep.body["point"] = to_json(x);
  rep.body["result"] = to_json(translate(a, v, x));
  return rep;
}

Report limit_report(const Source& s, const AmbientPoint& x, LimitDirection dir) {
  AmbientSpace a(s.polynomial);
  a.require_compatible(x);
  Report rep;
  rep.body = header(s, "limit");
  rep.body["direction"] = dir == LimitDirection::to_zero ? "zero" : "infinity";
  auto lim = bb_limit(x, dir);
  rep.body["point"] = to_json(x);
  rep.body["limit"] = to_json(lim.point.canonical());
  rep.body["weight"] = lim.weight;
  return rep;
}

Report curve_limit_report(const Source& s, const AmbientPoint& p, const Vector& v) {
  AmbientSpace a(s.polynomial);
  Report rep;
  rep.body = header(s, "curve-limit");
  rep.body["v"] = to_json(v);
  rep.body["point"] = to_json(p);
  auto lim = curve_limit_at_infinity(a, p, v);
  rep.body["limit"] = to_json(lim.canonical());
  const bool terminal_defined = a.layout().back() == 1;
  rep.body["is_terminal_point"] = terminal_defined && lim.projectively_equal(a.terminal_point());
  return rep;
}

Report relations_report(const Source& s, const AmbientPoint& x) {
  require_degree(s, 2, "relations");
  AmbientSpace a(s.polynomial);
  a.require_compatible(x);
  Report rep;
  rep.body = header(s, "relations");
  rep.body["point"] = to_json(x);
  Json rels = Json::array();
  bool all = true;
  for (const auto& rel : quadric_relations(a)) {
    auto value = rel.evaluate(x);
    all = all && value == 0;
    rels.push_back({{"label", rel.label()},
                    {"weight", rel.weight},
                    {"index", rel.index + 1},
                    {"form", rel.form.to_string(s.names)},
                    {"quadric", rel.quadric()},
                    {"kind", rel.quadric() ? "quadratic" : "higher-weight generalization (auxiliary)"},
                    {"value", to_string(value)}});
  }
  rep.body["relations"] = rels;
  rep.body["passes_known_relations"] = all;
  rep.passed = all;
  return rep;
}

Report catalog_list_report() {
  Report rep;
  rep.body["command"] = "catalog list";
  Json fams = Json::array();
  for (const auto& f : catalog_families()) {
    Json j;
    j["name"] = f.name;
    j["parameter"] = f.parameter;
    j["allowed"] = f.allowed;
    j["summary"] = f.summary;
    fams.push_back(j);
  }
  rep.body["families"] = fams;
  return rep;
}

Report catalog_build_report(std::string_view name) {
  Report rep;
  rep.body["command"] = "catalog build";
  rep.body["entry"] = entry_json(build(name));
  return rep;
}

Report catalog_verify_report(std::string_view name, const ReportOptions& o) {
  Timings clock(o.timings);
  const CatalogEntry e = build(name);
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.action_samples = o.action_samples;
  vo.legendre = legendre_config(o);
  auto v = clock.run("verify", [&] { return verify_entry(e, vo); });
  Report rep;
  rep.body["command"] = "catalog verify";
  rep.body["entry"] = entry_json(e);
  rep.body["profile"] = sizes(v.profile);
  rep.body["ambient_dimension"] = v.ambient_dimension;
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  rep.body["checks"] = checks;
  rep.body["passed"] = v.passed();
  rep.body["seed"] = o.seed;
  clock.attach(rep.body);
  rep.passed = v.passed();
  return rep;
}

Report catalog_classify_report(std::string_view list, const ReportOptions& o) {
  Timings clock(o.timings);
  const ProductSpec spec = parse_product(list);
  Report rep;
  rep.body["command"] = "catalog classify";
  Json names = Json::array();
  for (const auto& f : spec.factors) names.push_back(f.display_name());
  rep.body["factors"] = names;
  rep.body["classification"] = classify(spec);
  rep.body["degree"] = spec.degree;
  rep.body["num_vars"] = spec.polynomial.num_vars();
  rep.body["expected_ambient_dimension"] = spec.expected_ambient_dimension;
  rep.body["expected_factor_count"] = spec.expected_factor_count;
  if (spec.degree >= 2) {
    auto cc = clock.run("component_count", [&] { return component_count_check(spec, legendre_config(o)); });
    Json c;
    c["holds"] = cc.holds;
    c["status"] = to_string(cc.status);
    c["constructed_blocks"] = blocks_json(cc.constructed_blocks);
    c["polynomial_blocks"] = blocks_json(cc.polynomial_blocks);
    c["dual_blocks"] = blocks_json(cc.dual_blocks);
    c["detail"] = cc.detail;
    rep.body["component_count"] = c;
    rep.passed = cc.holds;
  }
  rep.body["seed"] = o.seed;
  clock.attach(rep.body);
  return rep;
}

}  // namespace eulersym

// Command-line front end. Exit codes: 0 all checks passed, 2 a mathematical
// check failed, 1 usage or parse error.
#include "eulersym/parse.hpp"
#include "eulersym/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace eulersym;

namespace {

struct Global {
  bool json = false;
  bool timings = false;
  bool certify = false;
  std::uint64_t seed = 0;
  std::size_t points = 64;
  std::size_t samples = 20;
};

struct PolyArgs {
  std::string expression;
  std::string catalog;
};

Source load_source(const PolyArgs& a) {
  if (!a.expression.empty() && !a.catalog.empty())
    throw CLI::ValidationError("give either a polynomial expression or --catalog, not both");
  if (!a.catalog.empty()) return source_from_catalog(a.catalog);
  if (a.expression.empty()) throw CLI::ValidationError("missing polynomial (expression or --catalog NAME)");
  return source_from_expression(a.expression);
}

Json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open point file " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("point file " + path + ": " + e.what());
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured() && !(e.is_array() && all_scalars(e))) return false;
  return true;
}

std::string inline_array(const Json& j) {
  std::string s = "(";
  bool first = true;
  for (const auto& e : j) {
    if (!first) s += ", ";
    first = false;
    s += e.is_array() ? inline_array(e) : scalar_text(e);
  }
  return s + ")";
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(os, value, indent + 2);
    } else if (value.is_array() && !all_scalars(value)) {
      os << pad << key << ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          os << pad << "  -\n";
          render(os, e, indent + 4);
        } else {
          os << pad << "  - " << (e.is_array() ? inline_array(e) : scalar_text(e)) << '\n';
        }
      }
    } else if (value.is_array()) {
      os << pad << key << ": " << inline_array(value) << '\n';
    } else {
      os << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

ReportOptions report_options(const Global& g) {
  ReportOptions o;
  o.seed = g.seed;
  o.timings = g.timings;
  o.certify = g.certify;
  o.points = g.points;
  o.action_samples = g.samples;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol systems, Legendre transforms and Euler-symmetric embeddings of homogeneous polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "Emit the JSON report");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (output is then not byte-stable)");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();

  PolyArgs pa;
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("polynomial", pa.expression, "Homogeneous polynomial, e.g. \"x1*x2 - x3^2\"");
    sub->add_option("--catalog", pa.catalog, "Catalog entry or comma-separated product, e.g. det3 or quad[2],monprod[1]");
  };

  std::function<Report()> action;

  auto* analyze = app.add_subcommand("analyze", "Dimension profile, symbol-system verification, rank symmetry");
  add_poly(analyze);
  analyze->callback([&] { action = [&] { return analyze_report(load_source(pa), report_options(g)); }; });

  auto* legendre = app.add_subcommand("legendre", "Multiplicative Legendre transform and its identities");
  add_poly(legendre);
  legendre->add_flag("--certify", g.certify, "Certify the transform by symbolic expansion");
  legendre->add_option("--points", g.points, "Verification points")->capture_default_str();
  legendre->callback([&] { action = [&] { return legendre_report(load_source(pa), report_options(g)); }; });

  auto* smooth = app.add_subcommand("smooth-check", "Necessary conditions for smoothness");
  add_poly(smooth);
  smooth->callback([&] { action = [&] { return smoothness_json(load_source(pa), report_options(g)); }; });

  std::string t_text = "1", w_text, v_text, point_file, dir_text;
  auto point_or_embed = [&](const Source& s, bool default_origin) {
    AmbientSpace a(s.polynomial);
    if (!point_file.empty()) return point_from_json(read_json_file(point_file), a);
    if (!w_text.empty()) return embed(a, parse_rational(t_text), parse_vector_csv(w_text));
    if (default_origin) return a.origin();
    throw CLI::ValidationError("need --point FILE or --w CSV");
  };

  auto* emb = app.add_subcommand("embed", "Image of (t, w) in the ambient space");
  add_poly(emb);
  emb->add_option("--t", t_text, "t coordinate")->capture_default_str();
  emb->add_option("--w", w_text, "w as comma-separated rationals")->required();
  emb->callback([&] {
    action = [&] { return embed_report(load_source(pa), parse_rational(t_text), parse_vector_csv(w_text)); };
  });

  auto* act = app.add_subcommand("act", "Translate a point by the vector group");
  add_poly(act);
  act->add_option("--v", v_text, "Translation vector (CSV)")->required();
  act->add_option("--point", point_file, "Point file (JSON, '-' for stdin)");
  act->add_option("--t", t_text, "t for an embedded point");
  act->add_option("--w", w_text, "w for an embedded point");
  act->callback([&] {
    action = [&] {
      auto s = load_source(pa);
      return act_report(s, parse_vector_csv(v_text), point_or_embed(s, false));
    };
  });

  auto* lim = app.add_subcommand("limit", "Torus fixed-point limit of a point");
  add_poly(lim);
  lim->add_option("--dir", dir_text, "zero or infinity")->required()->check(CLI::IsMember({"zero", "infinity"}));
  lim->add_option("--point", point_file, "Point file (JSON, '-' for stdin)");
  lim->add_option("--t", t_text, "t for an embedded point");
  lim->add_option("--w", w_text, "w for an embedded point");
  lim->callback([&] {
    action = [&] {
      auto s = load_source(pa);
      auto dir = dir_text == "zero" ? LimitDirection::to_zero : LimitDirection::to_infinity;
      return limit_report(s, point_or_embed(s, false), dir);
    };
  });

  auto* curve = app.add_subcommand("curve-limit", "Limit of translates by s*v as s -> infinity (default point: origin)");
  add_poly(curve);
  curve->add_option("--v", v_text, "Direction (CSV)")->required();
  curve->add_option("--point", point_file, "Point file (JSON, '-' for stdin)");
  curve->add_option("--t", t_text, "t for an embedded point");
  curve->add_option("--w", w_text, "w for an embedded point");
  curve->callback([&] {
    action = [&] {
      auto s = load_source(pa);
      return curve_limit_report(s, point_or_embed(s, true), parse_vector_csv(v_text));
    };
  });

  auto* rel = app.add_subcommand("relations", "Evaluate the generated relations at a point");
  add_poly(rel);
  rel->add_option("--point", point_file, "Point file (JSON, '-' for stdin)");
  rel->add_option("--t", t_text, "t for an embedded point");
  rel->add_option("--w", w_text, "w for an embedded point");
  rel->callback([&] {
    action = [&] {
      auto s = load_source(pa);
      return relations_report(s, point_or_embed(s, false));
    };
  });

  auto* cat = app.add_subcommand("catalog", "Classified families");
  cat->require_subcommand(1);
  std::string name;
  cat->add_subcommand("list", "List catalog families")->callback([&] { action = [] { return catalog_list_report(); }; });
  auto* cbuild = cat->add_subcommand("build", "Construct an entry");
  cbuild->add_option("name", name, "Entry, e.g. det3")->required();
  cbuild->callback([&] { action = [&] { return catalog_build_report(name); }; });
  auto* cverify = cat->add_subcommand("verify", "Run the check suite on an entry");
  cverify->add_option("name", name, "Entry, e.g. det3")->required();
  cverify->add_option("--samples", g.samples, "Action-consistency samples")->capture_default_str();
  cverify->callback([&] { action = [&] { return catalog_verify_report(name, report_options(g)); }; });
  auto* cclass = cat->add_subcommand("classify", "Classify a product of entries");
  cclass->add_option("names", name, "Comma-separated entries, e.g. quad3,quad2")->required();
  cclass->callback([&] { action = [&] { return catalog_classify_report(name, report_options(g)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Report rep = action();
    if (g.json) {
      std::cout << rep.body.dump(2) << '\n';
    } else {
      render(std::cout, rep.body, 0);
      std::cout << "result: " << (rep.passed ? "pass" : "FAIL") << '\n';
    }
    return rep.passed ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

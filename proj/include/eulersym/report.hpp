#pragma once

#include "eulersym/catalog.hpp"
#include "eulersym/variety.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eulersym {

using Json = nlohmann::ordered_json;

// Where a polynomial came from: an expression or a (product of) catalog entries.
struct Source {
  Polynomial polynomial;
  std::vector<std::string> names;
  std::optional<ProductSpec> catalog;
  std::string label;  // catalog list as given, or "expression"
};

// Parses, requires a nonzero homogeneous polynomial of degree >= 1.
Source source_from_expression(std::string_view text);
Source source_from_catalog(std::string_view list);

struct ReportOptions {
  std::uint64_t seed = 0;
  bool timings = false;  // wall-clock fields make output nondeterministic
  bool certify = false;
  std::size_t points = 64;
  std::size_t action_samples = 20;
};

struct Report {
  Json body;
  bool passed = true;  // false when a mathematical check failed
};

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const AmbientPoint& x);
// {"t": "p/q", "w": [...], "dual": [[block 2], ..., [block r]]}
AmbientPoint point_from_json(const Json& j, const AmbientSpace& a);

Report analyze_report(const Source& s, const ReportOptions& o);
Report legendre_report(const Source& s, const ReportOptions& o);
Report smoothness_json(const Source& s, const ReportOptions& o);
Report embed_report(const Source& s, const Rational& t, const Vector& w);
Report act_report(const Source& s, const Vector& v, const AmbientPoint& x);
Report limit_report(const Source& s, const AmbientPoint& x, LimitDirection dir);
Report curve_limit_report(const Source& s, const AmbientPoint& p, const Vector& v);
Report relations_report(const Source& s, const AmbientPoint& x);

Report catalog_list_report();
Report catalog_build_report(std::string_view name);
Report catalog_verify_report(std::string_view name, const ReportOptions& o);
Report catalog_classify_report(std::string_view list, const ReportOptions& o);

}  // namespace eulersym

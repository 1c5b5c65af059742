#include "serialization.hpp"

#include <cmath>
#include <cstdio>

namespace freeclt::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& require(const Json& obj, const char* key, const std::string& prefix = "") {
  const std::string field = prefix + key;
  if (!obj.is_object()) throw SchemaError(prefix.empty() ? "<document>" : prefix, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(field, "missing");
  return *it;
}

double number(const Json& obj, const char* key, const std::string& prefix = "") {
  const Json& v = require(obj, key, prefix);
  if (!v.is_number()) throw SchemaError(prefix + key, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_array()) throw SchemaError(key, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw SchemaError(std::string(key) + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

Json sequence_entries(const Sequence& s) {
  Json out = Json::array();
  for (const auto& x : s.entries()) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const QSqrt2& x) { return Json::array({x.rat().to_string(), x.irr().to_string()}); }

Json to_json(const Sequence& s) {
  Json out = Json::object();
  out["flavor"] = to_string(s.flavor());
  out["kind"] = to_string(s.kind());
  out["entries"] = sequence_entries(s);
  return out;
}

Json to_json(const CltReport& report) {
  Json out = Json::object();
  out["flavor"] = to_string(report.flavor);
  out["decay_exact"] = report.decay_exact;
  Json steps = Json::array();
  for (const auto& step : report.steps) {
    Json j = Json::object();
    j["index"] = step.index;
    j["moments"] = sequence_entries(step.moments);
    j["gaps"] = sequence_entries(step.gaps);
    j["cumulants"] = sequence_entries(step.cumulants);
    steps.push_back(std::move(j));
  }
  out["steps"] = std::move(steps);
  return out;
}

Json to_json(const analytic::AnalyticMeasure& mu) {
  using namespace analytic;
  return std::visit(
      Overloaded{
          [](const Semicircle& s) {
            return Json{{"type", "semicircle"}, {"center", s.center}, {"radius", s.radius}};
          },
          [](const CauchyLaw& c) {
            return Json{{"type", "cauchy_law"}, {"location", c.location}, {"scale", c.scale}};
          },
          [](const ChebyshevEigen& c) { return Json{{"type", "chebyshev_eigen"}, {"n", c.n}}; },
          [](const DensityTable& t) {
            return Json{{"type", "density_table"}, {"grid", t.grid}, {"values", t.values}};
          },
          [](const AtomMixture& a) {
            return Json{{"type", "atom_mixture"}, {"points", a.points}, {"weights", a.weights}};
          },
          [](const Mixture& m) {
            Json comps = Json::array();
            for (const auto& [w, c] : m.components) {
              comps.push_back(Json{{"weight", w}, {"measure", to_json(*c)}});
            }
            return Json{{"type", "mixture"}, {"components", comps}};
          },
      },
      mu.descriptor());
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(field, "expected a rational string such as \"-3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(field, e.what());
  }
}

QSqrt2 qsqrt2_from_json(const Json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) throw SchemaError(field, "expected a pair [rational, sqrt2-coefficient]");
    return QSqrt2(rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]"));
  }
  return QSqrt2(rational_from_json(j, field));
}

Sequence sequence_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("<document>", "expected an object");
  const Json& fl = require(j, "flavor");
  const Json& kd = require(j, "kind");
  const Json& en = require(j, "entries");
  if (!fl.is_string()) throw SchemaError("flavor", "expected \"free\" or \"classical\"");
  if (!kd.is_string()) throw SchemaError("kind", "expected \"moments\" or \"cumulants\"");
  Flavor flavor{};
  SequenceKind kind{};
  try {
    flavor = parse_flavor(fl.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError("flavor", "expected \"free\" or \"classical\"");
  }
  try {
    kind = parse_sequence_kind(kd.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError("kind", "expected \"moments\" or \"cumulants\"");
  }
  if (!en.is_array() || en.empty()) throw SchemaError("entries", "expected a nonempty array");
  std::vector<QSqrt2> entries;
  entries.reserve(en.size());
  for (std::size_t i = 0; i < en.size(); ++i) {
    entries.push_back(qsqrt2_from_json(en[i], "entries[" + std::to_string(i) + "]"));
  }
  return Sequence(flavor, kind, std::move(entries));
}

analytic::AnalyticMeasure measure_from_json(const Json& j) {
  using namespace analytic;
  const Json& type_node = require(j, "type");
  if (!type_node.is_string()) throw SchemaError("type", "expected a string");
  const std::string type = type_node.get<std::string>();
  if (type == "semicircle") {
    const double center = number(j, "center");
    const double radius = number(j, "radius");
    if (!(radius > 0.0)) throw SchemaError("radius", "must be positive");
    return AnalyticMeasure::semicircle(center, radius);
  }
  if (type == "cauchy_law") {
    const double location = number(j, "location");
    const double scale = number(j, "scale");
    if (!(scale > 0.0)) throw SchemaError("scale", "must be positive");
    return AnalyticMeasure::cauchy_law(location, scale);
  }
  if (type == "chebyshev_eigen") {
    const Json& n = require(j, "n");
    if (!n.is_number_integer() || n.get<long>() < 1) {
      throw SchemaError("n", "expected a positive integer");
    }
    return AnalyticMeasure::chebyshev_eigen(n.get<unsigned>());
  }
  if (type == "density_table") {
    auto grid = numbers(j, "grid");
    auto values = numbers(j, "values");
    if (grid.size() < 2) throw SchemaError("grid", "need at least two points");
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (!(grid[i] > grid[i - 1])) {
        throw SchemaError("grid[" + std::to_string(i) + "]", "grid must be strictly increasing");
      }
    }
    if (values.size() != grid.size()) throw SchemaError("values", "length must match grid");
    return AnalyticMeasure::table(std::move(grid), std::move(values));
  }
  if (type == "atom_mixture") {
    auto points = numbers(j, "points");
    auto weights = numbers(j, "weights");
    if (points.empty()) throw SchemaError("points", "need at least one atom");
    if (weights.size() != points.size()) throw SchemaError("weights", "length must match points");
    return AnalyticMeasure::atoms(std::move(points), std::move(weights));
  }
  if (type == "mixture") {
    const Json& comps = require(j, "components");
    if (!comps.is_array() || comps.empty()) {
      throw SchemaError("components", "expected a nonempty array");
    }
    Mixture m;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string prefix = "components[" + std::to_string(i) + "].";
      const double w = number(comps[i], "weight", prefix);
      const Json& inner = require(comps[i], "measure", prefix);
      try {
        m.components.emplace_back(w, std::make_shared<const AnalyticMeasure>(measure_from_json(inner)));
      } catch (const SchemaError& e) {
        throw SchemaError(prefix + "measure." + e.field(), e.what());
      }
    }
    return AnalyticMeasure(std::move(m));
  }
  throw SchemaError("type", "unknown measure type '" + type + "'");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace freeclt::cli

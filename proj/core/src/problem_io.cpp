#include "umprox/problem_io.hpp"

#include <cmath>

namespace umprox {

using nlohmann::json;

json point_to_json(const Point& x) {
  json out = json::array();
  for (Index i = 0; i < x.size(); ++i) out.push_back(x[i]);
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a JSON array of numbers");
  Point x(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InvalidArgument("expected a JSON array of numbers");
    x[static_cast<Index>(i)] = j[i].get<double>();
  }
  return x;
}

json matrix_to_json(const Matrix& A) {
  json out = json::array();
  for (Index r = 0; r < A.rows(); ++r) out.push_back(point_to_json(A.row(r).transpose()));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("expected a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Point first = point_from_json(j[0]);
  Matrix A(rows, first.size());
  A.row(0) = first.transpose();
  for (Index r = 1; r < rows; ++r) {
    const Point row = point_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != A.cols()) throw InvalidArgument("matrix rows have different lengths");
    A.row(r) = row.transpose();
  }
  return A;
}

json set_to_json(const FeasibleSet& set) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Box>) {
          return {{"type", "box"}, {"lower", point_to_json(k.lower)}, {"upper", point_to_json(k.upper)}};
        } else if constexpr (std::is_same_v<K, Ball>) {
          return {{"type", "ball"}, {"center", point_to_json(k.center)}, {"radius", k.radius}};
        } else if constexpr (std::is_same_v<K, Simplex>) {
          return {{"type", "simplex"}, {"dim", k.dim}};
        } else {
          json factors = json::array();
          for (const auto& f : k.factors) factors.push_back(set_to_json(f));
          return {{"type", "product"}, {"factors", factors}};
        }
      },
      set.kind());
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw InvalidArgument(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

FeasibleSet set_from_json(const json& j) {
  const json& type = require(j, "type");
  if (!type.is_string()) throw InvalidArgument("set \"type\" must be a string");
  const auto t = type.get<std::string>();
  if (t == "box") return FeasibleSet::box(point_from_json(require(j, "lower")), point_from_json(require(j, "upper")));
  if (t == "ball") return FeasibleSet::ball(point_from_json(require(j, "center")), require_number(j, "radius"));
  if (t == "simplex") {
    const json& dim = require(j, "dim");
    if (!dim.is_number_integer()) throw InvalidArgument("simplex \"dim\" must be an integer");
    return FeasibleSet::simplex(dim.get<Index>());
  }
  if (t == "product") {
    const json& factors = require(j, "factors");
    if (!factors.is_array()) throw InvalidArgument("product \"factors\" must be an array");
    std::vector<FeasibleSet> parts;
    for (const auto& f : factors) parts.push_back(set_from_json(f));
    return FeasibleSet::product(std::move(parts));
  }
  throw InvalidArgument("unknown set type \"" + t + "\"");
}

json problem_to_json(const VIProblem& problem) {
  json out = std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, MatrixGameParams>) {
          return {{"kind", "matrix_game"}, {"A", matrix_to_json(p.A)}};
        } else if constexpr (std::is_same_v<P, Holder1dParams>) {
          return {{"kind", "holder_1d"}, {"nu", p.nu}, {"center", p.center}};
        } else if constexpr (std::is_same_v<P, AffineParams>) {
          return {{"kind", "affine"}, {"M", matrix_to_json(p.M)}, {"b", point_to_json(p.b)}, {"set", set_to_json(p.set)}};
        } else if constexpr (std::is_same_v<P, LinearFixedPointParams>) {
          return {{"kind", "linear_fixed_point"}, {"T", matrix_to_json(p.T)}, {"t", point_to_json(p.t)}, {"set", set_to_json(p.set)}};
        } else {
          throw InvalidArgument("problem_to_json: problem has no structured description");
        }
      },
      problem.params);
  out["label"] = problem.label;
  json declared = json::object();
  declared["D"] = problem.diameter();
  declared["nu"] = problem.known_nu ? json(*problem.known_nu) : json(nullptr);
  declared["L"] = problem.known_L ? json(*problem.known_L) : json(nullptr);
  declared["solution"] = problem.known_solution ? point_to_json(*problem.known_solution) : json(nullptr);
  out["declared"] = declared;
  return out;
}

VIProblem problem_from_json(const json& j) {
  const json& kind_field = require(j, "kind");
  if (!kind_field.is_string()) throw InvalidArgument("problem \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InvalidArgument("problem \"label\" must be a string");
    label = j["label"].get<std::string>();
  }

  VIProblem problem = [&]() -> VIProblem {
    if (kind == "matrix_game") return make_matrix_game(matrix_from_json(require(j, "A")));
    if (kind == "holder_1d") {
      const double center = j.contains("center") ? require_number(j, "center") : 0.0;
      return make_holder_1d(require_number(j, "nu"), center);
    }
    if (kind == "affine") {
      return make_affine_monotone(matrix_from_json(require(j, "M")), point_from_json(require(j, "b")),
                                  set_from_json(require(j, "set")));
    }
    if (kind == "linear_fixed_point") {
      return make_linear_fixed_point(matrix_from_json(require(j, "T")), point_from_json(require(j, "t")),
                                     set_from_json(require(j, "set")));
    }
    throw InvalidArgument("unknown problem kind \"" + kind + "\"");
  }();
  if (label) problem.label = *label;
  return problem;
}

}  // namespace umprox

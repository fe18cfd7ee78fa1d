#pragma once

#include <nlohmann/json.hpp>

#include "umprox/problems.hpp"

namespace umprox {

// JSON descriptions of sets and problems.
//
// Sets:
//   {"type": "box", "lower": [...], "upper": [...]}
//   {"type": "ball", "center": [...], "radius": r}
//   {"type": "simplex", "dim": n}
//   {"type": "product", "factors": [set, ...]}
//
// Problems:
//   {"kind": "matrix_game", "A": [[...], ...]}
//   {"kind": "holder_1d", "nu": 0.5, "center": 0.3}
//   {"kind": "affine", "M": [[...]], "b": [...], "set": set}
//   {"kind": "linear_fixed_point", "T": [[...]], "t": [...], "set": set}
// with an optional "label". Serialized problems also carry a "declared"
// object (nu, L, D, solution) that is informational on input.

nlohmann::json set_to_json(const FeasibleSet& set);
FeasibleSet set_from_json(const nlohmann::json& j);

/// Throws InvalidArgument for problems built from an arbitrary callable.
nlohmann::json problem_to_json(const VIProblem& problem);
VIProblem problem_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& x);
Point point_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& A);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace umprox

/*
 * json_io.hpp
 * -----------
 * JSON round-trips for the core value types.  Rationals are strings "p/q",
 * exponential polynomials are term lists, tensors carry kind/degree/terms,
 * structures add the chart and optional constraint, and Lie algebras list
 * their structure constants with 1-based i < j entries.
 */
#pragma once

#include <jcalc/jacobi.hpp>
#include <jcalc/liealg.hpp>

#include <json.hpp>

namespace jcalc {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json expoly_to_json(const ExPoly& p);
ExPoly expoly_from_json(const nlohmann::json& j, int dim);

nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j, const Chart& chart);

nlohmann::json structure_to_json(const JacobiStructure& s);
JacobiStructure structure_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace jcalc

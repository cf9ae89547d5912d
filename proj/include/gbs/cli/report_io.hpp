#pragma once

#include "gbs/pipeline/pipeline.hpp"
#include "gbs/poly/degeneracy.hpp"

#include <json.hpp>

#include <string>

namespace gbs {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const Rational& v);  // "p/q" string, or integer
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntPolynomial& f);
nlohmann::json to_json(const GraphOfGroups& g);
nlohmann::json to_json(const FactorDegeneracy& f, unsigned multiplicity);

nlohmann::json report_json(const Report& r, bool timing);
std::string report_text(const Report& r, bool timing);

/// Two-space indentation, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace gbs

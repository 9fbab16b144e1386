#pragma once

#include <string_view>

#include <json.hpp>

#include "infdef/artin.hpp"
#include "infdef/hyperdef.hpp"
#include "infdef/projcoh.hpp"

namespace infdef {

using Json = nlohmann::ordered_json;

/// "p/q", "p" or an F_p residue; throws syntax on malformed text.
Scalar parse_scalar(std::string_view text, const Field& field);

Json to_json(const Vector& v);
Json to_json(const Matrix& m);  // list of rows

/// {field, dimension, basis, structure_constants, order}; rationals as strings.
Json to_json(const FiniteKAlgebra& a);
FiniteKAlgebra algebra_from_json(const Json& j);

Json to_json(const AlgebraMorphism& m);

/// {variables, base, equation: {basis label: polynomial}}.
Json to_json(const DeformationOverA& d);
DeformationOverA deformation_from_json(const Json& j);

Json to_json(const TjurinaData& td);
Json to_json(const MiniversalFamily& mf);
Json to_json(const HypersurfaceReport& r);

}  // namespace infdef

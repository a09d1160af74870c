#pragma once

// JSON serialization with exact integer numerator/denominator strings;
// round-trips are bit-exact.

#include "equithom/cech.hpp"
#include "equithom/chern_roots.hpp"
#include "equithom/connection.hpp"
#include "equithom/form.hpp"

#include <json.hpp>

namespace equithom {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar &s);
Json to_json(const RationalCoefficient &c);
Json to_json(const EquivariantForm &f);
Json to_json(const CechTriple &t);
Json to_json(const TruncatedSeries &s);
Json to_json(const ChernBasisPolynomial &p);
Json to_json(const Connection &c);
Json to_json(const FormMatrix &m);

Scalar scalar_from_json(const Json &j);
RationalCoefficient coefficient_from_json(const Json &j);
EquivariantForm form_from_json(const Json &j);
CechTriple triple_from_json(const Json &j);

} // namespace equithom

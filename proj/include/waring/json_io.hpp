#pragma once

#include "json.hpp"

#include "waring/apolarity.hpp"
#include "waring/decompose.hpp"
#include "waring/poly.hpp"
#include "waring/secant.hpp"

namespace waring::io {

using nlohmann::json;

json to_json(Complex c);
json to_json(const CVector& v);
json to_json(const HomogeneousForm& f);     // {"n", "d", "coeffs"}
json to_json(const Decomposition& dec);     // {"d", "terms": [{"lambda", "L"}]}
json to_json(const VspSample& s);
json to_json(const PencilResult& p);
json to_json(const ChainCertificate& c);
json to_json(const SecantReport& r);
json to_json(const PolyhedronCertificate& c);
json to_json(const CatalecticantMatrix& m);
json to_json(const ApolarBasis& b);
json to_json(const Tolerances& t);

// Parsers throw Error(InvalidArgument) naming the offending field.
Complex complex_from_json(const json& j);
CVector vector_from_json(const json& j);
HomogeneousForm form_from_json(const json& j);
Decomposition decomposition_from_json(const json& j, const Tolerances& tol = kDefaultTolerances);
ChainCertificate chain_from_json(const json& j, const Tolerances& tol = kDefaultTolerances);
ConicPlane conic_plane_from_json(const json& j);

/// Parses text, turning syntax errors into Error(InvalidArgument) with the
/// byte position of the failure.
json parse(const std::string& text);

}  // namespace waring::io

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "modchar/chi.hpp"
#include "modchar/poly.hpp"
#include "modchar/reps.hpp"

namespace modchar {

using Json = nlohmann::ordered_json;

/// {"A":[...],"B":[...]}
Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j, const CohContext& ctx);

/// {"p","r","n","terms":[{"factors":[monomial...],"coeff":c}]} in canonical order.
Json to_json(const TensorClass& t);
/// {"p","nvars","terms":[{"exponents":[...],"coeff":c}]} in graded order.
Json to_json(const MultiPoly& f);

/// An integer for r = 1, a length-r coefficient array otherwise.
Json to_json(const Field& field, const FF& a);

/// A parsed representation file; the basepoint is optional.
struct RepDocument {
  Rep rep;
  std::optional<Vector> basepoint;
};

/// {"p":3,"r":1,"modulus":[...] optional,"dim":3,"generators":[[[...]...]...],"basepoint":[...] optional}.
/// The modulus is always written for r > 1.
Json to_json(const Rep& rep, const std::optional<Vector>& basepoint = std::nullopt);
Json to_json(const PointedRep& rep);

/// Structural parsing only; throws InputError naming the offending field. Validation
/// of the group action is left to validate().
RepDocument rep_from_json(const Json& j);
/// Parses JSON text first; syntax errors become InputError with the parser's location.
RepDocument rep_from_text(const std::string& text);

}  // namespace modchar

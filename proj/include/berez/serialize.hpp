#pragma once

#include <json.hpp>

#include "berez/invariants.hpp"

namespace berez {

using Json = nlohmann::ordered_json;

/// Term-list form of a Grassmann element: each term is
/// {"coeff": "<int>/<int>", "monomial": [i1 < i2 < ...]} with 1-based
/// strictly increasing generator indices; the empty monomial is the body.
/// Round-trips bit-exactly.
Json element_to_json(const GrassmannElement& e);
GrassmannElement element_from_json(const Json& j, int n_generators);

/// {"generators": N, "p": p, "q": q, "entries": [[term-list, ...], ...]} in
/// row-major order. Parse failures carry row/column coordinates.
Json supermatrix_to_json(const Supermatrix& a);
Supermatrix supermatrix_from_json(const Json& j);

Supermatrix read_supermatrix_file(const std::string& path);

/// Dense coefficient list (constant term first), each in term-list form.
Json poly_to_json(const GrassmannPoly& p);

} // namespace berez

#pragma once

#include <string>

#include <json.hpp>

#include "latpol/simplex.hpp"

namespace latpol {

inline constexpr const char* kSchema = "latpol/1";

// Integers that fit in int64 become JSON numbers, everything else "p" or "p/q" strings.
nlohmann::json number_json(const BigInt& z);
nlohmann::json number_json(const Rational& q);
// Accepts JSON integers and "p" / "p/q" strings. Throws Parse.
Rational parse_number(const nlohmann::json& j);

nlohmann::json vector_json(const IntVec& v);
nlohmann::json vector_json(const RatVec& v);

// {"schema", "dim", "vertices"} with lexicographically sorted vertices.
nlohmann::json to_json(const IntegralPolytope& P);
nlohmann::json to_json(const RationalPolytope& P);

struct PolytopeDocument {
    std::size_t dim = 0;
    std::vector<RatVec> vertices;
    nlohmann::json metadata;  // optional "family", "seed", ...
    bool integral() const;
};

PolytopeDocument parse_document(const nlohmann::json& j);
PolytopeDocument parse_document_text(const std::string& text);

// Throw InvalidArgument if the document has non-integral vertices.
IntegralPolytope to_integral_polytope(const PolytopeDocument& doc);
RationalPolytope to_rational_polytope(const PolytopeDocument& doc);

}  // namespace latpol

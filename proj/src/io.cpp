#include "latpol/io.hpp"

#include <algorithm>
#include <limits>

namespace latpol {

using nlohmann::json;

json number_json(const BigInt& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

json number_json(const Rational& q) {
    if (is_integral(q)) return number_json(BigInt(numerator(q)));
    return to_string(q);
}

Rational parse_number(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(BigInt(std::to_string(j.get<std::uint64_t>())));
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorKind::Parse, "expected an integer or a \"p/q\" string, got " + j.dump());
}

json vector_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(number_json(x));
    return a;
}

json vector_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(number_json(x));
    return a;
}

json to_json(const IntegralPolytope& P) {
    json vs = json::array();
    for (const auto& v : P.vertices()) vs.push_back(vector_json(v));
    return json{{"schema", kSchema}, {"dim", P.dim()}, {"vertices", vs}};
}

json to_json(const RationalPolytope& P) {
    json vs = json::array();
    for (const auto& v : P.vertices()) vs.push_back(vector_json(v));
    return json{{"schema", kSchema}, {"dim", P.dim()}, {"vertices", vs}};
}

bool PolytopeDocument::integral() const {
    return std::all_of(vertices.begin(), vertices.end(), [](const RatVec& v) { return is_integral(v); });
}

PolytopeDocument parse_document(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "polytope document must be a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
        throw Error(ErrorKind::Parse, "unsupported schema " + j["schema"].dump());
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw Error(ErrorKind::Parse, "missing or invalid \"dim\"");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error(ErrorKind::Parse, "missing \"vertices\" array");
    PolytopeDocument doc;
    doc.dim = j["dim"].get<std::size_t>();
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != doc.dim)
            throw Error(ErrorKind::Parse, "vertex " + v.dump() + " does not have " + std::to_string(doc.dim) + " entries");
        RatVec p;
        for (const auto& x : v) p.push_back(parse_number(x));
        doc.vertices.push_back(std::move(p));
    }
    if (doc.vertices.empty()) throw Error(ErrorKind::Parse, "no vertices");
    for (const auto& [k, v] : j.items())
        if (k != "schema" && k != "dim" && k != "vertices") doc.metadata[k] = v;
    return doc;
}

PolytopeDocument parse_document_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return parse_document(j);
}

IntegralPolytope to_integral_polytope(const PolytopeDocument& doc) {
    std::vector<IntVec> pts;
    for (const auto& v : doc.vertices) pts.push_back(to_integer(v));
    return from_vertices(doc.dim, pts);
}

RationalPolytope to_rational_polytope(const PolytopeDocument& doc) {
    return RationalPolytope::from_points(doc.dim, doc.vertices);
}

}  // namespace latpol

#include "berez/serialize.hpp"

#include <fstream>

namespace berez {

Json element_to_json(const GrassmannElement& e) {
    Json terms = Json::array();
    for (const auto& [mask, coeff] : e.terms()) {
        Json monomial = Json::array();
        std::uint32_t rest = mask;
        for (int i = 0; rest; ++i, rest >>= 1)
            if (rest & 1) monomial.push_back(i + 1);
        terms.push_back(Json{{"coeff", coeff.to_string()}, {"monomial", std::move(monomial)}});
    }
    return terms;
}

GrassmannElement element_from_json(const Json& j, int n_generators) {
    if (!j.is_array()) throw ParseError("term list must be an array");
    std::vector<GrassmannElement::Term> terms;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial"))
            throw ParseError("term must carry 'coeff' and 'monomial'");
        if (!term["coeff"].is_string()) throw ParseError("coefficient must be a string");
        const Rational coeff = Rational::from_string(term["coeff"].get<std::string>());
        const Json& monomial = term["monomial"];
        if (!monomial.is_array()) throw ParseError("monomial must be an array");
        std::uint32_t mask = 0;
        int previous = 0;
        for (const auto& idx : monomial) {
            if (!idx.is_number_integer()) throw ParseError("monomial index must be an integer");
            const int i = idx.get<int>();
            if (i <= previous) throw ParseError("non-increasing monomial");
            if (i < 1 || i > n_generators)
                throw ParseError("generator index " + std::to_string(i) + " out of range");
            mask |= 1u << (i - 1);
            previous = i;
        }
        terms.emplace_back(mask, coeff);
    }
    return GrassmannElement::from_terms(n_generators, std::move(terms));
}

Json supermatrix_to_json(const Supermatrix& a) {
    Json rows = Json::array();
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) row.push_back(element_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"generators", a.generators()},
                {"p", a.dims().p},
                {"q", a.dims().q},
                {"entries", std::move(rows)}};
}

Supermatrix supermatrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("supermatrix document must be an object");
    for (const char* key : {"generators", "p", "q", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    if (!j["generators"].is_number_integer() || !j["p"].is_number_integer() ||
        !j["q"].is_number_integer())
        throw ParseError("'generators', 'p' and 'q' must be integers");
    const int n_generators = j["generators"].get<int>();
    const Dims dims{j["p"].get<int>(), j["q"].get<int>()};
    if (n_generators < 0 || n_generators > GrassmannElement::max_generators)
        throw ParseError("generator count out of range");
    if (dims.p < 0 || dims.q < 0 || dims.total() < 1)
        throw ParseError("need p, q >= 0 and p + q >= 1");
    const Json& rows = j["entries"];
    const int n = dims.total();
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("'entries' must hold " + std::to_string(n) + " rows");
    std::vector<GrassmannElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const Json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(r) + " must hold " + std::to_string(n) +
                             " entries");
        for (int c = 0; c < n; ++c) {
            const auto coords = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            GrassmannElement e = GrassmannElement::zero(n_generators);
            try {
                e = element_from_json(row[static_cast<std::size_t>(c)], n_generators);
            } catch (const ParseError& err) {
                throw ParseError(coords + ": " + err.what());
            }
            const bool diagonal_block = (r < dims.p) == (c < dims.p);
            if (diagonal_block ? !e.is_even() : !e.is_odd())
                throw ParseError(coords + ": violates block parity");
            entries.push_back(std::move(e));
        }
    }
    return Supermatrix(dims, std::move(entries));
}

Supermatrix read_supermatrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return supermatrix_from_json(j);
}

Json poly_to_json(const GrassmannPoly& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(element_to_json(p.coefficient(i)));
    return coeffs;
}

} // namespace berez

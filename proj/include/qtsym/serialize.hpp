#pragma once

// JSON serialization. Term order is deterministic everywhere: partitions in
// reverse-lexicographic order within a degree, polynomial terms by
// (q-degree, t-degree). Coefficients that fit in 64 bits are emitted as JSON
// numbers, larger ones as decimal strings.

#include <fstream>
#include <string>

#include <json.hpp>

#include "qtsym/error.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/qt_poly.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

using Json = nlohmann::json;

inline Json int_to_json(const Int& c) {
    if (c.fits_slong_p()) return Json(c.get_si());
    return Json(c.get_str());
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw DomainError("expected integer or string in JSON");
}

inline Json poly_to_json(const QTPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e[0], e[1], int_to_json(c)}));
    return arr;
}

inline QTPoly poly_from_json(const Json& j) {
    QTPoly p;
    for (const auto& term : j)
        p.add_term(term.at(0).get<int>(), term.at(1).get<int>(), int_from_json(term.at(2)));
    return p;
}

inline Json qtrat_to_json(const QTRat& r) {
    return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

inline QTRat qtrat_from_json(const Json& j) {
    return QTRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Json partition_to_json(const Partition& lam) {
    Json arr = Json::array();
    for (int p : lam.parts()) arr.push_back(p);
    return arr;
}

inline Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

inline Json symf_to_json(const SymF& f) {
    Json terms = Json::array();
    // the map's canonical order: by degree, then reverse-lexicographic
    for (const auto& [lam, c] : f.coeffs())
        terms.push_back(Json{{"index", partition_to_json(lam)}, {"coeff", qtrat_to_json(c)}});
    return Json{{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
}

inline SymF symf_from_json(const Json& j) {
    SymF f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        f.set_coeff(partition_from_json(term.at("index")), qtrat_from_json(term.at("coeff")));
    return f;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DomainError("cannot write file: " + path);
    out << text;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace qtsym

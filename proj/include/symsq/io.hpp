// JSON file formats: complexes with named subcomplexes, chains, and
// vertex maps.  All loading errors surface as InputError.

#ifndef SYMSQ_IO_HPP
#define SYMSQ_IO_HPP

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symsq/chain.hpp"
#include "symsq/complex.hpp"
#include "symsq/errors.hpp"

namespace symsq {

using Json = nlohmann::ordered_json;

struct ComplexFile {
    std::string name;
    SimplicialComplex K;
    std::map<std::string, std::vector<Simplex>> subcomplexes;

    Subcomplex subcomplex(const std::string& label) const {
        auto it = subcomplexes.find(label);
        if (it == subcomplexes.end())
            throw InputError("no subcomplex labeled '" + label + "'");
        return Subcomplex::from_facets(K, it->second);
    }
};

namespace detail {

inline Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

inline std::vector<Simplex> parse_facets(const Json& j,
                                         const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array");
    std::vector<Simplex> out;
    for (const auto& f : j) {
        if (!f.is_array()) throw InputError(what + " entries must be arrays");
        Simplex s;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw InputError("vertex ids must be non-negative integers");
            s.push_back(v.get<int>());
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

inline ComplexFile load_complex(const std::string& path) {
    Json j = detail::parse_file(path);
    if (!j.is_object() || !j.contains("facets"))
        throw InputError(path + ": complex file needs a \"facets\" field");
    ComplexFile out;
    out.name = j.value("name", "");
    out.K = build_complex(detail::parse_facets(j["facets"], "facets"));
    if (j.contains("subcomplexes")) {
        if (!j["subcomplexes"].is_object())
            throw InputError("\"subcomplexes\" must be an object");
        for (const auto& [label, facets] : j["subcomplexes"].items())
            out.subcomplexes[label] =
                detail::parse_facets(facets, "subcomplex " + label);
    }
    return out;
}

struct ChainFile {
    int degree = 0;
    std::string ring;  // "Z" or "Z2"
    std::vector<std::pair<long long, Simplex>> terms;
};

inline ChainFile load_chain(const std::string& path) {
    Json j = detail::parse_file(path);
    if (!j.is_object() || !j.contains("degree") || !j.contains("ring") ||
        !j.contains("terms"))
        throw InputError(path +
                         ": chain file needs degree, ring and terms fields");
    ChainFile out;
    if (!j["degree"].is_number_integer())
        throw InputError("chain degree must be an integer");
    out.degree = j["degree"].get<int>();
    out.ring = j["ring"].get<std::string>();
    if (out.ring != "Z" && out.ring != "Z2")
        throw InputError("chain ring must be \"Z\" or \"Z2\"");
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw InputError("chain terms must be [coefficient, [vertices]]");
        Simplex s;
        for (const auto& v : t[1]) s.push_back(v.get<int>());
        out.terms.emplace_back(t[0].get<long long>(), std::move(s));
    }
    return out;
}

template <class T>
Chain<T> chain_from_file(const ChainFile& f, const SimplicialChains<T>& XA) {
    std::vector<std::pair<T, Simplex>> terms;
    for (const auto& [c, s] : f.terms) terms.emplace_back(T(c), s);
    return XA.chain_from_terms(f.degree, terms);
}

/// Vertex map file: an object mapping vertex id to vertex id.
inline std::map<int, int> load_vertex_map(const std::string& path) {
    Json j = detail::parse_file(path);
    if (!j.is_object()) throw InputError(path + ": map file must be an object");
    std::map<int, int> out;
    for (const auto& [k, v] : j.items()) {
        try {
            out[std::stoi(k)] = v.get<int>();
        } catch (const std::exception&) {
            throw InputError("map keys must be vertex ids");
        }
    }
    return out;
}

}  // namespace symsq

#endif  // SYMSQ_IO_HPP

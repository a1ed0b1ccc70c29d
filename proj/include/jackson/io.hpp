#pragma once

// JSON documents for fields, presentations, characters and curve fixtures.
//
//   field:        {"kind":"cyclotomic","order":n} | {"kind":"finite","p":p,"m":m}
//   presentation: {"field":..., "gens":g, "name":..., "relations":[
//                    {"j":j,"i":i,"q":"...","tail":[{"gen":k,"coeff":"..."},{"const":true,"coeff":"..."}]}]}

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "jackson/elliptic.hpp"
#include "jackson/expr.hpp"
#include "jackson/presentation.hpp"

namespace jackson {

using json = nlohmann::json;

using AnyField = std::variant<CyclotomicField, FiniteField>;
using AnyPresentation = std::variant<QPresentation<Cyclotomic>, QPresentation<GFElement>>;

inline json field_to_json(const CyclotomicField& F) { return {{"kind", "cyclotomic"}, {"order", F.order()}}; }
inline json field_to_json(const FiniteField& F) {
    return {{"kind", "finite"}, {"p", F.characteristic()}, {"m", F.degree()}};
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad value for '") + key + "': " + e.what());
    }
}

inline AnyField field_from_json(const json& j) {
    std::string kind = get_field<std::string>(j, "kind");
    if (kind == "cyclotomic") {
        long n = get_field<long>(j, "order");
        if (n < 1) throw ParseError("cyclotomic order must be positive");
        return CyclotomicField(n);
    }
    if (kind == "finite") {
        long p = get_field<long>(j, "p");
        int m = j.contains("m") ? get_field<int>(j, "m") : 1;
        if (!is_prime(p) || m < 1) throw ParseError("finite field needs a prime p and m >= 1");
        return FiniteField(p, m);
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

template <class S>
json presentation_to_json(const QPresentation<S>& P) {
    json rels = json::array();
    for (const Rule<S>* r : P.ordered_rules()) {
        json tail = json::array();
        for (auto& [k, c] : r->lin) tail.push_back({{"gen", k}, {"coeff", c.str()}});
        if (!r->c.is_zero()) tail.push_back({{"const", true}, {"coeff", r->c.str()}});
        rels.push_back({{"j", r->j}, {"i", r->i}, {"q", r->q.str()}, {"tail", tail}});
    }
    return {{"field", field_to_json(P.field())}, {"gens", P.gens()}, {"name", P.name()}, {"relations", rels}};
}

inline json presentation_to_json(const AnyPresentation& P) {
    return std::visit([](const auto& x) { return presentation_to_json(x); }, P);
}

namespace detail {

template <class S>
QPresentation<S> presentation_body(const json& j, const typename S::field_type& F) {
    int g = get_field<int>(j, "gens");
    std::string name = j.contains("name") ? get_field<std::string>(j, "name") : std::string("custom");
    QPresentation<S> P(F, g, name);
    if (!j.contains("relations") || !j.at("relations").is_array()) throw ParseError("missing relations array");
    ExprParser<S> parse(F, g);
    for (const json& r : j.at("relations")) {
        int rj = get_field<int>(r, "j"), ri = get_field<int>(r, "i");
        S q = parse.parse_scalar(get_field<std::string>(r, "q"));
        std::map<int, S> lin;
        S c = F.zero();
        if (r.contains("tail")) {
            for (const json& t : r.at("tail")) {
                S coeff = parse.parse_scalar(get_field<std::string>(t, "coeff"));
                if (t.contains("gen")) {
                    int k = get_field<int>(t, "gen");
                    auto it = lin.find(k);
                    if (it == lin.end()) lin.emplace(k, coeff);
                    else it->second += coeff;
                } else if (t.contains("const")) {
                    c += coeff;
                } else {
                    throw ParseError("tail entry needs 'gen' or 'const'");
                }
            }
        }
        if (P.has_rule(std::max(rj, ri), std::min(rj, ri)))
            throw MalformedPresentation("duplicate rule for pair (" + std::to_string(rj) + "," + std::to_string(ri) + ")");
        P.set_rule(rj, ri, q, lin, c);
    }
    P.validate();
    return P;
}

}  // namespace detail

inline AnyPresentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field")) throw ParseError("presentation needs a field");
    AnyField F = field_from_json(j.at("field"));
    if (auto* c = std::get_if<CyclotomicField>(&F)) return detail::presentation_body<Cyclotomic>(j, *c);
    return detail::presentation_body<GFElement>(j, std::get<FiniteField>(F));
}

template <class S>
json character_to_json(const Character<S>& chi) {
    json a = json::array();
    for (auto& x : chi) a.push_back(x.str());
    return a;
}

template <class S>
json locus_to_json(const LocusDescription<S>& L) {
    json comps = json::array();
    for (auto& c : L.components) {
        json fixed = json::object();
        for (auto& [k, v] : c.fixed) fixed["e" + std::to_string(k)] = v.str();
        json e{{"kind", c.kind(L.gens)}, {"fixed", fixed}};
        if (c.conic) e["conic"] = {{"i", c.ci}, {"j", c.cj}, {"value", c.cval.str()}};
        comps.push_back(e);
    }
    return {{"shape", L.shape}, {"components", comps}};
}

template <class S>
json ext_to_json(const ExtResult<S>& r) {
    json basis = json::array();
    for (auto& v : r.cocycle_basis) basis.push_back(character_to_json(v));
    return {{"dimension", r.dimension},
            {"cocycle_dim", r.cocycle_dim},
            {"coboundary_dim", r.coboundary_dim},
            {"cocycle_basis", basis}};
}

inline json shape_to_json(const DeformationShape& s) {
    return {{"size", s.size},
            {"diagonal", s.diagonal},
            {"off_diagonal", s.off_diagonal},
            {"modulo_obstructions", s.modulo_obstructions},
            {"rendering", s.rendering}};
}

// ---- curve fixtures -------------------------------------------------------

inline CurveReductionData curve_from_json(const json& j) {
    CurveReductionData c;
    c.label = get_field<std::string>(j, "label");
    c.p = get_field<long>(j, "p");
    c.kodaira = KodairaSymbol::parse(get_field<std::string>(j, "kodaira"));
    c.f = get_field<int>(j, "f");
    c.d = get_field<int>(j, "d");
    if (j.contains("v_j") && !j.at("v_j").is_null()) c.v_j = get_field<int>(j, "v_j");
    c.v_delta_min = get_field<int>(j, "v_delta_min");
    c.component_group_order = j.contains("component_group_order") ? get_field<int>(j, "component_group_order") : 1;
    if (j.contains("weierstrass")) {
        auto v = j.at("weierstrass");
        if (!v.is_array() || v.size() != 5) throw ParseError("weierstrass needs five coefficients");
        WeierstrassCoeffs a;
        for (size_t k = 0; k < 5; ++k) a[k] = Integer(v[k].is_string() ? v[k].get<std::string>() : std::to_string(v[k].get<long long>()));
        c.weierstrass = a;
    }
    if (j.contains("torsion")) {
        const json& t = j.at("torsion");
        if (t.contains("structure")) c.torsion_structure = get_field<std::string>(t, "structure");
        if (t.contains("points"))
            for (const json& pt : t.at("points")) {
                if (!pt.is_array() || pt.size() != 3) throw ParseError("torsion points are [x, y, z]");
                std::array<Integer, 3> q;
                for (size_t k = 0; k < 3; ++k) q[k] = Integer(pt[k].is_string() ? pt[k].get<std::string>() : std::to_string(pt[k].get<long long>()));
                c.torsion_points.push_back(q);
            }
    }
    if (j.contains("supersingular")) c.supersingular = get_field<bool>(j, "supersingular");
    if (j.contains("split")) c.split = get_field<bool>(j, "split");
    if (j.contains("e_abs")) c.e_abs = get_field<int>(j, "e_abs");
    return c;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace jackson

#pragma once

#include "nplus/classify.hpp"
#include "nplus/eardecomp.hpp"
#include "nplus/polytope.hpp"

#include <json.hpp>

#include <limits>

namespace nplus {

using Json = nlohmann::json;

namespace detail {

// Facet coefficients stay tiny at desk scale; fall back to a decimal string if one does not.
inline Json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

} // namespace detail

inline Json to_json(const EarDecomposition& d) {
    Json ears = Json::array();
    for (const Ear& e : d.ears) ears.push_back(e.path);
    return Json{{"h0", d.cycle}, {"ears", ears}};
}

inline Json to_json(const NPlusCertificate& c) {
    Json j{{"verdict", c.perfect() ? "perfect" : "imperfect"},
           {"witness_root_nodes", c.witness_root_nodes},
           {"witness_root_edges", c.witness_root_edges},
           {"line_nodes", c.line_nodes}};
    if (c.family)
        j["family"] = Json{{"kind", c.family->kind}, {"hole_length", c.family->hole_length}, {"ear_length", c.family->ear_length}};
    else
        j["family"] = nullptr;
    return j;
}

inline Json to_json(const Inequality& f) {
    Json a = Json::array();
    for (const Integer& x : f.a) a.push_back(detail::integer_json(x));
    return Json{{"a", a}, {"b", detail::integer_json(f.b)}};
}

inline Json witness_json(const FacetClass& c) {
    switch (c.kind) {
    case FacetKind::Nonnegativity: return Json{{"node", c.support.front()}};
    case FacetKind::Clique: return Json{{"clique", c.support}};
    case FacetKind::OddHoleRank: return Json{{"cycle", c.cycle}, {"rank", c.rank}};
    case FacetKind::HypomatchableLineRank:
        return Json{{"root_nodes", c.root_nodes}, {"root_edges", c.root_edges}, {"rank", c.rank}};
    case FacetKind::FullRank: return Json{{"rank", c.rank}};
    case FacetKind::JoinedAntiweb: {
        Json parts = Json::array();
        for (const AntiwebPart& p : c.antiweb_parts)
            parts.push_back(Json{{"nodes", p.nodes}, {"n", p.n}, {"k", p.k}, {"alpha", p.alpha}});
        return Json{{"clique", c.clique_part}, {"antiwebs", parts}};
    }
    case FacetKind::Other: break;
    }
    return Json::object();
}

inline Json to_json(const ClassifiedFacet& f) {
    Json j = to_json(f.inequality);
    j["class"] = to_string(f.cls.kind);
    j["witness"] = witness_json(f.cls);
    return j;
}

inline Json to_json(const std::vector<ClassifiedFacet>& facets) {
    Json j = Json::array();
    for (const auto& f : facets) j.push_back(to_json(f));
    return j;
}

} // namespace nplus

// Machine-readable reports (schema "momangle/1") shared by the CLI
// subcommands.
#pragma once

#include <json.hpp>

#include "momangle/duality.hpp"

namespace momangle {

using Json = nlohmann::json;

inline Json group_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const Integer& t : g.torsion()) torsion.push_back(t.str());
    return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

inline Json graded_json(const GradedGroups& g) {
    Json out = Json::object();
    for (const auto& [d, grp] : g.nonzero()) out[std::to_string(d)] = group_json(grp);
    return out;
}

inline Json vertex_set_json(VertexSet s) {
    Json out = Json::array();
    for (int v : vs::elements(s)) out.push_back(v);
    return out;
}

inline Json witnesses_json(const DualityReport& r) {
    Json out = Json::array();
    for (const auto& w : r.alexander_witnesses)
        out.push_back(Json{{"type", "alexander"},
                           {"J", vertex_set_json(w.subset)},
                           {"l", w.degree},
                           {"lhs", group_json(w.lhs)},
                           {"rhs", group_json(w.rhs)}});
    for (const auto& w : r.link_witnesses)
        out.push_back(Json{{"type", w.face == 0 ? "global" : "link"},
                           {"face", vertex_set_json(w.face)},
                           {"expected_sphere_dim", w.expected_dimension},
                           {"observed", graded_json(w.observed)}});
    return out;
}

// The stable report skeleton every command emits.
inline Json make_report(const std::string& check, const std::string& input,
                        const std::string& verdict) {
    return Json{{"schema", "momangle/1"},
                {"check", check},
                {"input", input},
                {"params", Json::object()},
                {"verdict", verdict},
                {"witnesses", Json::array()},
                {"groups", Json::object()},
                {"signs_convention", kSignConvention}};
}

inline Json duality_report_json(const DualityReport& r, const std::string& input) {
    Json out = make_report(r.check, input, verdict_name(r.verdict));
    if (r.dimension) out["params"]["dimension"] = *r.dimension;
    if (!r.note.empty()) out["params"]["note"] = r.note;
    if (r.core_complex) {
        Json core_facets = Json::array();
        for (VertexSet f : r.core_complex->facets()) core_facets.push_back(vertex_set_json(f));
        out["params"]["core_facets"] = core_facets;
        out["params"]["core_dimension"] = r.core_complex->is_void()
                                              ? Json("void")
                                              : Json(r.core_complex->dimension());
    }
    if (!r.ideal_generators.empty()) {
        Json gens = Json::array();
        for (VertexSet f : r.ideal_generators) gens.push_back(vertex_set_json(f));
        out["params"]["stanley_reisner_generators"] = gens;
    }
    out["witnesses"] = witnesses_json(r);
    return out;
}

inline Json pd_certificate_json(const PDCertificate& c, const std::string& input) {
    Json out = make_report("pd", input, verdict_name(c.verdict));
    out["params"]["hypothesis_met"] = c.hypothesis_met;
    if (c.verdict != Verdict::kInapplicable) out["params"]["top_degree"] = c.top_degree;
    if (!c.failure_reason.empty()) out["params"]["reason"] = c.failure_reason;
    Json degrees = Json::array();
    for (const auto& d : c.degrees)
        degrees.push_back(Json{{"l", d.degree},
                               {"isomorphism", d.isomorphism},
                               {"cohomology", group_json(d.cohomology)},
                               {"target_homology", group_json(d.homology_target)}});
    out["params"]["cap_degrees"] = degrees;
    for (const auto& s : c.summand_table)
        if (!s.contained)
            out["witnesses"].push_back(Json{{"type", "summand"},
                                            {"J", vertex_set_json(s.subset)},
                                            {"l", s.reduced_degree}});
    for (const auto& d : c.degrees)
        if (!d.isomorphism)
            out["witnesses"].push_back(Json{{"type", "cap_degree"},
                                            {"l", d.degree},
                                            {"cohomology", group_json(d.cohomology)},
                                            {"target_homology", group_json(d.homology_target)}});
    return out;
}

}  // namespace momangle

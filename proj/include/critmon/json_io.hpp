#pragma once

#include "critmon/invariants.hpp"
#include "critmon/northcott.hpp"
#include "critmon/numsgp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace critmon {

inline constexpr const char* kSchemaVersion = "critmon-1";

/// mpz values are emitted as numbers while they fit an int64, as decimal
/// strings beyond that.
inline nlohmann::json to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

inline nlohmann::json to_json(const std::vector<Int>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& x : v) arr.push_back(to_json(x));
    return arr;
}

inline nlohmann::json instance_to_json(const NorthcottExponents& e) {
    return {{"n", e.n}, {"diag", e.diag}, {"xn", e.xn}, {"mvec", e.mvec}};
}

inline NorthcottExponents instance_from_json(const nlohmann::json& j) {
    NorthcottExponents e;
    e.n = j.at("n").get<int>();
    e.diag = j.at("diag").get<std::vector<long>>();
    e.xn = j.at("xn").get<std::vector<long>>();
    e.mvec = j.at("mvec").get<std::vector<long>>();
    validate(e);
    return e;
}

inline nlohmann::json presentation_to_json(const NorthcottExponents& e,
                                           const MonoidPresentation& p) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["instance"] = instance_to_json(e);
    j["invariant_factors"] = to_json(p.invariant_factors);
    j["generators"] = to_json(p.weight);
    j["is_numerical"] = p.is_numerical;
    j["torsion_order"] = to_json(p.torsion_order);
    j["is_prime"] = p.torsion_order == 1;
    nlohmann::json rels = nlohmann::json::array();
    for (const Relation& r : binomials(e).relations) rels.push_back(relation_to_string(r));
    j["relations"] = rels;
    return j;
}

inline nlohmann::json report_to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["apery"] = to_json(r.apery);
    j["frobenius"] = to_json(r.frobenius);
    j["pf"] = to_json(r.pseudo_frobenius);
    j["type"] = r.type;
    j["genus"] = to_json(r.genus);
    if (r.delta_min)
        j["delta_min"] = *r.delta_min;
    else
        j["delta_min"] = nullptr;
    if (r.delta_max)
        j["delta_max"] = *r.delta_max;
    else
        j["delta_max"] = nullptr;
    j["catenary"] = r.catenary;
    j["wilf_margin"] = to_json(r.wilf_margin);
    return j;
}

inline nlohmann::json presentation_oracle_to_json(const numsgp::Presentation& p) {
    nlohmann::json j;
    j["betti_elements"] = p.betti_elements;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& [degree, pair] : p.relations)
        rels.push_back({{"element", degree}, {"pair", {pair.first, pair.second}}});
    j["relations"] = rels;
    j["uniquely_presented"] = p.uniquely_presented;
    return j;
}

}  // namespace critmon

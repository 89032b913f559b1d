#pragma once

/**
 * Machine-readable serialization of solution records.  One JSON object per
 * record; every exact value is a decimal or "num/den" string, never a float,
 * so records round-trip bit-exactly through parse -> serialize.
 */

#include <json.hpp>

#include <string>

#include "rrn/search.hpp"

namespace rrn {

inline constexpr const char* kSchemaVersion = "1";

inline nlohmann::json target_to_json(const RatioTarget& t) {
    return {{"kind", t.kind() == RatioTarget::Kind::IntegerN
                         ? "integer-n"
                         : "near-equilateral"},
            {"value", t.value().get_str()}};
}

inline RatioTarget target_from_json(const nlohmann::json& j) {
    Integer v(j.at("value").get<std::string>());
    if (j.at("kind") == "integer-n")
        return RatioTarget::integer_n(v);
    return RatioTarget::near_equilateral(v);
}

inline nlohmann::json record_to_json(const SolutionRecord& r,
                                     const std::string& command) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["target"] = target_to_json(r.target);
    if (r.triangle) {
        j["triangle"] = {{"f", r.triangle->f().get_str()},
                         {"g", r.triangle->g().get_str()},
                         {"h", r.triangle->h().get_str()}};
    } else {
        j["triangle"] = nullptr;
    }
    if (r.representation) {
        j["representation"] = {r.representation->f.get_str(),
                               r.representation->g.get_str(),
                               r.representation->h.get_str()};
    } else {
        j["representation"] = nullptr;
    }
    j["ratio"] = num(r.target.rho()).get_str() + "/" +
                 den(r.target.rho()).get_str();
    j["point"] = {{"u", to_string(r.point.u())},
                  {"v", to_string(r.point.v())}};
    j["component"] = to_string(r.component);
    j["provenance"] = to_string(r.provenance);
    if (r.residue_mod_8)
        j["residue_mod_8"] = *r.residue_mod_8;
    else
        j["residue_mod_8"] = nullptr;
    return j;
}

inline SolutionRecord record_from_json(const nlohmann::json& j) {
    RatioTarget target = target_from_json(j.at("target"));
    std::optional<Triangle> tri;
    if (!j.at("triangle").is_null()) {
        const auto& t = j.at("triangle");
        tri = Triangle(Integer(t.at("f").get<std::string>()),
                       Integer(t.at("g").get<std::string>()),
                       Integer(t.at("h").get<std::string>()));
    }
    std::optional<Triple> rep;
    if (!j.at("representation").is_null()) {
        const auto& t = j.at("representation");
        rep = Triple{Integer(t.at(0).get<std::string>()),
                     Integer(t.at(1).get<std::string>()),
                     Integer(t.at(2).get<std::string>())};
    }
    CurvePoint p{rational_from_string(j.at("point").at("u").get<std::string>()),
                 rational_from_string(j.at("point").at("v").get<std::string>())};
    ComponentLabel comp = j.at("component") == "egg" ? ComponentLabel::EGG
                                                    : ComponentLabel::INFINITE;
    Provenance prov = Provenance::Saturation;
    if (j.at("provenance") == "quartic-sieve")
        prov = Provenance::QuarticSieve;
    else if (j.at("provenance") == "egg-sieve")
        prov = Provenance::EggSieve;
    std::optional<int> residue;
    if (!j.at("residue_mod_8").is_null())
        residue = j.at("residue_mod_8").get<int>();
    return SolutionRecord{target, tri, rep, p, comp, prov, residue};
}

}  // namespace rrn

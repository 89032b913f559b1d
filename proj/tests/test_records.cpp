#include <catch2/catch_amalgamated.hpp>

#include "rrn/records.hpp"

using namespace rrn;

TEST_CASE("records round-trip through JSON unchanged") {
    SearchConfig cfg;
    cfg.denominator_bound = 40;
    auto recs = quartic_sieve(RatioTarget::integer_n(26), cfg);
    SearchConfig sat;
    sat.multiple_bound = 2;
    for (auto& r : saturate(RatioTarget::integer_n(7),
                            {{rat(29, 169), rat(6902, 2197)}}, sat))
        recs.push_back(std::move(r));
    REQUIRE_FALSE(recs.empty());

    for (const auto& r : recs) {
        nlohmann::json j = record_to_json(r, "solve");
        std::string line = j.dump();
        SolutionRecord back = record_from_json(nlohmann::json::parse(line));
        CHECK(record_to_json(back, "solve").dump() == line);
        CHECK(back.point == r.point);
        CHECK(back.target == r.target);
        CHECK(back.triangle.has_value() == r.triangle.has_value());
    }
}

TEST_CASE("emitted ratio string reparses and matches the sides") {
    SearchConfig cfg;
    cfg.denominator_bound = 40;
    for (const auto& r : quartic_sieve(RatioTarget::integer_n(26), cfg)) {
        if (!r.triangle)
            continue;
        nlohmann::json j = record_to_json(r, "solve");
        Rational reparsed =
            rational_from_string(j["ratio"].get<std::string>());
        Triple sides{Integer(j["triangle"]["f"].get<std::string>()),
                     Integer(j["triangle"]["g"].get<std::string>()),
                     Integer(j["triangle"]["h"].get<std::string>())};
        CHECK(ratio(sides) == reparsed);
    }
}

TEST_CASE("exact fields are strings of digits, never floats") {
    SearchConfig cfg;
    cfg.denominator_bound = 12;
    auto recs = egg_sieve(RatioTarget::integer_n(26), cfg);
    REQUIRE_FALSE(recs.empty());
    nlohmann::json j = record_to_json(recs.front(), "solve");
    CHECK(j["triangle"]["f"].is_string());
    CHECK(j["ratio"].is_string());
    CHECK(j["point"]["u"].is_string());
    CHECK(j["schema_version"] == "1");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "kg/decimal.hpp"
#include "kg/output.hpp"

using namespace kg;

namespace {
OutputTable sample_table() {
    OutputTable t;
    t.columns = {"N", "steepness", "exact"};
    t.rows.push_back({std::string("40"), std::string("1.36161"),
                      make_ratio(ZZ("3637485804655193"), ZZ("2671465728531600"))});
    t.rows.push_back({std::string("4"), std::string("1.16667"), make_ratio(7, 6)});
    t.rows.push_back({std::string("2"), std::string("1.00000"), QQ(1)});
    return t;
}
}  // namespace

TEST_CASE("csv rendering") {
    std::string csv = render_csv(sample_table());
    CHECK(csv ==
          "N,steepness,exact\n"
          "40,1.36161,3637485804655193/2671465728531600\n"
          "4,1.16667,7/6\n"
          "2,1.00000,1\n");
}

TEST_CASE("json rendering carries the same digit strings as csv") {
    OutputTable t = sample_table();
    auto doc = nlohmann::json::parse(render_json(t));
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["N"] == "40");
    CHECK(doc["rows"][0]["steepness"] == "1.36161");
    CHECK(doc["rows"][0]["exact"]["num"] == "3637485804655193");
    CHECK(doc["rows"][0]["exact"]["den"] == "2671465728531600");
    CHECK(doc["rows"][1]["exact"]["num"] == "7");
    CHECK(doc["rows"][1]["exact"]["den"] == "6");
    CHECK(doc["rows"][2]["exact"]["den"] == "1");

    // field-by-field digit strings agree between the two renderings
    std::string csv = render_csv(t);
    for (const auto& row : doc["rows"]) {
        CHECK(csv.find(row["N"].get<std::string>()) != std::string::npos);
        CHECK(csv.find(row["steepness"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("rendering is deterministic") {
    CHECK(render_csv(sample_table()) == render_csv(sample_table()));
    CHECK(render_json(sample_table()) == render_json(sample_table()));
}

TEST_CASE("width mismatch is rejected") {
    OutputTable t;
    t.columns = {"a", "b"};
    t.rows.push_back({std::string("1")});
    CHECK_THROWS_AS(render_csv(t), std::invalid_argument);
    CHECK_THROWS_AS(render_json(t), std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "cpar/fixtures.hpp"
#include "cpar/json_io.hpp"

using namespace cpar;

TEST_CASE("diagram roundtrip") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        Diagram d = random_diagram(3, 3, 4, rng);
        CHECK(diagram_from_json(json::parse(to_json(d).dump())) == d);
    }
}

TEST_CASE("diagram validation") {
    CHECK_THROWS(diagram_from_json(json::parse(R"({"r":2,"k":1,"l":1,"blocks":[{"top":[1],"bot":[],"c":0}]})")));
    CHECK_THROWS(diagram_from_json(json::parse(R"({"r":2,"k":1})")));
    CHECK_THROWS(diagram_from_json(json::parse(R"([1,2])")));
}

TEST_CASE("RS roundtrip through json") {
    auto x = rs_forward(fixtures::rs_diagram());
    CHECK(rs_from_json(json::parse(to_json(x).dump())) == x);
}

TEST_CASE("multipartitions") {
    Multipartition m = {{2, 1}, {}, {1}};
    CHECK(multipartition_from_json(to_json(m)) == m);
    CHECK_THROWS(partition_from_json(json::parse("[1,2]")));
    CHECK_THROWS(partition_from_json(json::parse("[2,-1]")));
}

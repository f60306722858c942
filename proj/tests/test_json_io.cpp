#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "santalo/bodies.hpp"
#include "santalo/functionals.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/json_io.hpp"

using namespace santalo;

TEST_CASE("named body round trip") {
    BodySpec spec = BodySpec::named("slab_of_ball", {{"w", 1.0}, {"R", 1.0}});
    std::string text = body_to_json(spec);
    BodySpec back = body_from_json(text);
    CHECK(back.name == "slab_of_ball");
    CHECK(back.params.at("w") == 1.0);
    CHECK(back.params.at("R") == 1.0);
    FunctionalVector fv = evaluate_all(back);
    CHECK(fv.w == doctest::Approx(1.0));
}

TEST_CASE("arcgon round trip keeps arcs and the disk encoding") {
    ArcGon lens = construct(BodySpec::named("lens", {{"D", 2.0}, {"phi", 1.0}}));
    BodySpec spec = BodySpec::of(lens);
    BodySpec back = body_from_json(body_to_json(spec));
    REQUIRE(back.is_raw());
    REQUIRE(back.raw->vertices.size() == lens.vertices.size());
    REQUIRE(back.raw->arcs[0].has_value());
    CHECK(back.raw->arcs[0]->radius == lens.arcs[0]->radius);
    CHECK(validate_arcgon(*back.raw).ok);

    ArcGon disk = construct(BodySpec::named("ball", {{"rho", 2.0}}));
    BodySpec dback = body_from_json(body_to_json(BodySpec::of(disk)));
    CHECK(dback.raw->is_disk());
}

TEST_CASE("malformed JSON raises a parse error") {
    CHECK_THROWS_AS(body_from_json("{\"kind\":\"named\",\"name\":"), std::runtime_error);
    CHECK_THROWS_AS(body_from_json("{\"kind\":\"named\"}"), std::runtime_error);
    CHECK_THROWS_AS(body_from_json("{\"kind\":\"arcgon\",\"vertices\":[[0,0],[1,0]],\"arcs\":[null]}"),
                    std::runtime_error);
}

TEST_CASE("functional vector emission carries err fields") {
    FunctionalVector fv = evaluate_all(construct(BodySpec::named("reuleaux_triangle", {{"width", 2.0}})));
    std::string text = functional_vector_to_json(fv);
    CHECK(text.find("\"err\"") != std::string::npos);
    FunctionalVector back = functional_vector_from_json(text);
    CHECK(back.A == fv.A);
    CHECK(back.p == fv.p);
    CHECK(back.r == fv.r);
    CHECK(back.err.D == fv.err.D);
}

TEST_CASE("slack report JSON lists violations") {
    FunctionalVector fake;
    fake.A = 50.0;  // violates the isoperimetric bound for p = 6
    fake.p = 6.0;
    fake.r = 0.5;
    fake.R = 1.0;
    fake.D = 2.0;
    fake.w = 1.0;
    std::vector<SlackReport> reports = check_all(fake);
    bool violated = false;
    for (const SlackReport& r : reports) violated = violated || r.violation;
    CHECK(violated);
    std::string text = slack_reports_to_json(reports);
    CHECK(text.find("\"violation\": true") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "santalo/bodies.hpp"
#include "santalo/diagrams.hpp"
#include "santalo/functionals.hpp"
#include "santalo/inequalities.hpp"

using namespace santalo;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

FunctionalVector eval_named(const std::string& fam, std::map<std::string, double> params) {
    return evaluate_all(construct(BodySpec::named(fam, std::move(params))));
}
}  // namespace

TEST_CASE("map_point spot values") {
    DiagramSpec apd = diagram_spec(DiagramName::ApD);
    auto [bx, by] = map_point(apd, eval_named("ball", {{"rho", 1.0}}));
    CHECK(bx == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(by == doctest::Approx(kPi / 4.0).epsilon(1e-12));

    DiagramSpec pdr = diagram_spec(DiagramName::pDr);
    auto [rx, ry] = map_point(pdr, eval_named("reuleaux_triangle", {{"width", 2.0}}));
    CHECK(rx == doctest::Approx(1.0 - 1.0 / kSqrt3).epsilon(1e-10));
    CHECK(ry == doctest::Approx(kPi).epsilon(1e-10));

    DiagramSpec prw = diagram_spec(DiagramName::prw);
    auto [tx, ty] = map_point(prw, eval_named("equilateral_triangle", {{"r", 1.0}}));
    CHECK(tx == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(ty == doctest::Approx(6.0 * kSqrt3).epsilon(1e-10));
}

TEST_CASE("map_point rejects degenerate denominators") {
    DiagramSpec arw = diagram_spec(DiagramName::Arw);
    FunctionalVector seg = eval_named("segment", {{"len", 2.0}});
    CHECK_THROWS_WITH_AS(map_point(arw, seg), "degenerate body for this diagram", std::invalid_argument);
}

TEST_CASE("known_curves: endpoints of the proven boundaries") {
    DiagramSpec prw_spec = diagram_spec(DiagramName::pRw);
    CHECK(curve_value(prw_spec, "pRw_NEW", 2.0) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
    CHECK(curve_value(prw_spec, "pRw_NEW", 0.0) == doctest::Approx(4.0).epsilon(1e-12));

    DiagramSpec arw = diagram_spec(DiagramName::Arw);
    CHECK(curve_value(arw, "Arw_lower", 3.0) == doctest::Approx(3.0 * kSqrt3).epsilon(1e-12));
    CHECK(curve_value(arw, "Arw_lower", 2.0) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(curve_value(arw, "Arw_upper", 3.0) == doctest::Approx(3.0 * kSqrt3).epsilon(1e-12));

    DiagramSpec pdr = diagram_spec(DiagramName::pDr);
    CHECK(curve_value(pdr, "LB_prD", 0.5) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(curve_value(pdr, "LB_prD", 0.0) == doctest::Approx(2.0).epsilon(1e-12));

    DiagramSpec apd = diagram_spec(DiagramName::ApD);
    CHECK(curve_value(apd, "ApDKubota", kPi) == doctest::Approx(kPi / 4.0).epsilon(1e-9));
}

TEST_CASE("known_curves: curve id sets match the figure captions") {
    auto ids = [](DiagramName n) {
        std::set<std::string> s;
        for (const Curve& c : known_curves(diagram_spec(n))) s.insert(c.id);
        return s;
    };
    CHECK(ids(DiagramName::ApD) == std::set<std::string>{"ApDKubota", "ApDKubota2", "ApDKubota3",
                                                         "pD_upper", "pD_lower", "isoperimetric"});
    CHECK(ids(DiagramName::pDr) ==
          std::set<std::string>{"pD_upper", "LB_prD", "UB_pDr_2", "pDrHenk", "pD_lower"});
    CHECK(ids(DiagramName::pRw) == std::set<std::string>{"pRw_NEW", "pw", "LB_pRw", "pR_upper", "pR_lower"});
    CHECK(ids(DiagramName::ARw) ==
          std::set<std::string>{"ARw_NEW_UPPER", "ARw_LOWER", "ARw_old_lower", "ARw_old_upper"});
    CHECK(ids(DiagramName::Arw) == std::set<std::string>{"steinhagen_lower", "Arw_upper", "Arw_nonsharp_1",
                                                         "Arw_nonsharp_2", "Arw_lower"});
    CHECK(ids(DiagramName::prw) ==
          std::set<std::string>{"steinhagen_lower", "prw_upper", "prw_nonsharp", "pw", "prw_lower"});
}

TEST_CASE("proven-boundary styling follows the captions") {
    DiagramSpec prw_spec = diagram_spec(DiagramName::prw);
    for (const Curve& c : known_curves(prw_spec)) {
        if (c.id == "prw_upper" || c.id == "pw" || c.id == "steinhagen_lower")
            CHECK(c.style == CurveStyle::proven_boundary);
        else
            CHECK(c.style == CurveStyle::valid_bound);
    }
}

TEST_CASE("random_convex_polygon") {
    ArcGon tri = random_convex_polygon(3, 1);
    CHECK(validate_arcgon(tri).ok);
    CHECK(tri.vertices.size() == 3);

    ArcGon big = random_convex_polygon(50, 2);
    CHECK(big.vertices.size() <= 50);
    CHECK(big.vertices.size() >= 3);

    // full pipeline: the mapped point respects every ApD curve
    ArcGon huge = random_convex_polygon(1000, 3);
    DiagramSpec apd = diagram_spec(DiagramName::ApD);
    FunctionalVector fv = evaluate_all(huge);
    auto [x, y] = map_point(apd, fv);
    CHECK(x >= 2.0 - 1e-9);
    CHECK(x <= kPi + 1e-9);
    CHECK(y <= curve_value(apd, "ApDKubota", x) + 1e-9);
    if (x <= 3.0) CHECK(y >= curve_value(apd, "ApDKubota2", x) - 1e-9);
}

TEST_CASE("sample_cloud: pRw cloud stays under the proven upper curve") {
    DiagramSpec spec = diagram_spec(DiagramName::pRw);
    PointCloud cloud = sample_cloud(spec, {}, 1000, 5);
    REQUIRE(cloud.rows.size() == 1000);
    for (const CloudRow& r : cloud.rows) {
        CHECK(r.y <= curve_value(spec, "pRw_NEW", r.x) + 1e-9);
        CHECK(r.y >= curve_value(spec, "pw", r.x) - 1e-9);
    }
}

TEST_CASE("sample_cloud: witness generator lands on the Arw upper curve") {
    DiagramSpec spec = diagram_spec(DiagramName::Arw);
    GeneratorSet wit;
    wit.random_polygons = false;
    wit.polygon_minkowski_mixes = false;
    PointCloud cloud = sample_cloud(spec, wit, 33, 8);
    // Jittered witnesses sit near (not on) the curve; rebuild exact ones here.
    std::vector<WitnessFamily> fams = witnesses_for("Arw_upper");
    REQUIRE(fams.size() == 1);
    for (int i = 1; i <= 33; ++i) {
        double w = 2.0 + static_cast<double>(i) / 33.0;
        FunctionalVector fv = evaluate_all(construct(fams[0].make(w)));
        auto [x, y] = map_point(spec, fv);
        CHECK(std::abs(y - curve_value(spec, "Arw_upper", x)) <= 1e-7 * std::max(1.0, y));
    }
    for (const CloudRow& r : cloud.rows) CHECK(r.generator_tag == "perturbed_witnesses");
}

TEST_CASE("sample_cloud: ApD abscissa lies in [2, pi]") {
    DiagramSpec spec = diagram_spec(DiagramName::ApD);
    GeneratorSet rp;
    rp.perturbed_witnesses = false;
    rp.polygon_minkowski_mixes = false;
    PointCloud cloud = sample_cloud(spec, rp, 200, 17);
    for (const CloudRow& r : cloud.rows) {
        CHECK(r.x >= 2.0 - 1e-9);
        CHECK(r.x <= kPi + 1e-9);
    }
}

TEST_CASE("sample_cloud: rows recompute from their bodies") {
    DiagramSpec spec = diagram_spec(DiagramName::ARw);
    PointCloud cloud = sample_cloud(spec, {}, 60, 23);
    REQUIRE(cloud.bodies.size() == cloud.rows.size());
    for (size_t i = 0; i < cloud.rows.size(); ++i) {
        auto [x, y] = map_point(spec, evaluate_all(cloud.bodies[i]));
        CHECK(std::abs(x - cloud.rows[i].x) <= 1e-9);
        CHECK(std::abs(y - cloud.rows[i].y) <= 1e-9);
    }
}

TEST_CASE("export_csv: header-only for the empty cloud, exact round trip") {
    PointCloud empty;
    CHECK(export_csv(empty) == "x,y,body_id,generator_tag,seed\n");

    DiagramSpec spec = diagram_spec(DiagramName::prw);
    PointCloud cloud = sample_cloud(spec, {}, 40, 77);
    std::string csv = export_csv(cloud);
    PointCloud back = import_csv(csv);
    REQUIRE(back.rows.size() == cloud.rows.size());
    for (size_t i = 0; i < cloud.rows.size(); ++i) {
        CHECK(back.rows[i].x == cloud.rows[i].x);  // bit-exact via %.17g
        CHECK(back.rows[i].y == cloud.rows[i].y);
        CHECK(back.rows[i].body_id == cloud.rows[i].body_id);
        CHECK(back.rows[i].seed == cloud.rows[i].seed);
    }
    CHECK(export_csv(back) == csv);
}

TEST_CASE("sample_cloud is deterministic per seed") {
    DiagramSpec spec = diagram_spec(DiagramName::Arw);
    std::string a = export_csv(sample_cloud(spec, {}, 50, 99));
    std::string b = export_csv(sample_cloud(spec, {}, 50, 99));
    CHECK(a == b);
}

TEST_CASE("render_svg lists every curve and the special-body markers") {
    DiagramSpec spec = diagram_spec(DiagramName::pRw);
    PointCloud cloud = sample_cloud(spec, {}, 30, 3);
    std::vector<Curve> curves = known_curves(spec);
    std::string svg = render_svg(spec, cloud, curves);
    for (const char* id : {"pRw_NEW", "pw", "LB_pRw", "pR_upper", "pR_lower"})
        CHECK(svg.find(id) != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // valid bounds dashed
    CHECK(svg.find("<svg") == 0);
}

TEST_CASE("boundary_push: ball endpoint of the pRw diagram") {
    DiagramSpec spec = diagram_spec(DiagramName::pRw);
    PushResult res = boundary_push(spec, true, 2.0, 400, 4);
    CHECK(std::abs(res.x - 2.0) <= 1e-3);
    CHECK(std::abs(res.y - 2.0 * kPi) <= 1e-3);
}

TEST_CASE("boundary_push: triangle corner of the Arw diagram") {
    DiagramSpec spec = diagram_spec(DiagramName::Arw);
    PushResult res = boundary_push(spec, false, 3.0, 2000, 6);
    CHECK(res.y >= 3.0 * kSqrt3 - 1e-6);
    CHECK(res.y <= 3.0 * kSqrt3 + 0.05);
}

TEST_CASE("boundary_push: stadium point of the pDr lower boundary") {
    DiagramSpec spec = diagram_spec(DiagramName::pDr);
    PushResult res = boundary_push(spec, false, 0.25, 2000, 9);
    double target = curve_value(spec, "LB_prD", 0.25);
    CHECK(target == doctest::Approx(0.25 * 4.0 * std::asin(0.5) + 2.0 * std::sqrt(0.75)).epsilon(1e-12));
    CHECK(res.y >= curve_value(spec, "LB_prD", res.x) - 1e-9);
    CHECK(std::abs(res.y - target) <= 0.05);
}

TEST_CASE("boundary_push is deterministic per seed") {
    DiagramSpec spec = diagram_spec(DiagramName::ARw);
    PushResult a = boundary_push(spec, true, 1.0, 300, 12);
    PushResult b = boundary_push(spec, true, 1.0, 300, 12);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK_THROWS_AS(boundary_push(spec, true, 5.0, 10, 1), std::invalid_argument);
}

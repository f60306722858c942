#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "santalo/bodies.hpp"
#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"

using namespace santalo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

ArcGon random_polygon(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < n; ++i) {
        double r = std::sqrt(uni(rng));
        double t = 2.0 * kPi * uni(rng);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return convex_hull(pts);
}

ArcGon body_of(const std::string& fam, std::map<std::string, double> params) {
    return construct(BodySpec::named(fam, std::move(params)));
}

}  // namespace

TEST_CASE("area: disk, square, Reuleaux triangle") {
    CHECK(area(body_of("ball", {{"rho", 1.0}})) == doctest::Approx(kPi).epsilon(1e-14));
    ArcGon sq;
    sq.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.arcs.assign(4, std::nullopt);
    CHECK(area(sq) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(area(body_of("reuleaux_triangle", {{"width", 2.0}})) ==
          doctest::Approx(2.0 * (kPi - kSqrt3)).epsilon(1e-12));
}

TEST_CASE("perimeter: disk, Reuleaux (Barbier), stadium hull") {
    CHECK(perimeter(body_of("ball", {{"rho", 1.0}})) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(perimeter(body_of("reuleaux_triangle", {{"width", 2.0}})) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-12));

    // conv([-e1,e1] u (1/2)B): closed form 4(sqrt(1-r^2) + r asin r) at r=1/2,
    // cross-checked against a dense discretization.
    ArcGon st = body_of("stadium_hull", {{"r", 0.5}, {"D", 2.0}});
    double expect = 4.0 * (std::sqrt(0.75) + 0.5 * std::asin(0.5));
    CHECK(expect == doctest::Approx(4.5112991663).epsilon(1e-10));
    CHECK(perimeter(st) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(perimeter(discretize(st, 1e-8)) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("diameter: segment, triangle, lens") {
    ArcGon seg;
    seg.vertices = {{-1, 0}, {1, 0}};
    seg.arcs = {std::nullopt, std::nullopt};
    CHECK(diameter(seg).value == doctest::Approx(2.0));

    CHECK(diameter(body_of("equilateral_triangle", {{"R", 1.0}})).value ==
          doctest::Approx(kSqrt3).epsilon(1e-13));

    // Intersection of two unit disks at center distance 1: cusps at
    // (+-sqrt(3)/2, 0), so D = sqrt(3). That lens is lens(D=sqrt(3), phi=pi/3).
    ArcGon lens = body_of("lens", {{"D", kSqrt3}, {"phi", kPi / 3.0}});
    DiameterResult d = diameter(lens);
    CHECK(d.value == doctest::Approx(kSqrt3).epsilon(1e-12));
    // dense-sampling oracle over all discretized vertex pairs
    ArcGon fine = discretize(lens, 1e-6);
    double brute = 0.0;
    for (size_t i = 0; i < fine.vertices.size(); ++i)
        for (size_t j = i + 1; j < fine.vertices.size(); ++j)
            brute = std::max(brute, dist(fine.vertices[i], fine.vertices[j]));
    CHECK(d.value >= brute - 1e-12);
    CHECK(d.value <= brute + 1e-5);
}

TEST_CASE("diameter attained at an arc-interior point") {
    // Cone over the unit disk with apex (0, 2); the bottom arc is split so
    // that the far point (0, -1) lies strictly inside an arc. D = 3.
    double c30 = std::cos(kPi / 6.0), s30 = 0.5;
    ArcGon cone;
    cone.vertices = {{0.0, 2.0},
                     {-c30, s30},
                     {std::cos(260.0 * kPi / 180.0), std::sin(260.0 * kPi / 180.0)},
                     {c30, s30}};
    Arc a1, a2;
    a1.center = {0, 0};
    a1.radius = 1.0;
    a2 = a1;
    cone.arcs = {std::nullopt, a1, a2, std::nullopt};
    REQUIRE(validate_arcgon(cone).ok);
    DiameterResult d = diameter(cone);
    CHECK(d.value == doctest::Approx(3.0).epsilon(1e-13));
    bool hits_bottom = dist(d.a, {0, -1}) < 1e-9 || dist(d.b, {0, -1}) < 1e-9;
    CHECK(hits_bottom);
}

TEST_CASE("width: segment, Reuleaux, slab") {
    ArcGon seg;
    seg.vertices = {{-1, 0}, {1, 0}};
    seg.arcs = {std::nullopt, std::nullopt};
    CHECK(width(seg).value == doctest::Approx(0.0));

    WidthResult rw = width(body_of("reuleaux_triangle", {{"width", 2.0}}));
    CHECK(rw.value == doctest::Approx(2.0).epsilon(1e-12));

    WidthResult sw = width(body_of("slab_of_ball", {{"w", 1.0}, {"R", 1.0}}));
    CHECK(sw.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(sw.direction.uy) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("circumradius with touching certificates") {
    CircumradiusResult disk = circumradius(body_of("ball", {{"rho", 1.0}}));
    CHECK(disk.radius == doctest::Approx(1.0));
    CHECK(disk.certificate.points.size() >= 2);
    CHECK(disk.certificate.hull_contains_center);

    CircumradiusResult tri = circumradius(body_of("equilateral_triangle", {{"R", 1.0}}));
    CHECK(tri.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(tri.center) < 1e-9);
    CHECK(tri.certificate.points.size() == 3);
    CHECK(tri.certificate.hull_contains_center);

    CircumradiusResult st = circumradius(body_of("stadium_hull", {{"r", 0.5}, {"D", 2.0}}));
    CHECK(st.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(st.center) < 1e-9);
    REQUIRE(st.certificate.points.size() == 2);
    for (const Point2& p : st.certificate.points) CHECK(std::abs(std::abs(p.x) - 1.0) < 1e-9);

    // Slab: the circumcircle touches the two arcs.
    CircumradiusResult sl = circumradius(body_of("slab_of_ball", {{"w", 1.0}, {"R", 1.0}}));
    CHECK(sl.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sl.certificate.hull_contains_center);
    CHECK(sl.err <= 1e-9);
}

TEST_CASE("inradius: disk, triangle, Reuleaux") {
    InradiusResult disk = inradius(body_of("ball", {{"rho", 1.0}}));
    CHECK(disk.radius == doctest::Approx(1.0));

    InradiusResult tri = inradius(body_of("equilateral_triangle", {{"R", 1.0}}));
    CHECK(tri.radius == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(norm(tri.center) < 1e-9);
    CHECK(tri.touching_normals.size() >= 3);

    InradiusResult rt = inradius(body_of("reuleaux_triangle", {{"width", 2.0}}));
    CHECK(rt.radius == doctest::Approx(2.0 - 2.0 / kSqrt3).epsilon(1e-10));
    CHECK(rt.err <= 1e-9);
}

TEST_CASE("inradius: degenerate-face and tangent-junction regressions") {
    // Ultra-thin slab: the optimal center set is a long segment and the LP
    // sits at a degenerate vertex; the certified ascent must still find w/2.
    for (double w : {1.37152e-05, 1e-4, 1e-3}) {
        ArcGon g = body_of("slab_of_ball", {{"w", w}, {"R", 1.0}});
        InradiusResult ir = inradius(g);
        CHECK(std::abs(ir.radius - w / 2.0) <= 1e-9);
        CHECK(ir.err <= 1e-9);
    }
    // Stadium hulls: smooth tangent junctions have empty vertex normal cones.
    for (double r : {0.1887, 0.5, 0.9}) {
        ArcGon g = body_of("stadium_hull", {{"r", r}, {"D", 2.0}});
        InradiusResult ir = inradius(g);
        CHECK(std::abs(ir.radius - r) <= 1e-9);
        CHECK(norm(ir.center) <= 1e-7);
    }
    // Lens: the inball touches both arcs; the ascent must not leave the body.
    for (double phi : {0.3, 1.0, 1.5}) {
        ArcGon g = body_of("lens", {{"D", 2.0}, {"phi", phi}});
        InradiusResult ir = inradius(g);
        double rho = 1.0 / std::sin(phi);
        CHECK(std::abs(ir.radius - rho * (1.0 - std::cos(phi))) <= 1e-9);
    }
}

TEST_CASE("inradius: segment convention") {
    ArcGon seg;
    seg.vertices = {{0, 0}, {4, 0}};
    seg.arcs = {std::nullopt, std::nullopt};
    InradiusResult r = inradius(seg);
    CHECK(r.radius == 0.0);
    CHECK(dist(r.center, {2, 0}) < 1e-15);
    CHECK(r.touching_normals.empty());
}

TEST_CASE("incircle is contained; inflating it breaks containment") {
    for (uint64_t seed : {11ULL, 12ULL, 13ULL}) {
        ArcGon g = random_polygon(14, seed);
        InradiusResult ir = inradius(g);
        // containment on a dense direction grid
        for (int k = 0; k < 4096; ++k) {
            UnitVector2 u = UnitVector2::from_angle(2.0 * kPi * k / 4096.0);
            CHECK(dot(ir.center, u) + ir.radius <= support(g, u).value + 1e-12);
        }
        // growing rho by 10 * abs_tol must poke out at some touching normal
        bool fails = false;
        for (const UnitVector2& u : ir.touching_normals)
            if (dot(ir.center, u) + ir.radius + 1e-8 > support(g, u).value) fails = true;
        CHECK(fails);
    }
}

TEST_CASE("circumcircle certificate is tight on random polygons") {
    for (uint64_t seed = 40; seed < 60; ++seed) {
        ArcGon g = random_polygon(18, seed);
        CircumradiusResult cr = circumradius(g);
        CHECK(cr.certificate.hull_contains_center);
        CHECK(cr.certificate.points.size() >= 2);
        CHECK(cr.certificate.points.size() <= 3);
        for (const Point2& p : cr.certificate.points) {
            CHECK(std::abs(dist(p, cr.center) - cr.radius) <= 1e-9 * std::max(1.0, cr.radius));
            // certificate points lie on the body boundary
            CHECK(detail::distance_to_boundary(g, p) <= 1e-9);
        }
        // containment
        for (const Point2& v : g.vertices) CHECK(dist(v, cr.center) <= cr.radius * (1 + 1e-12) + 1e-12);
    }
}

TEST_CASE("diameter and width agree with the discretized brute force") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        ArcGon g = random_polygon(5 + static_cast<int>(rng() % 30), 1000 + trial);
        DiameterResult d = diameter(g);
        double bd = 0.0;
        for (size_t i = 0; i < g.vertices.size(); ++i)
            for (size_t j = i + 1; j < g.vertices.size(); ++j)
                bd = std::max(bd, dist(g.vertices[i], g.vertices[j]));
        CHECK(std::abs(d.value - bd) <= 1e-7);

        WidthResult w = width(g);
        // O(n^2) oracle: a polygon's width is attained over an edge.
        double bw = 1e18;
        const size_t n = g.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            Point2 e = g.vertices[(i + 1) % n] - g.vertices[i];
            UnitVector2 nrm = UnitVector2::of(e.y, -e.x);
            double far = 0.0;
            for (const Point2& v : g.vertices)
                far = std::max(far, dot(g.vertices[i] - v, nrm));
            bw = std::min(bw, far);
        }
        CHECK(std::abs(w.value - bw) <= 1e-7);
    }
}

TEST_CASE("constant width bodies: Barbier and w = D") {
    for (int k : {3, 5, 7}) {
        ArcGon g = body_of("reuleaux_polygon", {{"k", static_cast<double>(k)}, {"width", 1.7}});
        FunctionalVector fv = evaluate_all(g);
        CHECK(std::abs(fv.p - kPi * fv.D) <= 1e-9);
        CHECK(std::abs(fv.w - fv.D) <= 1e-9);
    }
}

TEST_CASE("evaluate_all named bodies return closed forms") {
    FunctionalVector ball = evaluate_all(BodySpec::named("ball", {{"rho", 1.0}}));
    CHECK(ball.A == doctest::Approx(kPi));
    CHECK(ball.p == doctest::Approx(2.0 * kPi));
    CHECK(ball.r == 1.0);
    CHECK(ball.R == 1.0);
    CHECK(ball.D == 2.0);
    CHECK(ball.w == 2.0);

    FunctionalVector tri = evaluate_all(BodySpec::named("equilateral_triangle", {{"r", 1.0}}));
    CHECK(tri.A == doctest::Approx(3.0 * kSqrt3).epsilon(1e-13));
    CHECK(tri.p == doctest::Approx(6.0 * kSqrt3).epsilon(1e-13));
    CHECK(tri.r == doctest::Approx(1.0));
    CHECK(tri.R == doctest::Approx(2.0));
    CHECK(tri.D == doctest::Approx(2.0 * kSqrt3));
    CHECK(tri.w == doctest::Approx(3.0));

    FunctionalVector slab = evaluate_all(BodySpec::named("slab_of_ball", {{"w", 1.0}, {"R", 1.0}}));
    CHECK(slab.A == doctest::Approx(kPi - 2.0 * kPi / 3.0 + kSqrt3 / 2.0).epsilon(1e-12));
    CHECK(slab.A == doctest::Approx(1.91322295498).epsilon(1e-10));
    CHECK(slab.p == doctest::Approx(2.0 * (kPi / 3.0 + kSqrt3)).epsilon(1e-12));
    CHECK(slab.p == doctest::Approx(5.55849671753).epsilon(1e-10));
}

TEST_CASE("classical functional-vector invariants hold on random polygons") {
    for (int trial = 0; trial < 500; ++trial) {
        ArcGon g = random_polygon(4 + trial % 20, 5000 + trial);
        FunctionalVector f = evaluate_all(g);
        double e = 1e-9 * std::max(1.0, f.D);
        CHECK(f.r <= f.R + e);
        CHECK(f.w <= f.D + e);
        CHECK(2.0 * f.r <= f.w + e);
        CHECK(f.w <= 3.0 * f.r + e);
        CHECK(kSqrt3 * f.R <= f.D + e);
        CHECK(f.w <= f.r + f.R + e);
        CHECK(f.r + f.R <= f.D + e);
        CHECK(kPi * f.r * f.r <= f.A + e);
        CHECK(f.A <= kPi * f.R * f.R + e);
        CHECK(2.0 * f.D <= f.p + e);
        CHECK(f.p <= kPi * f.D + e);
        CHECK(4.0 * kPi * f.A <= f.p * f.p + e);
        // witnesses: incircle inside, body inside circumcircle
        CHECK(detail::distance_to_boundary(g, f.incenter) >= f.r - 1e-9);
        for (const Point2& v : g.vertices) CHECK(dist(v, f.circumcenter) <= f.R + 1e-9);
    }
}

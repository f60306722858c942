#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace santalo {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Unit direction; the factory normalizes so downstream code can rely on
// ux^2 + uy^2 = 1 within 1e-12.
struct UnitVector2 {
    double ux = 1.0;
    double uy = 0.0;

    static UnitVector2 of(double x, double y);
    static UnitVector2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
    UnitVector2 negated() const { return {-ux, -uy}; }
    double angle() const { return std::atan2(uy, ux); }
    Point2 as_point() const { return {ux, uy}; }
};

inline double dot(Point2 a, UnitVector2 u) { return a.x * u.ux + a.y * u.uy; }

// Circular arc decorating one edge of an ArcGon. The arc runs counterclockwise
// around `center` from the edge's start vertex to its end vertex and bulges
// outward. `full_circle` is the one-vertex disk encoding.
struct Arc {
    Point2 center;
    double radius = 0.0;
    bool full_circle = false;
};

// Convex body bounded by straight edges and outward circular arcs.
// arcs[i] decorates the edge from vertices[i] to vertices[(i+1) % n];
// a missing entry means a straight edge. Two degenerate encodings exist:
// a single vertex with one full-circle arc (disk) and two vertices with two
// straight edges (segment).
struct ArcGon {
    std::vector<Point2> vertices;
    std::vector<std::optional<Arc>> arcs;

    bool is_polygon() const;
    bool is_segment() const;
    bool is_disk() const;
};

struct ToleranceConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double max_sagitta = 1e-6;
    int direction_samples = 4096;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks every ArcGon invariant; never throws. Each violation names the
// offending vertex or edge index.
ValidationReport validate_arcgon(const ArcGon& body);

// Counterclockwise hull; collinear input collapses to the segment encoding.
// Throws std::invalid_argument("degenerate point set") on < 2 distinct points.
ArcGon convex_hull(const std::vector<Point2>& points);

struct SupportResult {
    double value = 0.0;
    Point2 point;
};

// h(K,u) = max_{x in K} <x,u> together with a maximizer.
SupportResult support(const ArcGon& body, UnitVector2 u);

double width_in_direction(const ArcGon& body, UnitVector2 u);

// Replaces every arc by inscribed chords with sagitta <= max_sagitta.
// The output is contained in the input.
ArcGon discretize(const ArcGon& body, double max_sagitta);

// Steiner symmetrization of a polygon about the line through the origin with
// direction `axis`. Throws std::invalid_argument("polygon required") when the
// body carries arcs; callers discretize first.
ArcGon steiner_symmetrize(const ArcGon& body, UnitVector2 axis);

namespace detail {

// Boundary feature: either a vertex (radius 0) or an arc with its angular
// span [a0, a1] (counterclockwise, a1 > a0) as seen from the arc center.
struct Feature {
    bool is_arc = false;
    Point2 p;           // vertex position, or arc center
    double radius = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    bool full = false;
    int index = -1;
};

std::vector<Feature> boundary_features(const ArcGon& body);

// Positive angle of b relative to a, in [0, 2*pi).
double ccw_delta(double a, double b);
bool angle_in_span(double t, double a0, double a1, double tol = 1e-12);

SupportResult support_unchecked(const ArcGon& body, UnitVector2 u);
// Index of the feature attaining the support value (vertex or arc).
int support_feature(const std::vector<Feature>& feats, UnitVector2 u);

uint64_t splitmix64(uint64_t x);
uint64_t sub_seed(uint64_t seed, uint64_t index);

}  // namespace detail

}  // namespace santalo

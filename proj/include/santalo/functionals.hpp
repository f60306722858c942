#pragma once

#include <utility>
#include <vector>

#include "santalo/geometry.hpp"

namespace santalo {

struct BodySpec;  // bodies.hpp

struct FunctionalErrors {
    double A = 0.0, p = 0.0, r = 0.0, R = 0.0, D = 0.0, w = 0.0;
};

// The six functionals plus certifying witnesses and per-value error bounds.
struct FunctionalVector {
    double A = 0.0;  // area
    double p = 0.0;  // perimeter
    double r = 0.0;  // inradius
    double R = 0.0;  // circumradius
    double D = 0.0;  // diameter
    double w = 0.0;  // minimal width
    Point2 incenter;
    Point2 circumcenter;
    std::pair<Point2, Point2> diameter_pair;
    UnitVector2 width_direction;
    FunctionalErrors err;
    bool degenerate = false;  // segment: r = w = A = 0
};

// Touching points on the circumcircle whose convex hull contains the center.
struct TouchingCertificate {
    std::vector<Point2> points;
    bool hull_contains_center = false;
};

double area(const ArcGon& body);
double perimeter(const ArcGon& body);

struct DiameterResult {
    double value = 0.0;
    Point2 a, b;
};
DiameterResult diameter(const ArcGon& body);

struct WidthResult {
    double value = 0.0;
    UnitVector2 direction;
};
WidthResult width(const ArcGon& body);

struct CircumradiusResult {
    double radius = 0.0;
    Point2 center;
    TouchingCertificate certificate;
    double err = 0.0;
};
CircumradiusResult circumradius(const ArcGon& body, const ToleranceConfig& tol = {});

struct InradiusResult {
    double radius = 0.0;
    Point2 center;
    std::vector<UnitVector2> touching_normals;
    double err = 0.0;
};
InradiusResult inradius(const ArcGon& body, const ToleranceConfig& tol = {});

FunctionalVector evaluate_all(const ArcGon& body, const ToleranceConfig& tol = {});

// Named bodies report closed forms where available; agreement with the
// numeric evaluation is asserted within 10 * abs_tol.
FunctionalVector evaluate_all(const BodySpec& spec, const ToleranceConfig& tol = {});

namespace detail {
// Distance from an interior point to the boundary (exact per-feature).
double distance_to_boundary(const ArcGon& body, Point2 z);
}

}  // namespace santalo

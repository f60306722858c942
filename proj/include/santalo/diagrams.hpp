#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"

namespace santalo {

enum class DiagramName { ApD, pDr, pRw, ARw, Arw, prw };

std::string to_string(DiagramName name);
DiagramName diagram_from_string(const std::string& name);

enum class CurveStyle { proven_boundary, valid_bound };

struct CurveRef {
    std::string ineq_id;
    CurveStyle style;
};

// Coordinate maps are scale-invariant ratios; curve_refs lists the
// inequalities rendered over the cloud. pDr uses x = r/D, y = p/D.
struct DiagramSpec {
    DiagramName name;
    std::string x_label, y_label;
    double x_min = 0.0, x_max = 1.0;
    double y_render_cap = 0.0;  // clip blowing-up curves in plots
    std::vector<CurveRef> curve_refs;
};

DiagramSpec diagram_spec(DiagramName name);

// Throws std::invalid_argument("degenerate body for this diagram") when the
// denominator functional vanishes.
std::pair<double, double> map_point(const DiagramSpec& spec, const FunctionalVector& fv);

struct Curve {
    std::string id;
    CurveStyle style;
    std::vector<std::pair<double, double>> polyline;
};

std::vector<Curve> known_curves(const DiagramSpec& spec);
// y-value of one boundary/bound curve at abscissa x (quiet NaN outside its range).
double curve_value(const DiagramSpec& spec, const std::string& ineq_id, double x);

// Hull of n uniform points in the unit disk; regenerates until the hull has
// at least 3 vertices.
ArcGon random_convex_polygon(int n, uint64_t seed);

struct CloudRow {
    double x = 0.0, y = 0.0;
    std::string body_id;
    std::string generator_tag;
    uint64_t seed = 0;
};

struct PointCloud {
    std::vector<CloudRow> rows;
    std::vector<ArcGon> bodies;  // aligned with rows; empty after CSV import
};

struct GeneratorSet {
    bool random_polygons = true;
    bool perturbed_witnesses = true;
    bool polygon_minkowski_mixes = true;
};

// N sampled bodies mapped into the diagram. Every sample is checked against
// the whole catalog; a genuine violation aborts (it would falsify a theorem
// or reveal a bug).
PointCloud sample_cloud(const DiagramSpec& spec, GeneratorSet generators, int N, uint64_t seed);

struct PushResult {
    ArcGon body;
    double x = 0.0, y = 0.0;
};

// Simulated annealing over polygon vertices pushing y up or down subject to
// |x - x_target| <= 1e-3. Deterministic per seed; the result never crosses a
// proven boundary curve.
PushResult boundary_push(const DiagramSpec& spec, bool up, double x_target, int iterations, uint64_t seed);

std::string export_csv(const PointCloud& cloud);
PointCloud import_csv(const std::string& text);

std::string render_svg(const DiagramSpec& spec, const PointCloud& cloud, const std::vector<Curve>& curves);

}  // namespace santalo

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"

namespace santalo {

struct CatalogFlags {
    bool constant_width = false;  // forced; |D - w| <= 1e-8 * D is detected anyway
};

// One catalog entry, lhs <= rhs in cleared-denominator form (no division by
// r, R, D or w, so degenerate segments evaluate cleanly).
struct InequalityRecord {
    std::string id;
    std::string anchor;  // literature attribution
    std::function<double(const FunctionalVector&)> lhs;
    std::function<double(const FunctionalVector&)> rhs;
    std::function<bool(const FunctionalVector&, const CatalogFlags&)> applicable;
    bool sharpness_claim = true;
};

const std::vector<InequalityRecord>& catalog();
const InequalityRecord& record(const std::string& id);  // throws on unknown id

struct SlackReport {
    std::string id;
    bool applicable = false;
    double slack = 0.0;            // rhs - lhs, cleared form
    double equality_within = 0.0;  // |rhs - lhs| / dominant scale
    double err_bound = 0.0;        // functional errors propagated through the record
    bool violation = false;        // slack < -3 * err_bound beyond rounding
};

SlackReport slack(const std::string& id, const FunctionalVector& fv, CatalogFlags flags = {});
std::vector<SlackReport> check_all(const FunctionalVector& fv, CatalogFlags flags = {});

struct KubotaPhi {
    double phi = 0.0;
    bool degenerate = false;  // p == 2D limit
};
// Unique root of 2*phi*D = p*sin(phi) in (0, pi]; throws when p is outside
// [2D, pi*D].
KubotaPhi solve_kubota_phi(double p, double D);

struct SharpnessResult {
    std::string id;
    bool has_claim = false;
    bool pass = false;
    double max_gap = 0.0;
    double argmax_param = 0.0;
    std::string family;
};
// Replays the equality family over a parameter grid with fully numeric
// functional evaluation; PASS iff the worst normalized gap is <= 1e-7.
SharpnessResult certify_sharpness(const std::string& id, int grid_points, const ToleranceConfig& tol = {});

struct Halfplane {
    UnitVector2 normal;
    double offset = 0.0;  // { x : <normal, x> <= offset }
};

struct IncircleTriangleResult {
    std::vector<Halfplane> halfplanes;  // 2 (strip) or 3 (triangle)
    double r_check = 0.0;
    bool degenerate_strip = false;
};
// Supporting halfplanes at incircle touching normals enclosing the body with
// the same inradius.
IncircleTriangleResult incircle_support_triangle(const ArcGon& polygon, const ToleranceConfig& tol = {});

}  // namespace santalo

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"

namespace santalo {

// Either a raw ArcGon or a named parametric witness body.
struct BodySpec {
    std::string name;  // empty for raw
    std::map<std::string, double> params;
    std::optional<ArcGon> raw;

    static BodySpec named(std::string family, std::map<std::string, double> p);
    static BodySpec of(ArcGon body);
    bool is_raw() const { return name.empty(); }
    std::string id() const;
};

// Names: ball(rho), segment(len), equilateral_triangle(r|R),
// reuleaux_polygon(k, width), reuleaux_triangle(width), lens(D, phi),
// slab_of_ball(w, R), stadium_hull(r, D), cap_cone(w, R),
// two_point_ball(r, R), sharp_isosceles(w, r).
const std::vector<std::string>& known_families();

// Exact ArcGon; throws std::invalid_argument naming the violated parameter
// bound when out of range.
ArcGon construct(const BodySpec& spec);

struct ClosedFormValues {
    FunctionalVector values;
    std::set<std::string> closed_fields;               // subset of {A,p,r,R,D,w}
    std::map<std::string, std::string> provenance;     // per-field note
};

// Throws std::invalid_argument("no closed form") for raw specs.
ClosedFormValues closed_form(const BodySpec& spec);

struct WitnessFamily {
    std::string description;
    std::function<BodySpec(double)> make;
    double t0 = 0.0;
    double t1 = 0.0;
    bool open_left = false;  // half-open parameter range (t0, t1]
};

// Parametric equality families per inequality id; empty when the bound
// carries no sharpness claim. Throws on unknown ids.
std::vector<WitnessFamily> witnesses_for(const std::string& inequality_id);

}  // namespace santalo

#include "santalo/bodies.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace santalo {

namespace {

constexpr double kPi = std::numbers::pi;

double get_param(const BodySpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end())
        throw std::invalid_argument(s.name + ": missing parameter '" + key + "'");
    return it->second;
}

std::optional<double> maybe_param(const BodySpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end()) return std::nullopt;
    return it->second;
}

[[noreturn]] void bound_error(const std::string& family, const std::string& what) {
    throw std::invalid_argument(family + ": parameter out of range, requires " + what);
}

ArcGon make_disk(Point2 c, double r) {
    ArcGon g;
    g.vertices = {c + Point2{r, 0.0}};
    Arc a;
    a.center = c;
    a.radius = r;
    a.full_circle = true;
    g.arcs = {a};
    return g;
}

ArcGon make_segment(double len) {
    ArcGon g;
    g.vertices = {{-len / 2.0, 0.0}, {len / 2.0, 0.0}};
    g.arcs = {std::nullopt, std::nullopt};
    return g;
}

ArcGon make_polygon(std::vector<Point2> vs) {
    ArcGon g;
    g.vertices = std::move(vs);
    g.arcs.assign(g.vertices.size(), std::nullopt);
    return g;
}

ArcGon make_equilateral(double R) {
    std::vector<Point2> vs;
    for (int k = 0; k < 3; ++k) {
        double t = kPi / 2.0 + 2.0 * kPi * k / 3.0;
        vs.push_back({R * std::cos(t), R * std::sin(t)});
    }
    return make_polygon(vs);
}

ArcGon make_reuleaux(int k, double w) {
    if (k < 3 || k % 2 == 0) bound_error("reuleaux_polygon", "odd k >= 3");
    if (!(w > 0)) bound_error("reuleaux_polygon", "width > 0");
    double Rk = w / (2.0 * std::cos(kPi / (2.0 * k)));
    std::vector<Point2> vs;
    for (int j = 0; j < k; ++j) {
        double t = kPi / 2.0 + 2.0 * kPi * j / k;
        vs.push_back({Rk * std::cos(t), Rk * std::sin(t)});
    }
    ArcGon g;
    g.vertices = vs;
    g.arcs.resize(k);
    for (int j = 0; j < k; ++j) {
        Arc a;
        a.center = vs[(j + (k + 1) / 2) % k];
        a.radius = w;
        g.arcs[j] = a;
    }
    return g;
}

ArcGon make_lens(double D, double phi) {
    if (!(D > 0)) bound_error("lens", "D > 0");
    if (!(phi > 0.0) || phi > kPi / 2.0 + 1e-12) bound_error("lens", "0 < phi <= pi/2");
    if (phi >= kPi / 2.0 - 1e-12) return make_disk({0, 0}, D / 2.0);
    double rho = D / (2.0 * std::sin(phi));
    double cy = rho * std::cos(phi);
    ArcGon g;
    g.vertices = {{D / 2.0, 0.0}, {-D / 2.0, 0.0}};
    Arc up, down;
    up.center = {0.0, -cy};
    up.radius = rho;
    down.center = {0.0, cy};
    down.radius = rho;
    g.arcs = {up, down};
    return g;
}

ArcGon make_slab(double w, double R) {
    if (!(R > 0)) bound_error("slab_of_ball", "R > 0");
    if (w < 0 || w > 2.0 * R + 1e-12) bound_error("slab_of_ball", "0 <= w <= 2R");
    if (w >= 2.0 * R * (1.0 - 1e-12)) return make_disk({0, 0}, R);
    if (w <= 1e-12 * R) return make_segment(2.0 * R);
    double xw = std::sqrt(R * R - w * w / 4.0);
    ArcGon g;
    g.vertices = {{xw, -w / 2.0}, {xw, w / 2.0}, {-xw, w / 2.0}, {-xw, -w / 2.0}};
    Arc right, left;
    right.center = {0, 0};
    right.radius = R;
    left.center = {0, 0};
    left.radius = R;
    g.arcs = {right, std::nullopt, left, std::nullopt};
    return g;
}

ArcGon make_stadium(double r, double D) {
    if (!(D > 0)) bound_error("stadium_hull", "D > 0");
    double L = D / 2.0;
    if (r < 0 || r > L + 1e-12) bound_error("stadium_hull", "0 <= r <= D/2");
    if (r >= L * (1.0 - 1e-12)) return make_disk({0, 0}, L);
    if (r <= 1e-12 * L) return make_segment(D);
    double q = std::sqrt(L * L - r * r);
    Point2 tr = {r * r / L, r * q / L};   // upper-right tangent point
    Point2 tl = {-tr.x, tr.y};
    Point2 br = {tr.x, -tr.y};
    Point2 bl = {-tr.x, -tr.y};
    ArcGon g;
    g.vertices = {{L, 0.0}, tr, tl, {-L, 0.0}, bl, br};
    Arc top, bottom;
    top.center = {0, 0};
    top.radius = r;
    bottom.center = {0, 0};
    bottom.radius = r;
    g.arcs = {std::nullopt, top, std::nullopt, std::nullopt, bottom, std::nullopt};
    return g;
}

ArcGon make_cap_cone(double w, double R) {
    if (!(R > 0)) bound_error("cap_cone", "R > 0");
    if (w < R - 1e-12 || w > 2.0 * R + 1e-12) bound_error("cap_cone", "R <= w <= 2R");
    double rc = w - R;  // interior disk radius
    if (rc >= R * (1.0 - 1e-12)) return make_disk({0, 0}, R);
    if (rc <= 1e-12 * R) {
        // Degenerate: segment from apex to origin.
        ArcGon g;
        g.vertices = {{-R, 0.0}, {0.0, 0.0}};
        g.arcs = {std::nullopt, std::nullopt};
        return g;
    }
    double q = std::sqrt(R * R - rc * rc);
    Point2 apex = {-R, 0.0};
    Point2 tu = {-rc * rc / R, rc * q / R};  // upper tangent point
    Point2 tl = {tu.x, -tu.y};
    ArcGon g;
    // CCW: apex -> lower tangent -> split vertex (rc, 0) -> upper tangent -> apex
    g.vertices = {apex, tl, {rc, 0.0}, tu};
    Arc lower, upper;
    lower.center = {0, 0};
    lower.radius = rc;
    upper.center = {0, 0};
    upper.radius = rc;
    g.arcs = {std::nullopt, lower, upper, std::nullopt};
    return g;
}

ArcGon make_sharp_isosceles(double w, double r) {
    if (!(r > 0)) bound_error("sharp_isosceles", "r > 0");
    double wb = w / r;
    if (wb <= 2.0 || wb > 3.0 + 1e-12) bound_error("sharp_isosceles", "2r < w <= 3r");
    double a = std::sqrt(wb / (4.0 - wb));
    double h = wb / (wb - 2.0);
    return make_polygon({{-a * r, -r}, {a * r, -r}, {0.0, (h - 1.0) * r}});
}

struct Closed {
    double A, p, r, R, D, w;
    Point2 incenter{0, 0}, circumcenter{0, 0};
};

Closed closed_ball(double rho) { return {kPi * rho * rho, 2 * kPi * rho, rho, rho, 2 * rho, 2 * rho}; }

Closed closed_segment(double len) { return {0.0, 2.0 * len, 0.0, len / 2.0, len, 0.0}; }

Closed closed_equilateral(double r) {
    return {3.0 * std::sqrt(3.0) * r * r, 6.0 * std::sqrt(3.0) * r, r, 2.0 * r, 2.0 * std::sqrt(3.0) * r, 3.0 * r};
}

Closed closed_reuleaux(int k, double w) {
    double Rk = w / (2.0 * std::cos(kPi / (2.0 * k)));
    double A = 0.5 * (kPi - k * std::tan(kPi / (2.0 * k))) * w * w;
    return {A, kPi * w, w - Rk, Rk, w, w};
}

Closed closed_lens(double D, double phi) {
    double rho = D / (2.0 * std::sin(phi));
    double A = rho * rho * (2.0 * phi - std::sin(2.0 * phi));
    double wv = 2.0 * rho * (1.0 - std::cos(phi));
    return {A, 4.0 * rho * phi, wv / 2.0, D / 2.0, D, wv};
}

Closed closed_slab(double w, double R) {
    if (w <= 0) return closed_segment(2.0 * R);
    double xw = std::sqrt(std::max(0.0, R * R - w * w / 4.0));
    double A = w * xw + 2.0 * R * R * std::asin(std::min(1.0, w / (2.0 * R)));
    double p = 4.0 * xw + 4.0 * R * std::asin(std::min(1.0, w / (2.0 * R)));
    return {A, p, w / 2.0, R, 2.0 * R, w};
}

Closed closed_stadium(double r, double D) {
    double L = D / 2.0;
    if (r <= 0) return closed_segment(D);
    double q = std::sqrt(std::max(0.0, L * L - r * r));
    double A = 2.0 * r * r * std::asin(std::min(1.0, r / L)) + 2.0 * r * q;
    double p = 4.0 * q + 4.0 * r * std::asin(std::min(1.0, r / L));
    return {A, p, r, L, D, 2.0 * r};
}

Closed closed_cap_cone(double w, double R) {
    double rc = w - R;
    if (rc <= 0) {
        // apex-to-origin segment
        return {0.0, 2.0 * R, 0.0, R / 2.0, R, 0.0};
    }
    double q = std::sqrt(std::max(0.0, R * R - rc * rc));
    double A = (kPi - std::acos(std::clamp(rc / R, -1.0, 1.0))) * rc * rc + rc * q;
    double p = 2.0 * q + 2.0 * rc * (kPi - std::acos(std::clamp(rc / R, -1.0, 1.0)));
    return {A, p, rc, w / 2.0, w, 2.0 * rc};
}

Closed closed_sharp_isosceles(double w, double r) {
    double wb = w / r;
    double a = std::sqrt(wb / (4.0 - wb));
    double h = wb / (wb - 2.0);
    double A = a * h;
    double leg = std::sqrt(a * a + h * h);
    double p = 2.0 * a + 2.0 * leg;
    double Rc = leg * leg / (2.0 * h);
    Closed c{A * r * r, p * r, r, Rc * r, leg * r, w};
    c.circumcenter = {0.0, (h - 1.0 - Rc) * r};
    return c;
}

}  // namespace

BodySpec BodySpec::named(std::string family, std::map<std::string, double> p) {
    BodySpec s;
    s.name = std::move(family);
    s.params = std::move(p);
    return s;
}

BodySpec BodySpec::of(ArcGon body) {
    BodySpec s;
    s.raw = std::move(body);
    return s;
}

std::string BodySpec::id() const {
    if (is_raw()) return "raw";
    std::ostringstream os;
    os << name << "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    os << ")";
    return os.str();
}

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> fams = {
        "ball",        "segment",      "equilateral_triangle", "reuleaux_polygon",
        "reuleaux_triangle", "lens",   "slab_of_ball",         "stadium_hull",
        "cap_cone",    "two_point_ball", "sharp_isosceles"};
    return fams;
}

ArcGon construct(const BodySpec& spec) {
    if (spec.is_raw()) {
        if (!spec.raw) throw std::invalid_argument("raw spec without a body");
        return *spec.raw;
    }
    const std::string& f = spec.name;
    if (f == "ball") {
        double rho = get_param(spec, "rho");
        if (!(rho > 0)) bound_error(f, "rho > 0");
        return make_disk({0, 0}, rho);
    }
    if (f == "segment") {
        double len = get_param(spec, "len");
        if (!(len > 0)) bound_error(f, "len > 0");
        return make_segment(len);
    }
    if (f == "equilateral_triangle") {
        auto r = maybe_param(spec, "r");
        auto R = maybe_param(spec, "R");
        double Rc = R ? *R : (r ? 2.0 * *r : 0.0);
        if (!(Rc > 0)) bound_error(f, "r > 0 or R > 0");
        return make_equilateral(Rc);
    }
    if (f == "reuleaux_polygon")
        return make_reuleaux(static_cast<int>(std::lround(get_param(spec, "k"))), get_param(spec, "width"));
    if (f == "reuleaux_triangle") return make_reuleaux(3, get_param(spec, "width"));
    if (f == "lens") return make_lens(get_param(spec, "D"), get_param(spec, "phi"));
    if (f == "slab_of_ball") return make_slab(get_param(spec, "w"), get_param(spec, "R"));
    if (f == "stadium_hull") return make_stadium(get_param(spec, "r"), get_param(spec, "D"));
    if (f == "cap_cone") return make_cap_cone(get_param(spec, "w"), get_param(spec, "R"));
    if (f == "two_point_ball") return make_stadium(get_param(spec, "r"), 2.0 * get_param(spec, "R"));
    if (f == "sharp_isosceles") return make_sharp_isosceles(get_param(spec, "w"), get_param(spec, "r"));
    throw std::invalid_argument("unknown body family: " + f);
}

ClosedFormValues closed_form(const BodySpec& spec) {
    if (spec.is_raw()) throw std::invalid_argument("no closed form");
    Closed c{};
    std::string note;
    const std::string& f = spec.name;
    if (f == "ball") {
        c = closed_ball(get_param(spec, "rho"));
        note = "disk formulas";
    } else if (f == "segment") {
        c = closed_segment(get_param(spec, "len"));
        note = "degenerate segment conventions";
    } else if (f == "equilateral_triangle") {
        auto r = maybe_param(spec, "r");
        auto R = maybe_param(spec, "R");
        c = closed_equilateral(r ? *r : *R / 2.0);
        note = "equilateral triangle geometry";
    } else if (f == "reuleaux_polygon" || f == "reuleaux_triangle") {
        int k = (f == "reuleaux_triangle") ? 3 : static_cast<int>(std::lround(get_param(spec, "k")));
        c = closed_reuleaux(k, get_param(spec, "width"));
        note = "Reuleaux polygon geometry (Barbier perimeter)";
    } else if (f == "lens") {
        c = closed_lens(get_param(spec, "D"), get_param(spec, "phi"));
        note = "symmetric lens: two circular segments";
    } else if (f == "slab_of_ball") {
        c = closed_slab(get_param(spec, "w"), get_param(spec, "R"));
        note = "disk cut by a symmetric slab";
    } else if (f == "stadium_hull") {
        c = closed_stadium(get_param(spec, "r"), get_param(spec, "D"));
        note = "hull of a segment and a concentric disk";
    } else if (f == "two_point_ball") {
        c = closed_stadium(get_param(spec, "r"), 2.0 * get_param(spec, "R"));
        note = "hull of two mirrored points and a disk";
    } else if (f == "cap_cone") {
        c = closed_cap_cone(get_param(spec, "w"), get_param(spec, "R"));
        note = "hull of a boundary point and a concentric disk";
    } else if (f == "sharp_isosceles") {
        c = closed_sharp_isosceles(get_param(spec, "w"), get_param(spec, "r"));
        note = "isosceles triangle with two longer equal edges";
    } else {
        throw std::invalid_argument("unknown body family: " + f);
    }

    ClosedFormValues out;
    out.values.A = c.A;
    out.values.p = c.p;
    out.values.r = c.r;
    out.values.R = c.R;
    out.values.D = c.D;
    out.values.w = c.w;
    out.values.incenter = c.incenter;
    out.values.circumcenter = c.circumcenter;
    out.values.degenerate = (c.w == 0.0);
    out.closed_fields = {"A", "p", "r", "R", "D", "w"};
    for (const std::string& fld : out.closed_fields) out.provenance[fld] = note;
    return out;
}

FunctionalVector evaluate_all(const BodySpec& spec, const ToleranceConfig& tol) {
    ArcGon body = construct(spec);
    FunctionalVector numeric = evaluate_all(body, tol);
    if (spec.is_raw()) return numeric;

    ClosedFormValues cf = closed_form(spec);
    auto check = [&](const char* fld, double closed, double num) {
        double lim = 10.0 * tol.abs_tol * std::max(1.0, std::abs(closed));
        if (std::abs(closed - num) > lim)
            throw std::runtime_error(spec.id() + ": closed form and numeric evaluation disagree on " +
                            fld + " (" + std::to_string(closed) + " vs " + std::to_string(num) + ")");
    };
    check("A", cf.values.A, numeric.A);
    check("p", cf.values.p, numeric.p);
    check("r", cf.values.r, numeric.r);
    check("R", cf.values.R, numeric.R);
    check("D", cf.values.D, numeric.D);
    check("w", cf.values.w, numeric.w);

    FunctionalVector out = numeric;
    out.A = cf.values.A;
    out.p = cf.values.p;
    out.r = cf.values.r;
    out.R = cf.values.R;
    out.D = cf.values.D;
    out.w = cf.values.w;
    out.err = FunctionalErrors{};  // closed forms: error zero markers
    return out;
}

std::vector<WitnessFamily> witnesses_for(const std::string& id) {
    auto fixed = [](const std::string& family, std::map<std::string, double> params, const std::string& desc) {
        WitnessFamily w;
        w.description = desc;
        w.make = [family, params](double) { return BodySpec::named(family, params); };
        w.t0 = w.t1 = 0.0;
        return w;
    };
    auto ranged = [](const std::string& desc, double t0, double t1, bool open_left,
                     std::function<BodySpec(double)> make) {
        WitnessFamily w;
        w.description = desc;
        w.make = std::move(make);
        w.t0 = t0;
        w.t1 = t1;
        w.open_left = open_left;
        return w;
    };

    const WitnessFamily ball = fixed("ball", {{"rho", 1.0}}, "unit ball");
    const WitnessFamily tri = fixed("equilateral_triangle", {{"r", 1.0}}, "equilateral triangle");
    const WitnessFamily seg = fixed("segment", {{"len", 2.0}}, "segment");
    const WitnessFamily rt = fixed("reuleaux_triangle", {{"width", 2.0}}, "Reuleaux triangle");

    const WitnessFamily slab = ranged("slab_of_ball(w), w in [0,2]", 0.0, 2.0, false, [](double w) {
        return BodySpec::named("slab_of_ball", {{"w", w}, {"R", 1.0}});
    });
    const WitnessFamily stadium = ranged("stadium_hull(r), r in [0,1], D=2", 0.0, 1.0, false, [](double r) {
        return BodySpec::named("stadium_hull", {{"r", r}, {"D", 2.0}});
    });
    const WitnessFamily tpb = ranged("two_point_ball(r,1), r in [0,1]", 0.0, 1.0, false, [](double r) {
        return BodySpec::named("two_point_ball", {{"r", r}, {"R", 1.0}});
    });
    const WitnessFamily isos = ranged("sharp_isosceles(w,1), w in (2,3]", 2.0, 3.0, true, [](double w) {
        return BodySpec::named("sharp_isosceles", {{"w", w}, {"r", 1.0}});
    });
    const WitnessFamily lens = ranged("lens(2,phi), phi in (0,pi/2]", 0.0, kPi / 2.0, true, [](double phi) {
        return BodySpec::named("lens", {{"D", 2.0}, {"phi", phi}});
    });

    static const std::map<std::string, int> no_claim = {
        {"UB_pDr_2", 0}, {"Arw_nonsharp_1", 0}};

    if (no_claim.count(id)) return {};

    if (id == "isoperimetric" || id == "area_r_ball" || id == "area_R_ball" || id == "p_r_lower" ||
        id == "pR_upper" || id == "steinhagen_lower" || id == "w_2R" || id == "ARw_LOWER")
        return {ball};
    if (id == "pal" || id == "steinhagen_upper" || id == "ApDKubota3" || id == "Arw_nonsharp_2" ||
        id == "prw_nonsharp")
        return {tri};
    if (id == "blaschke_lebesgue" || id == "cw_Rr" || id == "steinhagen_cw") return {rt};
    if (id == "pD_lower" || id == "pR_lower" || id == "pDrHenk" || id == "LB_pRw" || id == "ARw_old_upper")
        return {seg};
    if (id == "pD_upper" || id == "pw") return {ball, rt};
    if (id == "jung") return {tri, rt};
    if (id == "concentricity_lower" || id == "concentricity_upper") return {ball, rt};
    if (id == "LW_pRr") return {tpb};
    if (id == "UB_pDw_2") return {slab};
    if (id == "ApDKubota") return {lens};
    if (id == "ApDKubota2") return {isos};
    if (id == "LB_prD") return {stadium};
    if (id == "pRw_NEW" || id == "ARw_NEW_UPPER") return {slab};
    if (id == "ARw_old_lower") return {tri, seg};
    if (id == "Arw_upper" || id == "prw_upper") return {isos};
    if (id == "Arw_lower" || id == "prw_lower") return {ball, tri};
    throw std::invalid_argument("unknown inequality id: " + id);
}

}  // namespace santalo

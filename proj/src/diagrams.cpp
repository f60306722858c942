#include "santalo/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "santalo/bodies.hpp"
#include "santalo/inequalities.hpp"

namespace santalo {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Marker {
    const char* label;
    double x, y;
};

std::vector<Marker> special_markers(DiagramName name) {
    switch (name) {
        case DiagramName::ApD:
            return {{"B", kPi, kPi / 4.0}, {"RT", kPi, (kPi - kSqrt3) / 2.0}, {"T", 3.0, kSqrt3 / 4.0}, {"L", 2.0, 0.0}};
        case DiagramName::pDr:
            return {{"B", 0.5, kPi}, {"RT", 1.0 - 1.0 / kSqrt3, kPi}, {"L", 0.0, 2.0}};
        case DiagramName::pRw:
            return {{"B", 2.0, 2.0 * kPi}, {"RT", kSqrt3, kSqrt3 * kPi}, {"L", 0.0, 4.0}};
        case DiagramName::ARw:
            return {{"B", 2.0, kPi}, {"T", 1.5, 3.0 * kSqrt3 / 4.0}, {"L", 0.0, 0.0}};
        case DiagramName::Arw:
            return {{"B", 2.0, kPi}, {"T", 3.0, 3.0 * kSqrt3}};
        case DiagramName::prw:
            return {{"B", 2.0, 2.0 * kPi},
                    {"T", 3.0, 6.0 * kSqrt3},
                    {"RT", (3.0 + kSqrt3) / 2.0, kPi * (3.0 + kSqrt3) / 2.0}};
    }
    return {};
}

// Ranged witness families whose image sweeps the diagram's proven boundary.
std::vector<WitnessFamily> boundary_families(DiagramName name) {
    switch (name) {
        case DiagramName::ApD: {
            auto fams = witnesses_for("ApDKubota");
            auto isos = witnesses_for("ApDKubota2");
            fams.insert(fams.end(), isos.begin(), isos.end());
            return fams;
        }
        case DiagramName::pDr:
            return witnesses_for("LB_prD");
        case DiagramName::pRw:
            return witnesses_for("pRw_NEW");
        case DiagramName::ARw:
            return witnesses_for("ARw_NEW_UPPER");
        case DiagramName::Arw:
            return witnesses_for("Arw_upper");
        case DiagramName::prw:
            return witnesses_for("prw_upper");
    }
    return {};
}

}  // namespace

std::string to_string(DiagramName name) {
    switch (name) {
        case DiagramName::ApD: return "ApD";
        case DiagramName::pDr: return "pDr";
        case DiagramName::pRw: return "pRw";
        case DiagramName::ARw: return "ARw";
        case DiagramName::Arw: return "Arw";
        case DiagramName::prw: return "prw";
    }
    return "?";
}

DiagramName diagram_from_string(const std::string& name) {
    for (DiagramName d : {DiagramName::ApD, DiagramName::pDr, DiagramName::pRw, DiagramName::ARw,
                          DiagramName::Arw, DiagramName::prw})
        if (to_string(d) == name) return d;
    throw std::invalid_argument("unknown diagram name: " + name);
}

DiagramSpec diagram_spec(DiagramName name) {
    DiagramSpec s;
    s.name = name;
    const CurveStyle proven = CurveStyle::proven_boundary;
    const CurveStyle valid = CurveStyle::valid_bound;
    switch (name) {
        case DiagramName::ApD:
            s.x_label = "p/D";
            s.y_label = "A/D^2";
            s.x_min = 2.0;
            s.x_max = kPi;
            s.y_render_cap = 1.0;
            s.curve_refs = {{"ApDKubota", proven}, {"ApDKubota2", proven}, {"pD_upper", proven},
                            {"ApDKubota3", valid}, {"pD_lower", valid},   {"isoperimetric", valid}};
            break;
        case DiagramName::pDr:
            s.x_label = "r/D";
            s.y_label = "p/D";
            s.x_min = 0.0;
            s.x_max = 0.5;
            s.y_render_cap = 4.2;
            s.curve_refs = {{"pD_upper", proven}, {"LB_prD", proven}, {"UB_pDr_2", valid},
                            {"pDrHenk", valid},   {"pD_lower", valid}};
            break;
        case DiagramName::pRw:
            s.x_label = "w/R";
            s.y_label = "p/R";
            s.x_min = 0.0;
            s.x_max = 2.0;
            s.y_render_cap = 6.9;
            s.curve_refs = {{"pRw_NEW", proven}, {"pw", proven}, {"LB_pRw", valid},
                            {"pR_upper", valid}, {"pR_lower", valid}};
            break;
        case DiagramName::ARw:
            s.x_label = "w/R";
            s.y_label = "A/R^2";
            s.x_min = 0.0;
            s.x_max = 2.0;
            s.y_render_cap = 4.2;
            s.curve_refs = {{"ARw_NEW_UPPER", proven}, {"ARw_LOWER", valid}, {"ARw_old_lower", valid},
                            {"ARw_old_upper", valid}};
            break;
        case DiagramName::Arw:
            s.x_label = "w/r";
            s.y_label = "A/r^2";
            s.x_min = 2.0;
            s.x_max = 3.0;
            s.y_render_cap = 26.0;
            s.curve_refs = {{"steinhagen_lower", proven}, {"Arw_upper", proven}, {"Arw_nonsharp_1", valid},
                            {"Arw_nonsharp_2", valid},    {"Arw_lower", valid}};
            break;
        case DiagramName::prw:
            s.x_label = "w/r";
            s.y_label = "p/r";
            s.x_min = 2.0;
            s.x_max = 3.0;
            s.y_render_cap = 44.0;
            s.curve_refs = {{"steinhagen_lower", proven}, {"prw_upper", proven}, {"prw_nonsharp", valid},
                            {"pw", proven},               {"prw_lower", valid}};
            break;
    }
    return s;
}

std::pair<double, double> map_point(const DiagramSpec& spec, const FunctionalVector& fv) {
    auto need = [](double denom) {
        if (!(denom > 0)) throw std::invalid_argument("degenerate body for this diagram");
    };
    switch (spec.name) {
        case DiagramName::ApD:
            need(fv.D);
            return {fv.p / fv.D, fv.A / (fv.D * fv.D)};
        case DiagramName::pDr:
            need(fv.D);
            return {fv.r / fv.D, fv.p / fv.D};
        case DiagramName::pRw:
            need(fv.R);
            return {fv.w / fv.R, fv.p / fv.R};
        case DiagramName::ARw:
            need(fv.R);
            return {fv.w / fv.R, fv.A / (fv.R * fv.R)};
        case DiagramName::Arw:
            need(fv.r);
            return {fv.w / fv.r, fv.A / (fv.r * fv.r)};
        case DiagramName::prw:
            need(fv.r);
            return {fv.w / fv.r, fv.p / fv.r};
    }
    throw std::logic_error("unreachable");
}

double curve_value(const DiagramSpec& spec, const std::string& id, double x) {
    switch (spec.name) {
        case DiagramName::ApD:
            if (id == "ApDKubota") {
                if (x <= 2.0) return 0.0;
                if (x > kPi) return kNaN;
                KubotaPhi k = solve_kubota_phi(x, 1.0);
                if (k.degenerate) return 0.0;
                return x * (x - 2.0 * std::cos(k.phi)) / (8.0 * k.phi);
            }
            if (id == "ApDKubota2") return (x >= 2.0 && x <= 3.0) ? (x - 2.0) * std::sqrt(std::max(0.0, 4.0 * x - x * x)) / 4.0 : kNaN;
            if (id == "ApDKubota3") return (x >= 3.0 && x <= kPi) ? kSqrt3 * (x - 2.0) / 4.0 : kNaN;
            if (id == "isoperimetric") return x * x / (4.0 * kPi);
            return kNaN;
        case DiagramName::pDr:
            if (x < 0.0 || x > 0.5 + 1e-12) return kNaN;
            if (id == "LB_prD") return 4.0 * x * std::asin(std::min(1.0, 2.0 * x)) + 2.0 * std::sqrt(std::max(0.0, 1.0 - 4.0 * x * x));
            if (id == "UB_pDr_2") return (3.0 * x <= 1.0) ? std::sqrt(4.0 - 9.0 * x * x) + 2.0 * std::asin(3.0 * x) : kNaN;
            if (id == "pDrHenk") return 2.0 + 4.0 * x;
            if (id == "pD_upper") return kPi;
            if (id == "pD_lower") return 2.0;
            return kNaN;
        case DiagramName::pRw:
            if (x < 0.0 || x > 2.0 + 1e-12) return kNaN;
            if (id == "pRw_NEW")
                return 2.0 * kPi + 2.0 * std::sqrt(std::max(0.0, 4.0 - x * x)) - 4.0 * std::acos(std::clamp(x / 2.0, -1.0, 1.0));
            if (id == "pw") return kPi * x;
            if (id == "LB_pRw")
                return 4.0 * (std::sqrt(std::max(0.0, 1.0 - x * x / 9.0)) + (x / 3.0) * std::asin(std::clamp(x / 3.0, -1.0, 1.0)));
            if (id == "pR_upper") return 2.0 * kPi;
            if (id == "pR_lower") return 4.0;
            return kNaN;
        case DiagramName::ARw:
            if (x < 0.0 || x > 2.0 + 1e-12) return kNaN;
            if (id == "ARw_NEW_UPPER")
                return kPi - 2.0 * std::acos(std::clamp(x / 2.0, -1.0, 1.0)) + x * std::sqrt(std::max(0.0, 1.0 - x * x / 4.0));
            if (id == "ARw_LOWER")
                return (kPi - std::acos(std::clamp(x - 1.0, -1.0, 1.0))) * (x - 1.0) * (x - 1.0) +
                       (x - 1.0) * std::sqrt(std::max(0.0, 2.0 * x - x * x));
            if (id == "ARw_old_lower") return (kSqrt3 / 2.0) * x;
            if (id == "ARw_old_upper") return 2.0 * x;
            return kNaN;
        case DiagramName::Arw:
            if (x < 2.0 || x > 3.0 + 1e-12) return kNaN;
            if (id == "Arw_upper") return (x > 2.0) ? std::pow(x, 1.5) / ((x - 2.0) * std::sqrt(4.0 - x)) : kNaN;
            if (id == "Arw_nonsharp_1") return (x > 2.0) ? x * x * x / (4.0 * (x - 2.0)) : kNaN;
            if (id == "Arw_nonsharp_2") return (x > 2.0) ? x * x / (kSqrt3 * (x - 2.0)) : kNaN;
            if (id == "Arw_lower")
                return kPi + 3.0 * (std::sqrt(std::max(0.0, x * x - 2.0 * x)) +
                                    std::asin(std::clamp(1.0 / (x - 1.0), -1.0, 1.0)) - kPi / 2.0);
            return kNaN;
        case DiagramName::prw:
            if (x < 2.0 || x > 3.0 + 1e-12) return kNaN;
            if (id == "prw_upper") return (x > 2.0) ? 2.0 * std::pow(x, 1.5) / ((x - 2.0) * std::sqrt(4.0 - x)) : kNaN;
            if (id == "prw_nonsharp") return (x > 2.0) ? 2.0 * x * x / (kSqrt3 * (x - 2.0)) : kNaN;
            if (id == "pw") return kPi * x;
            if (id == "prw_lower")
                return 6.0 * (std::sqrt(std::max(0.0, x * x - 2.0 * x)) +
                              std::asin(std::clamp(1.0 / (x - 1.0), -1.0, 1.0))) - kPi;
            return kNaN;
    }
    return kNaN;
}

std::vector<Curve> known_curves(const DiagramSpec& spec) {
    std::vector<Curve> out;
    const int grid = 257;
    for (const CurveRef& ref : spec.curve_refs) {
        Curve c;
        c.id = ref.ineq_id;
        c.style = ref.style;
        // Vertical boundary lines need explicit endpoints.
        if (spec.name == DiagramName::ApD && ref.ineq_id == "pD_upper") {
            c.polyline = {{kPi, (kPi - kSqrt3) / 2.0}, {kPi, kPi / 4.0}};
        } else if (spec.name == DiagramName::ApD && ref.ineq_id == "pD_lower") {
            c.polyline = {{2.0, 0.0}, {2.0, kPi / 4.0}};
        } else if ((spec.name == DiagramName::Arw || spec.name == DiagramName::prw) &&
                   ref.ineq_id == "steinhagen_lower") {
            double y0 = (spec.name == DiagramName::Arw) ? kPi : 2.0 * kPi;
            c.polyline = {{2.0, y0}, {2.0, spec.y_render_cap}};
        } else if (spec.name == DiagramName::pDr && ref.ineq_id == "pD_upper") {
            c.polyline = {{1.0 - 1.0 / kSqrt3, kPi}, {0.5, kPi}};
        } else {
            for (int i = 0; i < grid; ++i) {
                double x = spec.x_min + (spec.x_max - spec.x_min) * i / (grid - 1);
                double y = curve_value(spec, ref.ineq_id, x);
                if (std::isfinite(y) && y <= spec.y_render_cap) c.polyline.push_back({x, y});
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

ArcGon random_convex_polygon(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_convex_polygon requires n >= 3");
    std::mt19937_64 rng(detail::splitmix64(seed));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point2> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            double rr = std::sqrt(uni(rng));
            double th = 2.0 * kPi * uni(rng);
            pts.push_back({rr * std::cos(th), rr * std::sin(th)});
        }
        ArcGon hull = convex_hull(pts);
        if (hull.vertices.size() >= 3) return hull;
    }
    throw std::runtime_error("failed to generate a non-degenerate polygon");
}

namespace {

ArcGon minkowski_mix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nn(3, 25);
    std::uniform_real_distribution<double> lam(0.2, 0.8);
    ArcGon P = random_convex_polygon(nn(rng), rng());
    ArcGon Q = random_convex_polygon(nn(rng), rng());
    double l = lam(rng);
    std::vector<Point2> pts;
    pts.reserve(P.vertices.size() * Q.vertices.size());
    for (const Point2& p : P.vertices)
        for (const Point2& q : Q.vertices) pts.push_back(l * p + (1.0 - l) * q);
    return convex_hull(pts);
}

ArcGon perturbed_witness(const DiagramSpec& spec, std::mt19937_64& rng) {
    std::vector<WitnessFamily> fams = boundary_families(spec.name);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const WitnessFamily& fam = fams[rng() % fams.size()];
    double margin = fam.open_left ? 0.05 * (fam.t1 - fam.t0) : 0.0;
    // Stay away from degenerate family endpoints.
    double t = fam.t0 + margin + (fam.t1 - fam.t0 - margin) * (0.05 + 0.9 * uni(rng));
    ArcGon body = construct(fam.make(t));
    ArcGon poly = discretize(body, 1e-3);
    double scale = 0.0;
    for (const Point2& v : poly.vertices) scale = std::max(scale, norm(v));
    std::normal_distribution<double> jitter(0.0, 2e-3 * std::max(scale, 1e-9));
    std::vector<Point2> pts;
    for (const Point2& v : poly.vertices) pts.push_back({v.x + jitter(rng), v.y + jitter(rng)});
    ArcGon hull = convex_hull(pts);
    if (hull.vertices.size() < 3) return poly;
    return hull;
}

}  // namespace

PointCloud sample_cloud(const DiagramSpec& spec, GeneratorSet generators, int N, uint64_t seed) {
    if (N < 1) throw std::invalid_argument("N >= 1 required");
    std::vector<std::string> tags;
    if (generators.random_polygons) tags.push_back("random_polygons");
    if (generators.perturbed_witnesses) tags.push_back("perturbed_witnesses");
    if (generators.polygon_minkowski_mixes) tags.push_back("polygon_minkowski_mixes");
    if (tags.empty()) throw std::invalid_argument("no generators enabled");

    PointCloud cloud;
    cloud.rows.reserve(N);
    for (int i = 0; i < N; ++i) {
        const std::string& tag = tags[i % tags.size()];
        uint64_t s = detail::sub_seed(seed, static_cast<uint64_t>(i));
        std::mt19937_64 rng(s);
        ArcGon body;
        if (tag == "random_polygons") {
            body = random_convex_polygon(3 + static_cast<int>(rng() % 58), rng());
        } else if (tag == "perturbed_witnesses") {
            body = perturbed_witness(spec, rng);
        } else {
            body = minkowski_mix(rng);
        }
        FunctionalVector fv = evaluate_all(body);
        for (const SlackReport& rep : check_all(fv)) {
            if (rep.violation)
                throw std::runtime_error("catalog violation while sampling (" + rep.id +
                                         ", slack=" + std::to_string(rep.slack) + ")");
        }
        auto [x, y] = map_point(spec, fv);
        char idbuf[32];
        std::snprintf(idbuf, sizeof(idbuf), "%s-%06d", tag == "random_polygons" ? "rp" : (tag == "perturbed_witnesses" ? "wit" : "mix"), i);
        cloud.rows.push_back({x, y, idbuf, tag, s});
        cloud.bodies.push_back(std::move(body));
    }
    return cloud;
}

PushResult boundary_push(const DiagramSpec& spec, bool up, double x_target, int iterations, uint64_t seed) {
    if (x_target < spec.x_min - 1e-9 || x_target > spec.x_max + 1e-9)
        throw std::invalid_argument("infeasible x_target");

    std::mt19937_64 rng(detail::splitmix64(seed ^ 0xb0057ULL));
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const double x_tol = 1e-3;
    bool have_best = false;
    PushResult best;
    auto consider = [&](const ArcGon& body, const FunctionalVector& fv) {
        auto [x, y] = map_point(spec, fv);
        if (std::abs(x - x_target) > x_tol) return;
        if (!have_best || (up ? y > best.y : y < best.y)) {
            best = {body, x, y};
            have_best = true;
        }
    };

    // Witness seeds: bisect each boundary family to hit x_target, then score a
    // fine polygonal discretization.
    for (const WitnessFamily& fam : boundary_families(spec.name)) {
        double lo = fam.t0 + (fam.open_left ? 1e-9 : 0.0), hi = fam.t1;
        auto x_of = [&](double t) {
            FunctionalVector fv = evaluate_all(construct(fam.make(t)));
            return map_point(spec, fv).first;
        };
        double xlo, xhi;
        try {
            xlo = x_of(std::max(lo, fam.t0 + 1e-6 * (fam.t1 - fam.t0)));
            xhi = x_of(hi);
        } catch (const std::exception&) {
            continue;
        }
        if ((x_target < std::min(xlo, xhi) - 1e-6) || (x_target > std::max(xlo, xhi) + 1e-6)) continue;
        double a = std::max(lo, fam.t0 + 1e-6 * (fam.t1 - fam.t0)), b = hi;
        for (int i = 0; i < 70; ++i) {
            double mid = 0.5 * (a + b);
            double xm;
            try {
                xm = x_of(mid);
            } catch (const std::exception&) {
                a = mid;
                continue;
            }
            bool goRight = (xlo <= xhi) ? (xm < x_target) : (xm > x_target);
            (goRight ? a : b) = mid;
        }
        double t = 0.5 * (a + b);
        try {
            ArcGon fine = discretize(construct(fam.make(t)), 1e-7);
            consider(fine, evaluate_all(fine));
        } catch (const std::exception&) {
        }
    }

    // Annealing over small polygons.
    ArcGon state = random_convex_polygon(24, rng());
    if (have_best) {
        // Start from a coarse version of the best witness.
        ArcGon coarse = best.body;
        if (coarse.vertices.size() > 48) {
            std::vector<Point2> sub;
            size_t step = coarse.vertices.size() / 48;
            for (size_t i = 0; i < coarse.vertices.size(); i += step) sub.push_back(coarse.vertices[i]);
            coarse = convex_hull(sub);
        }
        state = coarse;
    }

    FunctionalVector sfv = evaluate_all(state);
    auto energy = [&](const FunctionalVector& fv) {
        auto [x, y] = map_point(spec, fv);
        double pen = 1e4 * std::max(0.0, std::abs(x - x_target) - x_tol);
        return (up ? -y : y) + pen;
    };
    double E = energy(sfv);
    consider(state, sfv);

    double T0 = 0.25, T1 = 1e-4;
    for (int it = 0; it < iterations; ++it) {
        double T = T0 * std::pow(T1 / T0, static_cast<double>(it) / std::max(1, iterations - 1));
        ArcGon prop = state;
        size_t vi = rng() % prop.vertices.size();
        std::normal_distribution<double> move(0.0, T * std::max(1e-6, sfv.D));
        prop.vertices[vi].x += move(rng);
        prop.vertices[vi].y += move(rng);
        ArcGon hull;
        try {
            hull = convex_hull(prop.vertices);
        } catch (const std::exception&) {
            continue;
        }
        if (hull.vertices.size() < 3) continue;
        FunctionalVector fv;
        try {
            fv = evaluate_all(hull);
        } catch (const std::exception&) {
            continue;
        }
        double En = energy(fv);
        if (En <= E || uni(rng) < std::exp(-(En - E) / std::max(T, 1e-12))) {
            state = hull;
            sfv = fv;
            E = En;
            consider(state, fv);
        }
    }

    if (!have_best) throw std::runtime_error("no feasible body found near x_target");

    // The result must respect every proven curve of this diagram.
    FunctionalVector bfv = evaluate_all(best.body);
    for (const SlackReport& rep : check_all(bfv))
        if (rep.violation) throw std::runtime_error("boundary_push produced a violating body: " + rep.id);
    return best;
}

std::string export_csv(const PointCloud& cloud) {
    std::ostringstream os;
    os << "x,y,body_id,generator_tag,seed\n";
    for (const CloudRow& r : cloud.rows)
        os << fmt17(r.x) << "," << fmt17(r.y) << "," << r.body_id << "," << r.generator_tag << "," << r.seed
           << "\n";
    return os.str();
}

PointCloud import_csv(const std::string& text) {
    PointCloud cloud;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("x,y,", 0) == 0) continue;
        }
        std::istringstream ls(line);
        std::string fx, fy, fid, ftag, fseed;
        std::getline(ls, fx, ',');
        std::getline(ls, fy, ',');
        std::getline(ls, fid, ',');
        std::getline(ls, ftag, ',');
        std::getline(ls, fseed, ',');
        CloudRow r;
        r.x = std::stod(fx);
        r.y = std::stod(fy);
        r.body_id = fid;
        r.generator_tag = ftag;
        r.seed = std::stoull(fseed);
        cloud.rows.push_back(std::move(r));
    }
    return cloud;
}

std::string render_svg(const DiagramSpec& spec, const PointCloud& cloud, const std::vector<Curve>& curves) {
    const double W = 860, H = 640, ML = 72, MR = 160, MT = 46, MB = 56;
    double xlo = spec.x_min, xhi = spec.x_max;
    double ylo = std::numeric_limits<double>::infinity(), yhi = -ylo;
    for (const Curve& c : curves)
        for (auto [x, y] : c.polyline) {
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    for (const CloudRow& r : cloud.rows) {
        ylo = std::min(ylo, r.y);
        yhi = std::max(yhi, r.y);
    }
    for (const Marker& m : special_markers(spec.name)) {
        ylo = std::min(ylo, m.y);
        yhi = std::max(yhi, m.y);
    }
    if (!(yhi > ylo)) {
        ylo = 0;
        yhi = 1;
    }
    double ypad = 0.05 * (yhi - ylo);
    ylo -= ypad;
    yhi += ypad;
    double xpad = 0.03 * (xhi - xlo);
    xlo -= xpad;
    xhi += xpad;

    auto px = [&](double x) { return ML + (x - xlo) / (xhi - xlo) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ylo) / (yhi - ylo) * (H - MT - MB); };

    static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#9a7d0a", "#7d3c98", "#b9770e", "#148f77"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << ML << "\" y=\"24\" font-size=\"17\" font-family=\"sans-serif\">(" << spec.x_label
       << ", " << spec.y_label << ") diagram";
    if (spec.name == DiagramName::pDr) os << " &#8212; x = r/D, y = p/D (figure-caption convention)";
    os << "</text>\n";

    // axes + ticks
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 6; ++i) {
        double x = xlo + (xhi - xlo) * i / 6.0;
        double y = ylo + (yhi - ylo) * i / 6.0;
        os << "<line x1=\"" << px(x) << "\" y1=\"" << H - MB << "\" x2=\"" << px(x) << "\" y2=\"" << H - MB + 5
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px(x) << "\" y=\"" << H - MB + 20
           << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" << fmt3(x) << "</text>\n";
        os << "<line x1=\"" << ML - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << ML << "\" y2=\"" << py(y)
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ML - 9 << "\" y=\"" << py(y) + 4
           << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">" << fmt3(y) << "</text>\n";
    }
    os << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 14
       << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\">" << spec.x_label << "</text>\n";
    os << "<text x=\"20\" y=\"" << (MT + H - MB) / 2
       << "\" font-size=\"14\" font-family=\"sans-serif\" transform=\"rotate(-90 20 " << (MT + H - MB) / 2 << ")\">"
       << spec.y_label << "</text>\n";

    // cloud
    for (const CloudRow& r : cloud.rows) {
        if (r.y > yhi || r.y < ylo) continue;
        os << "<circle cx=\"" << px(r.x) << "\" cy=\"" << py(r.y)
           << "\" r=\"1.4\" fill=\"#4682b4\" fill-opacity=\"0.55\"/>\n";
    }

    // curves + legend
    int ci = 0;
    for (const Curve& c : curves) {
        const char* color = palette[ci % 7];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\"";
        if (c.style == CurveStyle::valid_bound) os << " stroke-dasharray=\"7,5\"";
        os << " points=\"";
        for (auto [x, y] : c.polyline) os << px(x) << "," << py(std::min(y, yhi)) << " ";
        os << "\"/>\n";
        double ly = MT + 18 + 18 * ci;
        os << "<line x1=\"" << W - MR + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - MR + 40 << "\" y2=\"" << ly
           << "\" stroke=\"" << color << "\" stroke-width=\"2\""
           << (c.style == CurveStyle::valid_bound ? " stroke-dasharray=\"7,5\"" : "") << "/>\n";
        os << "<text x=\"" << W - MR + 46 << "\" y=\"" << ly + 4
           << "\" font-size=\"11\" font-family=\"sans-serif\">" << c.id << "</text>\n";
        ++ci;
    }

    // special bodies as labeled markers
    for (const Marker& m : special_markers(spec.name)) {
        os << "<rect x=\"" << px(m.x) - 3 << "\" y=\"" << py(m.y) - 3
           << "\" width=\"6\" height=\"6\" transform=\"rotate(45 " << px(m.x) << " " << py(m.y)
           << ")\" fill=\"black\"/>\n";
        os << "<text x=\"" << px(m.x) + 7 << "\" y=\"" << py(m.y) - 6
           << "\" font-size=\"12\" font-family=\"sans-serif\" font-weight=\"bold\">" << m.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace santalo

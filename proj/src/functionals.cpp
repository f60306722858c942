#include "santalo/functionals.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lp_seidel.hpp"

namespace santalo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::Feature;

void require_valid(const ArcGon& body) {
    ValidationReport rep = validate_arcgon(body);
    if (!rep.ok) throw std::invalid_argument("invalid arc-gon: " + rep.violations.front());
}

double body_scale(const ArcGon& body) {
    double s = 0.0;
    for (const Point2& v : body.vertices) s = std::max(s, std::abs(v.x) + std::abs(v.y));
    for (const auto& a : body.arcs)
        if (a) s = std::max(s, std::abs(a->center.x) + std::abs(a->center.y) + a->radius);
    return std::max(s, 1e-30);
}

double arc_span_of(const ArcGon& body, int i) {
    const Arc& a = *body.arcs[i];
    if (a.full_circle) return kTwoPi;
    int n = static_cast<int>(body.vertices.size());
    Point2 s = body.vertices[i] - a.center;
    Point2 e = body.vertices[(i + 1) % n] - a.center;
    double a0 = std::atan2(s.y, s.x);
    return detail::ccw_delta(a0, std::atan2(e.y, e.x));
}

// Farthest point of a feature from z; arcs whose analytic maximizer falls
// outside their span report not_attained (their endpoints are vertex features).
struct Farthest {
    double value = -kInf;
    Point2 point;
    bool attained = false;
};

Farthest feature_farthest(const Feature& f, Point2 z) {
    Farthest out;
    if (!f.is_arc) {
        out.value = dist(f.p, z);
        out.point = f.p;
        out.attained = true;
        return out;
    }
    double L = dist(f.p, z);
    if (L <= 1e-13 * std::max(1.0, f.radius)) {
        double mid = f.a0 + (f.a1 - f.a0) / 2.0;
        out.value = f.radius + L;
        out.point = f.p + f.radius * UnitVector2::from_angle(mid).as_point();
        out.attained = true;
        return out;
    }
    Point2 dir = (1.0 / L) * (f.p - z);
    double t = std::atan2(dir.y, dir.x);
    if (f.full || detail::angle_in_span(t, f.a0, f.a1)) {
        out.value = L + f.radius;
        out.point = f.p + f.radius * dir;
        out.attained = true;
    }
    return out;
}

double farthest_distance(const std::vector<Feature>& feats, Point2 z) {
    double best = -kInf;
    for (const Feature& f : feats) {
        Farthest fa = feature_farthest(f, z);
        if (fa.attained) best = std::max(best, fa.value);
    }
    return best;
}

struct Circle {
    Point2 c;
    double r = 0.0;
};

Circle circle_two(Point2 a, Point2 b) { return {0.5 * (a + b), 0.5 * dist(a, b)}; }

bool circumcircle(Point2 a, Point2 b, Point2 c, Circle& out) {
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    double scale = std::abs(a.x) + std::abs(a.y) + std::abs(b.x) + std::abs(b.y) + std::abs(c.x) + std::abs(c.y) + 1.0;
    if (std::abs(d) < 1e-14 * scale * scale) return false;
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    out.c = {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
             (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    out.r = std::max({dist(out.c, a), dist(out.c, b), dist(out.c, c)});
    return true;
}

struct Welzl {
    Circle circle;
    std::vector<Point2> support;
};

bool in_circle(const Circle& c, Point2 p) { return dist(c.c, p) <= c.r * (1.0 + 1e-12) + 1e-14; }

// Randomized incremental minimal enclosing circle (move-to-front flavour).
Welzl minimal_enclosing_circle(std::vector<Point2> pts, uint64_t seed = 0x31415926ULL) {
    Welzl w;
    if (pts.empty()) return w;
    if (pts.size() == 1) {
        w.circle = {pts[0], 0.0};
        w.support = {pts[0]};
        return w;
    }
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);

    w.circle = circle_two(pts[0], pts[1]);
    w.support = {pts[0], pts[1]};
    for (size_t i = 2; i < pts.size(); ++i) {
        if (in_circle(w.circle, pts[i])) continue;
        w.circle = circle_two(pts[i], pts[0]);
        w.support = {pts[i], pts[0]};
        for (size_t j = 1; j < i; ++j) {
            if (in_circle(w.circle, pts[j])) continue;
            w.circle = circle_two(pts[i], pts[j]);
            w.support = {pts[i], pts[j]};
            for (size_t k = 0; k < j; ++k) {
                if (in_circle(w.circle, pts[k])) continue;
                Circle c3;
                if (circumcircle(pts[i], pts[j], pts[k], c3)) {
                    w.circle = c3;
                    w.support = {pts[i], pts[j], pts[k]};
                } else {
                    // Collinear triple: widest diametral pair.
                    Circle best = circle_two(pts[i], pts[j]);
                    std::vector<Point2> sup = {pts[i], pts[j]};
                    if (dist(pts[i], pts[k]) > 2.0 * best.r) {
                        best = circle_two(pts[i], pts[k]);
                        sup = {pts[i], pts[k]};
                    }
                    if (dist(pts[j], pts[k]) > 2.0 * best.r) {
                        best = circle_two(pts[j], pts[k]);
                        sup = {pts[j], pts[k]};
                    }
                    w.circle = best;
                    w.support = sup;
                }
            }
        }
    }
    return w;
}

// Barycentric test: is q inside (or within tol of) triangle abc?
bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c, double tol) {
    double d = cross(b - a, c - a);
    if (std::abs(d) < 1e-300) return false;
    double l1 = cross(b - q, c - q) / d;
    double l2 = cross(c - q, a - q) / d;
    double l3 = cross(a - q, b - q) / d;
    return l1 >= -tol && l2 >= -tol && l3 >= -tol;
}

double point_segment_distance(Point2 z, Point2 a, Point2 b, Point2* nearest = nullptr) {
    Point2 ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0 ? std::clamp(dot(z - a, ab) / len2, 0.0, 1.0) : 0.0;
    Point2 q = a + t * ab;
    if (nearest) *nearest = q;
    return dist(z, q);
}

}  // namespace

double area(const ArcGon& body) {
    require_valid(body);
    if (body.is_disk()) {
        double r = body.arcs[0]->radius;
        return kPi * r * r;
    }
    const int n = static_cast<int>(body.vertices.size());
    double a = 0.0;
    for (int i = 0; i < n; ++i) {
        Point2 p = body.vertices[i];
        Point2 q = body.vertices[(i + 1) % n];
        a += cross(p, q);
    }
    a /= 2.0;
    for (int i = 0; i < n; ++i) {
        if (!body.arcs[i]) continue;
        double span = arc_span_of(body, i);
        double r = body.arcs[i]->radius;
        a += r * r * (span - std::sin(span)) / 2.0;
    }
    return a;
}

double perimeter(const ArcGon& body) {
    require_valid(body);
    if (body.is_disk()) return kTwoPi * body.arcs[0]->radius;
    const int n = static_cast<int>(body.vertices.size());
    double p = 0.0;
    for (int i = 0; i < n; ++i) {
        if (body.arcs[i])
            p += body.arcs[i]->radius * arc_span_of(body, i);
        else
            p += dist(body.vertices[i], body.vertices[(i + 1) % n]);
    }
    return p;
}

DiameterResult diameter(const ArcGon& body) {
    require_valid(body);
    if (body.is_disk()) {
        const Arc& a = *body.arcs[0];
        return {2.0 * a.radius, a.center + a.radius * Point2{1, 0}, a.center - a.radius * Point2{1, 0}};
    }
    std::vector<Feature> feats = detail::boundary_features(body);
    std::vector<const Feature*> verts, arcs;
    for (const Feature& f : feats) (f.is_arc ? arcs : verts).push_back(&f);

    DiameterResult best;
    auto consider = [&best](double v, Point2 a, Point2 b) {
        if (v > best.value) best = {v, a, b};
    };

    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            consider(dist(verts[i]->p, verts[j]->p), verts[i]->p, verts[j]->p);

    for (const Feature* v : verts) {
        for (const Feature* a : arcs) {
            Farthest fa = feature_farthest(*a, v->p);
            if (fa.attained) consider(fa.value, v->p, fa.point);
        }
    }

    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            const Feature& f = *arcs[i];
            const Feature& g = *arcs[j];
            double d = dist(f.p, g.p);
            double rs = std::max(f.radius, g.radius);
            if (d > 1e-12 * rs) {
                Point2 df = (1.0 / d) * (f.p - g.p);
                double tf = std::atan2(df.y, df.x);
                double tg = std::atan2(-df.y, -df.x);
                if ((f.full || detail::angle_in_span(tf, f.a0, f.a1)) &&
                    (g.full || detail::angle_in_span(tg, g.a0, g.a1)))
                    consider(d + f.radius + g.radius, f.p + f.radius * df, g.p - g.radius * df);
            } else {
                // Concentric arcs: antipodal in-span pair, if any.
                for (double t : {f.a0, f.a1, g.a0 + kPi, g.a1 + kPi, f.a0 + (f.a1 - f.a0) / 2.0}) {
                    if (detail::angle_in_span(t, f.a0, f.a1) && detail::angle_in_span(t + kPi, g.a0, g.a1)) {
                        Point2 u = UnitVector2::from_angle(t).as_point();
                        consider(f.radius + g.radius + d, f.p + f.radius * u, g.p - g.radius * u);
                        break;
                    }
                }
            }
        }
    }
    return best;
}

WidthResult width(const ArcGon& body) {
    require_valid(body);
    if (body.is_disk()) return {2.0 * body.arcs[0]->radius, {1.0, 0.0}};

    std::vector<Feature> feats = detail::boundary_features(body);
    const int n = static_cast<int>(body.vertices.size());

    std::vector<double> events;
    auto push_event = [&events](double t) {
        t = std::fmod(t, kPi);
        if (t < 0) t += kPi;
        events.push_back(t);
    };
    for (int i = 0; i < n; ++i) {
        if (body.arcs[i]) {
            const Feature* fa = nullptr;
            for (const Feature& f : feats)
                if (f.is_arc && f.index == i) fa = &f;
            push_event(fa->a0);
            push_event(fa->a1);
        } else {
            Point2 d = body.vertices[(i + 1) % n] - body.vertices[i];
            push_event(std::atan2(d.y, d.x) - kPi / 2.0);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 events.end());
    if (!events.empty() && events.front() < 1e-12 && kPi - events.back() < 1e-12) events.pop_back();
    if (events.empty()) events.push_back(0.0);

    WidthResult best{kInf, {1.0, 0.0}};
    const size_t m = events.size();
    for (size_t k = 0; k < m; ++k) {
        double lo = events[k];
        double hi = (k + 1 < m) ? events[k + 1] : events[0] + kPi;
        double mid = 0.5 * (lo + hi);
        UnitVector2 um = UnitVector2::from_angle(mid);
        int fp = detail::support_feature(feats, um);
        int fm = detail::support_feature(feats, um.negated());
        if (fp < 0 || fm < 0) continue;
        const Feature& Fp = feats[fp];
        const Feature& Fm = feats[fm];
        double A = Fp.p.x - Fm.p.x;
        double B = Fp.p.y - Fm.p.y;
        double C = Fp.radius + Fm.radius;
        auto eval = [&](double t) { return A * std::cos(t) + B * std::sin(t) + C; };
        auto try_theta = [&](double t) {
            double v = eval(t);
            if (v < best.value) best = {v, UnitVector2::from_angle(t)};
        };
        try_theta(lo);
        try_theta(hi);
        double tstar = std::atan2(-B, -A);
        for (int kk = -1; kk <= 1; ++kk) {
            double t = tstar + kTwoPi * kk;
            if (t >= lo && t <= hi) try_theta(t);
        }
    }
    if (best.value < 0 && best.value > -1e-12) best.value = 0.0;
    return best;
}

CircumradiusResult circumradius(const ArcGon& body, const ToleranceConfig& tol) {
    require_valid(body);
    CircumradiusResult out;

    if (body.is_disk()) {
        const Arc& a = *body.arcs[0];
        out.radius = a.radius;
        out.center = a.center;
        out.certificate.points = {a.center + a.radius * Point2{1, 0}, a.center - a.radius * Point2{1, 0}};
        out.certificate.hull_contains_center = true;
        out.err = 0.0;
        return out;
    }

    const double scale = body_scale(body);
    ArcGon disc = discretize(body, std::min(tol.max_sagitta, 1e-6));
    Welzl wz = minimal_enclosing_circle(disc.vertices);
    double lower = wz.circle.r;  // inscribed points: valid lower bound

    std::vector<Feature> feats = detail::boundary_features(body);
    Point2 z = wz.circle.c;

    auto actives_at = [&](Point2 q, double window) {
        double F = farthest_distance(feats, q);
        std::vector<Point2> pts;
        for (const Feature& f : feats) {
            Farthest fa = feature_farthest(f, q);
            if (!fa.attained || fa.value < F - window) continue;
            bool dup = false;
            for (const Point2& p : pts)
                if (dist(p, fa.point) < 1e-11 * std::max(1.0, F)) dup = true;
            if (!dup) pts.push_back(fa.point);
        }
        return std::make_pair(F, pts);
    };

    if (body.is_polygon()) {
        out.center = wz.circle.c;
        out.radius = wz.circle.r;
        out.certificate.points = wz.support;
        out.err = 1e-12 * std::max(1.0, out.radius);
    } else {
        double bestF = farthest_distance(feats, z);
        Point2 bestZ = z;
        for (int iter = 0; iter < 300; ++iter) {
            auto [F, pts] = actives_at(z, std::max(1e-10 * bestF, 1e-13 * scale));
            if (F < bestF) {
                bestF = F;
                bestZ = z;
            }
            Point2 zn = z;
            if (pts.size() == 1) {
                zn = z + 0.5 * (pts[0] - z);
            } else if (pts.size() == 2) {
                zn = 0.5 * (pts[0] + pts[1]);
            } else {
                // farthest pair plus the point maximizing triangle area
                size_t ia = 0, ib = 1;
                double dmax = 0.0;
                for (size_t i = 0; i < pts.size(); ++i)
                    for (size_t j = i + 1; j < pts.size(); ++j)
                        if (dist(pts[i], pts[j]) > dmax) {
                            dmax = dist(pts[i], pts[j]);
                            ia = i;
                            ib = j;
                        }
                size_t ic = ia;
                double amax = -1.0;
                for (size_t i = 0; i < pts.size(); ++i) {
                    double ar = std::abs(cross(pts[ib] - pts[ia], pts[i] - pts[ia]));
                    if (i != ia && i != ib && ar > amax) {
                        amax = ar;
                        ic = i;
                    }
                }
                Circle c3;
                if (ic != ia && amax > 1e-14 * scale * scale && circumcircle(pts[ia], pts[ib], pts[ic], c3))
                    zn = c3.c;
                else
                    zn = 0.5 * (pts[ia] + pts[ib]);
            }
            if (dist(zn, z) < 1e-15 * scale) {
                z = zn;
                break;
            }
            z = zn;
        }
        double Ffin = farthest_distance(feats, z);
        if (Ffin < bestF) {
            bestF = Ffin;
            bestZ = z;
        }
        out.center = bestZ;
        out.radius = bestF;
        auto aw = actives_at(bestZ, std::max(1e-9 * bestF, 1e-12 * scale));
        out.certificate.points = aw.second;
    }

    // Trim the certificate to 2-3 points whose hull contains the center.
    auto& pts = out.certificate.points;
    double rtol = 1e-9 * std::max(1.0, out.radius);
    bool ok = false;
    if (pts.size() >= 2) {
        for (size_t i = 0; i < pts.size() && !ok; ++i)
            for (size_t j = i + 1; j < pts.size() && !ok; ++j)
                if (point_segment_distance(out.center, pts[i], pts[j]) <= rtol) {
                    out.certificate.points = {pts[i], pts[j]};
                    ok = true;
                }
    }
    if (!ok && pts.size() >= 3) {
        for (size_t i = 0; i < pts.size() && !ok; ++i)
            for (size_t j = i + 1; j < pts.size() && !ok; ++j)
                for (size_t k = j + 1; k < pts.size() && !ok; ++k)
                    if (point_in_triangle(out.center, pts[i], pts[j], pts[k], 1e-9)) {
                        out.certificate.points = {pts[i], pts[j], pts[k]};
                        ok = true;
                    }
    }
    out.certificate.hull_contains_center = ok;

    // Certified lower bound: Welzl on inscribed points, half the widest
    // touching-pair distance, and the circumcircle of a containing triple.
    for (size_t i = 0; i < out.certificate.points.size(); ++i)
        for (size_t j = i + 1; j < out.certificate.points.size(); ++j)
            lower = std::max(lower, 0.5 * dist(out.certificate.points[i], out.certificate.points[j]));
    if (ok && out.certificate.points.size() == 3) {
        Circle c3;
        if (circumcircle(out.certificate.points[0], out.certificate.points[1], out.certificate.points[2], c3))
            lower = std::max(lower, c3.r);
    }
    out.err = std::max(0.0, out.radius - lower) + 1e-13 * std::max(1.0, out.radius);
    return out;
}

InradiusResult inradius(const ArcGon& body, const ToleranceConfig& tol) {
    require_valid(body);
    InradiusResult out;

    if (body.is_segment()) {
        out.radius = 0.0;
        out.center = 0.5 * (body.vertices[0] + body.vertices[1]);
        out.err = 0.0;
        return out;
    }
    if (body.is_disk()) {
        const Arc& a = *body.arcs[0];
        out.radius = a.radius;
        out.center = a.center;
        out.touching_normals = {{1.0, 0.0}, {-1.0, 0.0}};
        out.err = 0.0;
        return out;
    }

    const int n = static_cast<int>(body.vertices.size());
    const double scale = body_scale(body);
    const double bound = 4.0 * scale + 1.0;

    std::vector<detail::LpConstraint> cons;
    auto add_halfplane = [&cons](UnitVector2 nrm, double offset) {
        detail::LpConstraint c;
        c.a = {nrm.ux, nrm.uy, 1.0};
        c.b = offset;
        cons.push_back(c);
    };

    std::vector<Feature> feats = detail::boundary_features(body);
    for (int i = 0; i < n; ++i) {
        if (body.arcs[i]) {
            const Feature* fa = nullptr;
            for (const Feature& f : feats)
                if (f.is_arc && f.index == i) fa = &f;
            double span = fa->a1 - fa->a0;
            int m = std::max(8, static_cast<int>(std::ceil(tol.direction_samples * span / kTwoPi)));
            for (int j = 0; j < m; ++j) {
                UnitVector2 nu = UnitVector2::from_angle(fa->a0 + span * (j + 0.5) / m);
                add_halfplane(nu, dot(fa->p, nu) + fa->radius);
            }
        } else {
            Point2 d = body.vertices[(i + 1) % n] - body.vertices[i];
            UnitVector2 nu = UnitVector2::of(d.y, -d.x);
            add_halfplane(nu, dot(body.vertices[i], nu));
        }
    }

    // Per-edge outward normal data and per-vertex normal cones, for the
    // signed clearance below.
    struct EdgeInfo {
        bool is_arc = false;
        UnitVector2 normal{1.0, 0.0};  // straight edge
        const Feature* arc = nullptr;
    };
    std::vector<EdgeInfo> edges(n);
    for (int i = 0; i < n; ++i) {
        if (body.arcs[i]) {
            edges[i].is_arc = true;
            for (const Feature& f : feats)
                if (f.is_arc && f.index == i) edges[i].arc = &f;
        } else {
            Point2 d = body.vertices[(i + 1) % n] - body.vertices[i];
            edges[i].normal = UnitVector2::of(d.y, -d.x);
        }
    }
    auto normal_angle_end = [&](int i) {  // outward normal at the end of edge i
        return edges[i].is_arc ? edges[i].arc->a1 : edges[i].normal.angle();
    };
    auto normal_angle_start = [&](int i) {
        return edges[i].is_arc ? edges[i].arc->a0 : edges[i].normal.angle();
    };

    // Signed clearance: min over all supporting halfplanes of h(n) - <z, n>,
    // grouped by feature. Equals the inball radius at interior z, goes
    // negative outside, and is concave along every line.
    auto boundary_gap = [&](Point2 z, std::vector<std::pair<UnitVector2, double>>* cuts, double window) {
        double best = kInf;
        std::vector<std::tuple<double, UnitVector2, double>> near;
        for (int i = 0; i < n; ++i) {
            double d;
            UnitVector2 nrm{1.0, 0.0};
            double off = 0.0;
            if (edges[i].is_arc) {
                const Feature* fa = edges[i].arc;
                Point2 rel = z - fa->p;
                double L = norm(rel);
                double t = std::atan2(rel.y, rel.x);
                if (L < 1e-14 * std::max(1.0, fa->radius) || detail::angle_in_span(t, fa->a0, fa->a1)) {
                    nrm = (L > 1e-14) ? UnitVector2::of(rel.x, rel.y)
                                      : UnitVector2::from_angle(fa->a0 + (fa->a1 - fa->a0) / 2.0);
                    d = fa->radius - L;
                } else {
                    UnitVector2 n0 = UnitVector2::from_angle(fa->a0);
                    UnitVector2 n1 = UnitVector2::from_angle(fa->a1);
                    double s0 = dot(fa->p - z, n0);
                    double s1 = dot(fa->p - z, n1);
                    nrm = (s0 < s1) ? n0 : n1;
                    d = fa->radius + std::min(s0, s1);
                }
                off = dot(fa->p, nrm) + fa->radius;
            } else {
                nrm = edges[i].normal;
                off = dot(body.vertices[i], nrm);
                d = off - dot(z, nrm);
            }
            best = std::min(best, d);
            near.emplace_back(d, nrm, off);
        }
        // Vertex cones only bind when z lies beyond the vertex (outside).
        for (int i = 0; i < n; ++i) {
            Point2 rel = z - body.vertices[i];
            double L = norm(rel);
            if (L < 1e-14) continue;
            double a0 = normal_angle_end((i + n - 1) % n);
            double span = detail::ccw_delta(a0, normal_angle_start(i));
            // A convex vertex turns by at most pi; larger spans are rounding
            // artifacts of smooth (tangent) junctions.
            if (span <= 1e-12 || span >= kPi + 1e-9) continue;
            double t = std::atan2(rel.y, rel.x);
            if (!detail::angle_in_span(t, a0, a0 + span)) continue;
            UnitVector2 nrm = UnitVector2::of(rel.x, rel.y);
            double off = dot(body.vertices[i], nrm);
            double d = -L;
            best = std::min(best, d);
            near.emplace_back(d, nrm, off);
        }
        if (cuts) {
            for (auto& [d, nrm, off] : near)
                if (d <= best + window) cuts->push_back({nrm, off});
        }
        return best;
    };

    // Dense binding sets (finely discretized arcs) carry thousands of nearly
    // identical normals; an angle-spread subset keeps the certificate search
    // quadratic while any subset combination stays a valid bound.
    auto spread_subset = [](std::vector<std::pair<UnitVector2, double>>& bind, size_t cap) {
        if (bind.size() <= cap) return;
        std::sort(bind.begin(), bind.end(),
                  [](const auto& a, const auto& b) { return a.first.angle() < b.first.angle(); });
        std::vector<std::pair<UnitVector2, double>> keep;
        for (size_t i = 0; i < cap; ++i) keep.push_back(bind[i * bind.size() / cap]);
        bind = std::move(keep);
    };

    // Duality certificate: a nonnegative combination of supporting-halfplane
    // normals summing to (nearly) zero bounds the inradius from above by the
    // matching combination of offsets. Returns +inf when the near-binding set
    // admits no such combination at this window.
    auto dual_upper_bound = [&](Point2 z, double window) {
        std::vector<std::pair<UnitVector2, double>> bind;
        boundary_gap(z, &bind, window);
        spread_subset(bind, 24);
        double best = kInf;
        const size_t m = bind.size();
        for (size_t i = 0; i < m; ++i) {
            Point2 ni = bind[i].first.as_point();
            for (size_t j = i + 1; j < m; ++j) {
                Point2 nj = bind[j].first.as_point();
                double resid = norm(ni + nj);
                if (resid < 0.1)  // the residual margin keeps the bound rigorous
                    best = std::min(best, (bind[i].second + bind[j].second) / 2.0 + resid * scale / 2.0);
                for (size_t k = j + 1; k < m; ++k) {
                    Point2 nk = bind[k].first.as_point();
                    double det = cross(ni, nj);
                    if (std::abs(det) < 1e-12) continue;
                    double l1 = cross(-1.0 * nk, nj) / det;
                    double l2 = cross(ni, -1.0 * nk) / det;
                    if (l1 < 1e-12 || l2 < 1e-12) continue;
                    best = std::min(best,
                                    (l1 * bind[i].second + l2 * bind[j].second + bind[k].second) / (l1 + l2 + 1.0));
                }
            }
        }
        return best;
    };

    // Steepest-ascent direction of the exact boundary distance: away from the
    // nearest point of the binding normals' convex hull.
    auto ascent_direction = [&](Point2 z, double window, double* mu) {
        std::vector<std::pair<UnitVector2, double>> bind;
        boundary_gap(z, &bind, window);
        spread_subset(bind, 24);
        Point2 nearest = bind.empty() ? Point2{1, 0} : bind[0].first.as_point();
        double dmin = norm(nearest);
        for (size_t i = 0; i < bind.size(); ++i) {
            Point2 ni = bind[i].first.as_point();
            if (norm(ni) < dmin) {
                dmin = norm(ni);
                nearest = ni;
            }
            for (size_t j = i + 1; j < bind.size(); ++j) {
                Point2 q;
                double dij = point_segment_distance({0, 0}, ni, bind[j].first.as_point(), &q);
                if (dij < dmin) {
                    dmin = dij;
                    nearest = q;
                }
            }
        }
        *mu = dmin;
        if (dmin < 1e-15) return Point2{0, 0};
        return (-1.0 / dmin) * nearest;
    };

    std::array<double, 3> obj{0.0, 0.0, 1.0};
    detail::LpResult lp = detail::lp_seidel(3, cons, obj, bound);
    if (!lp.feasible) throw std::runtime_error("inradius LP infeasible");
    Point2 z = {lp.x[0], lp.x[1]};
    double d = boundary_gap(z, nullptr, 0.0);
    double err = kInf;

    for (int iter = 0; iter < 60; ++iter) {
        // Certification windows from tight to loose; the looser the window
        // needed, the looser the certified error.
        err = kInf;
        for (double wnd : {1e-11 * scale, 1e-9 * scale, 1e-7 * scale, 1e-5 * scale}) {
            double ub = dual_upper_bound(z, wnd);
            if (ub < kInf) {
                err = std::max(0.0, ub - d);
                break;
            }
        }
        if (err <= 0.2 * tol.abs_tol * std::max(1.0, scale)) break;

        // Cut at the binding features and re-solve; accept the LP point only
        // when it verifiably improves the exact distance.
        std::vector<std::pair<UnitVector2, double>> cuts;
        boundary_gap(z, &cuts, std::max(err == kInf ? 1e-7 * scale : err, 1e-12 * scale));
        spread_subset(cuts, 48);
        for (auto& [nrm, off] : cuts) add_halfplane(nrm, off);
        lp = detail::lp_seidel(3, cons, obj, bound, 0x5eed5eedULL + iter);
        if (lp.feasible) {
            Point2 zl = {lp.x[0], lp.x[1]};
            double dl = boundary_gap(zl, nullptr, 0.0);
            if (dl > d) {
                z = zl;
                d = dl;
                continue;
            }
        }
        // LP made no progress: golden-section ascent along the certified
        // steepest direction (the distance is concave along any line).
        double mu = 0.0;
        Point2 u = ascent_direction(z, std::max(1e-12 * scale, 0.5 * (err == kInf ? 1e-9 * scale : err)), &mu);
        if (mu < 1e-15) break;
        double lo = 0.0, hi = 2.0 * scale;
        const double golden = 0.6180339887498949;
        double t1 = hi - golden * (hi - lo), t2 = lo + golden * (hi - lo);
        double f1 = boundary_gap(z + t1 * u, nullptr, 0.0);
        double f2 = boundary_gap(z + t2 * u, nullptr, 0.0);
        for (int gs = 0; gs < 120 && hi - lo > 1e-17 * scale; ++gs) {
            if (f1 < f2) {
                lo = t1;
                t1 = t2;
                f1 = f2;
                t2 = lo + golden * (hi - lo);
                f2 = boundary_gap(z + t2 * u, nullptr, 0.0);
            } else {
                hi = t2;
                t2 = t1;
                f2 = f1;
                t1 = hi - golden * (hi - lo);
                f1 = boundary_gap(z + t1 * u, nullptr, 0.0);
            }
        }
        double tbest = 0.5 * (lo + hi);
        double dbest = boundary_gap(z + tbest * u, nullptr, 0.0);
        if (dbest <= d + 1e-17 * scale) break;  // stalled; err stays honest
        z = z + tbest * u;
        d = dbest;
    }

    out.radius = d;
    out.center = z;
    out.err = err + 1e-13 * std::max(1.0, d);
    if (!std::isfinite(out.err)) out.err = scale;  // no certificate found; fully conservative

    std::vector<std::pair<UnitVector2, double>> touch;
    boundary_gap(z, &touch, std::max(2.0 * out.err, 1e-11 * std::max(1.0, d)));
    spread_subset(touch, 64);
    for (auto& [nrm, off] : touch) {
        bool dup = false;
        for (const UnitVector2& u : out.touching_normals)
            if (std::abs(u.ux - nrm.ux) + std::abs(u.uy - nrm.uy) < 1e-9) dup = true;
        if (!dup) out.touching_normals.push_back(nrm);
    }
    return out;
}

namespace detail {
double distance_to_boundary(const ArcGon& body, Point2 z) {
    const int n = static_cast<int>(body.vertices.size());
    if (body.is_disk()) return std::abs(body.arcs[0]->radius - dist(z, body.arcs[0]->center));
    std::vector<Feature> feats = boundary_features(body);
    double best = kInf;
    for (int i = 0; i < n; ++i) {
        if (body.arcs[i]) {
            const Feature* fa = nullptr;
            for (const Feature& f : feats)
                if (f.is_arc && f.index == i) fa = &f;
            Point2 rel = z - fa->p;
            double L = norm(rel);
            double t = std::atan2(rel.y, rel.x);
            if (L < 1e-14 || angle_in_span(t, fa->a0, fa->a1))
                best = std::min(best, std::abs(fa->radius - L));
            else
                best = std::min(best, std::min(dist(z, body.vertices[i]), dist(z, body.vertices[(i + 1) % n])));
        } else {
            best = std::min(best, point_segment_distance(z, body.vertices[i], body.vertices[(i + 1) % n]));
        }
    }
    return best;
}
}  // namespace detail

FunctionalVector evaluate_all(const ArcGon& body, const ToleranceConfig& tol) {
    require_valid(body);
    FunctionalVector fv;
    fv.degenerate = body.is_segment();

    fv.A = area(body);
    fv.p = perimeter(body);
    DiameterResult dia = diameter(body);
    fv.D = dia.value;
    fv.diameter_pair = {dia.a, dia.b};
    WidthResult wd = width(body);
    fv.w = wd.value;
    fv.width_direction = wd.direction;
    CircumradiusResult cr = circumradius(body, tol);
    fv.R = cr.radius;
    fv.circumcenter = cr.center;
    InradiusResult ir = inradius(body, tol);
    fv.r = ir.radius;
    fv.incenter = ir.center;

    double S = std::max(fv.D, 1e-30);
    fv.err.A = 1e-13 * std::max(fv.A, S * S * 1e-3);
    fv.err.p = 1e-13 * std::max(fv.p, S);
    fv.err.D = 1e-12 * S;
    fv.err.w = 1e-12 * S;
    fv.err.R = std::max(cr.err, 1e-13 * S);
    fv.err.r = std::max(ir.err, 1e-13 * S);
    return fv;
}

}  // namespace santalo

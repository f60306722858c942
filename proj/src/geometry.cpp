#include "santalo/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace santalo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

std::string fmt_idx(const char* what, int i) {
    return std::string(what) + " at index " + std::to_string(i);
}
}  // namespace

UnitVector2 UnitVector2::of(double x, double y) {
    double n = std::hypot(x, y);
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("zero or non-finite direction");
    return {x / n, y / n};
}

bool ArcGon::is_polygon() const {
    for (const auto& a : arcs)
        if (a) return false;
    return true;
}

bool ArcGon::is_segment() const { return vertices.size() == 2 && is_polygon(); }

bool ArcGon::is_disk() const {
    return vertices.size() == 1 && arcs.size() == 1 && arcs[0] && arcs[0]->full_circle;
}

namespace detail {

double ccw_delta(double a, double b) { return wrap_2pi(b - a); }

bool angle_in_span(double t, double a0, double a1, double tol) {
    double d = wrap_2pi(t - a0);
    double span = a1 - a0;
    return d <= span + tol || d >= kTwoPi - tol;
}

std::vector<Feature> boundary_features(const ArcGon& body) {
    std::vector<Feature> feats;
    const int n = static_cast<int>(body.vertices.size());
    for (int i = 0; i < n; ++i) {
        Feature v;
        v.is_arc = false;
        v.p = body.vertices[i];
        v.index = i;
        feats.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(body.arcs.size()); ++i) {
        if (!body.arcs[i]) continue;
        const Arc& a = *body.arcs[i];
        Feature f;
        f.is_arc = true;
        f.p = a.center;
        f.radius = a.radius;
        f.index = i;
        if (a.full_circle) {
            f.full = true;
            f.a0 = 0.0;
            f.a1 = kTwoPi;
        } else {
            Point2 s = body.vertices[i] - a.center;
            Point2 e = body.vertices[(i + 1) % n] - a.center;
            f.a0 = std::atan2(s.y, s.x);
            f.a1 = f.a0 + ccw_delta(f.a0, std::atan2(e.y, e.x));
        }
        feats.push_back(f);
    }
    return feats;
}

SupportResult support_unchecked(const ArcGon& body, UnitVector2 u) {
    double best = -std::numeric_limits<double>::infinity();
    Point2 arg;
    for (const Point2& v : body.vertices) {
        double s = dot(v, u);
        if (s > best) {
            best = s;
            arg = v;
        }
    }
    const int n = static_cast<int>(body.vertices.size());
    double t = std::atan2(u.uy, u.ux);
    for (int i = 0; i < static_cast<int>(body.arcs.size()); ++i) {
        if (!body.arcs[i]) continue;
        const Arc& a = *body.arcs[i];
        bool in_span = a.full_circle;
        if (!in_span) {
            Point2 s = body.vertices[i] - a.center;
            Point2 e = body.vertices[(i + 1) % n] - a.center;
            double a0 = std::atan2(s.y, s.x);
            double a1 = a0 + ccw_delta(a0, std::atan2(e.y, e.x));
            in_span = angle_in_span(t, a0, a1);
        }
        if (in_span) {
            double s = dot(a.center, u) + a.radius;
            if (s > best) {
                best = s;
                arg = a.center + a.radius * u.as_point();
            }
        }
    }
    return {best, arg};
}

int support_feature(const std::vector<Feature>& feats, UnitVector2 u) {
    double best = -std::numeric_limits<double>::infinity();
    int arg = -1;
    double t = std::atan2(u.uy, u.ux);
    for (int k = 0; k < static_cast<int>(feats.size()); ++k) {
        const Feature& f = feats[k];
        double s;
        if (f.is_arc) {
            if (!f.full && !angle_in_span(t, f.a0, f.a1)) continue;
            s = dot(f.p, u) + f.radius;
        } else {
            s = dot(f.p, u);
        }
        if (s > best) {
            best = s;
            arg = k;
        }
    }
    return arg;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t sub_seed(uint64_t seed, uint64_t index) { return splitmix64(seed ^ splitmix64(index + 1)); }

}  // namespace detail

ValidationReport validate_arcgon(const ArcGon& body) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    const int n = static_cast<int>(body.vertices.size());
    if (n == 0) {
        fail("empty vertex list");
        return rep;
    }
    if (body.arcs.size() != body.vertices.size()) {
        fail("arcs list must have one entry per edge");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(body.vertices[i].x) || !std::isfinite(body.vertices[i].y))
            fail(fmt_idx("non-finite vertex", i));
    }
    if (!rep.ok) return rep;

    // Disk encoding.
    if (n == 1) {
        if (!body.arcs[0] || !body.arcs[0]->full_circle) {
            fail("single vertex requires a full-circle arc");
            return rep;
        }
        const Arc& a = *body.arcs[0];
        if (!(a.radius > 0.0) || !std::isfinite(a.radius)) fail("non-positive disk radius");
        double d = dist(body.vertices[0], a.center);
        if (std::abs(d - a.radius) > 1e-10 * std::max(1.0, a.radius))
            fail("disk vertex not on the stated circle");
        return rep;
    }

    for (int i = 0; i < n; ++i) {
        if (body.arcs[i] && body.arcs[i]->full_circle) fail(fmt_idx("full-circle arc on multi-vertex body", i));
    }
    if (!rep.ok) return rep;

    // Per-edge tangent directions at start and end.
    std::vector<double> tan_start(n), tan_end(n), arc_span(n, 0.0);
    double scale = 0.0;
    for (const Point2& v : body.vertices) scale = std::max(scale, std::abs(v.x) + std::abs(v.y));
    scale = std::max(scale, 1e-30);

    for (int i = 0; i < n; ++i) {
        Point2 v0 = body.vertices[i];
        Point2 v1 = body.vertices[(i + 1) % n];
        if (!body.arcs[i]) {
            if (dist(v0, v1) <= 1e-14 * scale) {
                fail(fmt_idx("zero-length edge", i));
                continue;
            }
            double t = std::atan2(v1.y - v0.y, v1.x - v0.x);
            tan_start[i] = tan_end[i] = t;
        } else {
            const Arc& a = *body.arcs[i];
            if (!(a.radius > 0.0) || !std::isfinite(a.radius)) {
                fail(fmt_idx("non-positive arc radius", i));
                continue;
            }
            double d0 = dist(v0, a.center), d1 = dist(v1, a.center);
            double rtol = 1e-10 * std::max(1.0, a.radius);
            if (std::abs(d0 - a.radius) > rtol || std::abs(d1 - a.radius) > rtol)
                fail(fmt_idx("arc endpoints off the stated circle", i));
            double a0 = std::atan2(v0.y - a.center.y, v0.x - a.center.x);
            double span = detail::ccw_delta(a0, std::atan2(v1.y - a.center.y, v1.x - a.center.x));
            if (span >= kPi - 1e-12) fail(fmt_idx("arc subtends >= pi", i));
            arc_span[i] = span;
            // CCW tangents along the arc.
            tan_start[i] = a0 + kPi / 2.0;
            tan_end[i] = a0 + span + kPi / 2.0;
            // Outward bulge: arc midpoint lies on the exterior (right) side of the chord.
            Point2 mid = a.center + a.radius * UnitVector2::from_angle(a0 + span / 2.0).as_point();
            double side = cross(v1 - v0, mid - v0);
            if (side > 1e-12 * scale * scale) fail(fmt_idx("arc bulges inward", i));
        }
    }
    if (!rep.ok) return rep;

    const bool segment = body.is_segment();
    double turning = 0.0;
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        double turn = tan_start[i] - tan_end[prev];
        turn = std::remainder(turn, kTwoPi);
        if (segment) {
            // pi-turns at the two endpoints.
            turning += std::abs(turn);
            continue;
        }
        if (turn < -1e-9) {
            fail(fmt_idx("non-convex turn", i));
            continue;
        }
        if (n > 2 && body.is_polygon() && turn <= 1e-12) fail(fmt_idx("collinear (zero-turn) vertex", i));
        turning += turn;
    }
    for (int i = 0; i < n; ++i) turning += arc_span[i];
    if (rep.ok && std::abs(turning - kTwoPi) > 1e-8) fail("total turning angle differs from 2*pi");
    return rep;
}

ArcGon convex_hull(const std::vector<Point2>& points) {
    std::vector<Point2> pts = points;
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 2) throw std::invalid_argument("degenerate point set");

    auto build = [&pts](bool lower) {
        std::vector<Point2> chain;
        if (!lower) std::reverse(pts.begin(), pts.end());
        for (const Point2& p : pts) {
            while (chain.size() >= 2 && cross(chain.back() - chain[chain.size() - 2], p - chain.back()) <= 0.0)
                chain.pop_back();
            chain.push_back(p);
        }
        if (!lower) std::reverse(pts.begin(), pts.end());
        return chain;
    };
    std::vector<Point2> lower = build(true);
    std::vector<Point2> upper = build(false);

    ArcGon out;
    out.vertices.insert(out.vertices.end(), lower.begin(), lower.end() - 1);
    out.vertices.insert(out.vertices.end(), upper.begin(), upper.end() - 1);
    if (out.vertices.size() < 2) {
        // All points collinear: segment between the extremes.
        out.vertices = {pts.front(), pts.back()};
    }
    out.arcs.assign(out.vertices.size(), std::nullopt);
    return out;
}

SupportResult support(const ArcGon& body, UnitVector2 u) {
    ValidationReport rep = validate_arcgon(body);
    if (!rep.ok) throw std::invalid_argument("invalid arc-gon: " + rep.violations.front());
    return detail::support_unchecked(body, u);
}

double width_in_direction(const ArcGon& body, UnitVector2 u) {
    ValidationReport rep = validate_arcgon(body);
    if (!rep.ok) throw std::invalid_argument("invalid arc-gon: " + rep.violations.front());
    return detail::support_unchecked(body, u).value + detail::support_unchecked(body, u.negated()).value;
}

ArcGon discretize(const ArcGon& body, double max_sagitta) {
    if (!(max_sagitta > 0.0)) throw std::invalid_argument("max_sagitta must be positive");
    if (body.is_polygon()) return body;

    ArcGon out;
    const int n = static_cast<int>(body.vertices.size());

    if (body.is_disk()) {
        const Arc& a = *body.arcs[0];
        double s = std::min(max_sagitta, a.radius);
        double delta = 2.0 * std::acos(std::max(-1.0, 1.0 - s / a.radius));
        int m = std::max(8, static_cast<int>(std::ceil(kTwoPi / delta)));
        Point2 v0 = body.vertices[0] - a.center;
        double base = std::atan2(v0.y, v0.x);
        for (int k = 0; k < m; ++k)
            out.vertices.push_back(a.center + a.radius * UnitVector2::from_angle(base + kTwoPi * k / m).as_point());
        out.arcs.assign(out.vertices.size(), std::nullopt);
        return out;
    }

    for (int i = 0; i < n; ++i) {
        out.vertices.push_back(body.vertices[i]);
        if (!body.arcs[i]) continue;
        const Arc& a = *body.arcs[i];
        Point2 s0 = body.vertices[i] - a.center;
        double a0 = std::atan2(s0.y, s0.x);
        Point2 e0 = body.vertices[(i + 1) % n] - a.center;
        double span = detail::ccw_delta(a0, std::atan2(e0.y, e0.x));
        double s = std::min(max_sagitta, a.radius);
        double delta = 2.0 * std::acos(std::max(-1.0, 1.0 - s / a.radius));
        int m = std::max(1, static_cast<int>(std::ceil(span / delta)));
        for (int k = 1; k < m; ++k)
            out.vertices.push_back(a.center + a.radius * UnitVector2::from_angle(a0 + span * k / m).as_point());
    }
    out.arcs.assign(out.vertices.size(), std::nullopt);
    return out;
}

ArcGon steiner_symmetrize(const ArcGon& body, UnitVector2 axis) {
    if (!body.is_polygon()) throw std::invalid_argument("polygon required");
    ValidationReport rep = validate_arcgon(body);
    if (!rep.ok) throw std::invalid_argument("invalid arc-gon: " + rep.violations.front());

    const double ca = axis.ux, sa = axis.uy;
    auto to_axis = [&](Point2 p) -> Point2 { return {ca * p.x + sa * p.y, -sa * p.x + ca * p.y}; };
    auto from_axis = [&](Point2 p) -> Point2 { return {ca * p.x - sa * p.y, sa * p.x + ca * p.y}; };

    std::vector<Point2> v;
    v.reserve(body.vertices.size());
    for (const Point2& p : body.vertices) v.push_back(to_axis(p));
    const int n = static_cast<int>(v.size());

    std::vector<double> xs;
    for (const Point2& p : v) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    double span = std::max(xs.back() - xs.front(), 1e-30);
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [span](double a, double b) { return std::abs(a - b) <= 1e-13 * span; }),
             xs.end());

    auto chord = [&](double x) -> double {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            Point2 a = v[i], b = v[(i + 1) % n];
            if (std::abs(a.x - x) <= 1e-13 * span) {
                lo = std::min(lo, a.y);
                hi = std::max(hi, a.y);
            }
            double x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
            if (x0 < x && x < x1) {
                double y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        }
        if (!(hi >= lo)) return 0.0;
        return hi - lo;
    };

    std::vector<Point2> pts;
    for (double x : xs) {
        double half = chord(x) / 2.0;
        pts.push_back(from_axis({x, -half}));
        if (half > 0.0) pts.push_back(from_axis({x, half}));
    }
    return convex_hull(pts);
}

}  // namespace santalo

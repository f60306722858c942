// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "santalo/bodies.hpp"
#include "santalo/diagrams.hpp"
#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/ndim.hpp"

using namespace santalo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

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

// 1. Classical-inequality soundness sweep over 10^4 seeded random polygons.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    const int N = 10000;
    int violations = 0;
    std::string first;
    for (int i = 0; i < N; ++i) {
        ArcGon g = random_polygon(3 + i % 40, 0xC1000000ULL + i);
        FunctionalVector fv = evaluate_all(g);
        for (const SlackReport& rep : check_all(fv)) {
            if (rep.applicable && rep.slack < -3.0 * rep.err_bound - 1e-11 * std::max(1.0, std::abs(rep.slack))) {
                ++violations;
                if (first.empty()) first = rep.id + " on polygon " + std::to_string(i);
            }
        }
    }
    double secs = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "soundness sweep: %d polygons, %d violations%s%s, %.1f s (limit 120 s)", N, violations,
                  first.empty() ? "" : ", first: ", first.c_str(), secs);
    report(1, violations == 0 && secs < 120.0, buf);
}

// 2. Sharpness certification per equality clause.
void criterion2() {
    struct Job {
        const char* id;
    };
    bool all = true;
    std::string detail;
    for (const char* id : {"LB_prD", "pRw_NEW", "ARw_NEW_UPPER", "Arw_upper", "prw_upper",
                           "ApDKubota", "LW_pRr"}) {
        auto t0 = std::chrono::steady_clock::now();
        SharpnessResult res = certify_sharpness(id, 33);
        double secs = seconds_since(t0);
        bool ok = res.has_claim && res.pass && secs < 10.0;
        all = all && ok;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%s gap=%.1e (%.1fs)%s", id, res.max_gap, secs, ok ? "" : " FAIL");
        if (!detail.empty()) detail += ", ";
        detail += buf;
    }

    // Arw_lower / prw_lower: equality exactly at the ball and the triangle,
    // strictly positive slack at the unit square.
    FunctionalVector ball = evaluate_all(BodySpec::named("ball", {{"rho", 1.0}}));
    FunctionalVector tri = evaluate_all(BodySpec::named("equilateral_triangle", {{"r", 1.0}}));
    ArcGon sqg;
    sqg.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sqg.arcs.assign(4, std::nullopt);
    FunctionalVector square = evaluate_all(sqg);
    for (const char* id : {"Arw_lower", "prw_lower"}) {
        double gb = slack(id, ball).equality_within;
        double gt = slack(id, tri).equality_within;
        double gs = slack(id, square).slack;
        bool ok = gb <= 1e-9 && gt <= 1e-9 && gs >= 1e-4;
        all = all && ok;
        char buf[128];
        std::snprintf(buf, sizeof(buf), ", %s: ball=%.1e tri=%.1e square_slack=%.3f%s", id, gb, gt, gs,
                      ok ? "" : " FAIL");
        detail += buf;
    }
    report(2, all, "sharpness: " + detail);
}

// 3. Spot values.
void criterion3() {
    FunctionalVector rt = evaluate_all(construct(BodySpec::named("reuleaux_triangle", {{"width", 2.0}})));
    bool ok = true;
    ok = ok && std::abs(rt.A - 2.0 * (kPi - kSqrt3)) <= 1e-9;
    ok = ok && std::abs(rt.p - 2.0 * kPi) <= 1e-9;
    FunctionalVector tri = evaluate_all(construct(BodySpec::named("equilateral_triangle", {{"r", 1.0}})));
    auto [tx, ty] = map_point(diagram_spec(DiagramName::prw), tri);
    ok = ok && std::abs(tx - 3.0) <= 1e-9 && std::abs(ty - 6.0 * kSqrt3) <= 1e-9;
    KubotaPhi k = solve_kubota_phi(2.0 * kPi, 2.0);
    ok = ok && std::abs(k.phi - kPi / 2.0) <= 1e-12;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "spot values: A(RT)=%.12f p(RT)=%.12f f_prw(T)=(%.9f, %.9f) phi(ball)=%.15f", rt.A, rt.p,
                  tx, ty, k.phi);
    report(3, ok, buf);
}

// 4. Steiner suite: 1000 polygons x 2 axes.
void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        ArcGon g = random_polygon(4 + i % 30, 0xC4000000ULL + i);
        FunctionalVector before = evaluate_all(g);
        for (UnitVector2 axis : {UnitVector2{1.0, 0.0}, UnitVector2{0.0, 1.0}}) {
            FunctionalVector after = evaluate_all(steiner_symmetrize(g, axis));
            if (std::abs(after.A - before.A) > 1e-9 * before.A) ++bad;
            if (after.p > before.p + 1e-9) ++bad;
            if (after.D > before.D + 1e-9) ++bad;
            if (after.R > before.R + 1e-9) ++bad;
            if (after.r < before.r - 1e-9) ++bad;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "Steiner suite: 1000 polygons x 2 axes, %d monotonicity failures (%.1f s)",
                  bad, seconds_since(t0));
    report(4, bad == 0, buf);
}

// 5. n-dim internal consistency.
void criterion5() {
    std::vector<double> grid;
    for (int i = 0; i < 9; ++i) grid.push_back(2.0 * i / 8.0);
    double worst = 0.0;
    bool ok = true;
    for (int dim : {2, 3, 4}) {
        VRwReport rep = certify_VRw(dim, grid);
        worst = std::max(worst, rep.max_gap);
        ok = ok && rep.pass;
    }
    // n = 2 right side against the planar area bound at R = 1
    double worst2 = 0.0;
    for (double w : grid) {
        double rhs = std::pow(kPi, 0.5) / gamma_fn(1.5) * w * (w > 0 ? hypergeometric_H(2, w / 2.0) : 1.0);
        double planar = kPi - 2.0 * std::acos(std::clamp(w / 2.0, -1.0, 1.0)) +
                        w * std::sqrt(std::max(0.0, 1.0 - w * w / 4.0));
        worst2 = std::max(worst2, std::abs(rhs - planar));
    }
    ok = ok && worst2 <= 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "slab volume consistency: max gap %.2e (limit 1e-10), planar agreement %.2e (limit 1e-12)",
                  worst, worst2);
    report(5, ok, buf);
}

// 6. n-dim Monte Carlo.
void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    SupportOracleND ball{3, NdFamily::ball, 1.0};
    MCEstimate est = mean_width_mc(ball, 1000000, 0xC6ULL);
    double ball_secs = seconds_since(t0);
    bool ok_ball = std::abs(est.value - 1.0) <= 3.0 * std::max(est.stderr_, 1e-12) + 1e-12 && ball_secs < 5.0;

    BRwReport brw = certify_bRw(3, {0.25, 0.5, 1.0, 1.5, 2.0}, 200000, 0xC6BULL);
    bool ok_brw = brw.all_pass && brw.perturbed_ok;

    BrDReport brd = certify_brD(3, {0.0, 0.5, 1.0}, 200000, 0xC6DULL);
    double printed_ball = brd.rows.back().rhs_printed;
    bool ok_brd = brd.consistent_passes_ball && !brd.printed_passes_ball &&
                  std::abs(printed_ball - 1.436) < 2e-3;

    char buf[300];
    std::snprintf(buf, sizeof(buf),
                  "Monte Carlo: b(B3)=%.5f+-%.1e in %.1fs; bRw planar PASS=%d perturbed=%d (uniform gap at "
                  "w=1: %.3f, documented); brD two-reading: consistent ball PASS=%d, printed %.4f rejected=%d",
                  est.value, est.stderr_, ball_secs, brw.all_pass, brw.perturbed_ok,
                  brw.rows.size() > 2 ? brw.rows[2].gap_true : 0.0, brd.consistent_passes_ball, printed_ball,
                  !brd.printed_passes_ball);
    report(6, ok_ball && ok_brw && ok_brd, buf);
}

// 7. Diagram reproduction.
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    const std::map<DiagramName, std::set<std::string>> caption_sets = {
        {DiagramName::ApD, {"ApDKubota", "ApDKubota2", "ApDKubota3", "pD_upper", "pD_lower", "isoperimetric"}},
        {DiagramName::pDr, {"pD_upper", "LB_prD", "UB_pDr_2", "pDrHenk", "pD_lower"}},
        {DiagramName::pRw, {"pRw_NEW", "pw", "LB_pRw", "pR_upper", "pR_lower"}},
        {DiagramName::ARw, {"ARw_NEW_UPPER", "ARw_LOWER", "ARw_old_lower", "ARw_old_upper"}},
        {DiagramName::Arw, {"steinhagen_lower", "Arw_upper", "Arw_nonsharp_1", "Arw_nonsharp_2", "Arw_lower"}},
        {DiagramName::prw, {"steinhagen_lower", "prw_upper", "prw_nonsharp", "pw", "prw_lower"}},
    };
    bool ok = true;
    std::string detail;
    int outside_total = 0;
    for (const auto& [name, expect] : caption_sets) {
        DiagramSpec spec = diagram_spec(name);
        std::set<std::string> got;
        for (const Curve& c : known_curves(spec)) got.insert(c.id);
        if (got != expect) {
            ok = false;
            detail += " curve-set mismatch in " + to_string(name) + ";";
        }
        PointCloud cloud = sample_cloud(spec, {}, 10000, 0xC7000ULL + static_cast<uint64_t>(name));
        // no sampled point outside any curve that bounds from that side
        for (const CloudRow& r : cloud.rows) {
            for (const CurveRef& ref : spec.curve_refs) {
                if (ref.ineq_id == "steinhagen_lower") {
                    if (r.x < 2.0 - 1e-9) ++outside_total;
                    continue;
                }
                if (ref.ineq_id == "pD_lower" && spec.name == DiagramName::ApD) {
                    if (r.x < 2.0 - 1e-9) ++outside_total;
                    continue;
                }
                double cv = curve_value(spec, ref.ineq_id, r.x);
                if (!std::isfinite(cv)) continue;
                bool upper = false, lower = false;
                // which side the inequality bounds in this diagram
                const std::string& id = ref.ineq_id;
                if (spec.name == DiagramName::ApD)
                    upper = (id == "ApDKubota" || id == "isoperimetric"),
                    lower = (id == "ApDKubota2" || id == "ApDKubota3");
                else if (spec.name == DiagramName::pDr)
                    upper = (id == "pDrHenk" || id == "UB_pDr_2" || id == "pD_upper"), lower = (id == "LB_prD" || id == "pD_lower");
                else if (spec.name == DiagramName::pRw)
                    upper = (id == "pRw_NEW" || id == "pR_upper"), lower = (id == "pw" || id == "LB_pRw" || id == "pR_lower");
                else if (spec.name == DiagramName::ARw)
                    upper = (id == "ARw_NEW_UPPER" || id == "ARw_old_upper"),
                    lower = (id == "ARw_LOWER" || id == "ARw_old_lower");
                else if (spec.name == DiagramName::Arw)
                    upper = (id == "Arw_upper" || id == "Arw_nonsharp_1" || id == "Arw_nonsharp_2"),
                    lower = (id == "Arw_lower");
                else if (spec.name == DiagramName::prw)
                    upper = (id == "prw_upper" || id == "prw_nonsharp"), lower = (id == "pw" || id == "prw_lower");
                if (upper && r.y > cv + 1e-9) ++outside_total;
                if (lower && r.y < cv - 1e-9) ++outside_total;
            }
        }
    }
    if (outside_total > 0) ok = false;

    // Empirical envelopes at the certified tangency abscissas.
    struct Push {
        DiagramName name;
        bool up;
        double x;
        const char* curve;
    };
    const double lens_x = (kPi / 2.0) / std::sin(kPi / 4.0);  // lens at phi = pi/4
    const std::vector<Push> pushes = {
        {DiagramName::ApD, true, lens_x, "ApDKubota"},   {DiagramName::pDr, false, 0.25, "LB_prD"},
        {DiagramName::pRw, true, 1.0, "pRw_NEW"},        {DiagramName::ARw, true, 1.0, "ARw_NEW_UPPER"},
        {DiagramName::Arw, true, 2.5, "Arw_upper"},      {DiagramName::prw, true, 2.5, "prw_upper"},
    };
    std::string push_detail;
    for (const Push& p : pushes) {
        DiagramSpec spec = diagram_spec(p.name);
        PushResult res = boundary_push(spec, p.up, p.x, 3000, 0xC7F00ULL + static_cast<uint64_t>(p.name));
        double target = curve_value(spec, p.curve, res.x);
        double gap = std::abs(res.y - target);
        if (gap > 0.05) {
            ok = false;
            push_detail += " " + to_string(p.name) + " envelope gap " + std::to_string(gap) + ";";
        }
    }
    char buf[300];
    std::snprintf(buf, sizeof(buf),
                  "diagrams: 6 curve sets as captioned, 60000 cloud points, %d outside proven curves; "
                  "envelopes within 0.05 at 6 tangency abscissas%s%s (%.1f s)",
                  outside_total, detail.c_str(), push_detail.c_str(), seconds_since(t0));
    report(7, ok, buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures == 0) {
        std::printf("acceptance: all 7 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}

#include "santalo/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "santalo/bodies.hpp"

namespace santalo {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double asin_safe(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }
double acos_safe(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }
double sqrt_safe(double x) { return std::sqrt(std::max(0.0, x)); }

bool is_constant_width(const FunctionalVector& fv, const CatalogFlags& flags) {
    if (flags.constant_width) return true;
    return fv.D > 0 && std::abs(fv.D - fv.w) <= 1e-8 * fv.D;
}

bool always(const FunctionalVector&, const CatalogFlags&) { return true; }

std::vector<InequalityRecord> build_catalog() {
    std::vector<InequalityRecord> cat;
    auto add = [&cat](std::string id, std::string anchor, std::function<double(const FunctionalVector&)> lhs,
                      std::function<double(const FunctionalVector&)> rhs,
                      std::function<bool(const FunctionalVector&, const CatalogFlags&)> app = always,
                      bool claim = true) {
        InequalityRecord r;
        r.id = std::move(id);
        r.anchor = std::move(anchor);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.applicable = std::move(app);
        r.sharpness_claim = claim;
        cat.push_back(std::move(r));
    };
    using FV = const FunctionalVector&;

    add("isoperimetric", "isoperimetric inequality",
        [](FV f) { return 4.0 * kPi * f.A; }, [](FV f) { return f.p * f.p; });
    add("pal", "Pal 1921",
        [](FV f) { return f.w * f.w; }, [](FV f) { return kSqrt3 * f.A; });
    add("blaschke_lebesgue", "Blaschke 1915 / Lebesgue 1914, constant width only",
        [](FV f) { return (kPi - kSqrt3) * f.w * f.w; }, [](FV f) { return 2.0 * f.A; }, is_constant_width);
    add("area_r_ball", "inball monotonicity",
        [](FV f) { return kPi * f.r * f.r; }, [](FV f) { return f.A; });
    add("area_R_ball", "circumball monotonicity",
        [](FV f) { return f.A; }, [](FV f) { return kPi * f.R * f.R; });
    add("pD_lower", "perimeter vs diameter, lower",
        [](FV f) { return 2.0 * f.D; }, [](FV f) { return f.p; });
    add("pD_upper", "Barbier / Cauchy",
        [](FV f) { return f.p; }, [](FV f) { return kPi * f.D; });
    add("p_r_lower", "perimeter vs inradius",
        [](FV f) { return 2.0 * kPi * f.r; }, [](FV f) { return f.p; });
    add("pR_lower", "perimeter vs circumradius, lower",
        [](FV f) { return 4.0 * f.R; }, [](FV f) { return f.p; });
    add("pR_upper", "perimeter vs circumradius, upper",
        [](FV f) { return f.p; }, [](FV f) { return 2.0 * kPi * f.R; });
    add("pw", "Cauchy's formula",
        [](FV f) { return kPi * f.w; }, [](FV f) { return f.p; });
    add("LW_pRr", "Boroczky Jr.-Hernandez Cifre-Salinas",
        [](FV f) { return 4.0 * (sqrt_safe(f.R * f.R - f.r * f.r) + f.r * asin_safe(f.R > 0 ? f.r / f.R : 1.0)); },
        [](FV f) { return f.p; });
    add("UB_pDw_2", "Kubota 1923",
        [](FV f) { return f.p; },
        [](FV f) { return 2.0 * sqrt_safe(f.D * f.D - f.w * f.w) + 2.0 * f.D * asin_safe(f.D > 0 ? f.w / f.D : 1.0); });
    add("jung", "Jung 1901",
        [](FV f) { return kSqrt3 * f.R; }, [](FV f) { return f.D; });
    add("steinhagen_lower", "inradius vs width, lower",
        [](FV f) { return 2.0 * f.r; }, [](FV f) { return f.w; });
    add("steinhagen_upper", "Steinhagen 1922",
        [](FV f) { return f.w; }, [](FV f) { return 3.0 * f.r; });
    add("w_2R", "width vs circumradius",
        [](FV f) { return f.w; }, [](FV f) { return 2.0 * f.R; });
    add("cw_Rr", "circumradius vs inradius, constant width only",
        [](FV f) { return 2.0 * f.R; }, [](FV f) { return (kSqrt3 + 1.0) * f.r; }, is_constant_width);
    add("concentricity_lower", "concentricity inequalities, lower",
        [](FV f) { return f.w; }, [](FV f) { return f.r + f.R; });
    add("concentricity_upper", "concentricity inequalities, upper",
        [](FV f) { return f.r + f.R; }, [](FV f) { return f.D; });
    add("steinhagen_cw", "sharpened Steinhagen, constant width only",
        [](FV f) { return 2.0 * f.w; }, [](FV f) { return (3.0 + kSqrt3) * f.r; }, is_constant_width);

    add("ApDKubota", "Kubota 1923",
        [](FV f) { return 8.0 * solve_kubota_phi(std::clamp(f.p, 2.0 * f.D, kPi * f.D), f.D).phi * f.A; },
        [](FV f) {
            KubotaPhi k = solve_kubota_phi(std::clamp(f.p, 2.0 * f.D, kPi * f.D), f.D);
            if (k.degenerate) return f.p * f.p - 4.0 * kPi * f.A + 8.0 * k.phi * f.A;  // limit form
            return f.p * (f.p - 2.0 * f.D * std::cos(k.phi));
        },
        [](FV f, const CatalogFlags&) { return f.D > 0; });
    add("ApDKubota2", "Kubota 1923/1924, for 2D <= p <= 3D",
        [](FV f) { return (f.p - 2.0 * f.D) * sqrt_safe(4.0 * f.p * f.D - f.p * f.p); },
        [](FV f) { return 4.0 * f.A; },
        [](FV f, const CatalogFlags&) {
            return f.p >= 2.0 * f.D - 1e-12 * f.D && f.p <= 3.0 * f.D + 1e-12 * f.D;
        });
    add("ApDKubota3", "Kubota 1923/1924, for 3D <= p <= pi*D",
        [](FV f) { return kSqrt3 * f.D * (f.p - 2.0 * f.D); },
        [](FV f) { return 4.0 * f.A; },
        [](FV f, const CatalogFlags&) {
            return f.p >= 3.0 * f.D - 1e-12 * f.D && f.p <= kPi * f.D + 1e-12 * f.D;
        });
    add("pDrHenk", "classical upper bound, perimeter vs diameter and inradius",
        [](FV f) { return f.p; }, [](FV f) { return 2.0 * f.D + 4.0 * f.r; });
    add("LB_prD", "sharp lower bound, perimeter vs inradius and diameter",
        [](FV f) {
            double q = sqrt_safe(f.D * f.D - 4.0 * f.r * f.r);
            double phi = std::atan2(q, 2.0 * f.r);
            return 4.0 * f.r * (kPi / 2.0 - phi) + 2.0 * q;
        },
        [](FV f) { return f.p; });
    add("UB_pDr_2", "non-tight upper bound via Steinhagen, for 3r <= D",
        [](FV f) { return f.p; },
        [](FV f) { return sqrt_safe(4.0 * f.D * f.D - 9.0 * f.r * f.r) + 2.0 * f.D * asin_safe(f.D > 0 ? 3.0 * f.r / f.D : 0.0); },
        [](FV f, const CatalogFlags&) { return 3.0 * f.r <= f.D; }, false);
    add("pRw_NEW", "sharp upper bound, perimeter vs circumradius and width",
        [](FV f) { return f.p; },
        [](FV f) {
            return 2.0 * kPi * f.R + 2.0 * sqrt_safe(4.0 * f.R * f.R - f.w * f.w) -
                   4.0 * f.R * acos_safe(f.R > 0 ? f.w / (2.0 * f.R) : 1.0);
        });
    add("LB_pRw", "lower bound via Steinhagen",
        [](FV f) {
            return 4.0 * (sqrt_safe(f.R * f.R - f.w * f.w / 9.0) +
                          (f.w / 3.0) * asin_safe(f.R > 0 ? f.w / (3.0 * f.R) : 0.0));
        },
        [](FV f) { return f.p; });
    add("ARw_old_lower", "area vs circumradius and width, lower",
        [](FV f) { return (kSqrt3 / 2.0) * f.R * f.w; }, [](FV f) { return f.A; });
    add("ARw_old_upper", "area vs circumradius and width, upper",
        [](FV f) { return f.A; }, [](FV f) { return 2.0 * f.R * f.w; });
    add("ARw_NEW_UPPER", "sharp upper bound, area vs circumradius and width",
        [](FV f) { return f.A; },
        [](FV f) {
            return kPi * f.R * f.R - 2.0 * f.R * f.R * acos_safe(f.R > 0 ? f.w / (2.0 * f.R) : 1.0) +
                   (f.w / 2.0) * sqrt_safe(4.0 * f.R * f.R - f.w * f.w);
        });
    add("ARw_LOWER", "lower bound near the ball",
        [](FV f) {
            double t = f.w - f.R;  // (w/R - 1) * R
            return (kPi - acos_safe(f.R > 0 ? t / f.R : 0.0)) * t * t + t * sqrt_safe(f.w * (2.0 * f.R - f.w));
        },
        [](FV f) { return f.A; });
    add("Arw_nonsharp_1", "Scott",
        [](FV f) { return 4.0 * (f.w - 2.0 * f.r) * f.A; }, [](FV f) { return f.w * f.w * f.w; },
        always, false);
    add("Arw_nonsharp_2", "Scott",
        [](FV f) { return kSqrt3 * (f.w - 2.0 * f.r) * f.A; }, [](FV f) { return f.w * f.w * f.r; });
    add("prw_nonsharp", "Scott",
        [](FV f) { return kSqrt3 * (f.w - 2.0 * f.r) * f.p; }, [](FV f) { return 2.0 * f.w * f.w; });
    add("Arw_upper", "sharp upper bound, area vs inradius and width",
        [](FV f) { return (f.w - 2.0 * f.r) * sqrt_safe(4.0 * f.r - f.w) * f.A; },
        [](FV f) { return std::pow(f.w, 1.5) * f.r * f.r; });
    add("prw_upper", "sharp upper bound, perimeter vs inradius and width",
        [](FV f) { return (f.w - 2.0 * f.r) * sqrt_safe(4.0 * f.r - f.w) * f.p; },
        [](FV f) { return 2.0 * f.r * f.w * std::sqrt(std::max(0.0, f.w)); });
    add("Arw_lower", "lower bound sharp at ball and triangle",
        [](FV f) {
            double s = (f.w > f.r) ? asin_safe(f.r / (f.w - f.r)) : kPi / 2.0;
            return kPi * f.r * f.r +
                   3.0 * (f.r * sqrt_safe(f.w * f.w - 2.0 * f.w * f.r) + f.r * f.r * s - kPi * f.r * f.r / 2.0);
        },
        [](FV f) { return f.A; });
    add("prw_lower", "lower bound sharp at ball and triangle",
        [](FV f) {
            double s = (f.w > f.r) ? asin_safe(f.r / (f.w - f.r)) : kPi / 2.0;
            return 6.0 * (sqrt_safe(f.w * f.w - 2.0 * f.w * f.r) + f.r * s) - kPi * f.r;
        },
        [](FV f) { return f.p; });
    return cat;
}

double propagated_error(const InequalityRecord& rec, const FunctionalVector& fv) {
    // |d(rhs-lhs)/df| * err_f summed over the six fields, by central differences.
    auto diff = [&rec](const FunctionalVector& f) { return rec.rhs(f) - rec.lhs(f); };
    struct FieldRef {
        double FunctionalVector::*val;
        double FunctionalErrors::*err;
    };
    static const FieldRef fields[6] = {
        {&FunctionalVector::A, &FunctionalErrors::A}, {&FunctionalVector::p, &FunctionalErrors::p},
        {&FunctionalVector::r, &FunctionalErrors::r}, {&FunctionalVector::R, &FunctionalErrors::R},
        {&FunctionalVector::D, &FunctionalErrors::D}, {&FunctionalVector::w, &FunctionalErrors::w}};
    double total = 0.0;
    for (const FieldRef& fr : fields) {
        double e = fv.err.*(fr.err);
        if (e <= 0) continue;
        double v = fv.*(fr.val);
        double h = std::max(1e-7 * std::abs(v), 1e-10);
        FunctionalVector up = fv, dn = fv;
        up.*(fr.val) = v + h;
        dn.*(fr.val) = std::max(0.0, v - h);
        double slope = (diff(up) - diff(dn)) / (up.*(fr.val) - dn.*(fr.val));
        if (std::isfinite(slope)) total += std::abs(slope) * e;
    }
    return total;
}

}  // namespace

const std::vector<InequalityRecord>& catalog() {
    static const std::vector<InequalityRecord> cat = build_catalog();
    return cat;
}

const InequalityRecord& record(const std::string& id) {
    for (const InequalityRecord& r : catalog())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown inequality id: " + id);
}

KubotaPhi solve_kubota_phi(double p, double D) {
    if (!(D > 0)) throw std::invalid_argument("p outside [2D, pi*D]");
    if (p < 2.0 * D * (1.0 - 1e-12) || p > kPi * D * (1.0 + 1e-12))
        throw std::invalid_argument("p outside [2D, pi*D]");
    if (p <= 2.0 * D * (1.0 + 1e-12)) return {0.0, true};
    auto g = [p, D](double phi) { return 2.0 * phi * D - p * std::sin(phi); };
    double lo = 1e-9, hi = kPi;
    if (g(lo) > 0) return {0.0, true};
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) <= 0 ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), false};
}

SlackReport slack(const std::string& id, const FunctionalVector& fv, CatalogFlags flags) {
    const InequalityRecord& rec = record(id);
    SlackReport rep;
    rep.id = id;
    rep.applicable = rec.applicable(fv, flags);
    if (!rep.applicable) return rep;
    double l = rec.lhs(fv);
    double r = rec.rhs(fv);
    rep.slack = r - l;
    double scale = std::max({std::abs(l), std::abs(r), 1e-30});
    rep.equality_within = std::abs(rep.slack) / scale;
    rep.err_bound = propagated_error(rec, fv);
    rep.violation = rep.slack < -(3.0 * rep.err_bound + 1e-11 * scale);
    return rep;
}

std::vector<SlackReport> check_all(const FunctionalVector& fv, CatalogFlags flags) {
    std::vector<SlackReport> out;
    out.reserve(catalog().size());
    for (const InequalityRecord& rec : catalog()) out.push_back(slack(rec.id, fv, flags));
    return out;
}

SharpnessResult certify_sharpness(const std::string& id, int grid_points, const ToleranceConfig& tol) {
    const InequalityRecord& rec = record(id);
    SharpnessResult res;
    res.id = id;
    std::vector<WitnessFamily> fams = witnesses_for(id);
    if (fams.empty() || !rec.sharpness_claim) {
        res.has_claim = false;
        res.family = "no sharpness claim";
        return res;
    }
    res.has_claim = true;
    CatalogFlags flags;
    for (const WitnessFamily& fam : fams) {
        if (!res.family.empty()) res.family += "; ";
        res.family += fam.description;
        int npts = (fam.t1 > fam.t0) ? std::max(2, grid_points) : 1;
        for (int i = 0; i < npts; ++i) {
            double t;
            if (npts == 1)
                t = fam.t0;
            else if (fam.open_left)
                t = fam.t0 + (fam.t1 - fam.t0) * (i + 1) / npts;
            else
                t = fam.t0 + (fam.t1 - fam.t0) * i / (npts - 1);
            ArcGon body = construct(fam.make(t));
            FunctionalVector fv = evaluate_all(body, tol);
            SlackReport rep = slack(id, fv, flags);
            if (!rep.applicable) continue;
            if (rep.equality_within > res.max_gap) {
                res.max_gap = rep.equality_within;
                res.argmax_param = t;
            }
        }
    }
    res.pass = res.max_gap <= 1e-7;
    return res;
}

IncircleTriangleResult incircle_support_triangle(const ArcGon& polygon, const ToleranceConfig& tol) {
    InradiusResult ir = inradius(polygon, tol);
    const std::vector<UnitVector2>& nrm = ir.touching_normals;
    if (nrm.size() < 2) throw std::runtime_error("fewer than two incircle touching normals");

    auto offset_of = [&](UnitVector2 u) { return dot(ir.center, u) + ir.radius; };

    IncircleTriangleResult out;
    // Strict triple: the origin lies in the interior of the normals' hull.
    const size_t m = nrm.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Point2 a = nrm[i].as_point(), b = nrm[j].as_point(), c = nrm[k].as_point();
                double d = cross(b - a, c - a);
                if (std::abs(d) < 1e-12) continue;
                double l1 = cross(b, c) / d;  // barycentric of the origin
                double l2 = cross(c, a) / d;
                double l3 = cross(a, b) / d;
                if (l1 > 1e-6 && l2 > 1e-6 && l3 > 1e-6) {
                    out.halfplanes = {{nrm[i], offset_of(nrm[i])},
                                      {nrm[j], offset_of(nrm[j])},
                                      {nrm[k], offset_of(nrm[k])}};
                    out.degenerate_strip = false;
                    // Chebyshev radius of the triangle: solve <n_i,c> + rho = h_i.
                    double a11 = nrm[i].ux - nrm[k].ux, a12 = nrm[i].uy - nrm[k].uy;
                    double a21 = nrm[j].ux - nrm[k].ux, a22 = nrm[j].uy - nrm[k].uy;
                    double b1 = offset_of(nrm[i]) - offset_of(nrm[k]);
                    double b2 = offset_of(nrm[j]) - offset_of(nrm[k]);
                    double det = a11 * a22 - a12 * a21;
                    double cx = (b1 * a22 - b2 * a12) / det;
                    double cy = (a11 * b2 - a21 * b1) / det;
                    out.r_check = offset_of(nrm[k]) - (cx * nrm[k].ux + cy * nrm[k].uy);
                    return out;
                }
            }
    // Antipodal pair: the enclosing region is a strip of width 2r.
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            if (nrm[i].ux * nrm[j].ux + nrm[i].uy * nrm[j].uy < -1.0 + 1e-9) {
                out.halfplanes = {{nrm[i], offset_of(nrm[i])}, {nrm[j], offset_of(nrm[j])}};
                out.degenerate_strip = true;
                out.r_check = 0.5 * (offset_of(nrm[i]) + offset_of(nrm[j]));
                return out;
            }
        }
    throw std::runtime_error("touching normals admit neither a spanning triple nor an antipodal pair");
}

}  // namespace santalo

#include "santalo/ndim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "santalo/geometry.hpp"  // detail::sub_seed

namespace santalo {

namespace {

constexpr double kPi = std::numbers::pi;

int thread_budget() {
    if (const char* env = std::getenv("SANTALO_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    struct Rec {
        static double run(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                          double fb, double whole, double tol, int depth) {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return run(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
                   run(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
        }
    };
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec::run(f, a, b, fa, fm, fb, whole, tol, 48);
}

double rhs_slab_mean_width(double w) {
    return (1.0 / kPi) * (kPi + 2.0 * std::sqrt(std::max(0.0, 1.0 - w * w / 4.0)) -
                          2.0 * std::acos(std::clamp(w / 2.0, -1.0, 1.0)));
}

double rhs_brD_printed(double r, double D) {
    double q = (r > 0) ? std::sqrt(std::max(0.0, D * D / (r * r) - 1.0)) : 0.0;
    double at = (r > 0) ? std::atan(q) : kPi / 2.0;
    return (2.0 / kPi) * (r * (kPi / 2.0 - at) + std::sqrt(std::max(0.0, D * D - r * r)));
}

double rhs_brD_consistent(double r, double D) {
    double q = (r > 0) ? std::sqrt(std::max(0.0, D * D / (4.0 * r * r) - 1.0)) : 0.0;
    double at = (r > 0) ? std::atan(q) : kPi / 2.0;
    return (2.0 / kPi) * (r * (kPi / 2.0 - at) + std::sqrt(std::max(0.0, D * D / 4.0 - r * r)));
}

struct Accum {
    double sum = 0.0;
    double sumsq = 0.0;
    long n = 0;
};

// Deterministic regardless of thread count: the sample budget is split into
// fixed blocks with derived seeds and merged in block order.
MCEstimate run_blocks(long samples, uint64_t seed,
                      const std::function<Accum(long, uint64_t)>& block_fn) {
    const int blocks = 32;
    long per = samples / blocks;
    long rem = samples % blocks;
    std::vector<Accum> acc(blocks);
    int nthreads = std::min(thread_budget(), blocks);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int b = next.fetch_add(1);
            if (b >= blocks) return;
            long cnt = per + (b < rem ? 1 : 0);
            acc[b] = block_fn(cnt, detail::sub_seed(seed, static_cast<uint64_t>(b)));
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Accum total;
    for (const Accum& a : acc) {
        total.sum += a.sum;
        total.sumsq += a.sumsq;
        total.n += a.n;
    }
    MCEstimate est;
    est.samples = total.n;
    est.seed = seed;
    est.value = total.sum / total.n;
    double var = std::max(0.0, (total.sumsq - total.n * est.value * est.value) / (total.n - 1));
    est.stderr_ = std::sqrt(var / total.n);
    return est;
}

}  // namespace

double SupportOracleND::operator()(std::span<const double> u) const {
    switch (family) {
        case NdFamily::ball:
            return 1.0;
        case NdFamily::segment_hull:
            return std::max(std::abs(u[0]), param);
        case NdFamily::slab: {
            double a = param / 2.0;
            double un = std::abs(u[dim - 1]);
            if (un <= a) return 1.0;
            double uperp = std::sqrt(std::max(0.0, 1.0 - un * un));
            return std::sqrt(1.0 - a * a) * uperp + a * un;
        }
    }
    return 0.0;
}

double gamma_fn(double x) {
    // Lanczos, g = 7, 9 coefficients.
    static const double g = 7.0;
    static const double coef[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    x -= 1.0;
    double a = coef[0];
    double t = x + g + 0.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double hypergeometric_H(int n, double a) {
    if (n < 1) throw std::invalid_argument("hypergeometric_H: n >= 1 required");
    if (a < 0.0 || a > 1.0 + 1e-12) throw std::invalid_argument("hypergeometric_H: a in (0, 1] required");
    if (a <= 1e-14) return 1.0;  // limit
    a = std::min(a, 1.0);
    // Substituting t = sin(theta) removes the endpoint singularity at a = 1.
    double upper = std::asin(a);
    double integral =
        adaptive_simpson([n](double th) { return std::pow(std::cos(th), n); }, 0.0, upper, 1e-14);
    return integral / a;
}

double volume_slab(int n, double w) {
    if (n < 2) throw std::invalid_argument("volume_slab: n >= 2 required");
    if (w < 0.0 || w > 2.0 + 1e-12) throw std::invalid_argument("volume_slab: w in [0, 2] required");
    if (w <= 0.0) return 0.0;
    w = std::min(w, 2.0);
    int k = n - 1;
    double vball = std::pow(kPi, k / 2.0) / gamma_fn(k / 2.0 + 1.0);
    double half = w / 2.0;
    double integral = 2.0 * adaptive_simpson(
                                [n](double t) { return std::pow(std::max(0.0, 1.0 - t * t), (n - 1) / 2.0); },
                                0.0, half, 1e-14);
    return vball * integral;
}

MCEstimate mean_width_mc(const SupportOracleND& oracle, long samples, uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("mean_width_mc: samples >= 1000 required");
    const int d = oracle.dim;
    return run_blocks(samples, seed, [&oracle, d](long cnt, uint64_t s) {
        std::mt19937_64 rng(s);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> u(d), nu(d);
        Accum a;
        for (long i = 0; i < cnt; ++i) {
            double n2 = 0.0;
            for (int k = 0; k < d; ++k) {
                u[k] = gauss(rng);
                n2 += u[k] * u[k];
            }
            double inv = 1.0 / std::sqrt(n2);
            for (int k = 0; k < d; ++k) {
                u[k] *= inv;
                nu[k] = -u[k];
            }
            double v = 0.5 * (oracle(u) + oracle(nu));
            a.sum += v;
            a.sumsq += v * v;
            ++a.n;
        }
        return a;
    });
}

MCEstimate mean_width_axis_mc(const SupportOracleND& oracle, long samples, uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("mean_width_axis_mc: samples >= 1000 required");
    const int d = oracle.dim;
    const int ax = oracle.axis();
    return run_blocks(samples, seed, [&oracle, d, ax](long cnt, uint64_t s) {
        std::mt19937_64 rng(s);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> uth(0.0, kPi);
        std::vector<double> v(d), u(d), nu(d);
        Accum a;
        for (long i = 0; i < cnt; ++i) {
            double n2 = 0.0;
            for (int k = 0; k < d; ++k) v[k] = 0.0;
            for (int k = 0; k < d; ++k) {
                if (k == ax) continue;
                v[k] = gauss(rng);
                n2 += v[k] * v[k];
            }
            double inv = 1.0 / std::sqrt(n2);
            double th = uth(rng);
            double c = std::cos(th), sn = std::sin(th);
            for (int k = 0; k < d; ++k) {
                u[k] = (k == ax) ? sn : c * v[k] * inv;
                nu[k] = -u[k];
            }
            double val = 0.5 * (oracle(u) + oracle(nu));
            a.sum += val;
            a.sumsq += val * val;
            ++a.n;
        }
        return a;
    });
}

BrDReport certify_brD(int dim, const std::vector<double>& r_grid, long samples, uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("certify_brD: dim >= 2 required");
    BrDReport rep;
    rep.dim = dim;
    const double D = 2.0;
    int idx = 0;
    for (double r : r_grid) {
        SupportOracleND oracle{dim, NdFamily::segment_hull, r};
        MCEstimate est = mean_width_mc(oracle, samples, detail::sub_seed(seed, idx++));
        BrDRow row;
        row.r = r;
        row.mc = est.value;
        row.mc_stderr = est.stderr_;
        row.rhs_printed = rhs_brD_printed(r, D);
        row.rhs_consistent = rhs_brD_consistent(r, D);
        bool hits_printed = std::abs(est.value - row.rhs_printed) <= 3.0 * est.stderr_;
        bool hits_consistent = std::abs(est.value - row.rhs_consistent) <= 3.0 * est.stderr_;
        if (hits_consistent && !hits_printed)
            row.verdict = "consistent reading holds; printed reading inconsistent";
        else if (hits_printed && !hits_consistent)
            row.verdict = "printed reading holds; consistent reading inconsistent";
        else if (hits_printed && hits_consistent)
            row.verdict = "both readings within Monte Carlo error";
        else
            row.verdict = "neither reading: equality fails in this dimension under the uniform measure";
        if (std::abs(r - 1.0) < 1e-12) {
            rep.printed_passes_ball = hits_printed;
            rep.consistent_passes_ball = hits_consistent;
        }
        rep.rows.push_back(row);
    }
    rep.note =
        "Right side evaluated in two readings: as printed (D^2/r^2 under the radicals) and with D/2 "
        "substituted (D^2/(4 r^2)). At r = 1 (the ball) only the D/2 reading matches b = 1; the printed "
        "reading gives about 1.436. At r = 0 the uniform-sphere mean width of a segment is "
        "dimension-dependent (1/2 in dimension 3), so neither reading is attained there; the axis-plane "
        "sectional average attains the D/2 reading exactly for every r.";
    return rep;
}

BRwReport certify_bRw(int dim, const std::vector<double>& w_grid, long samples, uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("certify_bRw: dim >= 2 required");
    BRwReport rep;
    rep.dim = dim;
    rep.interpretation_note =
        "PASS is keyed to the planar-consistent (axis-plane sectional) mean width, for which the slab "
        "attains equality and the bound is valid for every contained body. Under the uniform-sphere "
        "(probability) mean width the printed bound fails for the slab itself in dimension >= 3; the "
        "measured gap is reported per row.";
    int idx = 0;
    rep.all_pass = true;
    for (double w : w_grid) {
        SupportOracleND oracle{dim, NdFamily::slab, w};
        MCEstimate tru = mean_width_mc(oracle, samples, detail::sub_seed(seed, 1000 + idx));
        MCEstimate pla = mean_width_axis_mc(oracle, samples, detail::sub_seed(seed, 2000 + idx));
        ++idx;
        BRwRow row;
        row.w = w;
        row.mc_true = tru.value;
        row.stderr_true = tru.stderr_;
        row.mc_planar = pla.value;
        row.stderr_planar = pla.stderr_;
        row.rhs = rhs_slab_mean_width(w);
        row.gap_true = tru.value - row.rhs;
        row.pass_planar = std::abs(pla.value - row.rhs) <= 3.0 * std::max(pla.stderr_, 1e-12);
        rep.all_pass = rep.all_pass && row.pass_planar;
        rep.rows.push_back(row);
    }

    // Bound direction on perturbed slabs and min-composed sub-slab oracles.
    rep.perturbed_ok = true;
    std::mt19937_64 rng(detail::sub_seed(seed, 99));
    std::uniform_real_distribution<double> uw(0.05, 1.95);
    std::uniform_real_distribution<double> uang(0.2, kPi / 2.0);
    long pert_samples = std::max(10000L, samples / 20);
    for (int i = 0; i < 20; ++i) {
        double w = uw(rng);
        SupportOracleND oracle{dim, NdFamily::slab, w};
        MCEstimate pla = mean_width_axis_mc(oracle, pert_samples, rng());
        if (pla.value > rhs_slab_mean_width(w) + 3.0 * pla.stderr_ + 1e-9) rep.perturbed_ok = false;
    }
    // Sub-slabs: slab intersected with a rotated slab; the oracle is composed
    // as the min of supports (an upper bound for the intersection's support).
    for (int i = 0; i < 100; ++i) {
        double w = uw(rng);
        double w2 = uw(rng);
        double ang = uang(rng);
        SupportOracleND base{dim, NdFamily::slab, w};
        SupportOracleND other{dim, NdFamily::slab, w2};
        uint64_t s = rng();
        const int d = dim;
        auto est = run_blocks(pert_samples, s, [&](long cnt, uint64_t bs) {
            std::mt19937_64 brng(bs);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::uniform_real_distribution<double> uth(0.0, kPi);
            std::vector<double> v(d), u(d), ru(d), nu(d), rnu(d);
            Accum a;
            double c0 = std::cos(ang), s0 = std::sin(ang);
            for (long k = 0; k < cnt; ++k) {
                double n2 = 0.0;
                for (int j = 0; j < d - 1; ++j) {
                    v[j] = gauss(brng);
                    n2 += v[j] * v[j];
                }
                v[d - 1] = 0.0;
                double inv = 1.0 / std::sqrt(n2);
                double th = uth(brng);
                double c = std::cos(th), sn = std::sin(th);
                for (int j = 0; j < d; ++j) u[j] = (j == d - 1) ? sn : c * v[j] * inv;
                // rotate u in the (x1, xn) plane before querying the other slab
                for (int j = 0; j < d; ++j) ru[j] = u[j];
                ru[0] = c0 * u[0] - s0 * u[d - 1];
                ru[d - 1] = s0 * u[0] + c0 * u[d - 1];
                for (int j = 0; j < d; ++j) {
                    nu[j] = -u[j];
                    rnu[j] = -ru[j];
                }
                double val = 0.5 * (std::min(base(u), other(ru)) + std::min(base(nu), other(rnu)));
                a.sum += val;
                a.sumsq += val * val;
                ++a.n;
            }
            return a;
        });
        if (est.value > rhs_slab_mean_width(w) + 3.0 * est.stderr_ + 1e-9) rep.perturbed_ok = false;
    }
    rep.perturbed_note =
        "bound direction checked on 20 perturbed slab widths and 100 min-composed sub-slab oracles "
        "(axis-plane reading)";
    return rep;
}

VRwReport certify_VRw(int dim, const std::vector<double>& w_grid) {
    if (dim < 2) throw std::invalid_argument("certify_VRw: dim >= 2 required");
    VRwReport rep;
    rep.dim = dim;
    rep.pass = true;
    for (double w : w_grid) {
        VRwRow row;
        row.w = w;
        row.lhs_quadrature = volume_slab(dim, w);
        row.rhs_hypergeometric = std::pow(kPi, (dim - 1) / 2.0) / gamma_fn((dim + 1) / 2.0) * w *
                                 (w > 0 ? hypergeometric_H(dim, w / 2.0) : 1.0);
        row.gap = std::abs(row.lhs_quadrature - row.rhs_hypergeometric);
        if (dim == 2) {
            row.closed_form = kPi - 2.0 * std::acos(std::clamp(w / 2.0, -1.0, 1.0)) +
                              w * std::sqrt(std::max(0.0, 1.0 - w * w / 4.0));
            row.has_closed = true;
        } else if (dim == 3) {
            row.closed_form = kPi * (w - w * w * w / 12.0);
            row.has_closed = true;
        } else if (dim == 4) {
            double hw = w / 2.0;
            row.closed_form = (kPi / 3.0) * (3.0 * std::asin(std::clamp(hw, -1.0, 1.0)) +
                                             hw * std::sqrt(std::max(0.0, 1.0 - hw * hw)) * (5.0 - 2.0 * hw * hw));
            row.has_closed = true;
        }
        rep.max_gap = std::max(rep.max_gap, row.gap);
        if (row.has_closed) rep.max_gap = std::max(rep.max_gap, std::abs(row.lhs_quadrature - row.closed_form));
        rep.rows.push_back(row);
    }
    rep.pass = rep.max_gap <= 1e-10;
    return rep;
}

}  // namespace santalo

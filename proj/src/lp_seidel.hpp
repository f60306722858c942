#pragma once

// Randomized incremental linear programming in dimension <= 3 (Seidel).
// Used for the Chebyshev-center program behind the inradius solver.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace santalo::detail {

struct LpConstraint {
    // a[0]*x0 + a[1]*x1 + a[2]*x2 <= b
    std::array<double, 3> a{0.0, 0.0, 0.0};
    double b = 0.0;
};

struct LpResult {
    bool feasible = false;
    std::array<double, 3> x{0.0, 0.0, 0.0};
};

inline LpResult lp_seidel_rec(int d, std::vector<LpConstraint> cons, std::array<double, 3> c, double bound,
                              std::mt19937_64& rng) {
    LpResult res;
    if (d == 1) {
        double lo = -bound, hi = bound;
        for (const auto& ct : cons) {
            double a = ct.a[0];
            double mag = std::abs(a);
            if (mag > 1e-14) {
                double v = ct.b / a;
                if (a > 0)
                    hi = std::min(hi, v);
                else
                    lo = std::max(lo, v);
            } else if (ct.b < -1e-11 * (1.0 + bound)) {
                return res;  // 0 <= b violated
            }
        }
        if (lo > hi + 1e-11 * (1.0 + std::abs(lo) + std::abs(hi))) return res;
        res.feasible = true;
        res.x[0] = (c[0] >= 0.0) ? hi : lo;
        return res;
    }

    std::array<double, 3> x{};
    for (int k = 0; k < d; ++k) x[k] = (c[k] >= 0.0) ? bound : -bound;
    std::shuffle(cons.begin(), cons.end(), rng);

    for (size_t i = 0; i < cons.size(); ++i) {
        const LpConstraint& ct = cons[i];
        double lhs = 0.0, amag = 0.0;
        for (int k = 0; k < d; ++k) {
            lhs += ct.a[k] * x[k];
            amag += ct.a[k] * ct.a[k];
        }
        amag = std::sqrt(amag);
        if (lhs <= ct.b + 1e-12 * (std::abs(ct.b) + amag * bound + 1.0)) continue;
        if (amag < 1e-14) return res;  // unsatisfiable degenerate row

        // Optimum lies on the hyperplane <a,x> = b. Parameterize and recurse.
        std::array<double, 3> n{};
        for (int k = 0; k < d; ++k) n[k] = ct.a[k] / amag;
        double off = ct.b / amag;
        std::array<double, 3> p0{};
        for (int k = 0; k < d; ++k) p0[k] = off * n[k];

        // Orthonormal basis of the hyperplane.
        std::array<std::array<double, 3>, 2> basis{};
        int nb = d - 1;
        if (d == 2) {
            basis[0] = {-n[1], n[0], 0.0};
        } else {
            int small = 0;
            for (int k = 1; k < 3; ++k)
                if (std::abs(n[k]) < std::abs(n[small])) small = k;
            std::array<double, 3> e{0.0, 0.0, 0.0};
            e[small] = 1.0;
            double en = e[0] * n[0] + e[1] * n[1] + e[2] * n[2];
            for (int k = 0; k < 3; ++k) e[k] -= en * n[k];
            double em = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
            for (int k = 0; k < 3; ++k) e[k] /= em;
            basis[0] = e;
            basis[1] = {n[1] * e[2] - n[2] * e[1], n[2] * e[0] - n[0] * e[2], n[0] * e[1] - n[1] * e[0]};
        }

        std::vector<LpConstraint> sub;
        sub.reserve(i);
        for (size_t j = 0; j < i; ++j) {
            LpConstraint sc;
            double rhs = cons[j].b;
            for (int k = 0; k < d; ++k) rhs -= cons[j].a[k] * p0[k];
            for (int m = 0; m < nb; ++m) {
                double coef = 0.0;
                for (int k = 0; k < d; ++k) coef += cons[j].a[k] * basis[m][k];
                sc.a[m] = coef;
            }
            sc.b = rhs;
            sub.push_back(sc);
        }
        std::array<double, 3> csub{0.0, 0.0, 0.0};
        for (int m = 0; m < nb; ++m)
            for (int k = 0; k < d; ++k) csub[m] += c[k] * basis[m][k];

        LpResult rsub = lp_seidel_rec(nb, std::move(sub), csub, 4.0 * bound, rng);
        if (!rsub.feasible) return res;
        for (int k = 0; k < d; ++k) {
            x[k] = p0[k];
            for (int m = 0; m < nb; ++m) x[k] += rsub.x[m] * basis[m][k];
        }
    }
    res.feasible = true;
    res.x = x;
    return res;
}

// Maximize c.x subject to cons and |x_k| <= bound.
inline LpResult lp_seidel(int dim, const std::vector<LpConstraint>& cons, std::array<double, 3> c, double bound,
                          uint64_t shuffle_seed = 0x5eed5eedULL) {
    std::vector<LpConstraint> all = cons;
    for (int k = 0; k < dim; ++k) {
        LpConstraint lo, hi;
        hi.a[k] = 1.0;
        hi.b = bound;
        lo.a[k] = -1.0;
        lo.b = bound;
        all.push_back(hi);
        all.push_back(lo);
    }
    std::mt19937_64 rng(shuffle_seed);
    return lp_seidel_rec(dim, std::move(all), c, bound, rng);
}

}  // namespace santalo::detail

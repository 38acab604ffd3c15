#pragma once

/**
 * Small numeric helpers: dense linear solves at tiny sizes, Gauss-Legendre
 * quadrature with interval doubling, a fixed-step RK4 driver, angle
 * reduction, and a bounded parallel map honouring STITCHKIT_THREADS.
 */

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include "stitchkit/errors.hpp"

namespace stitchkit {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting; sizes here are 1..4.
inline Vec solve_linear(Mat a, Vec rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) throw Error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec x(n, 0.0);
    for (size_t r = n; r-- > 0;) {
        double s = rhs[r];
        for (size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

inline Mat invert_matrix(const Mat& a) {
    const size_t n = a.size();
    Mat inv(n, Vec(n, 0.0));
    for (size_t c = 0; c < n; ++c) {
        Vec e(n, 0.0);
        e[c] = 1.0;
        Vec col = solve_linear(a, e);
        for (size_t r = 0; r < n; ++r) inv[r][c] = col[r];
    }
    return inv;
}

inline double frac_mod1(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

/// Distance on the circle of circumference 1.
inline double circle_dist(double a, double b) {
    double d = frac_mod1(a - b);
    return std::min(d, 1.0 - d);
}

/// 32-point Gauss-Legendre nodes/weights on [0, 1].
struct GaussLegendre32 {
    static const GaussLegendre32& get() {
        static GaussLegendre32 gl;
        return gl;
    }
    std::vector<double> x, w;

private:
    GaussLegendre32() {
        // nodes of P_32 on [-1,1] via Newton on Legendre recurrence
        const int n = 32;
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = 0.5 * (t + 1.0);
            w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

/// Integral of f over [0, 1] by composite 32-point Gauss-Legendre on
/// `panels` subintervals.
inline double gauss_integrate(const std::function<double(double)>& f, int panels = 1) {
    const auto& gl = GaussLegendre32::get();
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = double(p) / panels, h = 1.0 / panels;
        for (size_t i = 0; i < gl.x.size(); ++i) total += gl.w[i] * f(a + h * gl.x[i]) * h;
    }
    return total;
}

/// Doubles the panel count until the change drops below tol.
inline double gauss_integrate_adaptive(const std::function<double(double)>& f,
                                       double tol = 1e-11, int max_panels = 64) {
    double prev = gauss_integrate(f, 1);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        double next = gauss_integrate(f, panels);
        if (std::abs(next - prev) < tol) return next;
        prev = next;
    }
    return prev;
}

/// Classical RK4 with a fixed number of steps over [0, T].
template <typename State, typename Rhs>
State rk4(State z, double T, int steps, Rhs&& rhs) {
    if (steps <= 0) throw Error("rk4: need at least one step");
    const double h = T / steps;
    State k1, k2, k3, k4, tmp;
    for (int s = 0; s < steps; ++s) {
        k1 = rhs(z);
        tmp = z;
        for (size_t i = 0; i < z.size(); ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
        k2 = rhs(tmp);
        for (size_t i = 0; i < z.size(); ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
        k3 = rhs(tmp);
        for (size_t i = 0; i < z.size(); ++i) tmp[i] = z[i] + h * k3[i];
        k4 = rhs(tmp);
        for (size_t i = 0; i < z.size(); ++i)
            z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return z;
}

inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("STITCHKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, (unsigned)v);
    }
    return hw;
}

/// Runs fn(i) for i in [0, count); results must go to disjoint slots so the
/// outcome is independent of scheduling.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned threads = std::min<size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace stitchkit

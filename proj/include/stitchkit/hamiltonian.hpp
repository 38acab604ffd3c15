#pragma once

/**
 * Hamiltonian vector fields and flows on C^n with the standard symplectic
 * structure, z_k = x_k + i y_k.
 *
 * Orientation convention: the field of a real Hamiltonian H is
 *
 *     zdot_k = 2 i dH/dzbar_k,
 *
 * i.e. xdot = -dH/dy, ydot = dH/dx.  With this choice the flow of the moment
 * map (|z_1|^2 - |z_2|^2)/2 is z_1 -> e^{it} z_1, z_2 -> e^{-it} z_2, the
 * model circle action with time period 2 pi.  (The opposite contraction
 * convention rotates the action backwards; the sign here is fixed once,
 * globally, by that requirement.)
 */

#include <complex>
#include <functional>
#include <vector>

#include "stitchkit/errors.hpp"
#include "stitchkit/numeric.hpp"

namespace stitchkit {

using PhasePoint = std::vector<std::complex<double>>;

enum class Side { plus, minus, global_smooth };

/// Real scalar field with an optional analytic Wirtinger gradient
/// (d/dzbar_k); finite differences fill in when absent.
struct ScalarField {
    std::function<double(const PhasePoint&)> value;
    std::function<PhasePoint(const PhasePoint&)> dbar;
    Side side = Side::global_smooth;

    PhasePoint gradient_dbar(const PhasePoint& z) const {
        if (dbar) return dbar(z);
        const double h = 1e-6;
        PhasePoint g(z.size());
        PhasePoint w = z;
        for (size_t k = 0; k < z.size(); ++k) {
            w[k] = z[k] + h;
            double fxp = value(w);
            w[k] = z[k] - h;
            double fxm = value(w);
            w[k] = z[k] + std::complex<double>(0, h);
            double fyp = value(w);
            w[k] = z[k] - std::complex<double>(0, h);
            double fym = value(w);
            w[k] = z[k];
            double dx = (fxp - fxm) / (2 * h);
            double dy = (fyp - fym) / (2 * h);
            g[k] = std::complex<double>(dx, dy) * 0.5;  // (d/dx + i d/dy)/2
        }
        return g;
    }
};

/// zdot_k = 2 i dH/dzbar_k.
inline PhasePoint ham_field(const ScalarField& H, const PhasePoint& z) {
    PhasePoint g = H.gradient_dbar(z);
    for (auto& v : g) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw UndefinedAtPoint("ham_field: gradient undefined here");
        v *= std::complex<double>(0, 2);
    }
    return g;
}

/// Symplectic pairing of two tangent vectors, omega = sum dx_k ^ dy_k.
inline double symplectic_pairing(const PhasePoint& v, const PhasePoint& w) {
    double s = 0.0;
    for (size_t k = 0; k < v.size(); ++k) s += std::imag(std::conj(v[k]) * w[k]);
    return s;
}

inline double norm2(const PhasePoint& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

struct Trajectory {
    std::vector<double> t;
    std::vector<PhasePoint> z;
    std::vector<double> H;
};

struct IntegrateConfig {
    int steps = 0;             ///< 0: chosen from the step budget below
    double step = 1e-3;        ///< default step per unit time
    double drift_tol = 1e-8;   ///< allowed |H(end)-H(start)| per unit time
    int max_halvings = 6;
};

/// Fixed-step RK4 flow; retries with halved steps until the Hamiltonian
/// drift is within tolerance.
inline PhasePoint flow(const ScalarField& H, const PhasePoint& z0, double T,
                       IntegrateConfig cfg = {}) {
    if (T == 0.0) return z0;
    int steps = cfg.steps > 0 ? cfg.steps : std::max(16, (int)std::ceil(std::abs(T) / cfg.step));
    const double h0 = H.value(z0);
    auto rhs = [&](const PhasePoint& z) { return ham_field(H, z); };
    for (int attempt = 0;; ++attempt) {
        PhasePoint z = rk4(z0, T, steps, rhs);
        double drift = std::abs(H.value(z) - h0);
        if (drift <= cfg.drift_tol * std::max(1.0, std::abs(T))) return z;
        if (attempt >= cfg.max_halvings)
            throw DriftExceeded("flow: Hamiltonian drift " + std::to_string(drift));
        steps *= 2;
    }
}

/// Flow with a recorded trajectory (fixed steps, no adaptivity).
inline Trajectory integrate(const ScalarField& H, const PhasePoint& z0, double T, int steps,
                            double drift_tol = 1e-8) {
    if (steps <= 0) throw Error("integrate: need steps >= 1");
    Trajectory out;
    out.t.reserve(steps + 1);
    out.z.reserve(steps + 1);
    out.H.reserve(steps + 1);
    auto rhs = [&](const PhasePoint& z) { return ham_field(H, z); };
    PhasePoint z = z0;
    const double h0 = H.value(z0);
    for (int s = 0; s <= steps; ++s) {
        out.t.push_back(T * s / steps);
        out.z.push_back(z);
        out.H.push_back(H.value(z));
        if (std::abs(out.H.back() - h0) > drift_tol * std::max(1.0, std::abs(T)))
            throw DriftExceeded("integrate: Hamiltonian drift exceeded");
        if (s < steps) z = rk4(z, T / steps, 1, rhs);
    }
    return out;
}

} // namespace stitchkit

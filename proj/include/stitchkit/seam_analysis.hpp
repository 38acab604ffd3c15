#pragma once

/**
 * Seam-side numerics for the explicit fibrations: discrepancy extraction,
 * fibre-point continuation, reduced return searches, monodromy around loops
 * in the base, and cycle integrals of the first-order invariant.
 *
 * The reduced fibre of every example is parametrized by the arguments of
 * the invariant coordinates, so return searches track continuous windings of
 * those arguments; a return closes up to a circle-action phase, which is the
 * quantity the monodromy bookkeeping follows around a loop.  Crossing the
 * seam swaps the one-sided fields; the measured phase then jumps by the
 * cycle integral of the discrepancy coefficients, which is computed
 * independently by quadrature along the cycle and used to resolve the
 * winding branch at each crossing.
 */

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "stitchkit/hamiltonian.hpp"
#include "stitchkit/models.hpp"
#include "stitchkit/numeric.hpp"

namespace stitchkit {

struct DiscrepancyResult {
    std::vector<double> a;   ///< coefficients a_2..a_n
    double residual = 0.0;   ///< norm of the part not proportional to the circle field
};

/// Least-squares fit of (field_j^+ - field_j^-) = a_j * circle field at a
/// seam point; the fit residual is the deviation from proportionality.
inline DiscrepancyResult discrepancy(const ExampleFibration& ex, const PhasePoint& z,
                                     double seam_tol = 1e-7) {
    if (std::abs(ex.mu(z)) > seam_tol)
        throw UndefinedAtPoint("discrepancy: point is not on the seam");
    PhasePoint eta1 = ham_field(ex.mu_field(), z);
    double n1 = norm2(eta1);
    if (n1 < 1e-16) throw SingularPoint("discrepancy: circle field vanishes here");
    DiscrepancyResult out;
    for (int j = 2; j <= ex.n; ++j) {
        PhasePoint p = ham_field(ex.component(j, Side::plus), z);
        PhasePoint m = ham_field(ex.component(j, Side::minus), z);
        double dot = 0.0;
        for (size_t k = 0; k < p.size(); ++k) {
            std::complex<double> d = p[k] - m[k];
            dot += d.real() * eta1[k].real() + d.imag() * eta1[k].imag();
        }
        double a = dot / n1;
        double res = 0.0;
        for (size_t k = 0; k < p.size(); ++k) res += std::norm(p[k] - m[k] - a * eta1[k]);
        out.a.push_back(a);
        out.residual = std::max(out.residual, std::sqrt(res));
    }
    return out;
}

/// Checks invariance of every component under the circle action.
inline bool invariance_check(const ExampleFibration& ex, const PhasePoint& z, double theta,
                             double tol = 1e-10) {
    Vec f0 = ex.f(z);
    Vec f1 = ex.f(ex.rotate(z, theta));
    for (int i = 0; i < ex.n; ++i)
        if (std::abs(f0[i] - f1[i]) > tol) return false;
    return true;
}

/// Adjudicates the printed-formula sign variant against the numeric
/// extractor and stores the result on the example.
inline ExampleFibration make_example(const std::string& name) {
    ExampleFibration ex = make_example_impl(name);
    // probe points on the seam, inside the domain of every example
    std::vector<PhasePoint> probes;
    if (ex.n == 2) {
        probes.push_back({std::complex<double>(1.1, 0.4), std::complex<double>(0.3, 1.13)});
        probes.push_back({std::complex<double>(0.9, -0.7), std::complex<double>(1.1, 0.25)});
    } else {
        probes.push_back({std::complex<double>(1.1, 0.4), std::complex<double>(0.3, 1.13),
                          std::complex<double>(0.4, 2.2)});
        probes.push_back({std::complex<double>(0.9, -0.7), std::complex<double>(1.1, 0.25),
                          std::complex<double>(-2.1, 0.6)});
    }
    for (auto& z : probes) {  // project the second entry onto |z2| = |z1|
        z[1] *= std::abs(z[0]) / std::abs(z[1]);
    }
    SignVariant best;
    double best_err = 1e300;
    for (int num : {1, -1}) {
        for (int den : {1, -1}) {
            SignVariant v{num, den};
            double err = 0.0;
            bool ok = true;
            for (const auto& z : probes) {
                if (!ex.in_domain(z)) { ok = false; break; }
                try {
                    DiscrepancyResult d = discrepancy(ex, z);
                    std::vector<double> cf = ex.closed_form_a(z, v);
                    for (int i = 0; i < ex.n - 1; ++i) err = std::max(err, std::abs(d.a[i] - cf[i]));
                } catch (const Error&) {
                    ok = false;
                    break;
                }
            }
            if (ok && err < best_err) {
                best_err = err;
                best = v;
            }
        }
    }
    ex.variant = best;
    ex.variant_is_printed = (best.num == 1 && best.den == 1);
    if (ex.name == "focus_focus")  // the two-dimensional printed form carries den = -1
        ex.variant_is_printed = (best.num == 1 && best.den == -1);
    return ex;
}

/// Newton continuation of a fibre point: moves z so that f(z) = target,
/// taking the minimum-norm step of the underdetermined system.
inline PhasePoint fibre_point(const ExampleFibration& ex, const Vec& target, PhasePoint z,
                              int max_iter = 60, double tol = 1e-12) {
    const int n = ex.n;
    for (int iter = 0; iter < max_iter; ++iter) {
        Side side = target[0] > 0 ? Side::plus : Side::minus;
        Vec fv = ex.f_side(z, side);
        Vec r(n);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            r[i] = fv[i] - target[i];
            norm = std::max(norm, std::abs(r[i]));
        }
        if (norm < tol) return z;
        // rows of the real Jacobian from the Wirtinger gradients
        std::vector<PhasePoint> grads;
        grads.push_back(ex.mu_field().gradient_dbar(z));
        for (int j = 2; j <= n; ++j) grads.push_back(ex.component(j, side).gradient_dbar(z));
        Mat jjt(n, Vec(n, 0.0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += 4.0 * (grads[a][k].real() * grads[b][k].real() +
                                grads[a][k].imag() * grads[b][k].imag());
                jjt[a][b] = s;
            }
        Vec lambda = solve_linear(jjt, r);
        for (int k = 0; k < n; ++k) {
            std::complex<double> step(0, 0);
            for (int a = 0; a < n; ++a) step += lambda[a] * 2.0 * grads[a][k];
            z[k] -= step;
        }
    }
    throw ContinuationLost("fibre_point: Newton did not converge");
}

namespace detail {

/// Velocity of the invariant coordinates along a tangent vector.
inline PhasePoint coord_velocity(const ExampleFibration& ex, Side side, const PhasePoint& z,
                                 const PhasePoint& zdot) {
    GammaJet g = gamma_jet(z, side);
    std::complex<double> gdot = g.d1 * zdot[0] + g.d1bar * std::conj(zdot[0]) +
                                g.d2 * zdot[1] + g.d2bar * std::conj(zdot[1]);
    PhasePoint out(ex.n - 1);
    for (int i = 0; i < ex.n - 1; ++i) {
        const LogComponent& c = ex.components[i];
        std::complex<double> v = c.A * gdot;
        if (ex.n >= 3) v += c.B * zdot[2];
        out[i] = v * std::exp(c.shift);
    }
    return out;
}

inline double principal(double angle) {
    while (angle > std::numbers::pi) angle -= two_pi;
    while (angle <= -std::numbers::pi) angle += two_pi;
    return angle;
}

struct TrackResult {
    PhasePoint z;
    Vec dargs;  ///< accumulated argument increments of the invariant coordinates
};

/// RK4 flow of one component field with continuous winding of the invariant
/// coordinate arguments.  Steps are sized against the winding rate.
inline TrackResult flow_track(const ExampleFibration& ex, int j, Side side, PhasePoint z,
                              double T, double max_step_rad = 0.04) {
    TrackResult out;
    out.dargs.assign(ex.n - 1, 0.0);
    if (T == 0.0) {
        out.z = std::move(z);
        return out;
    }
    ScalarField H = ex.component(j, side);
    auto rhs = [&](const PhasePoint& p) { return ham_field(H, p); };
    // rate estimate at the start sizes the step
    PhasePoint v = ex.invariant_coords(z, side);
    PhasePoint vdot = coord_velocity(ex, side, z, rhs(z));
    double rate = 0.0;
    for (int i = 0; i < ex.n - 1; ++i)
        rate = std::max(rate, std::abs(std::imag(std::conj(v[i]) * vdot[i])) / std::norm(v[i]));
    int steps = std::max(48, (int)std::ceil(1.5 * rate * std::abs(T) / max_step_rad));
    PhasePoint prev = v;
    for (int s = 0; s < steps; ++s) {
        z = rk4(z, T / steps, 1, rhs);
        PhasePoint cur = ex.invariant_coords(z, side);
        for (int i = 0; i < ex.n - 1; ++i) {
            double d = std::arg(cur[i] / prev[i]);
            out.dargs[i] += d;
        }
        prev = cur;
    }
    out.z = std::move(z);
    return out;
}

/// Composed flow of the component fields (j = n first) with winding totals.
inline TrackResult trace_cycle(const ExampleFibration& ex, Side side, const PhasePoint& z0,
                               const Vec& times) {
    TrackResult total;
    total.z = z0;
    total.dargs.assign(ex.n - 1, 0.0);
    for (int j = ex.n; j >= 2; --j) {
        TrackResult leg = flow_track(ex, j, side, total.z, times[j - 2]);
        total.z = std::move(leg.z);
        for (int i = 0; i < ex.n - 1; ++i) total.dargs[i] += leg.dargs[i];
    }
    return total;
}

/// Newton search for the reduced times whose composed flow winds the
/// invariant arguments by the given target (multiples of 2 pi).
inline Vec polish_generator(const ExampleFibration& ex, Side side, const PhasePoint& z0,
                            Vec times, const Vec& target, double tol = 1e-10) {
    const int m = ex.n - 1;
    for (int iter = 0; iter < 40; ++iter) {
        TrackResult tr = trace_cycle(ex, side, z0, times);
        Vec r(m);
        double norm = 0.0;
        for (int i = 0; i < m; ++i) {
            r[i] = tr.dargs[i] - target[i];
            norm = std::max(norm, std::abs(r[i]));
        }
        if (norm < tol) return times;
        // Jacobian: winding rates at the endpoint (the flows commute, so
        // extending segment j appends a flow of field j at the end)
        Mat jac(m, Vec(m, 0.0));
        PhasePoint v = ex.invariant_coords(tr.z, side);
        for (int j = 2; j <= ex.n; ++j) {
            PhasePoint field = ham_field(ex.component(j, side), tr.z);
            PhasePoint vdot = coord_velocity(ex, side, tr.z, field);
            for (int i = 0; i < m; ++i)
                jac[i][j - 2] = std::imag(std::conj(v[i]) * vdot[i]) / std::norm(v[i]);
        }
        Vec step = solve_linear(jac, r);
        double cap = 0.0;
        for (int i = 0; i < m; ++i) cap = std::max(cap, std::abs(step[i]));
        double damp = cap > 20.0 ? 20.0 / cap : 1.0;  // keep steps sane
        for (int i = 0; i < m; ++i) times[i] -= damp * step[i];
        if (iter == 39) throw ReturnSearchFailed("reduced return search stalled");
    }
    return times;
}

/// Phase of the circle element closing a reduced return; validated against
/// the whole point.
inline double measure_phase(const ExampleFibration& ex, Side side, const PhasePoint& z0,
                            const Vec& times, double val_tol = 1e-5) {
    TrackResult tr = trace_cycle(ex, side, z0, times);
    double theta;
    if (std::abs(z0[0]) > 1e-6)
        theta = std::arg(tr.z[0] / z0[0]);
    else
        theta = -std::arg(tr.z[1] / z0[1]);
    PhasePoint expect = ex.rotate(z0, theta);
    double err = 0.0, scale = 0.0;
    for (int k = 0; k < ex.n; ++k) {
        err = std::max(err, std::abs(tr.z[k] - expect[k]));
        scale = std::max(scale, std::abs(z0[k]));
    }
    if (err > val_tol * std::max(1.0, scale))
        throw ContinuationLost("reduced return does not close to a circle element");
    return theta;
}

/// Integral of sum_j a_j dt_j along the composed cycle, traced with the
/// minus-side fields on the seam (the value the phase jumps by when the
/// one-sided fields are swapped).
inline double cycle_discrepancy_integral(const ExampleFibration& ex, const PhasePoint& z0,
                                         const Vec& times, double max_step_rad = 0.04) {
    PhasePoint z = z0;
    double acc = 0.0;
    for (int j = ex.n; j >= 2; --j) {
        double T = times[j - 2];
        if (T == 0.0) continue;
        ScalarField H = ex.component(j, Side::minus);
        auto rhs = [&](const PhasePoint& p) { return ham_field(H, p); };
        PhasePoint v = ex.invariant_coords(z, Side::minus);
        PhasePoint vdot = coord_velocity(ex, Side::minus, z, rhs(z));
        double rate = 0.0;
        for (int i = 0; i < ex.n - 1; ++i)
            rate = std::max(rate,
                            std::abs(std::imag(std::conj(v[i]) * vdot[i])) / std::norm(v[i]));
        int steps = std::max(64, (int)std::ceil(1.5 * rate * std::abs(T) / max_step_rad));
        // RK4 on the state augmented by the running integral of a_j
        const double h = T / steps;
        for (int s = 0; s < steps; ++s) {
            auto a_at = [&](const PhasePoint& p) { return discrepancy(ex, p).a[j - 2]; };
            PhasePoint k1 = rhs(z);
            double g1 = a_at(z);
            PhasePoint zt(z.size());
            for (size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + 0.5 * h * k1[i];
            PhasePoint k2 = rhs(zt);
            double g2 = a_at(zt);
            for (size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + 0.5 * h * k2[i];
            PhasePoint k3 = rhs(zt);
            double g3 = a_at(zt);
            for (size_t i = 0; i < z.size(); ++i) zt[i] = z[i] + h * k3[i];
            PhasePoint k4 = rhs(zt);
            double g4 = a_at(zt);
            for (size_t i = 0; i < z.size(); ++i)
                z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            acc += h / 6.0 * (g1 + 2.0 * g2 + 2.0 * g3 + g4);
        }
    }
    return acc;
}

} // namespace detail

/// Loop in the base crossing the wall at parameter 0 and pi:
///   b(psi) = center + radius (cos(psi) wall_axis + sin(psi) transverse_axis).
struct LoopSpec {
    Vec center;        ///< base point, b_1..b_n, with center[0] = 0
    int wall_axis = 1; ///< index (0-based) of the in-wall direction
    double radius = 0.8;
    int samples = 64;  ///< at least 64, must be even
};

inline Vec loop_point(const LoopSpec& loop, double psi) {
    Vec b = loop.center;
    b[loop.wall_axis] += loop.radius * std::cos(psi);
    b[0] += loop.radius * std::sin(psi);
    return b;
}

struct MonodromyResult {
    std::vector<std::vector<long>> matrix;  ///< integer monodromy, first row carries the shears
    Mat raw;
    double snap_error = 0.0;
};

struct MonodromyConfig {
    double seam_tol = 1e-9;
    double phase_jump_cap = 0.8;  ///< allowed residue between measured and predicted jumps
};

/// Continues the period data of the fibration around the loop and snaps the
/// change of basis to integers.  The first homology generator is the circle
/// orbit; the remaining generators are the reduced cycles dual to the
/// invariant-coordinate angles.
inline MonodromyResult monodromy(const ExampleFibration& ex, const LoopSpec& loop,
                                 const PhasePoint& seed, const MonodromyConfig& cfg = {}) {
    const int n = ex.n;
    const int K = loop.samples;
    if (K < 8 || K % 2 != 0) throw Error("monodromy: need an even number of samples, >= 8");

    // start at psi = 0, which lies on the seam
    Vec b0 = loop_point(loop, 0.0);
    PhasePoint z = fibre_point(ex, b0, seed);

    // initial generators on the seam fibre, measured with the minus fields
    std::vector<Vec> times(n - 1);
    std::vector<double> theta(n - 1);
    std::vector<double> theta_start(n - 1);
    std::vector<Vec> times_start(n - 1);
    for (int g = 0; g < n - 1; ++g) {
        Vec target(n - 1, 0.0);
        target[g] = two_pi;
        Vec seed_t(n - 1, 0.0);
        // seed from the winding rate of the matching coordinate
        PhasePoint v = ex.invariant_coords(z, Side::minus);
        PhasePoint field = ham_field(ex.component(g + 2, Side::minus), z);
        PhasePoint vdot = detail::coord_velocity(ex, Side::minus, z, field);
        double rate = std::imag(std::conj(v[g]) * vdot[g]) / std::norm(v[g]);
        seed_t[g] = two_pi / rate;
        times[g] = detail::polish_generator(ex, Side::minus, z, seed_t, target);
        theta[g] = detail::measure_phase(ex, Side::minus, z, times[g]);
        theta_start[g] = theta[g];
        times_start[g] = times[g];
    }

    Side side = Side::minus;  // the arc psi in (0, pi) has b_1 > 0: switches at psi=0
    double snap_err = 0.0;
    for (int s = 0; s <= K; ++s) {
        double psi = two_pi * s / K;
        Vec b = loop_point(loop, psi);
        bool on_seam = std::abs(b[0]) < cfg.seam_tol * std::max(1.0, loop.radius);
        if (s > 0) z = fibre_point(ex, b, z);
        if (on_seam) {
            // measure on the incoming side; bridge to the outgoing side
            // except at the closing sample, which only takes the final reading
            Side incoming = side;
            Side outgoing = (incoming == Side::plus) ? Side::minus : Side::plus;
            for (int g = 0; g < n - 1; ++g) {
                Vec target(n - 1, 0.0);
                target[g] = two_pi;
                times[g] = detail::polish_generator(ex, incoming, z, times[g], target);
                double th_in = detail::measure_phase(ex, incoming, z, times[g]);
                if (s > 0) theta[g] += detail::principal(th_in - theta[g]);
                if (s == K) continue;
                double jump = detail::cycle_discrepancy_integral(ex, z, times[g]);
                double signed_jump = (outgoing == Side::plus) ? jump : -jump;
                double th_out = detail::measure_phase(ex, outgoing, z, times[g]);
                double delta = detail::principal(th_out - (theta[g] + signed_jump));
                if (std::abs(delta) > cfg.phase_jump_cap)
                    throw ContinuationLost("monodromy: seam jump did not match the predicted branch");
                theta[g] += signed_jump + delta;
            }
            if (s < K) side = outgoing;
        } else if (s > 0) {
            Side here = b[0] > 0 ? Side::plus : Side::minus;
            if (here != side) throw ContinuationLost("monodromy: lost track of the side");
            for (int g = 0; g < n - 1; ++g) {
                Vec target(n - 1, 0.0);
                target[g] = two_pi;
                times[g] = detail::polish_generator(ex, side, z, times[g], target);
                double th = detail::measure_phase(ex, side, z, times[g]);
                theta[g] += detail::principal(th - theta[g]);
            }
        }
    }

    // the reduced generators must come back to themselves
    for (int g = 0; g < n - 1; ++g)
        for (int i = 0; i < n - 1; ++i)
            if (std::abs(times[g][i] - times_start[g][i]) >
                1e-5 * std::max(1.0, std::abs(times_start[g][i])))
                throw ContinuationLost("monodromy: reduced generators mixed along the loop");

    MonodromyResult out;
    out.raw.assign(n, Vec(n, 0.0));
    out.matrix.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        out.raw[i][i] = 1.0;
        out.matrix[i][i] = 1;
    }
    for (int g = 0; g < n - 1; ++g) {
        double winding = (theta[g] - theta_start[g]) / two_pi;
        long snapped = std::lround(winding);
        snap_err = std::max(snap_err, std::abs(winding - double(snapped)));
        // continued generator g returns as (generator g) - winding * (circle orbit);
        // in the first-row convention the shear sits at (0, g+1)
        out.raw[0][g + 1] = -winding;
        out.matrix[0][g + 1] = -snapped;
    }
    out.snap_error = snap_err;
    if (snap_err > 1e-3) throw ContinuationLost("monodromy: winding failed to snap to integers");
    return out;
}

/// Integer-conjugacy test over the 2x2 unimodular group: unipotent shears
/// are classified by the gcd of the off-diagonal data.
inline bool conjugate_to_unit_shear(const std::vector<std::vector<long>>& m) {
    if (m.size() != 2) return false;
    long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long tr = m[0][0] + m[1][1];
    if (det != 1 || tr != 2) return false;
    long a = m[0][0] - 1, b = m[0][1], c = m[1][0], d = m[1][1] - 1;
    if (a == 0 && b == 0 && c == 0 && d == 0) return false;  // identity
    // (M - I)^2 = 0 holds automatically for det 1, trace 2; check gcd = 1
    long g = 0;
    for (long v : {a, b, c, d}) g = std::gcd(g, std::abs(v));
    return g == 1;
}

/// Cycle integrals of the first-order invariant over the reduced fibre
/// cycles at a wall point, in units of the circle period.  Returns one value
/// per generator.
inline Vec cohomology_jump(const ExampleFibration& ex, const Vec& wall_point,
                           const PhasePoint& seed) {
    const int n = ex.n;
    Vec base(n, 0.0);
    for (int i = 1; i < n; ++i) base[i] = wall_point[i - 1];
    PhasePoint z = fibre_point(ex, base, seed);
    Vec out(n - 1, 0.0);
    for (int g = 0; g < n - 1; ++g) {
        Vec target(n - 1, 0.0);
        target[g] = two_pi;
        PhasePoint v = ex.invariant_coords(z, Side::minus);
        PhasePoint field = ham_field(ex.component(g + 2, Side::minus), z);
        PhasePoint vdot = detail::coord_velocity(ex, Side::minus, z, field);
        double rate = std::imag(std::conj(v[g]) * vdot[g]) / std::norm(v[g]);
        Vec seed_t(n - 1, 0.0);
        seed_t[g] = two_pi / rate;
        Vec times = detail::polish_generator(ex, Side::minus, z, seed_t, target);
        out[g] = detail::cycle_discrepancy_integral(ex, z, times) / two_pi;
    }
    return out;
}

/// A convenient seam point over the given wall coordinates, used to seed
/// fibre continuation.  On the seam |z1| = |z2| = |gamma|, so a value of the
/// invariant lifts to z1 = |gamma|, z2 = gamma.
inline PhasePoint seam_seed(const ExampleFibration& ex, const Vec& wall_point) {
    if (ex.n == 2) {
        // w = gamma + 1 with |w| = e^{b2}; phase chosen to keep gamma away from 0
        std::complex<double> g =
            std::exp(wall_point[0]) * std::exp(std::complex<double>(0, 1.0)) - 1.0;
        double r = std::abs(g);
        return {std::complex<double>(r, 0), g};
    }
    if (ex.name == "leg") {
        std::complex<double> z3 = std::exp(wall_point[0]);
        std::complex<double> g = 1.0 + std::exp(wall_point[1]);
        double r = std::abs(g);
        return {std::complex<double>(r, 0), g, z3};
    }
    // amoeba: v1 = (gamma - z3)/sqrt2, v2 = (gamma + z3 - sqrt2)/sqrt2, so
    // gamma = (v1 + v2 + 1)/sqrt2 and z3 = (v2 - v1 + 1)/sqrt2; positive
    // moduli keep gamma away from zero off the discriminant
    const double r2 = std::sqrt(2.0);
    std::complex<double> v1 = std::exp(wall_point[0]);
    std::complex<double> v2 = std::exp(wall_point[1]);
    std::complex<double> gamma_v = (v1 + v2 + 1.0) / r2;
    std::complex<double> z3 = (v2 - v1 + 1.0) / r2;
    double r = std::abs(gamma_v);
    return {std::complex<double>(r, 0), gamma_v, z3};
}

} // namespace stitchkit

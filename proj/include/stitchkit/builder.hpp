#pragma once

/**
 * Numerical realization of a fibration with a prescribed truncated invariant
 * sequence.
 *
 * From the Taylor sequence of a closed invariant sequence, the coefficient
 * series a_j(r, b, y) = sum_k a_{j,k}(b, y) r^k defines, for each phase point
 * (b', y'), the nonlinear system
 *
 *     b_j + a_j(b_1', b, y') = b_j',    j = 2..n,
 *
 * whose solution b gives the fibration u_1 = b_1', u_j(b', y') = b_j.  The
 * map is smooth, circle invariant, restricts to the base projection on the
 * seam, and its Hamiltonian flows realize the gluing map between the two
 * action-angle models along the seam.
 *
 * Phase-space conventions on (b, y), angles of period 1:
 *     ydot_k = dH/db_k,   bdot_k = -dH/dy_k,
 * so the flow of the coordinate function b_j is the unit translation of y_j.
 */

#include <functional>
#include <random>
#include <vector>

#include "stitchkit/invariant_calculus.hpp"
#include "stitchkit/numeric.hpp"
#include "stitchkit/sections.hpp"

namespace stitchkit {

struct NewtonConfig {
    double tol = 1e-12;   ///< residual norm accepted as converged
    int max_iter = 50;
};

struct BuildDomain {
    double eps = 0.1;                ///< transverse half-width, b_1 in [-eps, eps]
    double base_halfwidth = 1.0;     ///< |b_j| bound on the wall, j >= 2
};

/// Point of the torus phase space (b, y); y entries live on R/Z but are kept
/// as reals on the cover.
struct TorusPhasePoint {
    Vec b;  ///< b_1..b_n
    Vec y;  ///< y_1..y_n
};

struct GluePoint {
    Vec b;        ///< b_2..b_n on the wall
    double t1;    ///< first angle
    Vec tbar;     ///< t_2..t_n
};

class BuiltFibration {
public:
    BuiltFibration(EllSequence ell, BuildDomain domain, NewtonConfig newton = {})
        : ell_(std::move(ell)), domain_(domain), newton_(newton) {
        if (!ell_.closed()) throw NotClosed("build: invariant sequence is not fibrewise closed");
        n_ = ell_.dim();
        order_ = ell_.order();
        s_ = ell_to_s(ell_);
        // coefficient tables and their exact derivatives
        a_.assign(order_ + 1, std::vector<TorusFunction>(n_ - 1, TorusFunction(n_)));
        da_db_.assign(order_ + 1,
                      std::vector<std::vector<TorusFunction>>(
                          n_ - 1, std::vector<TorusFunction>(n_ - 1, TorusFunction(n_))));
        da_dy_.assign(order_ + 1,
                      std::vector<std::vector<TorusFunction>>(
                          n_ - 1, std::vector<TorusFunction>(n_ - 1, TorusFunction(n_))));
        for (int k = 1; k <= order_; ++k) {
            for (int j = 2; j <= n_; ++j) {
                a_[k][j - 2] = ell_.at(k).a(j);
                for (int l = 2; l <= n_; ++l) {
                    da_db_[k][j - 2][l - 2] = a_[k][j - 2].d_base(l);
                    da_dy_[k][j - 2][l - 2] = a_[k][j - 2].d_angle(l);
                }
            }
        }
        certify();
    }

    int dim() const { return n_; }
    int order() const { return order_; }
    double certified_eps() const { return certified_eps_; }
    const EllSequence& ell() const { return ell_; }
    const SSequence& taylor() const { return s_; }
    const BuildDomain& domain() const { return domain_; }

    /// a_j(r, b, y) with b, y the reduced coordinates (indices 2..n).
    double coeff_a(int j, double r, const Vec& b, const Vec& y) const {
        double out = 0.0, rk = 1.0;
        for (int k = 1; k <= order_; ++k) {
            rk *= r;
            out += rk * a_[k][j - 2].evaluate(b, y);
        }
        return out;
    }

    /// u(b', y') for a full phase point; u_1 = b_1'.
    Vec u(const TorusPhasePoint& p) const {
        Vec fibre = solve_base(p);
        Vec out(n_);
        out[0] = p.b[0];
        for (int j = 2; j <= n_; ++j) out[j - 1] = fibre[j - 2];
        return out;
    }

    /// u together with all first derivatives, via implicit differentiation of
    /// the defining system (exact up to the Newton tolerance).
    struct Jet {
        Vec u;        ///< u_1..u_n
        Mat du_db;    ///< du_i/db_k', n x n
        Mat du_dy;    ///< du_i/dy_k', n x n (the y_1 column is zero)
    };

    Jet jet(const TorusPhasePoint& p) const {
        Jet out;
        Vec fibre = solve_base(p);
        out.u.assign(n_, 0.0);
        out.u[0] = p.b[0];
        for (int j = 2; j <= n_; ++j) out.u[j - 1] = fibre[j - 2];
        out.du_db.assign(n_, Vec(n_, 0.0));
        out.du_dy.assign(n_, Vec(n_, 0.0));
        out.du_db[0][0] = 1.0;

        const double r = p.b[0];
        const Vec yred(p.y.begin() + 1, p.y.end());
        // G_j(b; r, b', y') = b_j + a_j(r, b, y') - b_j' = 0
        Mat dG_db(n_ - 1, Vec(n_ - 1, 0.0));  // w.r.t. the unknowns b
        Vec dG_dr(n_ - 1, 0.0);
        Mat dG_dy(n_ - 1, Vec(n_ - 1, 0.0));
        for (int j = 2; j <= n_; ++j) {
            for (int l = 2; l <= n_; ++l) {
                double acc = 0.0, accy = 0.0, rk = 1.0;
                for (int k = 1; k <= order_; ++k) {
                    rk *= r;
                    acc += rk * da_db_[k][j - 2][l - 2].evaluate(fibre, yred);
                    accy += rk * da_dy_[k][j - 2][l - 2].evaluate(fibre, yred);
                }
                dG_db[j - 2][l - 2] = (j == l ? 1.0 : 0.0) + acc;
                dG_dy[j - 2][l - 2] = accy;
            }
            double accr = 0.0, rk = 1.0;
            for (int k = 1; k <= order_; ++k) {
                accr += k * rk * a_[k][j - 2].evaluate(fibre, yred);
                rk *= r;
            }
            dG_dr[j - 2] = accr;
        }
        Mat inv = invert_matrix(dG_db);
        // db/db_1' = -J^{-1} dG/dr ; db/db_l' = +J^{-1} e_l ; db/dy_l' = -J^{-1} dG/dy_l
        for (int j = 2; j <= n_; ++j) {
            double dr = 0.0;
            for (int s = 0; s < n_ - 1; ++s) dr += inv[j - 2][s] * dG_dr[s];
            out.du_db[j - 1][0] = -dr;
            for (int l = 2; l <= n_; ++l) {
                out.du_db[j - 1][l - 1] = inv[j - 2][l - 2];
                double dy = 0.0;
                for (int s = 0; s < n_ - 1; ++s) dy += inv[j - 2][s] * dG_dy[s][l - 2];
                out.du_dy[j - 1][l - 1] = -dy;
            }
        }
        return out;
    }

    /// Hamiltonian vector field of u_j at p: (bdot, ydot) packed as 2n reals.
    Vec ham_field_u(int j, const TorusPhasePoint& p) const {
        Jet jt = jet(p);
        Vec out(2 * n_, 0.0);
        for (int k = 0; k < n_; ++k) {
            out[k] = -jt.du_dy[j - 1][k];        // bdot_k
            out[n_ + k] = jt.du_db[j - 1][k];    // ydot_k
        }
        return out;
    }

private:
    /// Newton solve of the defining system at one phase point.
    Vec solve_base(const TorusPhasePoint& p) const {
        if ((int)p.b.size() != n_ || (int)p.y.size() != n_)
            throw DimensionMismatch("BuiltFibration: phase point has wrong dimension");
        const double r = p.b[0];
        const Vec target(p.b.begin() + 1, p.b.end());
        const Vec yred(p.y.begin() + 1, p.y.end());
        Vec b = target;  // contraction regime: projection is the natural seed
        double prev = 1e300;
        for (int iter = 0; iter < newton_.max_iter; ++iter) {
            Vec g(n_ - 1, 0.0);
            double norm = 0.0;
            for (int j = 2; j <= n_; ++j) {
                g[j - 2] = b[j - 2] - target[j - 2];
                double rk = 1.0;
                for (int k = 1; k <= order_; ++k) {
                    rk *= r;
                    g[j - 2] += rk * a_[k][j - 2].evaluate(b, yred);
                }
                norm = std::max(norm, std::abs(g[j - 2]));
            }
            // push below the tolerance and on to the roundoff floor
            if (norm < 1e-15 || (norm < newton_.tol && norm > prev * 0.1)) return b;
            prev = norm;
            Mat jac(n_ - 1, Vec(n_ - 1, 0.0));
            for (int j = 2; j <= n_; ++j) {
                for (int l = 2; l <= n_; ++l) {
                    double acc = 0.0, rk = 1.0;
                    for (int k = 1; k <= order_; ++k) {
                        rk *= r;
                        acc += rk * da_db_[k][j - 2][l - 2].evaluate(b, yred);
                    }
                    jac[j - 2][l - 2] = (j == l ? 1.0 : 0.0) + acc;
                }
            }
            Vec step = solve_linear(jac, g);
            double damp = 1.0;
            for (int half = 0; half < 8; ++half) {
                Vec trial = b;
                for (int s = 0; s < n_ - 1; ++s) trial[s] -= damp * step[s];
                double tnorm = 0.0;
                for (int j = 2; j <= n_; ++j) {
                    double gj = trial[j - 2] - target[j - 2], rk = 1.0;
                    for (int k = 1; k <= order_; ++k) {
                        rk *= r;
                        gj += rk * a_[k][j - 2].evaluate(trial, yred);
                    }
                    tnorm = std::max(tnorm, std::abs(gj));
                }
                if (tnorm < norm || damp < 1e-2) {
                    b = trial;
                    break;
                }
                damp *= 0.5;
            }
        }
        // converged iterations exit above; reaching here is divergence
        throw NewtonDivergence("fibration solve diverged at b1=" + std::to_string(r));
    }

    /// Shrinks eps until the Newton solve converges on a sample grid.
    void certify() {
        double eps = domain_.eps;
        std::mt19937_64 rng(777);
        std::uniform_real_distribution<double> ub(-domain_.base_halfwidth, domain_.base_halfwidth);
        std::uniform_real_distribution<double> uy(0.0, 1.0);
        while (eps > 1e-6) {
            bool ok = true;
            try {
                for (int trial = 0; trial < 64 && ok; ++trial) {
                    TorusPhasePoint p;
                    p.b.assign(n_, 0.0);
                    p.y.assign(n_, 0.0);
                    p.b[0] = (trial % 2 ? -eps : eps) * (0.25 + 0.75 * uy(rng));
                    for (int j = 1; j < n_; ++j) p.b[j] = ub(rng);
                    for (int j = 0; j < n_; ++j) p.y[j] = uy(rng);
                    (void)u(p);
                }
            } catch (const NewtonDivergence&) {
                ok = false;
            }
            if (ok) {
                certified_eps_ = eps;
                domain_.eps = eps;
                return;
            }
            eps *= 0.5;
        }
        throw DomainTooLarge("build: no transverse width could be certified");
    }

    EllSequence ell_{2, 1};
    BuildDomain domain_;
    NewtonConfig newton_;
    SSequence s_{2, 1};
    int n_ = 2;
    int order_ = 1;
    double certified_eps_ = 0.0;
    std::vector<std::vector<TorusFunction>> a_;                 ///< a_[k][j-2]
    std::vector<std::vector<std::vector<TorusFunction>>> da_db_;
    std::vector<std::vector<std::vector<TorusFunction>>> da_dy_;
};

inline BuiltFibration build(EllSequence ell, BuildDomain domain = {}, NewtonConfig newton = {}) {
    return BuiltFibration(std::move(ell), domain, newton);
}

enum class GluePath { straight, axis_ordered };

/// Line integral of a first-order section from 0 to tbar in one fibre,
/// along the straight path or the axis-ordered path.
inline double glue_line_integral(const LSection& ell1, const Vec& b, const Vec& tbar,
                                 GluePath path = GluePath::straight, double tol = 1e-11) {
    const int n = ell1.dim();
    if ((int)b.size() != n - 1 || (int)tbar.size() != n - 1)
        throw DimensionMismatch("glue_line_integral: bad point");
    if (path == GluePath::straight) {
        auto f = [&](double s) {
            Vec y(n - 1);
            for (int i = 0; i < n - 1; ++i) y[i] = s * tbar[i];
            double acc = 0.0;
            for (int j = 2; j <= n; ++j) acc += ell1.a(j).evaluate(b, y) * tbar[j - 2];
            return acc;
        };
        return gauss_integrate_adaptive(f, tol);
    }
    // axis-ordered: run each angle in turn, earlier ones already at final value
    double total = 0.0;
    for (int j = 2; j <= n; ++j) {
        if (tbar[j - 2] == 0.0) continue;
        auto f = [&](double s) {
            Vec y(n - 1, 0.0);
            for (int i = 0; i < j - 2; ++i) y[i] = tbar[i];
            y[j - 2] = s * tbar[j - 2];
            return ell1.a(j).evaluate(b, y) * tbar[j - 2];
        };
        total += gauss_integrate_adaptive(f, tol);
    }
    return total;
}

/// The gluing map along the seam: (b, t1, tbar) -> (b, t1 - int_0^tbar ell1, tbar).
/// Requires a fibrewise closed section (the line integral is path independent).
inline GluePoint glue_Q(const LSection& ell1, const GluePoint& p,
                        GluePath path = GluePath::straight) {
    if (!fibrewise_d(ell1).is_zero()) throw NotClosed("glue_Q: section is not fibrewise closed");
    GluePoint out = p;
    out.t1 = frac_mod1(p.t1 - glue_line_integral(ell1, p.b, p.tbar, path));
    for (auto& t : out.tbar) t = frac_mod1(t);
    return out;
}

struct FlowConfig {
    double step = 5e-3;      ///< RK4 step per unit time
    double drift_tol = 1e-8; ///< allowed drift of conserved u per unit time
};

/// Flow of the Hamiltonian field of u_j for time T.
inline TorusPhasePoint flow_u(const BuiltFibration& u, int j, TorusPhasePoint p, double T,
                              const FlowConfig& cfg = {}) {
    if (T == 0.0) return p;
    int steps = std::max(1, (int)std::ceil(std::abs(T) / cfg.step));
    Vec state(2 * u.dim());
    for (int i = 0; i < u.dim(); ++i) {
        state[i] = p.b[i];
        state[u.dim() + i] = p.y[i];
    }
    auto rhs = [&](const Vec& s) {
        TorusPhasePoint q;
        q.b.assign(s.begin(), s.begin() + u.dim());
        q.y.assign(s.begin() + u.dim(), s.end());
        return u.ham_field_u(j, q);
    };
    Vec end = rk4(state, T, steps, rhs);
    TorusPhasePoint out;
    out.b.assign(end.begin(), end.begin() + u.dim());
    out.y.assign(end.begin() + u.dim(), end.end());
    return out;
}

/// Extension of the gluing map by the auxiliary fibration: composes the
/// flows of u_n, ..., u_2 and the circle translation from the zero section
/// over (0, b).  Conserved components are monitored for drift.
inline TorusPhasePoint glue_Q_tilde(const BuiltFibration& u, const GluePoint& p,
                                    const FlowConfig& cfg = {}) {
    const int n = u.dim();
    TorusPhasePoint z;
    z.b.assign(n, 0.0);
    z.y.assign(n, 0.0);
    for (int j = 2; j <= n; ++j) z.b[j - 1] = p.b[j - 2];
    Vec u0 = u.u(z);
    double total_time = std::abs(p.t1);
    for (int j = n; j >= 2; --j) {
        z = flow_u(u, j, z, p.tbar[j - 2], cfg);
        total_time += std::abs(p.tbar[j - 2]);
    }
    z.y[0] += p.t1;  // the first flow is the exact circle translation
    Vec u1 = u.u(z);
    for (int i = 0; i < n; ++i)
        if (std::abs(u1[i] - u0[i]) > cfg.drift_tol * std::max(1.0, total_time))
            throw FlowDivergence("glue flow drifted off the fibre");
    return z;
}

/// Return-time rows of the composed flows at base point (b_1, b) of the
/// realized fibration: on the outer side (b_1 > 0) the map is the flat
/// projection; on b_1 <= 0 it is the auxiliary fibration.  Rows are the
/// lattice generators in flow-time coordinates, seeded by continuation.
inline Mat period_lattice(const BuiltFibration& u, const Vec& base, Mat seed = {},
                          const FlowConfig& cfg = {}, double tol = 1e-9) {
    const int n = u.dim();
    if ((int)base.size() != n) throw DimensionMismatch("period_lattice: base point is b_1..b_n");
    if (base[0] > 0) {
        Mat rows(n, Vec(n, 0.0));
        for (int i = 0; i < n; ++i) rows[i][i] = 1.0;  // flat side
        return rows;
    }
    if (seed.empty()) {
        seed.assign(n, Vec(n, 0.0));
        for (int i = 0; i < n; ++i) seed[i][i] = 1.0;
    }
    // locate a fibre point of u over `base`: solve u(b', y') = base for b'
    TorusPhasePoint p;
    p.b = base;
    p.y.assign(n, 0.25);
    {
        // Newton on the base coordinates of the phase point
        for (int iter = 0; iter < 40; ++iter) {
            auto jt = u.jet(p);
            Vec g(n - 1);
            double norm = 0.0;
            for (int j = 2; j <= n; ++j) {
                g[j - 2] = jt.u[j - 1] - base[j - 1];
                norm = std::max(norm, std::abs(g[j - 2]));
            }
            if (norm < 1e-13) break;
            Mat jac(n - 1, Vec(n - 1));
            for (int j = 2; j <= n; ++j)
                for (int l = 2; l <= n; ++l) jac[j - 2][l - 2] = jt.du_db[j - 1][l - 1];
            Vec step = solve_linear(jac, g);
            for (int l = 2; l <= n; ++l) p.b[l - 1] -= step[l - 2];
            if (iter == 39) throw ReturnSearchFailed("period_lattice: no fibre point found");
        }
    }

    Mat rows(n, Vec(n, 0.0));
    rows[0][0] = 1.0;  // the circle factor always has unit period
    for (int gen = 1; gen < n; ++gen) {
        Vec T = seed[gen];
        for (int iter = 0; iter < 60; ++iter) {
            TorusPhasePoint z = p;
            for (int j = n; j >= 2; --j) z = flow_u(u, j, z, T[j - 1], cfg);
            z.y[0] += T[0];
            // displacement on the torus (b exact, y modulo 1)
            Vec delta(2 * n);
            double norm = 0.0;
            for (int i = 0; i < n; ++i) {
                delta[i] = z.b[i] - p.b[i];
                double dy = z.y[i] - p.y[i];
                delta[n + i] = dy - std::round(dy);
                norm = std::max({norm, std::abs(delta[i]), std::abs(delta[n + i])});
            }
            if (norm < tol) break;
            if (iter == 59) throw ReturnSearchFailed("period_lattice: return search stalled");
            // Gauss-Newton: columns are the flow fields at the endpoint
            Mat jac(2 * n, Vec(n, 0.0));
            for (int col = 0; col < n; ++col) {
                Vec field;
                if (col == 0) {
                    field.assign(2 * n, 0.0);
                    field[n] = 1.0;
                } else {
                    field = u.ham_field_u(col + 1, z);
                }
                for (int r = 0; r < 2 * n; ++r) jac[r][col] = field[r];
            }
            // normal equations at this tiny size
            Mat jtj(n, Vec(n, 0.0));
            Vec jtr(n, 0.0);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b)
                    for (int r = 0; r < 2 * n; ++r) jtj[a][b] += jac[r][a] * jac[r][b];
                for (int r = 0; r < 2 * n; ++r) jtr[a] += jac[r][a] * delta[r];
            }
            Vec step = solve_linear(jtj, jtr);
            for (int i = 0; i < n; ++i) T[i] -= step[i];
        }
        rows[gen] = T;
    }
    return rows;
}

struct LagrangianReport {
    double max_bracket = 0.0;
    TorusPhasePoint worst;
};

/// Max |{u_i, u_j}| over random sample points, brackets by central finite
/// differences of step fd_step in all 2n phase directions.
inline LagrangianReport verify_lagrangian(const BuiltFibration& u, int samples = 100,
                                          double fd_step = 1e-5, unsigned seed = 0) {
    const int n = u.dim();
    std::mt19937_64 rng(seed * 2654435761u + 99991u);
    std::uniform_real_distribution<double> ub(-u.domain().base_halfwidth,
                                              u.domain().base_halfwidth);
    std::uniform_real_distribution<double> ueps(-u.certified_eps(), u.certified_eps());
    std::uniform_real_distribution<double> uy(0.0, 1.0);
    LagrangianReport rep;
    for (int trial = 0; trial < samples; ++trial) {
        TorusPhasePoint p;
        p.b.assign(n, 0.0);
        p.y.assign(n, 0.0);
        p.b[0] = ueps(rng) * 0.9;
        for (int j = 1; j < n; ++j) p.b[j] = ub(rng) * 0.9;
        for (int j = 0; j < n; ++j) p.y[j] = uy(rng);

        // central differences of every component in every direction
        Mat du_db(n, Vec(n)), du_dy(n, Vec(n));
        for (int dir = 0; dir < n; ++dir) {
            TorusPhasePoint pp = p, pm = p;
            pp.b[dir] += fd_step;
            pm.b[dir] -= fd_step;
            Vec up = u.u(pp), um = u.u(pm);
            for (int i = 0; i < n; ++i) du_db[i][dir] = (up[i] - um[i]) / (2 * fd_step);
            pp = p;
            pm = p;
            pp.y[dir] += fd_step;
            pm.y[dir] -= fd_step;
            up = u.u(pp);
            um = u.u(pm);
            for (int i = 0; i < n; ++i) du_dy[i][dir] = (up[i] - um[i]) / (2 * fd_step);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double br = 0.0;
                for (int k = 0; k < n; ++k)
                    br += du_dy[i][k] * du_db[j][k] - du_db[i][k] * du_dy[j][k];
                if (std::abs(br) > rep.max_bracket) {
                    rep.max_bracket = std::abs(br);
                    rep.worst = p;
                }
            }
        }
    }
    return rep;
}

/// Largest mismatch between divided-difference Taylor coefficients of u in
/// the transverse variable and the converted sequence, over sample points.
inline double taylor_match_error(const BuiltFibration& u, int points = 20, unsigned seed = 0) {
    const int n = u.dim();
    const int N = u.order();
    const SSequence& s = u.taylor();
    std::mt19937_64 rng(seed * 0x9e3779b9u + 17u);
    std::uniform_real_distribution<double> ub(-u.domain().base_halfwidth * 0.9,
                                              u.domain().base_halfwidth * 0.9);
    std::uniform_real_distribution<double> uy(0.0, 1.0);

    const int stencil = std::max(N + 3, 7);
    const double h = u.certified_eps() / (stencil + 1);
    double worst = 0.0;
    for (int trial = 0; trial < points; ++trial) {
        Vec bred(n - 1), yred(n - 1);
        for (auto& v : bred) v = ub(rng);
        for (auto& v : yred) v = uy(rng);
        for (int j = 2; j <= n; ++j) {
            // one-sided samples u_j(nu * h), nu = 0..stencil, from the glued side
            Vec values(stencil + 1);
            for (int nu = 0; nu <= stencil; ++nu) {
                TorusPhasePoint p;
                p.b.assign(n, 0.0);
                p.y.assign(n, 0.0);
                p.b[0] = -double(nu) * h;
                for (int l = 2; l <= n; ++l) p.b[l - 1] = bred[l - 2];
                for (int l = 2; l <= n; ++l) p.y[l - 1] = yred[l - 2];
                values[nu] = u.u(p)[j - 1];
            }
            // fit in the scaled variable xi = b_1/h (integer nodes) for
            // conditioning, then undo the scaling per coefficient
            Mat vander(stencil + 1, Vec(stencil + 1, 0.0));
            for (int r = 0; r <= stencil; ++r) {
                double xi = -double(r), xp = 1.0;
                for (int c = 0; c <= stencil; ++c) {
                    vander[r][c] = xp;
                    xp *= xi;
                }
            }
            Vec scaled = solve_linear(vander, values);
            double hk = 1.0;
            for (int k = 1; k <= N; ++k) {
                hk *= h;
                double expect = s.at(k).a(j).evaluate(bred, yred);
                worst = std::max(worst, std::abs(scaled[k] / hk - expect));
            }
        }
    }
    return worst;
}

} // namespace stitchkit

#pragma once

/**
 * The explicit piecewise-smooth fibrations of C^2 and C^3 carried by the
 * model circle action
 *
 *     e^{i theta} . (z_1, z_2, z_3) = (e^{i theta} z_1, e^{-i theta} z_2, z_3),
 *
 * with moment map mu = (|z_1|^2 - |z_2|^2)/2.  All examples have first
 * component mu and remaining components log-moduli of affine expressions in
 * the piecewise invariant
 *
 *     gamma = z_1 z_2 / |z_1|   (mu >= 0),      z_1 z_2 / |z_2|   (mu < 0)
 *
 * and in z_3.  Each branch is smooth across the seam wherever its
 * denominator stays away from zero, which is what makes one-sided analytic
 * derivatives available on the seam itself.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "stitchkit/errors.hpp"
#include "stitchkit/hamiltonian.hpp"

namespace stitchkit {

inline constexpr double kDomainMargin = 1e-9;

inline double moment_map(const PhasePoint& z) {
    return 0.5 * (std::norm(z[0]) - std::norm(z[1]));
}

inline std::complex<double> gamma_plus(std::complex<double> z1, std::complex<double> z2) {
    double r = std::abs(z1);
    if (r < kDomainMargin) throw UndefinedAtPoint("gamma: z1 = 0 on the plus branch");
    return z1 * z2 / r;
}

inline std::complex<double> gamma_minus(std::complex<double> z1, std::complex<double> z2) {
    double r = std::abs(z2);
    if (r < kDomainMargin) throw UndefinedAtPoint("gamma: z2 = 0 on the minus branch");
    return z1 * z2 / r;
}

/// The piecewise invariant; branches agree where |z1| = |z2|.
inline std::complex<double> gamma(std::complex<double> z1, std::complex<double> z2) {
    double mu = 0.5 * (std::norm(z1) - std::norm(z2));
    return mu >= 0 ? gamma_plus(z1, z2) : gamma_minus(z1, z2);
}

inline std::complex<double> gamma_side(const PhasePoint& z, Side side) {
    if (side == Side::plus) return gamma_plus(z[0], z[1]);
    if (side == Side::minus) return gamma_minus(z[0], z[1]);
    return gamma(z[0], z[1]);
}

namespace detail {

/// Wirtinger data of one branch of gamma at a point: derivatives with
/// respect to z_1, zbar_1, z_2, zbar_2.
struct GammaJet {
    std::complex<double> value, d1, d1bar, d2, d2bar;
};

inline GammaJet gamma_jet(const PhasePoint& z, Side side) {
    GammaJet g;
    const auto z1 = z[0], z2 = z[1];
    if (side == Side::plus) {
        double r = std::abs(z1);
        if (r < kDomainMargin) throw UndefinedAtPoint("gamma jet: z1 = 0");
        g.value = z1 * z2 / r;
        g.d1 = z2 / (2 * r);
        g.d1bar = -z1 * z1 * z2 / (2 * r * r * r);
        g.d2 = z1 / r;
        g.d2bar = 0;
    } else {
        double r = std::abs(z2);
        if (r < kDomainMargin) throw UndefinedAtPoint("gamma jet: z2 = 0");
        g.value = z1 * z2 / r;
        g.d2 = z1 / (2 * r);
        g.d2bar = -z2 * z2 * z1 / (2 * r * r * r);
        g.d1 = z2 / r;
        g.d1bar = 0;
    }
    return g;
}

} // namespace detail

/// One component of the form log |A gamma + B z_3 + C| + shift.
struct LogComponent {
    std::complex<double> A{0, 0}, B{0, 0}, C{0, 0};
    double shift = 0.0;

    std::complex<double> w(const PhasePoint& z, Side side) const {
        std::complex<double> val = C;
        if (A != std::complex<double>(0, 0)) val += A * gamma_side(z, side);
        if (B != std::complex<double>(0, 0)) val += B * z.at(2);
        return val;
    }

    double value(const PhasePoint& z, Side side) const {
        double m = std::abs(w(z, side));
        if (m < kDomainMargin) throw UndefinedAtPoint("component undefined: log of zero");
        return std::log(m) + shift;
    }

    /// d/dzbar_k of the component on the given side.
    PhasePoint dbar(const PhasePoint& z, Side side) const {
        std::complex<double> wv = w(z, side);
        if (std::abs(wv) < kDomainMargin) throw UndefinedAtPoint("component gradient undefined");
        PhasePoint out(z.size(), std::complex<double>(0, 0));
        // d log|w| / dzbar_k = (dw/dzbar_k / w + conj(dw/dz_k) / wbar) / 2
        if (A != std::complex<double>(0, 0)) {
            detail::GammaJet g = detail::gamma_jet(z, side);
            out[0] = 0.5 * (A * g.d1bar / wv + std::conj(A * g.d1) / std::conj(wv));
            out[1] = 0.5 * (A * g.d2bar / wv + std::conj(A * g.d2) / std::conj(wv));
        }
        if (B != std::complex<double>(0, 0) && z.size() >= 3)
            out[2] = 0.5 * std::conj(B) / std::conj(wv);
        return out;
    }
};

/// Printed-formula sign variant: the discrepancy coefficient family
///   a = num * Re( z1 z2 / (|z1|^2 z1 z2 + den |z1|^3) )   (two-dimensional model)
/// and num * the quotient form for the three-dimensional ones.  The numeric
/// extractor adjudicates which member matches.
struct SignVariant {
    int num = 1;
    int den = 1;
};

class ExampleFibration {
public:
    std::string name;
    int n = 2;
    std::vector<LogComponent> components;  ///< f_2..f_n
    std::string discriminant_description;
    int seam_component_count = 2;
    SignVariant variant;          ///< adjudicated against the numeric extractor
    bool variant_is_printed = true;

    double mu(const PhasePoint& z) const { return moment_map(z); }

    ScalarField mu_field() const {
        return ScalarField{
            [](const PhasePoint& z) { return moment_map(z); },
            [](const PhasePoint& z) {
                PhasePoint g(z.size(), std::complex<double>(0, 0));
                g[0] = 0.5 * z[0];
                g[1] = -0.5 * z[1];
                return g;
            },
            Side::global_smooth};
    }

    /// Component f_j (j = 2..n) as a one-sided scalar field.
    ScalarField component(int j, Side side) const {
        const LogComponent& c = components.at(j - 2);
        return ScalarField{[c, side](const PhasePoint& z) { return c.value(z, side); },
                           [c, side](const PhasePoint& z) { return c.dbar(z, side); }, side};
    }

    /// f(z) with the branch chosen by the sign of mu.
    Vec f(const PhasePoint& z) const {
        Side side = mu(z) >= 0 ? Side::plus : Side::minus;
        return f_side(z, side);
    }

    Vec f_side(const PhasePoint& z, Side side) const {
        Vec out(n);
        out[0] = mu(z);
        for (int j = 2; j <= n; ++j) out[j - 1] = components[j - 2].value(z, side);
        return out;
    }

    /// Invariant coordinates of the reduced space: one per component, with
    /// |coord_j| = exp(f_j).
    PhasePoint invariant_coords(const PhasePoint& z, Side side) const {
        PhasePoint out(n - 1);
        for (int j = 2; j <= n; ++j) {
            const LogComponent& c = components[j - 2];
            out[j - 2] = c.w(z, side) * std::exp(c.shift);
        }
        return out;
    }

    PhasePoint invariant_coords(const PhasePoint& z) const {
        return invariant_coords(z, mu(z) >= 0 ? Side::plus : Side::minus);
    }

    /// The circle action.
    PhasePoint rotate(const PhasePoint& z, double theta) const {
        PhasePoint out = z;
        out[0] *= std::exp(std::complex<double>(0, theta));
        out[1] *= std::exp(std::complex<double>(0, -theta));
        return out;
    }

    bool in_domain(const PhasePoint& z) const {
        if ((int)z.size() != n) return false;
        if (std::abs(z[0]) + std::abs(z[1]) < kDomainMargin) return false;  // action singular
        try {
            Side side = mu(z) >= 0 ? Side::plus : Side::minus;
            for (const auto& c : components)
                if (std::abs(c.w(z, side)) < 1e-6) return false;
        } catch (const UndefinedAtPoint&) {
            return false;
        }
        return true;
    }

    /// Closed-form discrepancy coefficients at a seam point, under the given
    /// sign variant (defaults to the adjudicated one).
    std::vector<double> closed_form_a(const PhasePoint& z) const {
        return closed_form_a(z, variant);
    }

    std::vector<double> closed_form_a(const PhasePoint& z, SignVariant v) const {
        if (std::abs(mu(z)) > 1e-7)
            throw UndefinedAtPoint("closed_form_a: point is not on the seam");
        const auto z1 = z[0], z2 = z[1];
        const double r = std::abs(z1);
        if (r < kDomainMargin) throw UndefinedAtPoint("closed_form_a: z1 = 0");
        std::vector<double> out;
        for (const auto& c : components) {
            if (A_is_zero(c)) {
                out.push_back(0.0);  // component does not involve the invariant
                continue;
            }
            std::complex<double> wv = c.w(z, Side::plus);
            if (name == "focus_focus") {
                // family around the two-dimensional printed form
                std::complex<double> den =
                    r * r * z1 * z2 + double(v.den) * r * r * r;
                if (std::abs(den) < 1e-12)
                    throw UndefinedAtPoint("closed_form_a: denominator vanishes");
                out.push_back(double(v.num) * std::real(z1 * z2 / den));
            } else {
                // quotient form: num * (-Re(w conj(A z1 z2)/|z1|^3)) / |w|^2
                std::complex<double> num = wv * std::conj(c.A * z1 * z2) / (r * r * r);
                out.push_back(-double(v.num) * std::real(num) / std::norm(wv));
            }
        }
        return out;
    }

private:
    static bool A_is_zero(const LogComponent& c) { return c.A == std::complex<double>(0, 0); }
};

inline ExampleFibration make_example_impl(const std::string& name) {
    ExampleFibration ex;
    ex.name = name;
    if (name == "focus_focus") {
        ex.n = 2;
        ex.components = {LogComponent{{1, 0}, {0, 0}, {1, 0}, 0.0}};  // log|gamma + 1|
        ex.discriminant_description = "single point at the origin of the base";
        ex.seam_component_count = 2;
    } else if (name == "leg") {
        ex.n = 3;
        ex.components = {LogComponent{{0, 0}, {1, 0}, {0, 0}, 0.0},    // log|z3|
                         LogComponent{{1, 0}, {0, 0}, {-1, 0}, 0.0}};  // log|gamma - 1|
        ex.discriminant_description = "line {0} x R x {0} in the base";
        ex.seam_component_count = 2;
    } else if (name == "amoeba") {
        const double s = -0.5 * std::log(2.0);
        const double r2 = std::sqrt(2.0);
        ex.n = 3;
        ex.components = {
            LogComponent{{1, 0}, {-1, 0}, {0, 0}, s},        // log (1/sqrt2)|gamma - z3|
            LogComponent{{1, 0}, {1, 0}, {-r2, 0}, s}};      // log (1/sqrt2)|gamma + z3 - sqrt2|
        ex.discriminant_description =
            "amoeba of v1 + v2 + 1 = 0 inside the wall {b1 = 0}";
        ex.seam_component_count = 3;
    } else {
        throw UnknownName("unknown example: " + name);
    }
    return ex;
}

inline std::vector<std::string> example_names() { return {"focus_focus", "leg", "amoeba"}; }

/// Wall components of the amoeba example, named after which term of
/// v1 + v2 + 1 dominates on the complement of the amoeba.
enum class WallComponent { one_dominant, v1_dominant, v2_dominant };

inline WallComponent classify_wall_component(double b2, double b3) {
    double e2 = std::exp(b2), e3 = std::exp(b3);
    if (e2 > 1 + e3) return WallComponent::v1_dominant;
    if (e3 > 1 + e2) return WallComponent::v2_dominant;
    if (1 > e2 + e3) return WallComponent::one_dominant;
    throw UndefinedAtPoint("wall point lies inside the discriminant amoeba");
}

} // namespace stitchkit

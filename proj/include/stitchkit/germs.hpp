#pragma once

/**
 * Germs of admissible changes of base coordinates.
 *
 * A germ is the truncated jet, in the transverse variable, of a coordinate
 * change that is smooth on each side of the wall and the identity at order
 * zero:
 *
 *     phi_j(b) = b_j + sum_{m=1}^{N} Phi_{j,m}(b_2..b_n) b_1^m,   j = 2..n,
 *
 * with y-free polynomial coefficients.  Germs compose as maps and act on
 * invariant sequences through the associated Taylor sequences.
 */

#include <vector>

#include "stitchkit/invariant_calculus.hpp"
#include "stitchkit/series.hpp"

namespace stitchkit {

class GermChange {
public:
    GermChange(int n, int order)
        : n_(n), order_(order), phi_(order, std::vector<TorusFunction>(n - 1, TorusFunction(n))) {
        if (order < 1) throw OrderOutOfRange("GermChange: order must be >= 1");
        if (n < 2) throw DimensionMismatch("GermChange: need n >= 2");
    }

    static GermChange identity(int n, int order) { return GermChange(n, order); }

    int dim() const { return n_; }
    int order() const { return order_; }

    /// Coefficient Phi_{j,m}; must be y-free.
    const TorusFunction& phi(int j, int m) const {
        return phi_.at(check(m)).at(TorusFunction::slot_of(n_, j));
    }

    void set_phi(int j, int m, TorusFunction f) {
        if (f.dim() != n_) throw DimensionMismatch("GermChange::set_phi");
        if (!f.is_y_free()) throw Error("GermChange: coefficients must be y-free");
        phi_.at(check(m)).at(TorusFunction::slot_of(n_, j)) = std::move(f);
    }

    bool is_identity() const {
        for (const auto& level : phi_)
            for (const auto& f : level)
                if (!f.is_zero()) return false;
        return true;
    }

    /// The deformation as shift series: component j of phi minus b_j.
    std::vector<SeriesTF> shift_series() const {
        std::vector<SeriesTF> out;
        out.reserve(n_ - 1);
        for (int j = 2; j <= n_; ++j) {
            SeriesTF s(n_, order_);
            for (int m = 1; m <= order_; ++m) s.coeff(m) = phi(j, m);
            out.push_back(std::move(s));
        }
        return out;
    }

private:
    size_t check(int m) const {
        if (m < 1 || m > order_) throw OrderOutOfRange("GermChange: order out of range");
        return size_t(m - 1);
    }

    int n_;
    int order_;
    std::vector<std::vector<TorusFunction>> phi_;  ///< phi_[m-1][j-2]
};

inline void require_compatible(const GermChange& a, const GermChange& b) {
    if (a.dim() != b.dim() || a.order() != b.order())
        throw OrderMismatch("germ operation: incompatible germs");
}

/// Germ of the composition a o b (apply b first).
inline GermChange germ_compose(const GermChange& a, const GermChange& b) {
    require_compatible(a, b);
    const int n = a.dim();
    const int N = a.order();
    std::vector<SeriesTF> inner = b.shift_series();
    GermChange out(n, N);
    for (int j = 2; j <= n; ++j) {
        // (a o b)_j = b_j + shift_b_j + sum_k Phi^a_{j,k}(b + shift_b) r^k
        SeriesTF total = inner[j - 2];
        for (int k = 1; k <= N; ++k) {
            if (a.phi(j, k).is_zero()) continue;
            total += substitute_base(a.phi(j, k), inner).shifted(k);
        }
        for (int m = 1; m <= N; ++m) out.set_phi(j, m, total.coeff(m));
    }
    return out;
}

/// Inverse germ: the unique g with g o a = identity at truncation order.
inline GermChange germ_inverse(const GermChange& a) {
    const int n = a.dim();
    const int N = a.order();
    GermChange inv(n, N);
    for (int m = 1; m <= N; ++m) {
        GermChange probe = germ_compose(inv, a);
        for (int j = 2; j <= n; ++j) inv.set_phi(j, m, inv.phi(j, m) - probe.phi(j, m));
    }
    return inv;
}

/// Action on an invariant sequence: convert to the Taylor sequence of the
/// associated fibration u, post-compose with a representative of the germ,
/// read off the new Taylor sequence and convert back.
inline EllSequence germ_act(const GermChange& g, const EllSequence& ell) {
    if (g.dim() != ell.dim() || g.order() != ell.order())
        throw OrderMismatch("germ_act: germ and sequence disagree");
    const int n = g.dim();
    const int N = g.order();
    SSequence s = ell_to_s(ell);

    // u_j - b_j as a series in the transverse variable
    std::vector<SeriesTF> du;
    du.reserve(n - 1);
    for (int j = 2; j <= n; ++j) {
        SeriesTF sj(n, N);
        for (int m = 1; m <= N; ++m) sj.coeff(m) = s.at(m).a(j);
        du.push_back(std::move(sj));
    }

    SSequence out(n, N);
    for (int j = 2; j <= n; ++j) {
        SeriesTF composed = du[j - 2];
        for (int k = 1; k <= N; ++k) {
            if (g.phi(j, k).is_zero()) continue;
            // Phi_{j,k}(u_2..u_n) u_1^k with u_1 the transverse variable itself
            composed += substitute_base(g.phi(j, k), du).shifted(k);
        }
        for (int m = 1; m <= N; ++m) {
            LSection level = out.at(m);
            level.a(j) = composed.coeff(m);
            out.set(m, level);
        }
    }
    return s_to_ell(out);
}

/// The germ annihilating a fibrewise constant sequence: inverse of the germ
/// whose coefficients are the (y-free) Taylor components of the sequence.
inline GermChange trivializing_germ(const EllSequence& ell) {
    SSequence s = ell_to_s(ell);
    GermChange g(ell.dim(), ell.order());
    for (int m = 1; m <= ell.order(); ++m)
        for (int j = 2; j <= ell.dim(); ++j) {
            if (!s.at(m).a(j).is_y_free())
                throw Error("trivializing_germ: sequence is not fibrewise constant");
            g.set_phi(j, m, s.at(m).a(j));
        }
    return germ_inverse(g);
}

} // namespace stitchkit

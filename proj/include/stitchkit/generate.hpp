#pragma once

/**
 * Seeded random fixtures shared by the test suites and the CLI report:
 * closed invariant sequences, germs, and single functions.  Every generator
 * is deterministic in the supplied engine, so fixed seeds give fixed data.
 */

#include <algorithm>
#include <random>
#include <vector>

#include "stitchkit/germs.hpp"
#include "stitchkit/invariant_calculus.hpp"
#include "stitchkit/sections.hpp"

namespace stitchkit {

struct GenOptions {
    int max_mode = 2;       ///< |k|_inf of generated Fourier modes
    int max_degree = 2;     ///< |alpha|_1 of generated monomials
    int terms = 3;          ///< modes per generated function
    double amplitude = 0.15;
};

inline TorusFunction random_torus_function(int n, std::mt19937_64& rng,
                                           const GenOptions& opt = {}) {
    std::uniform_int_distribution<int> mode(-opt.max_mode, opt.max_mode);
    std::uniform_real_distribution<double> coef(-opt.amplitude, opt.amplitude);
    TorusFunction f(n);
    for (int t = 0; t < opt.terms; ++t) {
        std::vector<int> k(n - 1), alpha(n - 1);
        for (auto& v : k) v = mode(rng);
        int budget = opt.max_degree;
        for (auto& v : alpha) {
            v = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= v;
        }
        bool k_zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
        Complex c(coef(rng), k_zero ? 0.0 : coef(rng));
        f += TorusFunction::real_mode(n, k, c, alpha);
    }
    return f;
}

inline TorusFunction random_y_free(int n, std::mt19937_64& rng, const GenOptions& opt = {}) {
    std::uniform_real_distribution<double> coef(-opt.amplitude, opt.amplitude);
    TorusFunction f(n);
    for (int t = 0; t < opt.terms; ++t) {
        std::vector<int> alpha(n - 1);
        int budget = opt.max_degree;
        for (auto& v : alpha) {
            v = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= v;
        }
        f += TorusFunction::monomial(n, alpha, coef(rng));
    }
    return f;
}

/// Fibrewise closed section: fibrewise gradient of a random potential plus a
/// y-free (fibrewise constant) part.
inline LSection random_closed_section(int n, std::mt19937_64& rng, const GenOptions& opt = {}) {
    TorusFunction potential = random_torus_function(n, rng, opt);
    LSection out(n);
    for (int j = 2; j <= n; ++j)
        out.a(j) = potential.d_angle(j) * (1.0 / two_pi) + random_y_free(n, rng, opt);
    return out;
}

/// A section that is deliberately not fibrewise closed (only exists for n>=3).
inline LSection random_nonclosed_section(int n, std::mt19937_64& rng, const GenOptions& opt = {}) {
    if (n < 3) throw DimensionMismatch("random_nonclosed_section: needs n >= 3");
    LSection out = random_closed_section(n, rng, opt);
    out.a(2) += TorusFunction::sine(n, [&] {
        std::vector<int> k(n - 1, 0);
        k.back() = 1;
        return k;
    }());
    return out;
}

inline EllSequence random_closed_ell_sequence(int n, int order, std::mt19937_64& rng,
                                              const GenOptions& opt = {}) {
    std::vector<LSection> elems;
    elems.reserve(order);
    for (int m = 0; m < order; ++m) elems.push_back(random_closed_section(n, rng, opt));
    return EllSequence(std::move(elems));
}

/// Closed sequence whose first element has integer, b-constant cycle
/// integrals m_j (fibrewise exact plus integer constants).
inline EllSequence random_integral_ell_sequence(int n, int order, const std::vector<long>& m,
                                                std::mt19937_64& rng, const GenOptions& opt = {}) {
    EllSequence ell = random_closed_ell_sequence(n, order, rng, opt);
    LSection first(n);
    TorusFunction potential = random_torus_function(n, rng, opt);
    for (int j = 2; j <= n; ++j)
        first.a(j) = potential.d_angle(j) * (1.0 / two_pi) +
                     TorusFunction::constant(n, double(m.at(j - 2)));
    ell.set(1, first);
    return ell;
}

inline GermChange random_germ(int n, int order, std::mt19937_64& rng, const GenOptions& opt = {}) {
    GermChange g(n, order);
    for (int m = 1; m <= order; ++m)
        for (int j = 2; j <= n; ++j) g.set_phi(j, m, random_y_free(n, rng, opt));
    return g;
}

} // namespace stitchkit

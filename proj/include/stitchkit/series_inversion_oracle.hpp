#pragma once

/**
 * Independent route from a Taylor sequence to the invariant sequence: solve
 *
 *     a_j(r) + sum_k S_{j,k}(b + a(r), y) r^k = 0,   j = 2..n,
 *
 * order by order on truncated formal series, matching powers of r.  This
 * performs the substitution by direct polynomial composition and never
 * touches the multi-index recursion, so it serves as an oracle for it.
 */

#include <vector>

#include "stitchkit/invariant_calculus.hpp"
#include "stitchkit/series.hpp"

namespace stitchkit {

inline EllSequence invert_taylor_series(const SSequence& s) {
    const int n = s.dim();
    const int N = s.order();
    std::vector<SeriesTF> a(n - 1, SeriesTF(n, N));

    for (int m = 1; m <= N; ++m) {
        SubstitutionCache cache(n, a);
        for (int j = 2; j <= n; ++j) {
            SeriesTF residual = a[j - 2];
            for (int k = 1; k <= m; ++k) {  // higher k cannot reach order m
                if (s.at(k).a(j).is_zero()) continue;
                residual += substitute_base(s.at(k).a(j), cache).shifted(k);
            }
            // coefficient m of the residual depends on a-coefficients of
            // order < m plus the bare a_{j,m}; zero it
            a[j - 2].coeff(m) -= residual.coeff(m);
        }
    }

    std::vector<LSection> ell(N, LSection(n));
    for (int m = 1; m <= N; ++m)
        for (int j = 2; j <= n; ++j) ell[m - 1].a(j) = a[j - 2].coeff(m);
    return EllSequence(std::move(ell));
}

} // namespace stitchkit

#pragma once

/**
 * The conversion engine between the two truncated descriptions of a stitched
 * fibration germ near the seam:
 *
 *   - the invariant sequence {ell_k}, fibrewise closed sections collecting
 *     the Taylor data of the discrepancy family, and
 *   - the Taylor sequence {S_m}, the coefficients of the auxiliary fibration
 *     u_j = b_j + sum_m S_{j,m} b_1^m.
 *
 * The two are related order by order through
 *
 *     a_{j,l} = -S_{j,l} + R_{j,l},
 *     R_{j,l} = - sum_{m=1}^{l-1} sum_{1<=|I|<=m} (1/I!) d^I S_{j,l-m}
 *                  sum_{H} A_H,
 *
 * where H runs over ordered tuples of positive integers, i_s entries for base
 * slot s, with total sum m, and A_H is the product of the matching lower
 * order a-coefficients.  The same relation solved for S_{j,l} gives the
 * inverse conversion.  Admissibility of {S_m} means d S_m = P_m fibrewise,
 * with P_m the bracket form of lower orders; this holds exactly when every
 * ell_m is fibrewise closed.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stitchkit/sections.hpp"
#include "stitchkit/series.hpp"

namespace stitchkit {

namespace detail {

inline double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// All multi-indices I over `slots` entries with 1 <= |I| <= max_total.
inline std::vector<std::vector<int>> multi_indices_up_to(int slots, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(slots, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == slots) {
            int total = 0;
            for (int v : cur) total += v;
            if (total >= 1) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            rec(pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(0, max_total);
    return out;
}

} // namespace detail

class EllSequence {
public:
    EllSequence(int n, int order) : n_(n), order_(order), ell_(order, LSection(n)) {
        if (order < 1) throw OrderOutOfRange("EllSequence: order must be >= 1");
        refresh_flags();
    }

    explicit EllSequence(std::vector<LSection> elements) {
        if (elements.empty()) throw OrderOutOfRange("EllSequence: empty");
        n_ = elements.front().dim();
        order_ = (int)elements.size();
        for (const auto& e : elements)
            if (e.dim() != n_) throw DimensionMismatch("EllSequence: mixed dimensions");
        ell_ = std::move(elements);
        refresh_flags();
    }

    int dim() const { return n_; }
    int order() const { return order_; }

    /// ell_m, m in 1..order.
    const LSection& at(int m) const { return ell_.at(check(m)); }
    void set(int m, LSection s) {
        if (s.dim() != n_) throw DimensionMismatch("EllSequence::set");
        ell_.at(check(m)) = std::move(s);
        refresh_flags();
    }

    /// True when every element is fibrewise closed (computed on construction).
    bool closed() const { return closed_; }

    void refresh_flags() {
        closed_ = true;
        for (const auto& e : ell_)
            if (!fibrewise_d(e).is_zero()) closed_ = false;
    }

private:
    size_t check(int m) const {
        if (m < 1 || m > order_) throw OrderOutOfRange("EllSequence: index out of range");
        return size_t(m - 1);
    }

    int n_ = 2;
    int order_ = 0;
    std::vector<LSection> ell_;
    bool closed_ = false;
};

class SSequence {
public:
    SSequence(int n, int order) : n_(n), order_(order), s_(order, LSection(n)) {
        if (order < 1) throw OrderOutOfRange("SSequence: order must be >= 1");
    }

    explicit SSequence(std::vector<LSection> elements) {
        if (elements.empty()) throw OrderOutOfRange("SSequence: empty");
        n_ = elements.front().dim();
        order_ = (int)elements.size();
        for (const auto& e : elements)
            if (e.dim() != n_) throw DimensionMismatch("SSequence: mixed dimensions");
        s_ = std::move(elements);
    }

    int dim() const { return n_; }
    int order() const { return order_; }

    const LSection& at(int m) const { return s_.at(check(m)); }
    void set(int m, LSection s) {
        if (s.dim() != n_) throw DimensionMismatch("SSequence::set");
        s_.at(check(m)) = std::move(s);
    }

private:
    size_t check(int m) const {
        if (m < 1 || m > order_) throw OrderOutOfRange("SSequence: index out of range");
        return size_t(m - 1);
    }

    int n_ = 2;
    int order_ = 0;
    std::vector<LSection> s_;
};

/// Bracket two-form of order m:
///   P_1 = 0,
///   P_m = sum_{j<l} ( sum_{k=1}^{m-1} {S_{j,k}, S_{l,m-k}} ) dy_j ^ dy_l.
inline TwoFormSection compute_P(const SSequence& s, int m) {
    if (m < 1 || m > s.order()) throw OrderOutOfRange("compute_P: order out of range");
    TwoFormSection out(s.dim());
    if (m == 1) return out;
    for (int j = 2; j <= s.dim(); ++j) {
        for (int l = j + 1; l <= s.dim(); ++l) {
            TorusFunction acc(s.dim());
            for (int k = 1; k <= m - 1; ++k)
                acc += poisson(s.at(k).a(j), s.at(m - k).a(l));
            out.p(j, l) = acc;
        }
    }
    return out;
}

struct AdmissibilityReport {
    bool ok = true;
    int first_m = 0, first_j = 0, first_l = 0;  ///< first failing component
    double max_err = 0.0;
};

/// Exact check of d S_m = P_m fibrewise for every order.
inline AdmissibilityReport check_admissible(const SSequence& s) {
    AdmissibilityReport rep;
    for (int m = 1; m <= s.order(); ++m) {
        TwoFormSection d = fibrewise_d(s.at(m));
        TwoFormSection p = compute_P(s, m);
        for (int j = 2; j <= s.dim(); ++j) {
            for (int l = j + 1; l <= s.dim(); ++l) {
                TorusFunction diff = d.p(j, l) - p.p(j, l);
                double scale = std::max({1.0, d.p(j, l).max_abs(), p.p(j, l).max_abs()});
                double err = diff.max_abs();
                rep.max_err = std::max(rep.max_err, err);
                if (err > AlgebraLimits::prune * scale * 10.0 && rep.ok) {
                    rep.ok = false;
                    rep.first_m = m;
                    rep.first_j = j;
                    rep.first_l = l;
                }
            }
        }
    }
    return rep;
}

namespace detail {

/// Table of iterated base derivatives d^I f, memoized per function.
class DerivativeTable {
public:
    explicit DerivativeTable(const TorusFunction& f) : root_(f) {}

    const TorusFunction& get(const std::vector<int>& I) {
        auto it = cache_.find(I);
        if (it != cache_.end()) return it->second;
        bool zero = std::all_of(I.begin(), I.end(), [](int v) { return v == 0; });
        if (zero) return cache_.emplace(I, root_).first->second;
        std::vector<int> down = I;
        int slot = 0;
        while (down[slot] == 0) ++slot;
        down[slot] -= 1;
        TorusFunction d = get(down).d_base(slot + 2);
        return cache_.emplace(I, std::move(d)).first->second;
    }

private:
    TorusFunction root_;
    std::map<std::vector<int>, TorusFunction> cache_;
};

/// Memoized products prod_s A_s^{i_s} of the per-slot coefficient series
/// A_s(r) = sum_m a_{s,m} r^m.  The sum of A_H over all ordered tuples H with
/// slot multiplicities I and total order m equals the r^m coefficient of this
/// product, so coefficient extraction here IS the tuple enumeration, with
/// shared partial products.
class SlotPowerCache {
public:
    SlotPowerCache(int n, int order)
        : n_(n), order_(order), A_(n - 1, SeriesTF(n, order)),
          one_(SeriesTF::from_constant(TorusFunction::constant(n, 1.0), order)) {}

    void set_a(int m, int j, const TorusFunction& f) {
        A_.at(TorusFunction::slot_of(n_, j)).coeff(m) = f;
        memo_.clear();
    }

    const SeriesTF& product(const std::vector<int>& I) {
        auto it = memo_.find(I);
        if (it != memo_.end()) return it->second;
        int slot = -1;
        for (size_t s = 0; s < I.size(); ++s)
            if (I[s] > 0) { slot = (int)s; break; }
        if (slot < 0) return one_;
        std::vector<int> down = I;
        down[slot] -= 1;
        SeriesTF p = product(down) * A_[slot];
        return memo_.emplace(I, std::move(p)).first->second;
    }

private:
    int n_;
    int order_;
    std::vector<SeriesTF> A_;
    SeriesTF one_;
    std::map<std::vector<int>, SeriesTF> memo_;
};

/// The correction term R_{j,l} of the order-l relation:
///   R_{j,l} = - sum_{m=1}^{l-1} sum_{1<=|I|<=m} (1/I!) d^I S_{j,l-m} [r^m] prod_s A_s^{i_s}.
/// s_tables[m][j-2] must hold the derivative table of S_{j,m} for m <= l-1,
/// and powers must know the a-coefficients up to order l-1.
inline TorusFunction correction_term(int n, int j, int l,
                                     std::vector<std::vector<DerivativeTable>>& s_tables,
                                     SlotPowerCache& powers) {
    TorusFunction r(n);
    const int slots = n - 1;
    for (const auto& I : multi_indices_up_to(slots, l - 1)) {
        int total = 0;
        double ifact = 1.0;
        for (int v : I) {
            total += v;
            ifact *= factorial(v);
        }
        const SeriesTF& p = powers.product(I);
        for (int m = total; m <= l - 1; ++m) {
            if (p.coeff(m).is_zero()) continue;
            r -= s_tables[l - m][j - 2].get(I) * p.coeff(m) * (1.0 / ifact);
        }
    }
    return r;
}

} // namespace detail

/// Taylor sequence -> invariant sequence, forward recursion in the order.
inline EllSequence s_to_ell(const SSequence& s) {
    const int n = s.dim();
    const int N = s.order();
    std::vector<std::vector<detail::DerivativeTable>> s_tables(N + 1);
    for (int m = 1; m <= N; ++m)
        for (int j = 2; j <= n; ++j) s_tables[m].emplace_back(s.at(m).a(j));

    detail::SlotPowerCache powers(n, N);
    std::vector<LSection> ell(N, LSection(n));
    for (int l = 1; l <= N; ++l) {
        for (int j = 2; j <= n; ++j) {
            TorusFunction r = detail::correction_term(n, j, l, s_tables, powers);
            ell[l - 1].a(j) = -s.at(l).a(j) + r;
        }
        for (int j = 2; j <= n; ++j) powers.set_a(l, j, ell[l - 1].a(j));
    }
    return EllSequence(std::move(ell));
}

/// Invariant sequence -> Taylor sequence, the same relation solved for S.
inline SSequence ell_to_s(const EllSequence& ell) {
    const int n = ell.dim();
    const int N = ell.order();
    detail::SlotPowerCache powers(n, N);
    for (int m = 1; m <= N; ++m)
        for (int j = 2; j <= n; ++j) powers.set_a(m, j, ell.at(m).a(j));

    std::vector<std::vector<detail::DerivativeTable>> s_tables(N + 1);
    std::vector<LSection> s(N, LSection(n));
    for (int l = 1; l <= N; ++l) {
        for (int j = 2; j <= n; ++j) {
            TorusFunction r = detail::correction_term(n, j, l, s_tables, powers);
            s[l - 1].a(j) = -ell.at(l).a(j) + r;
        }
        for (int j = 2; j <= n; ++j) s_tables[l].emplace_back(s[l - 1].a(j));
    }
    return SSequence(std::move(s));
}

struct TransferVerdict {
    bool ell_closed = false;
    bool s_admissible = false;
    bool equivalent = false;  ///< the two verdicts agree
};

/// Closedness of {ell_m} is equivalent to admissibility of the partner {S_m};
/// checks both sides and reports the joint verdict.
inline TransferVerdict closedness_transfer(const EllSequence& ell) {
    TransferVerdict v;
    v.ell_closed = ell.closed();
    v.s_admissible = check_admissible(ell_to_s(ell)).ok;
    v.equivalent = (v.ell_closed == v.s_admissible);
    return v;
}

inline TransferVerdict closedness_transfer(const SSequence& s) {
    TransferVerdict v;
    v.s_admissible = check_admissible(s).ok;
    v.ell_closed = s_to_ell(s).closed();
    v.equivalent = (v.ell_closed == v.s_admissible);
    return v;
}

struct FirstOrderClass {
    LSection representative;  ///< oscillatory part, zero fibre averages
    LSection residual;        ///< fibrewise constant part
};

/// Splits a first-order section into its class representative modulo
/// fibrewise constant shifts and the constant residual.
inline FirstOrderClass first_order_class(const LSection& ell1) {
    return FirstOrderClass{ell1.oscillatory(), ell1.fibre_average()};
}

/// Two sections are equivalent modulo fibrewise constants exactly when the
/// oscillatory parts agree.
inline bool first_order_equivalent(const LSection& a, const LSection& b) {
    return approx_equal(a.oscillatory(), b.oscillatory());
}

/// Checks the integrality condition on ell_1: each cycle integral must be a
/// b-constant integer.  Returns m_2..m_n.
inline std::vector<long> integrality_check(const EllSequence& ell, double tol = 1e-9) {
    std::vector<long> out;
    for (int j = 2; j <= ell.dim(); ++j) {
        TorusFunction g = cycle_integral(ell.at(1), j);
        double value = 0.0;
        for (const auto& [key, c] : g.terms()) {
            bool constant_term =
                std::all_of(key.alpha.begin(), key.alpha.end(), [](int v) { return v == 0; });
            if (!constant_term) {
                if (std::abs(c) > tol)
                    throw NotConstant("integrality_check: cycle integral depends on the base");
            } else {
                value = c.real();
            }
        }
        double nearest = std::round(value);
        if (std::abs(value - nearest) > tol)
            throw NotIntegral("integrality_check: cycle integral is not an integer");
        out.push_back(long(nearest));
    }
    return out;
}

} // namespace stitchkit

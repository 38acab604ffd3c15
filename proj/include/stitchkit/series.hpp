#pragma once

/**
 * Truncated power series in one formal parameter with TorusFunction
 * coefficients.  Products truncate at the series order; everything else is
 * exact coefficient arithmetic.
 */

#include <vector>

#include "stitchkit/torus_function.hpp"

namespace stitchkit {

class SeriesTF {
public:
    SeriesTF(int n, int order) : n_(n), order_(order), c_(order + 1, TorusFunction(n)) {
        if (order < 0) throw OrderOutOfRange("SeriesTF: negative order");
    }

    static SeriesTF from_constant(const TorusFunction& f, int order) {
        SeriesTF s(f.dim(), order);
        s.c_[0] = f;
        return s;
    }

    int dim() const { return n_; }
    int order() const { return order_; }

    const TorusFunction& coeff(int m) const { return c_.at(m); }
    TorusFunction& coeff(int m) { return c_.at(m); }

    SeriesTF& operator+=(const SeriesTF& o) {
        require_compatible(o);
        for (int m = 0; m <= order_; ++m) c_[m] += o.c_[m];
        return *this;
    }
    friend SeriesTF operator+(SeriesTF a, const SeriesTF& b) { return a += b; }

    SeriesTF& operator-=(const SeriesTF& o) {
        require_compatible(o);
        for (int m = 0; m <= order_; ++m) c_[m] -= o.c_[m];
        return *this;
    }
    friend SeriesTF operator-(SeriesTF a, const SeriesTF& b) { return a -= b; }

    SeriesTF operator*(const SeriesTF& o) const {
        require_compatible(o);
        SeriesTF out(n_, order_);
        for (int i = 0; i <= order_; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; i + j <= order_; ++j) {
                if (o.c_[j].is_zero()) continue;
                out.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return out;
    }

    SeriesTF operator*(const TorusFunction& f) const {
        SeriesTF out(n_, order_);
        for (int m = 0; m <= order_; ++m) out.c_[m] = c_[m] * f;
        return out;
    }

    SeriesTF operator*(double s) const {
        SeriesTF out(n_, order_);
        for (int m = 0; m <= order_; ++m) out.c_[m] = c_[m] * s;
        return out;
    }

    /// Multiply by the formal parameter to the given power.
    SeriesTF shifted(int power) const {
        SeriesTF out(n_, order_);
        for (int m = 0; m + power <= order_; ++m) out.c_[m + power] = c_[m];
        return out;
    }

    SeriesTF pow(int e) const {
        SeriesTF out = from_constant(TorusFunction::constant(n_, 1.0), order_);
        for (int i = 0; i < e; ++i) out = out * (*this);
        return out;
    }

private:
    void require_compatible(const SeriesTF& o) const {
        if (n_ != o.n_ || order_ != o.order_)
            throw OrderMismatch("SeriesTF: incompatible operands");
    }

    int n_;
    int order_;
    std::vector<TorusFunction> c_;
};

/// Cached powers of the shifted coordinate series b_j + shift_j(r), reusable
/// across many substitutions against the same shift.
class SubstitutionCache {
public:
    SubstitutionCache(int n, const std::vector<SeriesTF>& shift) : n_(n), pow_(n - 1) {
        if ((int)shift.size() != n - 1)
            throw DimensionMismatch("SubstitutionCache: expected one shift per base slot");
        order_ = shift.front().order();
        for (int j = 2; j <= n; ++j) {
            if (shift[j - 2].dim() != n || shift[j - 2].order() != order_)
                throw OrderMismatch("SubstitutionCache: inconsistent shift series");
            SeriesTF bj = SeriesTF::from_constant(TorusFunction::coordinate(n, j), order_);
            bj += shift[j - 2];
            pow_[j - 2].push_back(SeriesTF::from_constant(TorusFunction::constant(n, 1.0), order_));
            pow_[j - 2].push_back(std::move(bj));
        }
    }

    int dim() const { return n_; }
    int order() const { return order_; }

    const SeriesTF& power(int slot, int p) {
        auto& list = pow_.at(slot);
        while ((int)list.size() <= p) list.push_back(list.back() * list[1]);
        return list[p];
    }

private:
    int n_;
    int order_ = 0;
    std::vector<std::vector<SeriesTF>> pow_;
};

/// Exact substitution f(b + shift(r), y) for a polynomial-in-b function f.
/// Terms of f sharing an exponent pattern are substituted together.
inline SeriesTF substitute_base(const TorusFunction& f, SubstitutionCache& cache) {
    const int n = f.dim();
    if (cache.dim() != n) throw DimensionMismatch("substitute_base: dimension mismatch");
    const int order = cache.order();

    // group the Fourier parts by monomial exponent; the grouped functions are
    // generally not conjugate-symmetric on their own, the final sum is
    std::map<std::vector<int>, TorusFunction> groups;
    for (const auto& [key, c] : f.terms()) {
        auto it = groups.find(key.alpha);
        if (it == groups.end()) it = groups.emplace(key.alpha, TorusFunction(n)).first;
        it->second.add_term(key.k, std::vector<int>(n - 1, 0), c);
    }

    SeriesTF out(n, order);
    for (auto& [alpha, phase] : groups) {
        SeriesTF term = SeriesTF::from_constant(phase, order);
        for (int s = 0; s < n - 1; ++s)
            if (alpha[s] > 0) term = term * cache.power(s, alpha[s]);
        out += term;
    }
    return out;
}

inline SeriesTF substitute_base(const TorusFunction& f, const std::vector<SeriesTF>& shift) {
    SubstitutionCache cache(f.dim(), shift);
    return substitute_base(f, cache);
}

} // namespace stitchkit

#pragma once

/**
 * Sections of the fibrewise (co)tangent bundles over the reduced seam.
 *
 * An LSection is ell = sum_{j=2}^n a_j dy_j with TorusFunction components; a
 * TwoFormSection stores the independent components p_{jl}, j < l, of a
 * fibrewise two-form.  Closed / exact / constant are meant fibrewise, i.e.
 * on each torus fibre of the reduced seam.
 */

#include <vector>

#include "stitchkit/torus_function.hpp"

namespace stitchkit {

class LSection {
public:
    LSection() : n_(2), comp_(1, TorusFunction(2)) {}

    explicit LSection(int n) : n_(n), comp_(n - 1, TorusFunction(n)) {
        if (n < 2) throw DimensionMismatch("LSection: need n >= 2");
    }

    explicit LSection(std::vector<TorusFunction> components) {
        if (components.empty()) throw DimensionMismatch("LSection: no components");
        n_ = components.front().dim();
        if ((int)components.size() != n_ - 1)
            throw DimensionMismatch("LSection: expected n-1 components");
        for (const auto& c : components)
            if (c.dim() != n_) throw DimensionMismatch("LSection: mixed dimensions");
        comp_ = std::move(components);
    }

    int dim() const { return n_; }

    /// Component a_j, j in 2..n.
    const TorusFunction& a(int j) const { return comp_.at(TorusFunction::slot_of(n_, j)); }
    TorusFunction& a(int j) { return comp_.at(TorusFunction::slot_of(n_, j)); }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.is_zero()) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp_) m = std::max(m, c.max_abs());
        return m;
    }

    LSection& operator+=(const LSection& o) {
        require_same(o);
        for (size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
        return *this;
    }
    LSection& operator-=(const LSection& o) {
        require_same(o);
        for (size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
        return *this;
    }
    friend LSection operator+(LSection a, const LSection& b) { return a += b; }
    friend LSection operator-(LSection a, const LSection& b) { return a -= b; }
    LSection operator*(double s) const {
        LSection out = *this;
        for (auto& c : out.comp_) c = c * s;
        return out;
    }
    LSection operator-() const { return *this * -1.0; }

    /// Keep only the zero Fourier mode of every component.
    LSection fibre_average() const {
        LSection out(n_);
        for (int j = 2; j <= n_; ++j) out.a(j) = a(j).fibre_average();
        return out;
    }

    LSection oscillatory() const { return *this - fibre_average(); }

private:
    void require_same(const LSection& o) const {
        if (n_ != o.n_) throw DimensionMismatch("LSection: dimension mismatch");
    }

    int n_;
    std::vector<TorusFunction> comp_;
};

class TwoFormSection {
public:
    explicit TwoFormSection(int n) : n_(n) {
        if (n < 2) throw DimensionMismatch("TwoFormSection: need n >= 2");
        int m = (n - 1) * (n - 2) / 2;
        comp_.assign(std::max(m, 0), TorusFunction(n));
    }

    int dim() const { return n_; }

    /// Component on dy_j ^ dy_l, 2 <= j < l <= n.
    const TorusFunction& p(int j, int l) const { return comp_.at(index(j, l)); }
    TorusFunction& p(int j, int l) { return comp_.at(index(j, l)); }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.is_zero()) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp_) m = std::max(m, c.max_abs());
        return m;
    }

    TwoFormSection& operator-=(const TwoFormSection& o) {
        if (n_ != o.n_) throw DimensionMismatch("TwoFormSection: dimension mismatch");
        for (size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
        return *this;
    }
    friend TwoFormSection operator-(TwoFormSection a, const TwoFormSection& b) { return a -= b; }

private:
    size_t index(int j, int l) const {
        if (j < 2 || l <= j || l > n_) throw IndexOutOfRange("TwoFormSection: bad (j,l)");
        // pairs (j,l) with 2 <= j < l <= n, ordered lexicographically
        size_t idx = 0;
        for (int jj = 2; jj < j; ++jj) idx += size_t(n_ - jj);
        idx += size_t(l - j - 1);
        return idx;
    }

    int n_;
    std::vector<TorusFunction> comp_;
};

/// Fibrewise exterior derivative: (d ell)_{jl} = d_{y_j} a_l - d_{y_l} a_j.
inline TwoFormSection fibrewise_d(const LSection& ell) {
    TwoFormSection out(ell.dim());
    for (int j = 2; j <= ell.dim(); ++j)
        for (int l = j + 1; l <= ell.dim(); ++l)
            out.p(j, l) = ell.a(l).d_angle(j) - ell.a(j).d_angle(l);
    return out;
}

struct SectionClass {
    bool closed = false;
    bool exact = false;
    bool constant = false;
};

/// closed <=> d ell = 0; constant <=> every component is y-free;
/// exact <=> closed with vanishing fibre averages.
inline SectionClass classify(const LSection& ell) {
    SectionClass c;
    c.closed = fibrewise_d(ell).is_zero();
    c.constant = true;
    bool zero_avg = true;
    for (int j = 2; j <= ell.dim(); ++j) {
        if (!ell.a(j).is_y_free()) c.constant = false;
        if (!ell.a(j).fibre_average().is_zero()) zero_avg = false;
    }
    c.exact = c.closed && zero_avg;
    return c;
}

/// Integral of a closed section over the fibre cycle dual to the j-th angle.
/// Under the period-1 convention this is the zero Fourier mode of a_j, a
/// y-free function of b.
inline TorusFunction cycle_integral(const LSection& ell, int j) {
    if (!fibrewise_d(ell).is_zero())
        throw NotClosed("cycle_integral: section is not fibrewise closed");
    return ell.a(j).fibre_average();
}

inline bool approx_equal(const LSection& f, const LSection& g, double atol = 0.0) {
    if (f.dim() != g.dim()) return false;
    for (int j = 2; j <= f.dim(); ++j)
        if (!approx_equal(f.a(j), g.a(j), atol)) return false;
    return true;
}

} // namespace stitchkit

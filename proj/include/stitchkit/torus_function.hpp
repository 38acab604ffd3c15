#pragma once

/**
 * Exact algebra of circle-invariant functions on the reduced seam.
 *
 * A TorusFunction models
 *
 *     f(b, y) = sum_{k, alpha} c_{k,alpha} * b^alpha * e^{2 pi i k.y}
 *
 * where b = (b_2, ..., b_n) are base variables on the wall, y = (y_2, ..., y_n)
 * are angles of period 1, k runs over Fourier multi-indices in Z^{n-1} and
 * alpha over monomial exponents in N^{n-1}.  The first angle never appears:
 * circle invariance is structural.
 *
 * Real-valued functions keep the conjugate symmetry c_{-k,alpha} =
 * conj(c_{k,alpha}).  All operations are exact on the stored coefficients up
 * to a pruning threshold applied after every operation; "equal" always means
 * equal after pruning.
 *
 * Terms are stored sorted lexicographically by (k, alpha), which is also the
 * canonical serialization order.
 */

#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "stitchkit/errors.hpp"

namespace stitchkit {

using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Global caps of the algebra.  Exceeding a cap is a hard error, never a
/// silent truncation.
struct AlgebraLimits {
    static inline int max_fourier = 64;    ///< cap on |k|_inf
    static inline int max_degree = 64;     ///< cap on |alpha|_1
    static inline double prune = 1e-13;    ///< coefficients below this modulus are dropped
};

/// One Fourier/monomial slot.
struct TermKey {
    std::vector<int> k;
    std::vector<int> alpha;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

struct Term {
    TermKey key;
    Complex c;
};

class TorusFunction {
public:
    TorusFunction() : n_(2) {}

    explicit TorusFunction(int n) : n_(n) {
        if (n < 2) throw DimensionMismatch("TorusFunction: need n >= 2");
    }

    int dim() const { return n_; }
    int slots() const { return n_ - 1; }

    static TorusFunction zero(int n) { return TorusFunction(n); }

    static TorusFunction constant(int n, double c) {
        TorusFunction f(n);
        f.add_term(std::vector<int>(n - 1, 0), std::vector<int>(n - 1, 0), Complex(c, 0.0));
        f.prune();
        return f;
    }

    /// Monomial b^alpha (no angle dependence).
    static TorusFunction monomial(int n, const std::vector<int>& alpha, double c = 1.0) {
        TorusFunction f(n);
        f.check_slots(alpha);
        for (int a : alpha)
            if (a < 0) throw IndexOutOfRange("monomial: negative exponent");
        f.add_term(std::vector<int>(n - 1, 0), alpha, Complex(c, 0.0));
        f.prune();
        return f;
    }

    /// The coordinate function b_j, j in 2..n.
    static TorusFunction coordinate(int n, int j, double c = 1.0) {
        std::vector<int> alpha(n - 1, 0);
        alpha.at(slot_of(n, j)) = 1;
        return monomial(n, alpha, c);
    }

    /// c * cos(2 pi k.y) * b^alpha as the real pair of Fourier terms.
    static TorusFunction cosine(int n, const std::vector<int>& k, double c = 1.0,
                                const std::vector<int>& alpha = {}) {
        return real_mode(n, k, Complex(c / 2.0, 0.0), alpha);
    }

    /// c * sin(2 pi k.y) * b^alpha.
    static TorusFunction sine(int n, const std::vector<int>& k, double c = 1.0,
                              const std::vector<int>& alpha = {}) {
        return real_mode(n, k, Complex(0.0, -c / 2.0), alpha);
    }

    /// c * e^{2 pi i k.y} * b^alpha + conjugate term; for k = 0 the imaginary
    /// part of c must vanish.
    static TorusFunction real_mode(int n, const std::vector<int>& k, Complex c,
                                   std::vector<int> alpha = {}) {
        TorusFunction f(n);
        f.check_slots(k);
        if (alpha.empty()) alpha.assign(n - 1, 0);
        f.check_slots(alpha);
        const bool k_zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
        if (k_zero) {
            if (std::abs(c.imag()) > AlgebraLimits::prune)
                throw Error("real_mode: zero mode must carry a real coefficient");
            f.add_term(k, alpha, Complex(c.real(), 0.0));
        } else {
            std::vector<int> mk(k.size());
            std::transform(k.begin(), k.end(), mk.begin(), std::negate<int>());
            f.add_term(k, alpha, c);
            f.add_term(mk, alpha, std::conj(c));
        }
        f.prune();
        return f;
    }

    /// Terms in canonical (k, alpha)-lexicographic order.
    const std::vector<Term>& terms() const { return terms_; }

    /// Stored coefficient at (k, alpha); zero when absent.
    Complex coeff(const std::vector<int>& k, const std::vector<int>& alpha) const {
        TermKey key{k, alpha};
        auto it = lower_bound(key);
        if (it != terms_.end() && it->key == key) return it->c;
        return Complex(0, 0);
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_y_free() const {
        for (const auto& t : terms_)
            for (int v : t.key.k)
                if (v != 0) return false;
        return true;
    }

    /// Largest coefficient modulus; zero for the zero function.
    double max_abs() const {
        double m = 0.0;
        for (const auto& t : terms_) m = std::max(m, std::abs(t.c));
        return m;
    }

    /// Conjugate-symmetry check c_{-k,alpha} = conj(c_{k,alpha}).
    bool is_real_valued(double tol = 1e-11) const {
        for (const auto& t : terms_) {
            std::vector<int> mk(t.key.k.size());
            std::transform(t.key.k.begin(), t.key.k.end(), mk.begin(), std::negate<int>());
            Complex other = coeff(mk, t.key.alpha);
            if (std::abs(std::conj(t.c) - other) > tol * std::max(1.0, std::abs(t.c)))
                return false;
        }
        return true;
    }

    TorusFunction& operator+=(const TorusFunction& g) { return merge(g, 1.0); }
    TorusFunction& operator-=(const TorusFunction& g) { return merge(g, -1.0); }

    friend TorusFunction operator+(TorusFunction f, const TorusFunction& g) { return f += g; }
    friend TorusFunction operator-(TorusFunction f, const TorusFunction& g) { return f -= g; }

    TorusFunction operator-() const { return *this * -1.0; }

    TorusFunction operator*(double s) const {
        TorusFunction out(n_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.key, t.c * s});
        out.prune();
        return out;
    }

    friend TorusFunction operator*(double s, const TorusFunction& f) { return f * s; }

    /// Exact product: convolution in Fourier indices, addition in exponents.
    TorusFunction operator*(const TorusFunction& g) const {
        require_same_dim(g);
        std::vector<Term> prod;
        prod.reserve(terms_.size() * g.terms_.size());
        TermKey key;
        key.k.resize(size_t(n_ - 1));
        key.alpha.resize(size_t(n_ - 1));
        for (const auto& ta : terms_) {
            for (const auto& tb : g.terms_) {
                for (int i = 0; i < n_ - 1; ++i) {
                    key.k[i] = ta.key.k[i] + tb.key.k[i];
                    key.alpha[i] = ta.key.alpha[i] + tb.key.alpha[i];
                }
                check_caps(key);
                prod.push_back({key, ta.c * tb.c});
            }
        }
        std::sort(prod.begin(), prod.end(),
                  [](const Term& x, const Term& y) { return x.key < y.key; });
        TorusFunction out(n_);
        out.terms_.reserve(prod.size());
        for (auto& t : prod) {
            if (!out.terms_.empty() && out.terms_.back().key == t.key)
                out.terms_.back().c += t.c;
            else
                out.terms_.push_back(std::move(t));
        }
        out.prune();
        return out;
    }

    TorusFunction& operator*=(const TorusFunction& g) { return *this = *this * g; }

    /// d/db_j, j in 2..n.
    TorusFunction d_base(int j) const {
        const size_t s = slot_of(n_, j);
        TorusFunction out(n_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.key.alpha[s] == 0) continue;
            Term down = t;
            down.c *= double(t.key.alpha[s]);
            down.key.alpha[s] -= 1;
            out.terms_.push_back(std::move(down));
        }
        // uniform decrement in one slot preserves the ordering
        out.prune();
        return out;
    }

    /// d/dy_j, j in 2..n: multiplies each term by 2 pi i k_j.
    TorusFunction d_angle(int j) const {
        const size_t s = slot_of(n_, j);
        TorusFunction out(n_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.key.k[s] == 0) continue;
            out.terms_.push_back({t.key, t.c * Complex(0.0, two_pi * t.key.k[s])});
        }
        out.prune();
        return out;
    }

    /// Zero Fourier mode: the fibrewise average.
    TorusFunction fibre_average() const {
        TorusFunction out(n_);
        for (const auto& t : terms_) {
            if (std::all_of(t.key.k.begin(), t.key.k.end(), [](int v) { return v == 0; }))
                out.terms_.push_back(t);
        }
        out.prune();
        return out;
    }

    /// Oscillatory part: everything but the zero Fourier mode.
    TorusFunction oscillatory() const { return *this - fibre_average(); }

    /// Numeric evaluation at b = (b_2..b_n), y = (y_2..y_n); returns the real
    /// part after checking that the imaginary residue is at tolerance level.
    double evaluate(const std::vector<double>& b, const std::vector<double>& y) const {
        if ((int)b.size() != n_ - 1 || (int)y.size() != n_ - 1)
            throw DimensionMismatch("evaluate: point dimension mismatch");
        Complex acc(0, 0);
        double scale = 0.0;
        for (const auto& t : terms_) {
            double mono = 1.0;
            for (size_t i = 0; i < b.size(); ++i)
                for (int p = 0; p < t.key.alpha[i]; ++p) mono *= b[i];
            double phase = 0.0;
            for (size_t i = 0; i < y.size(); ++i) phase += t.key.k[i] * y[i];
            Complex v = t.c * mono * std::exp(Complex(0.0, two_pi * phase));
            acc += v;
            scale += std::abs(v);
        }
        if (std::abs(acc.imag()) > 1e-9 * std::max(1.0, scale))
            throw Error("evaluate: imaginary residue above tolerance; function is not real-valued");
        return acc.real();
    }

    /// Insert a coefficient; conjugate symmetry is the caller's business.
    void add_term(const std::vector<int>& k, const std::vector<int>& alpha, Complex c) {
        check_slots(k);
        check_slots(alpha);
        TermKey key{k, alpha};
        check_caps(key);
        auto it = lower_bound(key);
        if (it != terms_.end() && it->key == key)
            it->c += c;
        else
            terms_.insert(it, Term{std::move(key), c});
    }

    void prune() {
        std::erase_if(terms_, [](const Term& t) { return std::abs(t.c) < AlgebraLimits::prune; });
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
            for (size_t i = 0; i < key.alpha.size(); ++i)
                if (key.alpha[i]) os << " b" << (i + 2) << "^" << key.alpha[i];
            for (size_t i = 0; i < key.k.size(); ++i)
                if (key.k[i]) os << " E(" << key.k[i] << " y" << (i + 2) << ")";
        }
        if (first) os << "0";
        return os.str();
    }

    static size_t slot_of(int n, int j) {
        if (j < 2 || j > n) throw IndexOutOfRange("index j must lie in 2..n");
        return size_t(j - 2);
    }

private:
    std::vector<Term>::iterator lower_bound(const TermKey& key) {
        return std::lower_bound(terms_.begin(), terms_.end(), key,
                                [](const Term& t, const TermKey& k) { return t.key < k; });
    }
    std::vector<Term>::const_iterator lower_bound(const TermKey& key) const {
        return std::lower_bound(terms_.begin(), terms_.end(), key,
                                [](const Term& t, const TermKey& k) { return t.key < k; });
    }

    TorusFunction& merge(const TorusFunction& g, double sign) {
        require_same_dim(g);
        std::vector<Term> out;
        out.reserve(terms_.size() + g.terms_.size());
        auto ia = terms_.begin();
        auto ib = g.terms_.begin();
        while (ia != terms_.end() || ib != g.terms_.end()) {
            if (ib == g.terms_.end() || (ia != terms_.end() && ia->key < ib->key)) {
                out.push_back(*ia++);
            } else if (ia == terms_.end() || ib->key < ia->key) {
                out.push_back({ib->key, ib->c * sign});
                ++ib;
            } else {
                out.push_back({ia->key, ia->c + ib->c * sign});
                ++ia;
                ++ib;
            }
        }
        terms_ = std::move(out);
        prune();
        return *this;
    }

    void require_same_dim(const TorusFunction& g) const {
        if (n_ != g.n_) throw DimensionMismatch("TorusFunction: dimension mismatch");
    }

    void check_slots(const std::vector<int>& v) const {
        if ((int)v.size() != n_ - 1)
            throw DimensionMismatch("TorusFunction: multi-index has wrong length");
    }

    static void check_caps(const TermKey& key) {
        int deg = 0;
        for (int a : key.alpha) deg += a;
        if (deg > AlgebraLimits::max_degree)
            throw DegreeOverflow("TorusFunction: monomial degree cap exceeded");
        for (int v : key.k)
            if (std::abs(v) > AlgebraLimits::max_fourier)
                throw DegreeOverflow("TorusFunction: Fourier mode cap exceeded");
    }

    int n_;
    std::vector<Term> terms_;  ///< sorted by key, unique keys
};

/// Poisson bracket on the reduced seam:
///   {f, g} = sum_{j=2}^{n} d_{y_j} f d_{b_j} g - d_{b_j} f d_{y_j} g.
inline TorusFunction poisson(const TorusFunction& f, const TorusFunction& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("poisson: dimension mismatch");
    TorusFunction out(f.dim());
    for (int j = 2; j <= f.dim(); ++j) {
        out += f.d_angle(j) * g.d_base(j);
        out -= f.d_base(j) * g.d_angle(j);
    }
    return out;
}

/// Equality after pruning, with an absolute tolerance scaled to the operands.
inline bool approx_equal(const TorusFunction& f, const TorusFunction& g,
                         double atol = 0.0) {
    if (atol <= 0.0)
        atol = AlgebraLimits::prune * std::max(1.0, std::max(f.max_abs(), g.max_abs()));
    TorusFunction d = f - g;
    return d.max_abs() <= atol;
}

} // namespace stitchkit

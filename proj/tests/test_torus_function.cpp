#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "stitchkit/torus_function.hpp"

using namespace stitchkit;

namespace {

std::mt19937_64 rng_for(unsigned seed) { return std::mt19937_64(0xfeedULL * 1000003ULL + seed); }

/// Small random real-valued function with a handful of Fourier modes and low
/// base degree; coefficients stay O(0.1) so products remain well scaled.
TorusFunction random_function(int n, std::mt19937_64& rng, int max_mode = 2, int max_deg = 2,
                              int n_terms = 3) {
    std::uniform_int_distribution<int> mode(-max_mode, max_mode);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_real_distribution<double> coef(-0.3, 0.3);
    TorusFunction f(n);
    for (int t = 0; t < n_terms; ++t) {
        std::vector<int> k(n - 1), alpha(n - 1);
        for (auto& v : k) v = mode(rng);
        for (auto& v : alpha) v = deg(rng);
        bool k_zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
        Complex c(coef(rng), k_zero ? 0.0 : coef(rng));
        f += TorusFunction::real_mode(n, k, c, alpha);
    }
    return f;
}

} // namespace

TEST_CASE("additive identity and cancellation") {
    auto rng = rng_for(1);
    TorusFunction f = random_function(3, rng);
    CHECK(approx_equal(f + TorusFunction::zero(3), f));

    std::vector<int> k{1, 0};
    TorusFunction c = TorusFunction::cosine(2, std::vector<int>{1});
    CHECK((c + (-c)).is_zero());
}

TEST_CASE("sum expands into Fourier terms") {
    // b2 + b2 cos(2 pi y2) stores the zero mode and the +-1 modes at c = 1/2
    TorusFunction f = TorusFunction::coordinate(2, 2) +
                      TorusFunction::cosine(2, {1}, 1.0, {1});
    REQUIRE(f.terms().size() == 3);
    CHECK(std::abs(f.coeff({0}, {1}) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(f.coeff({1}, {1}) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(f.coeff({-1}, {1}) - Complex(0.5, 0)) < 1e-15);
}

TEST_CASE("products") {
    TorusFunction one = TorusFunction::constant(3, 1.0);
    auto rng = rng_for(2);
    TorusFunction f = random_function(3, rng);
    CHECK(approx_equal(f * one, f));

    // cos^2(2 pi y2) = 1/2 + 1/2 cos(4 pi y2)
    TorusFunction c = TorusFunction::cosine(2, {1});
    TorusFunction expect = TorusFunction::constant(2, 0.5) + TorusFunction::cosine(2, {2}, 0.5);
    CHECK(approx_equal(c * c, expect));

    // b2 * b3 is the monomial alpha = (1,1)
    TorusFunction b2 = TorusFunction::coordinate(3, 2);
    TorusFunction b3 = TorusFunction::coordinate(3, 3);
    CHECK(approx_equal(b2 * b3, TorusFunction::monomial(3, {1, 1})));
}

TEST_CASE("derivatives") {
    // d/db2 b2^2 = 2 b2
    TorusFunction b2sq = TorusFunction::monomial(2, {2});
    CHECK(approx_equal(b2sq.d_base(2), TorusFunction::coordinate(2, 2, 2.0)));

    // d/dy3 sin(2 pi y3) = 2 pi cos(2 pi y3)
    TorusFunction s = TorusFunction::sine(3, {0, 1});
    CHECK(approx_equal(s.d_angle(3), TorusFunction::cosine(3, {0, 1}, two_pi)));

    // d/dy2 b2 = 0
    CHECK(TorusFunction::coordinate(2, 2).d_angle(2).is_zero());

    // mixed partials commute
    auto rng = rng_for(3);
    TorusFunction f = random_function(3, rng);
    CHECK(approx_equal(f.d_angle(2).d_base(3), f.d_base(3).d_angle(2)));
}

TEST_CASE("poisson bracket basics") {
    auto rng = rng_for(4);
    // y-free against y-free vanishes
    TorusFunction p = TorusFunction::monomial(3, {2, 1});
    TorusFunction q = TorusFunction::monomial(3, {0, 3});
    CHECK(poisson(p, q).is_zero());

    TorusFunction f = random_function(3, rng);
    CHECK(poisson(f, f).is_zero());

    // {sin 2 pi y2, b2} = 2 pi cos 2 pi y2  (n = 3)
    TorusFunction s = TorusFunction::sine(3, {1, 0});
    TorusFunction b2 = TorusFunction::coordinate(3, 2);
    CHECK(approx_equal(poisson(s, b2), TorusFunction::cosine(3, {1, 0}, two_pi)));
}

TEST_CASE("poisson bracket Leibniz and Jacobi on random triples") {
    auto rng = rng_for(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = (trial % 2) ? 2 : 3;
        TorusFunction f = random_function(n, rng);
        TorusFunction g = random_function(n, rng);
        TorusFunction h = random_function(n, rng);
        TorusFunction leib = poisson(f, g * h) - (poisson(f, g) * h + g * poisson(f, h));
        CHECK(leib.max_abs() < 1e-11);
        TorusFunction jac =
            poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
        CHECK(jac.max_abs() < 1e-10);
        TorusFunction anti = poisson(f, g) + poisson(g, f);
        CHECK(anti.max_abs() < 1e-12);
    }
}

TEST_CASE("fibre average") {
    TorusFunction f = TorusFunction::constant(2, 3.0) + TorusFunction::cosine(2, {1});
    CHECK(approx_equal(f.fibre_average(), TorusFunction::constant(2, 3.0)));

    TorusFunction g = TorusFunction::sine(3, {0, 1}, 1.0, {1, 0});  // b2 sin 2 pi y3
    CHECK(g.fibre_average().is_zero());

    // b2 (2 + cos 2 pi y2) averages to 2 b2
    TorusFunction h = TorusFunction::monomial(2, {1}, 2.0) + TorusFunction::cosine(2, {1}, 1.0, {1});
    CHECK(approx_equal(h.fibre_average(), TorusFunction::coordinate(2, 2, 2.0)));
}

TEST_CASE("evaluate") {
    TorusFunction f = TorusFunction::constant(2, 2.0);
    CHECK(f.evaluate({0.3}, {0.9}) == Catch::Approx(2.0));

    TorusFunction c = TorusFunction::cosine(2, {1}, 1.0, {1});  // b2 cos 2 pi y2
    CHECK(c.evaluate({0.5}, {0.25}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(c.evaluate({0.5}, {0.5}) == Catch::Approx(-0.5));

    // 1-periodicity in every angle
    auto rng = rng_for(6);
    TorusFunction g = random_function(3, rng);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> b{u(rng), u(rng)}, y{u(rng), u(rng)};
        std::vector<double> y_shift{y[0] + 1.0, y[1] - 2.0};
        CHECK(std::abs(g.evaluate(b, y) - g.evaluate(b, y_shift)) < 1e-12);
    }
}

TEST_CASE("reality is preserved by the ring operations") {
    auto rng = rng_for(7);
    TorusFunction f = random_function(3, rng);
    TorusFunction g = random_function(3, rng);
    CHECK(f.is_real_valued());
    CHECK((f * g).is_real_valued());
    CHECK((f + g).is_real_valued());
    CHECK(f.d_angle(2).is_real_valued());
    CHECK(f.d_base(3).is_real_valued());
    CHECK(poisson(f, g).is_real_valued());
}

TEST_CASE("dimension and cap errors") {
    TorusFunction f2(2), f3(3);
    CHECK_THROWS_AS(f2 + f3, DimensionMismatch);
    CHECK_THROWS_AS(f2.d_base(3), IndexOutOfRange);
    CHECK_THROWS_AS(f2.d_angle(1), IndexOutOfRange);

    int saved = AlgebraLimits::max_degree;
    AlgebraLimits::max_degree = 3;
    TorusFunction big = TorusFunction::monomial(2, {2});
    CHECK_THROWS_AS(big * big, DegreeOverflow);
    AlgebraLimits::max_degree = saved;
}

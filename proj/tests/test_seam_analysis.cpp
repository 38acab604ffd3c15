#include <catch_amalgamated.hpp>

#include <random>

#include "stitchkit/seam_analysis.hpp"

using namespace stitchkit;
using C = std::complex<double>;

namespace {

PhasePoint random_seam_point(int n, std::mt19937_64& rng, double lo = 0.6, double hi = 1.8) {
    std::uniform_real_distribution<double> rad(lo, hi), ang(0.0, two_pi);
    double r = rad(rng);
    PhasePoint z;
    z.push_back(std::polar(r, ang(rng)));
    z.push_back(std::polar(r, ang(rng)));
    if (n == 3) z.push_back(std::polar(rad(rng), ang(rng)));
    return z;
}

} // namespace

TEST_CASE("discrepancy extraction is proportional to the circle field") {
    std::mt19937_64 rng(71);
    for (const char* name : {"focus_focus", "leg", "amoeba"}) {
        ExampleFibration ex = make_example(name);
        int done = 0;
        while (done < 10) {
            PhasePoint z = random_seam_point(ex.n, rng);
            if (!ex.in_domain(z)) continue;
            DiscrepancyResult d = discrepancy(ex, z);
            CHECK(d.residual < 1e-8);
            ++done;
        }
    }
}

TEST_CASE("extracted coefficients are circle invariant") {
    std::mt19937_64 rng(72);
    ExampleFibration ex = make_example("amoeba");
    std::uniform_real_distribution<double> ang(0.0, two_pi);
    int done = 0;
    while (done < 10) {
        PhasePoint z = random_seam_point(3, rng);
        if (!ex.in_domain(z)) continue;
        DiscrepancyResult d0 = discrepancy(ex, z);
        DiscrepancyResult d1 = discrepancy(ex, ex.rotate(z, ang(rng)));
        for (int i = 0; i < 2; ++i) CHECK(std::abs(d0.a[i] - d1.a[i]) < 1e-9);
        ++done;
    }
}

TEST_CASE("smooth fibrations have zero discrepancy") {
    // a global model: f = (mu, log|z3|) on C^3 restricted to two components
    // is smooth in the z3 slot; its coefficient must vanish
    ExampleFibration leg = make_example("leg");
    std::mt19937_64 rng(73);
    int done = 0;
    while (done < 5) {
        PhasePoint z = random_seam_point(3, rng);
        if (!leg.in_domain(z)) continue;
        DiscrepancyResult d = discrepancy(leg, z);
        CHECK(std::abs(d.a[0]) < 1e-10);  // the log|z3| component is smooth
        ++done;
    }
}

TEST_CASE("fibre point continuation") {
    ExampleFibration ex = make_example("focus_focus");
    Vec target{0.15, 0.4};
    PhasePoint z = fibre_point(ex, target, seam_seed(ex, {0.4}));
    Vec f = ex.f(z);
    CHECK(f[0] == Catch::Approx(0.15).margin(1e-11));
    CHECK(f[1] == Catch::Approx(0.4).margin(1e-11));

    // continuation across the seam
    Vec target2{-0.15, 0.4};
    PhasePoint z2 = fibre_point(ex, target2, z);
    Vec f2 = ex.f(z2);
    CHECK(f2[0] == Catch::Approx(-0.15).margin(1e-11));
    CHECK(f2[1] == Catch::Approx(0.4).margin(1e-11));
}

TEST_CASE("loop integrals of the extracted section vanish on contractible loops") {
    // commutator rectangle on a seam fibre of the amoeba example: flow the
    // two reduced directions forward then backward; the discrepancy integral
    // over the closed loop must vanish (fibrewise closedness)
    ExampleFibration ex = make_example("amoeba");
    PhasePoint z = fibre_point(ex, {0.0, -1.5, -1.5}, seam_seed(ex, {-1.5, -1.5}));
    const double tau2 = 0.02, tau3 = 0.015;
    double acc = 0.0;
    acc += detail::cycle_discrepancy_integral(ex, z, {tau2, 0.0});
    PhasePoint z1 = detail::trace_cycle(ex, Side::minus, z, {tau2, 0.0}).z;
    acc += detail::cycle_discrepancy_integral(ex, z1, {0.0, tau3});
    PhasePoint z2 = detail::trace_cycle(ex, Side::minus, z1, {0.0, tau3}).z;
    acc += detail::cycle_discrepancy_integral(ex, z2, {-tau2, 0.0});
    PhasePoint z3 = detail::trace_cycle(ex, Side::minus, z2, {-tau2, 0.0}).z;
    acc += detail::cycle_discrepancy_integral(ex, z3, {0.0, -tau3});
    PhasePoint z4 = detail::trace_cycle(ex, Side::minus, z3, {0.0, -tau3}).z;
    // the rectangle closes because the reduced flows commute
    for (int k = 0; k < 3; ++k) CHECK(std::abs(z4[k] - z[k]) < 1e-6);
    CHECK(std::abs(acc) < 1e-5);
}

TEST_CASE("reduced returns close up to a circle element") {
    ExampleFibration ex = make_example("focus_focus");
    PhasePoint z = fibre_point(ex, {0.0, 0.5}, seam_seed(ex, {0.5}));
    Vec times = detail::polish_generator(ex, Side::minus, z, {two_pi * std::exp(1.0)},
                                         {two_pi});
    CHECK(times[0] > 0.0);
    CHECK_NOTHROW(detail::measure_phase(ex, Side::minus, z, times));
}

TEST_CASE("cohomology jumps of the two-dimensional model") {
    ExampleFibration ex = make_example("focus_focus");
    Vec inner = cohomology_jump(ex, {-0.8}, seam_seed(ex, {-0.8}));
    Vec outer = cohomology_jump(ex, {0.8}, seam_seed(ex, {0.8}));
    // one wall component carries the trivial class, the other the generator
    CHECK(std::abs(inner[0] - 0.0) < 1e-3);
    CHECK(std::abs(std::abs(outer[0]) - 1.0) < 1e-3);
}

TEST_CASE("monodromy around the two-dimensional discriminant") {
    ExampleFibration ex = make_example("focus_focus");
    LoopSpec loop{{0.0, 0.0}, 1, 0.8, 64};
    MonodromyResult m = monodromy(ex, loop, seam_seed(ex, {0.8}));
    CHECK(m.snap_error < 1e-3);
    CHECK(conjugate_to_unit_shear(m.matrix));
    CHECK(m.matrix[1][0] == 0);
    CHECK(m.matrix[1][1] == 1);
    CHECK(std::abs(m.matrix[0][1]) == 1);
}

TEST_CASE("contractible loops have trivial monodromy") {
    ExampleFibration ex = make_example("focus_focus");
    // loop around a regular wall point, still crossing the seam twice
    LoopSpec loop{{0.0, 0.9}, 1, 0.35, 64};
    MonodromyResult m = monodromy(ex, loop, seam_seed(ex, {1.25}));
    CHECK(m.snap_error < 1e-3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(m.matrix[i][j] == (i == j ? 1 : 0));
}

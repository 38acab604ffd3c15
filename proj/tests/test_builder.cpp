#include <catch_amalgamated.hpp>

#include <random>

#include "stitchkit/builder.hpp"
#include "stitchkit/generate.hpp"

using namespace stitchkit;

namespace {

EllSequence constant_shear(int n, double c, int order = 1) {
    EllSequence ell(n, order);
    LSection first(n);
    first.a(2) = TorusFunction::constant(n, c);
    ell.set(1, first);
    return ell;
}

} // namespace

TEST_CASE("zero sequence builds the projection") {
    BuiltFibration u = build(EllSequence(3, 2));
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> ur(-0.09, 0.09), ub(-0.9, 0.9), uy(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPhasePoint p{{ur(rng), ub(rng), ub(rng)}, {uy(rng), uy(rng), uy(rng)}};
        Vec val = u.u(p);
        for (int i = 0; i < 3; ++i) CHECK(val[i] == Catch::Approx(p.b[i]).margin(1e-14));
    }
}

TEST_CASE("constant first-order section gives a linear shear") {
    const double c = 0.3;
    BuiltFibration u = build(constant_shear(2, c));
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> ur(-0.09, 0.09), ub(-0.9, 0.9), uy(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPhasePoint p{{ur(rng), ub(rng)}, {uy(rng), uy(rng)}};
        Vec val = u.u(p);
        CHECK(val[1] == Catch::Approx(p.b[1] - c * p.b[0]).margin(1e-12));
    }
}

TEST_CASE("restriction to the seam is the base projection") {
    std::mt19937_64 rng(53);
    EllSequence ell = random_closed_ell_sequence(3, 2, rng);
    BuiltFibration u = build(std::move(ell));
    std::uniform_real_distribution<double> ub(-0.9, 0.9), uy(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        TorusPhasePoint p{{0.0, ub(rng), ub(rng)}, {uy(rng), uy(rng), uy(rng)}};
        Vec val = u.u(p);
        CHECK(val[0] == 0.0);
        CHECK(val[1] == Catch::Approx(p.b[1]).margin(1e-13));
        CHECK(val[2] == Catch::Approx(p.b[2]).margin(1e-13));
    }
}

TEST_CASE("finite-difference Taylor coefficients match the conversion") {
    std::mt19937_64 rng(54);
    GenOptions opt;
    opt.amplitude = 0.1;
    EllSequence ell = random_closed_ell_sequence(3, 2, rng, opt);
    BuiltFibration u = build(std::move(ell));
    CHECK(taylor_match_error(u, 10, 1) < 1e-5);
}

TEST_CASE("numerical Poisson brackets vanish for closed input") {
    std::mt19937_64 rng(55);
    GenOptions opt;
    opt.amplitude = 0.1;
    for (int trial = 0; trial < 3; ++trial) {
        EllSequence ell = random_closed_ell_sequence(3, 1 + int(rng() % 3), rng, opt);
        BuiltFibration u = build(std::move(ell));
        LagrangianReport rep = verify_lagrangian(u, 60, 1e-5, trial);
        CHECK(rep.max_bracket < 1e-7);
    }
    // flat case: brackets vanish to rounding
    BuiltFibration flat = build(EllSequence(2, 1));
    CHECK(verify_lagrangian(flat, 30, 1e-5, 0).max_bracket < 1e-12);
}

TEST_CASE("first-order transverse derivative has the prescribed discrepancy") {
    // du_j/db_1 at the seam equals -a_{j,1}
    std::mt19937_64 rng(56);
    EllSequence ell = random_closed_ell_sequence(3, 2, rng);
    LSection first = ell.at(1);
    BuiltFibration u = build(std::move(ell));
    std::uniform_real_distribution<double> ub(-0.9, 0.9), uy(0, 1);
    const double h = 1e-5;
    for (int trial = 0; trial < 10; ++trial) {
        Vec bred{ub(rng), ub(rng)}, yred{uy(rng), uy(rng)};
        for (int j = 2; j <= 3; ++j) {
            TorusPhasePoint pp{{h, bred[0], bred[1]}, {0.0, yred[0], yred[1]}};
            TorusPhasePoint pm{{-h, bred[0], bred[1]}, {0.0, yred[0], yred[1]}};
            double fd = (u.u(pp)[j - 1] - u.u(pm)[j - 1]) / (2 * h);
            CHECK(fd == Catch::Approx(-first.a(j).evaluate(bred, yred)).margin(1e-5));
        }
    }
}

TEST_CASE("glue map on constant sections is a linear angle shift") {
    LSection ell1(3);
    ell1.a(2) = TorusFunction::constant(3, 2.0);  // integer class m = 2
    GluePoint p{{0.4, -0.2}, 0.15, {0.3, 0.8}};
    GluePoint q = glue_Q(ell1, p);
    CHECK(q.t1 == Catch::Approx(frac_mod1(0.15 - 2.0 * 0.3)).margin(1e-12));
    CHECK(q.b == p.b);
    CHECK(q.tbar[0] == Catch::Approx(0.3));
    CHECK(q.tbar[1] == Catch::Approx(0.8));

    // zero section: identity
    GluePoint id = glue_Q(LSection(3), p);
    CHECK(id.t1 == Catch::Approx(p.t1));
}

TEST_CASE("glue integral is path independent for closed sections") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        LSection ell1 = random_closed_section(3, rng);
        std::uniform_real_distribution<double> ub(-0.9, 0.9), uy(0, 1);
        Vec b{ub(rng), ub(rng)};
        Vec tbar{uy(rng), uy(rng)};
        double straight = glue_line_integral(ell1, b, tbar, GluePath::straight);
        double axis = glue_line_integral(ell1, b, tbar, GluePath::axis_ordered);
        CHECK(straight == Catch::Approx(axis).margin(1e-10));
    }
    // non-closed sections are rejected by the map
    LSection bad(3);
    bad.a(2) = TorusFunction::sine(3, {0, 1});
    CHECK_THROWS_AS(glue_Q(bad, GluePoint{{0, 0}, 0, {0.5, 0.5}}), NotClosed);
}

TEST_CASE("integral classes make the glue offset well defined mod 1") {
    std::mt19937_64 rng(58);
    EllSequence ell = random_integral_ell_sequence(3, 1, {1, 2}, rng);
    LSection ell1 = ell.at(1);
    std::uniform_real_distribution<double> ub(-0.9, 0.9), uy(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        GluePoint p{{ub(rng), ub(rng)}, uy(rng), {uy(rng), uy(rng)}};
        GluePoint shifted = p;
        shifted.tbar[0] += 1.0;  // lattice translation
        double q0 = glue_Q(ell1, p).t1;
        double q1 = glue_Q(ell1, shifted).t1;
        CHECK(circle_dist(q0, q1) < 1e-9);
    }
}

TEST_CASE("flow extension reproduces the glue map on the seam") {
    std::mt19937_64 rng(59);
    GenOptions opt;
    opt.amplitude = 0.1;
    EllSequence ell = random_closed_ell_sequence(3, 2, rng, opt);
    LSection ell1 = ell.at(1);
    BuiltFibration u = build(std::move(ell));
    std::uniform_real_distribution<double> ub(-0.8, 0.8), uy(0, 1);
    for (int trial = 0; trial < 8; ++trial) {
        GluePoint p{{ub(rng), ub(rng)}, uy(rng), {uy(rng), uy(rng)}};
        TorusPhasePoint z = glue_Q_tilde(u, p);
        GluePoint q = glue_Q(ell1, p);
        CHECK(circle_dist(frac_mod1(z.y[0]), q.t1) < 1e-6);
        CHECK(circle_dist(frac_mod1(z.y[1]), q.tbar[0]) < 1e-8);
        CHECK(circle_dist(frac_mod1(z.y[2]), q.tbar[1]) < 1e-8);
        CHECK(z.b[0] == Catch::Approx(0.0).margin(1e-9));
    }

    // tbar = 0: pure circle translation by t1
    GluePoint p0{{0.1, 0.2}, 0.37, {0.0, 0.0}};
    TorusPhasePoint z0 = glue_Q_tilde(u, p0);
    CHECK(frac_mod1(z0.y[0]) == Catch::Approx(0.37));
}

TEST_CASE("period lattice") {
    // flat case: identity rows
    BuiltFibration flat = build(EllSequence(2, 1));
    Mat rows = period_lattice(flat, {-0.05, 0.3});
    CHECK(rows[0][0] == Catch::Approx(1.0));
    CHECK(rows[1][1] == Catch::Approx(1.0).margin(1e-9));
    CHECK(rows[1][0] == Catch::Approx(0.0).margin(1e-9));

    // constant non-integer class c: the angle generator picks up c extra
    // circle time on the glued side; crossing to the flat side removes it
    const double c = 0.3;
    BuiltFibration shear = build(constant_shear(2, c));
    Mat glued = period_lattice(shear, {-0.05, 0.2});
    CHECK(glued[1][1] == Catch::Approx(1.0).margin(1e-9));
    CHECK(glued[1][0] == Catch::Approx(c).margin(1e-9));
    Mat outer = period_lattice(shear, {0.05, 0.2}, glued);
    CHECK(outer[1][0] == Catch::Approx(0.0).margin(1e-12));

    // rows constant along the wall for base-independent sections
    Mat at_other = period_lattice(shear, {-0.05, -0.4});
    CHECK(at_other[1][0] == Catch::Approx(glued[1][0]).margin(1e-9));
}

TEST_CASE("certification shrinks overlarge domains") {
    // a large-amplitude sequence cannot certify the default width everywhere,
    // but certification must end with a usable box
    std::mt19937_64 rng(60);
    GenOptions opt;
    opt.amplitude = 3.0;
    EllSequence ell = random_closed_ell_sequence(2, 2, rng, opt);
    BuiltFibration u = build(std::move(ell), BuildDomain{0.4, 1.0});
    CHECK(u.certified_eps() > 0.0);
    CHECK(u.certified_eps() <= 0.4);
    TorusPhasePoint p{{-u.certified_eps() * 0.5, 0.3}, {0.0, 0.6}};
    CHECK_NOTHROW(u.u(p));
}

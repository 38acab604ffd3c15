#include <catch_amalgamated.hpp>

#include <random>

#include "stitchkit/generate.hpp"
#include "stitchkit/germs.hpp"

using namespace stitchkit;

namespace {

bool germs_equal(const GermChange& a, const GermChange& b, double atol = 1e-12) {
    if (a.dim() != b.dim() || a.order() != b.order()) return false;
    for (int m = 1; m <= a.order(); ++m)
        for (int j = 2; j <= a.dim(); ++j)
            if (!approx_equal(a.phi(j, m), b.phi(j, m), atol)) return false;
    return true;
}

bool sequences_equal(const EllSequence& a, const EllSequence& b, double atol = 1e-11) {
    if (a.order() != b.order() || a.dim() != b.dim()) return false;
    for (int m = 1; m <= a.order(); ++m)
        if (!approx_equal(a.at(m), b.at(m), atol)) return false;
    return true;
}

} // namespace

TEST_CASE("composition with the identity") {
    std::mt19937_64 rng(41);
    GermChange g = random_germ(3, 3, rng);
    GermChange id = GermChange::identity(3, 3);
    CHECK(germs_equal(germ_compose(g, id), g));
    CHECK(germs_equal(germ_compose(id, g), g));
}

TEST_CASE("first order composes additively") {
    std::mt19937_64 rng(42);
    GermChange a = random_germ(3, 3, rng);
    GermChange b = random_germ(3, 3, rng);
    GermChange c = germ_compose(a, b);
    for (int j = 2; j <= 3; ++j)
        CHECK(approx_equal(c.phi(j, 1), a.phi(j, 1) + b.phi(j, 1)));
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        GermChange a = random_germ(3, 3, rng), b = random_germ(3, 3, rng),
                   c = random_germ(3, 3, rng);
        CHECK(germs_equal(germ_compose(germ_compose(a, b), c),
                          germ_compose(a, germ_compose(b, c)), 1e-11));
    }
}

TEST_CASE("inverse germs") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 5; ++trial) {
        GermChange g = random_germ(3, 4, rng);
        GermChange inv = germ_inverse(g);
        CHECK(germ_compose(inv, g).is_identity());
        CHECK(germ_compose(g, inv).is_identity());
    }
    CHECK_THROWS_AS(germ_compose(GermChange(2, 2), GermChange(3, 2)), OrderMismatch);
}

TEST_CASE("identity germ acts trivially") {
    std::mt19937_64 rng(45);
    EllSequence ell = random_closed_ell_sequence(3, 3, rng);
    EllSequence acted = germ_act(GermChange::identity(3, 3), ell);
    CHECK(sequences_equal(acted, ell));
}

TEST_CASE("first-order cancellation for constant sections") {
    // For ell_1 with fibrewise constant components d_j, the germ with
    // Phi_{j,1} = d_j removes the first-order term of the sequence.
    std::mt19937_64 rng(46);
    EllSequence ell(3, 2);
    LSection constant(3);
    constant.a(2) = random_y_free(3, rng);
    constant.a(3) = random_y_free(3, rng);
    ell.set(1, constant);

    GermChange g(3, 2);
    for (int j = 2; j <= 3; ++j) g.set_phi(j, 1, constant.a(j));
    EllSequence acted = germ_act(g, ell);
    CHECK(acted.at(1).is_zero());
}

TEST_CASE("fibrewise constant sequences can be removed entirely") {
    std::mt19937_64 rng(47);
    EllSequence ell(3, 3);
    for (int m = 1; m <= 3; ++m) {
        LSection level(3);
        level.a(2) = random_y_free(3, rng);
        level.a(3) = random_y_free(3, rng);
        ell.set(m, level);
    }
    GermChange killer = trivializing_germ(ell);
    EllSequence acted = germ_act(killer, ell);
    for (int m = 1; m <= 3; ++m) CHECK(acted.at(m).max_abs() < 1e-11);

    // a genuinely oscillatory sequence admits no such germ
    EllSequence osc = random_closed_ell_sequence(3, 2, rng);
    bool oscillatory = false;
    for (int m = 1; m <= 2 && !oscillatory; ++m)
        for (int j = 2; j <= 3; ++j)
            if (!osc.at(m).a(j).is_y_free()) oscillatory = true;
    REQUIRE(oscillatory);
    CHECK_THROWS_AS(trivializing_germ(osc), Error);
}

TEST_CASE("germ action is a group action") {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 4; ++trial) {
        int n = trial % 2 ? 2 : 3;
        GermChange a = random_germ(n, 3, rng);
        GermChange b = random_germ(n, 3, rng);
        EllSequence ell = random_closed_ell_sequence(n, 3, rng);
        EllSequence lhs = germ_act(germ_compose(a, b), ell);
        EllSequence rhs = germ_act(a, germ_act(b, ell));
        CHECK(sequences_equal(lhs, rhs, 1e-10));
    }
}

TEST_CASE("germ action preserves closedness") {
    std::mt19937_64 rng(49);
    GermChange g = random_germ(3, 3, rng);
    EllSequence ell = random_closed_ell_sequence(3, 3, rng);
    EllSequence acted = germ_act(g, ell);
    CHECK(acted.closed());
    CHECK(check_admissible(ell_to_s(acted)).ok);
}

#include <doctest.h>

#include <cmath>

#include "nlgs/multiplier.hpp"
#include "nlgs/solver.hpp"
#include "nlgs/spectral.hpp"

using namespace nlgs;

namespace {

Profile gaussian_init(const GridSpec& g, double center = 0.0) {
    return sample(g, [center](double t) { return std::exp(-(t - center) * (t - center)); });
}

}  // namespace

TEST_CASE("ILW ground state is sech") {
    GridSpec g = default_grid();
    SolveResult r = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, gaussian_init(g));
    REQUIRE(r.converged);
    CHECK(r.residual_sup <= 1e-10);
    CHECK(std::abs(r.stabilizer - 1.0) <= 1e-8);

    double dist = 0.0, min_v = 1e300, max_v = 0.0;
    for (int j = 0; j < g.num_points; ++j) {
        dist = std::max(dist, std::abs(r.q.values[j] - 1.0 / std::cosh(g.node(j))));
        min_v = std::min(min_v, r.q.values[j]);
        max_v = std::max(max_v, r.q.values[j]);
    }
    CHECK(dist <= 1e-6);
    CHECK(min_v > -1e-9 * max_v);                      // positivity
    CHECK(symmetrize_even(r.q).parity_defect() <= 1e-10);  // evenness
}

TEST_CASE("local NLS soliton at s = 1") {
    GridSpec g = default_grid();
    SolveResult r = petviashvili(fractional_laplacian(1.0), 1.0, 1.0, gaussian_init(g));
    REQUIRE(r.converged);
    CHECK(r.residual_sup <= 1e-8);
    double dist = 0.0;
    for (int j = 0; j < g.num_points; ++j) {
        const double c = std::cosh(0.5 * g.node(j));
        dist = std::max(dist, std::abs(r.q.values[j] - 1.5 / (c * c)));
    }
    CHECK(dist <= 1e-8);
}

TEST_CASE("half laplacian soliton on the large box") {
    GridSpec g = large_grid();
    SolveResult r = petviashvili(fractional_laplacian(0.5), 1.0, 1.0, gaussian_init(g));
    REQUIRE(r.converged);
    double dist = 0.0;
    for (int j = 0; j < g.num_points; ++j)
        dist = std::max(dist, std::abs(r.q.values[j] - 2.0 / (1.0 + g.node(j) * g.node(j))));
    CHECK(dist <= 1e-3);  // box-truncation limited: the profile decays like 1/t^2
}

TEST_CASE("residual oracle values") {
    GridSpec g = default_grid();
    CHECK(residual_sup_norm(ilw_multiplier(), 2.0 / M_PI, 1.0, zero_profile(g)) == 0.0);

    Profile h = sample(g, [](double t) { return 1.0 / std::cosh(t); }, Parity::even);
    CHECK(residual_sup_norm(ilw_multiplier(), 2.0 / M_PI, 1.0, h) <= 1e-8);

    Profile h11 = sample(g, [](double t) { return 1.1 / std::cosh(t); }, Parity::even);
    // T(ch) - (ch)^2 + (2/pi)(ch) = c(c-1) h^2 exactly, so the scaled profile
    // misses by about 0.11
    CHECK(residual_sup_norm(ilw_multiplier(), 2.0 / M_PI, 1.0, h11) >= 1e-2);
}

TEST_CASE("translation invariance: off-center solve matches after recentering") {
    GridSpec g = default_grid();
    SolveParams params;
    params.symmetrize_every = 0;  // keep the offset center
    SolveResult off = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, gaussian_init(g, 3.0), params);
    REQUIRE(off.converged);
    const double peak = peak_location(off.q);
    CHECK(std::abs(peak - 3.0) < 0.5);
    Profile recentered = symmetrize_even(fourier_shift(off.q, -peak));

    SolveResult centered = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, gaussian_init(g));
    REQUIRE(centered.converged);
    double dist = 0.0;
    for (int j = 0; j < g.num_points; ++j)
        dist = std::max(dist, std::abs(recentered.values[j] - centered.q.values[j]));
    CHECK(dist <= 1e-6);
}

TEST_CASE("failure modes") {
    GridSpec g(20.0 * M_PI, 256);

    SUBCASE("zero init rejected") {
        CHECK_THROWS_AS(petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, zero_profile(g)),
                        std::invalid_argument);
    }
    SUBCASE("collapse diagnostic for sign-indefinite iterate") {
        // odd-ish init symmetrizes to something with (Q, Q^2) ~ 0
        Profile bad = sample(g, [](double t) { return -std::exp(-t * t); });
        CHECK_THROWS_AS(petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, bad), std::runtime_error);
    }
    SUBCASE("iteration budget exhausted reports non-convergence") {
        SolveParams p;
        p.max_iters = 2;
        SolveResult r = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, gaussian_init(g), p);
        CHECK_FALSE(r.converged);
        CHECK(r.iterations == 2);
    }
    SUBCASE("shifted symbol must be positive") {
        CHECK_THROWS_AS(petviashvili(constant_multiplier(-2.0), 1.0, 1.0, gaussian_init(g)),
                        std::invalid_argument);
    }
}

TEST_CASE("petviashvili factor is 1 at the fixed point") {
    GridSpec g = default_grid();
    SolveResult r = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, gaussian_init(g));
    REQUIRE(r.converged);
    CHECK(std::abs(r.stabilizer - 1.0) <= 1e-8);
    // feeding the solution back in converges immediately with M = 1
    SolveResult again = petviashvili(ilw_multiplier(), 2.0 / M_PI, 1.0, r.q);
    CHECK(again.iterations <= 2);
    CHECK(std::abs(again.stabilizer - 1.0) <= 1e-10);
}

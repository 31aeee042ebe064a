#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "nlgs/quadrature.hpp"
#include "nlgs/sphere.hpp"

using namespace nlgs;

TEST_CASE("stereographic projection") {
    SUBCASE("origin maps to the north pole") {
        SpherePoint p = stereographic({0.0, 0.0, 0.0});
        CHECK(p[0] == 0.0);
        CHECK(p[1] == 0.0);
        CHECK(p[2] == 0.0);
        CHECK(p[3] == 1.0);
    }
    SUBCASE("unit vector lands on the equator") {
        SpherePoint p = stereographic({1.0, 0.0, 0.0});
        CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(p[3] == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("far points approach the south pole") {
        SpherePoint p = stereographic({1000.0, 0.0, 0.0});
        CHECK(std::abs(p[3] + 1.0) <= 2e-6);
    }
    SUBCASE("unit norm and injectivity on a seeded sample") {
        std::mt19937 rng(2024);
        std::normal_distribution<double> dist(0.0, 2.0);
        SpherePoint prev{};
        for (int i = 0; i < 500; ++i) {
            Vec3 x{dist(rng), dist(rng), dist(rng)};
            SpherePoint p = stereographic(x);
            double n = 0.0;
            for (double c : p) n += c * c;
            CHECK(std::abs(n - 1.0) <= 1e-12);
            if (i > 0) {
                double d = 0.0;
                for (int q = 0; q < 4; ++q) d += (p[q] - prev[q]) * (p[q] - prev[q]);
                CHECK(d > 0.0);
            }
            prev = p;
        }
    }
}

TEST_CASE("jacobian") {
    CHECK(stereographic_jacobian({0.0, 0.0, 0.0}) == 8.0);
    CHECK(stereographic_jacobian({1.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));

    SUBCASE("positive everywhere sampled") {
        std::mt19937 rng(99);
        std::normal_distribution<double> dist(0.0, 3.0);
        for (int i = 0; i < 200; ++i)
            CHECK(stereographic_jacobian({dist(rng), dist(rng), dist(rng)}) > 0.0);
    }
    SUBCASE("integrates to the S^3 surface area") {
        // 4 pi int_0^inf (2/(1+r^2))^3 r^2 dr = 2 pi^2
        const double val = 4.0 * M_PI *
            integrate_panels(0.0, 400.0, 800, 16, [](double r) {
                const double q = 2.0 / (1.0 + r * r);
                return q * q * q * r * r;
            });
        // truncation tail of order int_R^inf 8 r^{-4} dr
        CHECK(val == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-7));
    }
}

TEST_CASE("conformal identity with cube-root factors") {
    SUBCASE("worked pair") {
        auto [lhs, rhs] = conformal_identity_check({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
        CHECK(lhs == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(rhs == doctest::Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("pole to pole chord squared approaches 4") {
        auto [lhs, rhs] = conformal_identity_check({0.0, 0.0, 0.0}, {4000.0, 0.0, 0.0});
        CHECK(lhs == doctest::Approx(4.0).epsilon(1e-6));
        CHECK(rhs == doctest::Approx(4.0).epsilon(1e-6));
    }
    SUBCASE("seeded property sweep at 1e-12 relative") {
        std::mt19937 rng(31415);
        std::normal_distribution<double> dist(0.0, 2.0);
        for (int i = 0; i < 1000; ++i) {
            Vec3 x{dist(rng), dist(rng), dist(rng)};
            Vec3 y{dist(rng), dist(rng), dist(rng)};
            auto [lhs, rhs] = conformal_identity_check(x, y);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, 1e-30));
        }
    }
}

TEST_CASE("funk-hecke eigenvalues are 1/(l+1)") {
    CHECK(funk_hecke_eigenvalue(0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(funk_hecke_eigenvalue(1) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(funk_hecke_eigenvalue(7) - 1.0 / 8.0) <= 1e-12);
    for (int l = 0; l <= 10; ++l) {
        CAPTURE(l);
        CHECK(std::abs(funk_hecke_eigenvalue(l) - 1.0 / (l + 1)) <= 1e-12);
    }
    CHECK_THROWS_AS(funk_hecke_eigenvalue(-1), std::invalid_argument);
}

TEST_CASE("zonal kernel profile matches the chordal distance form") {
    // (2 pi^2)^{-1} |w - eta|^{-2} depends only on cos gamma through 2 - 2 cos gamma
    for (double gamma : {0.3, 1.0, 2.0, 3.0}) {
        const SpherePoint w{1.0, 0.0, 0.0, 0.0};
        const SpherePoint eta{std::cos(gamma), std::sin(gamma), 0.0, 0.0};
        double chord2 = 0.0;
        for (int i = 0; i < 4; ++i) chord2 += (w[i] - eta[i]) * (w[i] - eta[i]);
        const double direct = 1.0 / (2.0 * M_PI * M_PI) / chord2;
        CHECK(ZonalSpec::kernel_profile(std::cos(gamma)) == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("harmonic dimensions") {
    CHECK(harmonic_dim(0) == 1);
    CHECK(harmonic_dim(1) == 4);  // the four kernel directions of the 3D problem
    CHECK(harmonic_dim(3) == 16);
    CHECK_THROWS_AS(harmonic_dim(-2), std::invalid_argument);
}

TEST_CASE("hilbert-schmidt partial sums grow monotonically") {
    double prev = 0.0;
    for (int cutoff = 0; cutoff <= 10; ++cutoff) {
        double mass = 0.0;
        for (int l = 0; l <= cutoff; ++l) {
            const double lam = funk_hecke_eigenvalue(l);
            mass += harmonic_dim(l) * lam * lam;
        }
        CHECK(mass > prev);
        prev = mass;
    }
}

TEST_CASE("radial birman-schwinger spectrum") {
    BsSpectrum spec = bs_radial_eigenvalues(6);
    REQUIRE(spec.eigenvalues.size() == 6);
    for (int l = 0; l < 6; ++l) {
        CAPTURE(l);
        CHECK(std::abs(spec.eigenvalues[l] - 1.0 / (l + 1)) <= 1e-3);
        CHECK(spec.parities[l] == (l % 2 == 0 ? +1 : -1));
    }
    // top eigenvalue is the ground-state coupling, second is the dilation mode
    CHECK(std::abs(spec.eigenvalues[0] - 1.0) <= 1e-4);
    CHECK(std::abs(spec.eigenvalues[1] - 0.5) <= 1e-4);
    CHECK(std::abs(2.0 * spec.eigenvalues[1] - 1.0) <= 2e-3);

    SUBCASE("the eigenvalue 1/2 is simple on the radial grid") {
        // neighbors are 1 and 1/3, both well separated
        CHECK(spec.eigenvalues[0] - spec.eigenvalues[1] > 0.4);
        CHECK(spec.eigenvalues[1] - spec.eigenvalues[2] > 0.1);
    }
    CHECK_THROWS_AS(bs_radial_eigenvalues(13), std::invalid_argument);
    CHECK_THROWS_AS(bs_radial_eigenvalues(0), std::invalid_argument);
}

TEST_CASE("kernel transport identity") {
    TransportReport rep = kernel_transport_check();
    CHECK(rep.samples >= 100);
    CHECK(rep.max_rel_error <= 1e-10);
}

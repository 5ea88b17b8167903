#include "doctest.h"

#include "shellflow/grid.hpp"

#include <cmath>
#include <random>

using namespace shellflow;

namespace {
constexpr double kPi = 3.14159265358979323846;

ShellSector unit_sector() {
    return {1.0, 2.0, kPi / 4, 3 * kPi / 4, kPi / 4, 7 * kPi / 4};
}
} // namespace

TEST_CASE("build_grid computes spacings exactly") {
    auto g = build_grid(unit_sector(), 10, 10, 10);
    CHECK(g.dr == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(g.dtheta == doctest::Approx(kPi / 20).epsilon(1e-15));
    CHECK(g.dphi == doctest::Approx(3 * kPi / 20).epsilon(1e-15));
}

TEST_CASE("build_grid rejects degenerate inputs") {
    CHECK_THROWS(build_grid(unit_sector(), 1, 10, 10));
    CHECK_THROWS(build_grid({0.0, 1.0, 1.0, 2.0, 0.0, 1.0}, 4, 4, 4));
    CHECK_THROWS(build_grid({1.0, 2.0, 0.0, kPi / 2, 0.0, 1.0}, 4, 4, 4));
    CHECK_THROWS(build_grid({1.0, 2.0, kPi / 2, kPi, 0.0, 1.0}, 4, 4, 4));
}

TEST_CASE("thermal-2-like sector spacing") {
    ShellSector s{6.371e6, 6.372e6, kPi / 2 - 0.5 / 6371, kPi / 2 + 0.5 / 6371,
                  kPi - 0.5 / 6371, kPi + 0.5 / 6371};
    auto g = build_grid(s, 50, 50, 50);
    CHECK(g.dtheta == doctest::Approx((1.0 / 6371) / 50).epsilon(1e-14));
}

TEST_CASE("face coordinates have no accumulation drift") {
    auto g = build_grid(unit_sector(), 16, 8, 8);
    for (int i = 0; i <= 16; ++i)
        CHECK(g.r_face(i) == g.sector.r1 + i * g.dr);
}

TEST_CASE("interpolation preserves constants and linears") {
    auto g = build_grid(unit_sector(), 8, 8, 8);
    Field3 c(8, 8, 8);
    for (int i = -1; i <= 8; ++i)
        for (int j = -1; j <= 8; ++j)
            for (int k = -1; k <= 8; ++k) c(i, j, k) = 3.25;
    auto f = interpolate(c, StaggeredLocation::center, StaggeredLocation::r_face, g);
    CHECK(f.nx() == 9);
    for (int i = 0; i <= 8; ++i) CHECK(f(i, 0, 0) == doctest::Approx(3.25));

    Field3 lin(8, 8, 8);
    for (int i = -1; i <= 8; ++i)
        for (int j = -1; j <= 8; ++j)
            for (int k = -1; k <= 8; ++k) lin(i, j, k) = 2.0 * g.r_center(i) - 1.0;
    auto lf = interpolate(lin, StaggeredLocation::center, StaggeredLocation::r_face, g);
    for (int i = 0; i <= 8; ++i)
        CHECK(lf(i, 3, 3) == doctest::Approx(2.0 * g.r_face(i) - 1.0).epsilon(1e-14));
}

TEST_CASE("center->face->center round trip equals [1/4,1/2,1/4] smoothing") {
    auto g = build_grid(unit_sector(), 8, 4, 4);
    Field3 f(8, 4, 4);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = -1; i <= 8; ++i)
        for (int j = -1; j <= 4; ++j)
            for (int k = -1; k <= 4; ++k) f(i, j, k) = u(rng);
    auto faces = interpolate(f, StaggeredLocation::center, StaggeredLocation::r_face, g);
    auto back = interpolate(faces, StaggeredLocation::r_face, StaggeredLocation::center, g);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                CHECK(back(i, j, k) ==
                      doctest::Approx(0.25 * f(i - 1, j, k) + 0.5 * f(i, j, k) +
                                      0.25 * f(i + 1, j, k)).epsilon(1e-14));
}

TEST_CASE("interpolate is linear in the field argument") {
    auto g = build_grid(unit_sector(), 6, 6, 6);
    Field3 a(6, 6, 6), b(6, 6, 6), combo(6, 6, 6);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    const double ca = 1.3, cb = -2.2;
    for (int i = -1; i <= 6; ++i)
        for (int j = -1; j <= 6; ++j)
            for (int k = -1; k <= 6; ++k) {
                a(i, j, k) = u(rng);
                b(i, j, k) = u(rng);
                combo(i, j, k) = ca * a(i, j, k) + cb * b(i, j, k);
            }
    auto ia = interpolate(a, StaggeredLocation::center, StaggeredLocation::theta_face, g);
    auto ib = interpolate(b, StaggeredLocation::center, StaggeredLocation::theta_face, g);
    auto ic = interpolate(combo, StaggeredLocation::center, StaggeredLocation::theta_face, g);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j <= 6; ++j)
            for (int k = 0; k < 6; ++k)
                CHECK(ic(i, j, k) ==
                      doctest::Approx(ca * ia(i, j, k) + cb * ib(i, j, k)).epsilon(1e-13));
}

TEST_CASE("l2 norm: zero, unit field, and quadrature oracle") {
    auto g = build_grid({1.0, 2.0, kPi / 4, 3 * kPi / 4, 0.0, kPi / 2}, 8, 8, 8);
    Field3 z(8, 8, 8);
    CHECK(l2_norm(z, StaggeredLocation::center, g) == 0.0);

    Field3 one(8, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) one(i, j, k) = 1.0;
    // Independent quadrature of the sector volume on the same midpoint rule.
    double vol = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                const double r = g.r_center(i), th = g.theta_center(j);
                vol += r * r * std::sin(th) * g.dr * g.dtheta * g.dphi;
            }
    CHECK(l2_norm(one, StaggeredLocation::center, g) == doctest::Approx(std::sqrt(vol)).epsilon(1e-13));

    Field3 fr(8, 8, 8);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                const double r = g.r_center(i), th = g.theta_center(j);
                fr(i, j, k) = r;
                acc += r * r * r * r * std::sin(th) * g.dr * g.dtheta * g.dphi;
            }
    CHECK(l2_norm(fr, StaggeredLocation::center, g) == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
}

TEST_CASE("l2 norm absolute homogeneity") {
    auto g = build_grid(unit_sector(), 5, 5, 5);
    Field3 f(5, 5, 5);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) f(i, j, k) = u(rng);
    Field3 s = f;
    const double a = -3.7;
    for (auto& x : s.raw()) x *= a;
    CHECK(l2_norm(s, StaggeredLocation::center, g) ==
          doctest::Approx(std::abs(a) * l2_norm(f, StaggeredLocation::center, g)).epsilon(1e-13));
}

TEST_CASE("max norm") {
    Field3 f(4, 4, 4);
    CHECK(max_norm(f) == 0.0);
    f(2, 1, 3) = -5.0;
    CHECK(max_norm(f) == 5.0);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "cmt/specfun.hpp"

using namespace cmt::specfun;

namespace {

// Mixed absolute/relative closeness against a reference value.
bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Ref {
    int n;
    double x;
    double j;
    double y;
};

// High-precision reference values (40-digit arbitrary-precision evaluation,
// rounded to double).
constexpr Ref kRefs[] = {
    {0, 0.5, 0.93846980724081290423, -0.44451873350670655715},
    {0, 1.0, 0.76519768655796655145, 0.088256964215676957983},
    {1, 1.0, 0.44005058574493351596, -0.78121282130028871655},
    {5, 2.0, 0.0070396297558716854842, -9.935989128481974981},
    {5, 20.0, 0.15116976798239497461, -0.10003576788953242697},
    {12, 7.5, 0.0052250446858034624719, -6.5557068186537591967},
    {20, 0.314, 3.3990586585070188199e-35, -4.6829027377263805228e+32},
    {30, 45.0, 0.045799309554040956079, 0.12986219863426499408},
    {0, 157.0, 0.04126398373048112573, -0.04849913497770958692},
    {60, 30.0, 9.8075576431286246302e-14, -62466251044.728679353},
    {2, 9.0, 0.14484734153250397263, -0.22675568157464336765},
    {7, 11.0, 0.018376032647858614565, 0.27184139484930945736},
};

}  // namespace

TEST_CASE("bessel J and Y against high-precision references", "[specfun]") {
    for (const auto& r : kRefs) {
        INFO("n=" << r.n << " x=" << r.x);
        CHECK(std::abs(bessel_j(r.n, r.x) - r.j) <=
              1e-13 * std::max({1.0, std::abs(r.j), std::abs(r.y)}));
        CHECK(std::abs(bessel_y(r.n, r.x) - r.y) <= 1e-12 * std::max(1.0, std::abs(r.y)));
    }
}

TEST_CASE("J limits at the origin", "[specfun]") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(0, 1e-12) == Catch::Approx(1.0).margin(1e-15));
    CHECK(std::abs(cyl_eval(CylKind::J, 1, 1e-10)) < 1e-9);
}

TEST_CASE("J at the first Dirichlet table zero", "[specfun]") {
    // Table value 0.38274 carries 5 decimals; J_0 slope there is O(0.5).
    const double z = 2.0 * std::numbers::pi * 0.38274;
    CHECK(std::abs(cyl_eval(CylKind::J, 0, z)) <= 1e-4);
}

TEST_CASE("Hankel combinations and conjugacy", "[specfun]") {
    for (int n : {0, 1, 4, 13, 32}) {
        for (double x : {0.2, 1.7, 9.4, 33.0}) {
            const auto j = bessel_j(n, x);
            const auto y = bessel_y(n, x);
            const auto h1 = cyl_eval(CylKind::H1, n, x);
            const auto h2 = cyl_eval(CylKind::H2, n, x);
            const double scale = std::max(1.0, std::abs(h1));
            CHECK(std::abs(h1 - std::complex<double>(j, y)) <= 1e-13 * scale);
            CHECK(std::abs(h2 - std::conj(h1)) <= 1e-13 * scale);
        }
    }
}

TEST_CASE("three-term recurrence residual on a grid", "[specfun]") {
    for (int n = 1; n <= 30; ++n) {
        for (double z = 0.1; z <= 50.0; z += 0.7) {
            const double fm = bessel_j(n - 1, z);
            const double fc = bessel_j(n, z);
            const double fp = bessel_j(n + 1, z);
            const double scale = std::max({std::abs(fm), std::abs(fc), std::abs(fp), 1e-30});
            CHECK(std::abs(fm + fp - (2.0 * n / z) * fc) <= 1e-10 * scale);

            const double gm = bessel_y(n - 1, z);
            const double gc = bessel_y(n, z);
            const double gp = bessel_y(n + 1, z);
            const double yscale = std::max({std::abs(gm), std::abs(gc), std::abs(gp)});
            CHECK(std::abs(gm + gp - (2.0 * n / z) * gc) <= 1e-10 * yscale);
        }
    }
}

TEST_CASE("derivative convention", "[specfun]") {
    for (double x : {0.4, 2.9, 17.0}) {
        CHECK(close(bessel_j_deriv(0, x), -bessel_j(1, x), 1e-15));
        // central difference cross-check
        const double h = 1e-6;
        const double fd = (bessel_j(3, x + h) - bessel_j(3, x - h)) / (2.0 * h);
        CHECK(close(bessel_j_deriv(3, x), fd, 1e-8));
    }
}

TEST_CASE("Hankel Wronskian residual", "[specfun]") {
    CHECK(hankel_wronskian_residual(0, 1.0) <= 1e-12);
    CHECK(hankel_wronskian_residual(3, 10.0) <= 1e-12);
    for (double z : {0.3, 2.0, 7.7, 26.0}) CHECK(hankel_wronskian_residual(0, z) <= 1e-12);
}

TEST_CASE("zeros of J0 and J0' reproduce the scaled tables", "[specfun]") {
    // k^N_m R/(2pi) and k^D_m R/(2pi) for the homogeneous disk, 5-decimal
    // published values.
    const double kN[10] = {0.60983, 1.11657, 1.61916, 2.12053, 2.62138,
                           3.12196, 3.62238, 4.12270, 4.62295, 5.12315};
    const double kD[10] = {0.38274, 0.87855, 1.37728, 1.87668, 2.37633,
                           2.87610, 3.37594, 3.87582, 4.37572, 4.87565};
    const auto zn = cyl_zeros(ZeroTarget::Jprime, 0, 10);
    const auto zd = cyl_zeros(ZeroTarget::J, 0, 10);
    REQUIRE(zn.zeros.size() == 10);
    REQUIRE(zd.zeros.size() == 10);
    for (int m = 0; m < 10; ++m) {
        CHECK(std::abs(zn.zeros[m] / (2.0 * std::numbers::pi) - kN[m]) <= 5e-6);
        CHECK(std::abs(zd.zeros[m] / (2.0 * std::numbers::pi) - kD[m]) <= 5e-6);
    }
}

TEST_CASE("zero tables are refined and bracketed", "[specfun]") {
    for (int n : {0, 1, 5, 19}) {
        for (auto target : {ZeroTarget::J, ZeroTarget::Jprime}) {
            const auto t = cyl_zeros(target, n, 8);
            double prev = 0.0;
            for (double z : t.zeros) {
                CHECK(z > prev);
                prev = z;
                const double f = (target == ZeroTarget::J) ? bessel_j(n, z)
                                                           : bessel_j_deriv(n, z);
                CHECK(std::abs(f) <= 1e-12);
                // sign change across a +/- eps window
                const double d = 1e-6 * std::max(1.0, z);
                const double fl = (target == ZeroTarget::J) ? bessel_j(n, z - d)
                                                            : bessel_j_deriv(n, z - d);
                const double fr = (target == ZeroTarget::J) ? bessel_j(n, z + d)
                                                            : bessel_j_deriv(n, z + d);
                CHECK(fl * fr < 0.0);
            }
        }
    }
}

TEST_CASE("trivial J' zero at the origin is excluded", "[specfun]") {
    const auto t = cyl_zeros(ZeroTarget::Jprime, 0, 1);
    CHECK(t.zeros[0] > 3.0);  // first genuine root is 3.8317...
}

TEST_CASE("domain and capability errors", "[specfun]") {
    CHECK_THROWS_AS(bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y(2, -1.0), std::domain_error);
    CHECK_THROWS_AS(cyl_eval(CylKind::H1, 0, -0.5), std::domain_error);
    CHECK_THROWS_AS(bessel_j(200, 1.0), std::out_of_range);
    CHECK_THROWS_AS(cyl_zeros(ZeroTarget::J, 0, 0), std::invalid_argument);
}

TEST_CASE("signed-order reflection", "[specfun]") {
    for (int l : {1, 2, 5}) {
        for (double x : {0.9, 6.0}) {
            const auto a = cyl_eval_signed(CylKind::H1, -l, x);
            const auto b = ((l % 2 == 0) ? 1.0 : -1.0) * cyl_eval(CylKind::H1, l, x);
            CHECK(std::abs(a - b) == 0.0);
        }
    }
}

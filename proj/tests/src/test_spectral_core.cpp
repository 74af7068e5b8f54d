#include <cmath>
#include <complex>
#include <numbers>

#include "apriori/fft.hpp"
#include "apriori/field.hpp"
#include "apriori/grid.hpp"
#include "apriori/ops.hpp"
#include "apriori/random_fields.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apriori;
using testutil::sample;
using testutil::scalar_field;

TEST_CASE("grid wavenumbers and quadrature weight") {
    Grid g(2, 16);
    CHECK(g.wavenumber(0) == 0);
    CHECK(g.wavenumber(1) == 1);
    CHECK(g.wavenumber(7) == 7);
    CHECK(g.wavenumber(8) == -8);
    CHECK(g.wavenumber(15) == -1);
    CHECK(g.quad_weight() == doctest::Approx(std::pow(2.0 * std::numbers::pi / 16, 2)).epsilon(1e-15));
    CHECK(g.dealias_cutoff() == 5);

    CHECK_THROWS(Grid(1, 16));
    CHECK_THROWS(Grid(4, 16));
    CHECK_THROWS(Grid(2, 15));
    CHECK_THROWS(Grid(2, 8));
}

TEST_CASE("fft roundtrip is the identity") {
    for (int dims : {2, 3}) {
        Grid g(dims, 16);
        SpectralField f = random_band_limited(g, 5, 1.0, 42u);
        auto samples = f.to_real(0);
        SpectralField back = SpectralField::from_real_scalar(g, samples);
        double err = 0.0;
        for (std::size_t m = 0; m < g.size(); ++m)
            err = std::max(err, std::abs(back.coef(0)[m] - f.coef(0)[m]));
        CHECK(err < 1e-12);
    }
}

TEST_CASE("single-mode coefficients follow the analytic convention") {
    Grid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    // sin(x) = -i/2 e^{ix} + i/2 e^{-ix}; xi = (1, 0) sits at flat index n
    std::complex<double> plus = f.coef(0)[std::size_t(1) * g.n()];
    std::complex<double> minus = f.coef(0)[std::size_t(g.n() - 1) * g.n()];
    CHECK(std::abs(plus - std::complex<double>(0.0, -0.5)) < 1e-13);
    CHECK(std::abs(minus - std::complex<double>(0.0, 0.5)) < 1e-13);
    CHECK(std::abs(f.coef(0)[0]) < 1e-14);
}

TEST_CASE("zero-mean bookkeeping") {
    Grid g(2, 16);
    SpectralField f = scalar_field(g, [](double x, double, double) { return 2.0 + std::cos(x); });
    CHECK(!f.zero_mean());
    CHECK_THROWS_AS(f.require_zero_mean("test"), std::invalid_argument);
    f.make_zero_mean();
    CHECK(f.zero_mean());
    CHECK(std::abs(f.coef(0)[0]) == 0.0);
    CHECK_NOTHROW(f.require_zero_mean("test"));
}

TEST_CASE("spectral derivative matches analytic derivatives") {
    Grid g(2, 32);
    SpectralField f =
        scalar_field(g, [](double x, double y, double) { return std::sin(x) * std::cos(2.0 * y); });

    SpectralField dx = spectral_derivative(f, {1, 0});
    auto want = sample(g, [](double x, double y, double) { return std::cos(x) * std::cos(2.0 * y); });
    auto got = dx.to_real(0);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);

    SpectralField dxyy = spectral_derivative(f, {1, 2});
    auto want2 =
        sample(g, [](double x, double y, double) { return -4.0 * std::cos(x) * std::cos(2.0 * y); });
    auto got2 = dxyy.to_real(0);
    for (std::size_t i = 0; i < got2.size(); ++i) CHECK(std::abs(got2[i] - want2[i]) < 1e-11);

    CHECK_THROWS(spectral_derivative(f, {1, 0, 0}));
}

TEST_CASE("nyquist mode is dropped for odd derivative orders") {
    Grid g(2, 16);
    SpectralField f(g, 1);
    // pure Nyquist mode cos(8x): real samples (-1)^i
    f.coef(0)[std::size_t(g.n() / 2) * g.n()] = 1.0;
    SpectralField dx = spectral_derivative(f, {1, 0});
    CHECK(dx.max_coef_abs() == 0.0);
    SpectralField dxx = spectral_derivative(f, {2, 0});
    CHECK(dxx.max_coef_abs() > 0.0);
}

TEST_CASE("fractional laplacian on single modes") {
    Grid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::sin(2.0 * x); });
    f.make_zero_mean();

    SpectralField half = fractional_laplacian(f, 1.0);
    auto got = half.to_real(0);
    auto want = sample(g, [](double x, double, double) { return 2.0 * std::sin(2.0 * x); });
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);

    SpectralField ident = fractional_laplacian(f, 0.0);
    auto got0 = ident.to_real(0);
    auto want0 = f.to_real(0);
    for (std::size_t i = 0; i < got0.size(); ++i) CHECK(std::abs(got0[i] - want0[i]) < 1e-13);

    CHECK_THROWS(fractional_laplacian(f, -0.5));
}

TEST_CASE("riesz transform of sin(x) is cos(x)") {
    Grid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    f.make_zero_mean();
    SpectralField r = riesz_transform(f, 0);
    auto got = r.to_real(0);
    auto want = sample(g, [](double x, double, double) { return std::cos(x); });
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("leray projection is an idempotent divergence annihilator") {
    Grid g(3, 16);
    SpectralField u = random_band_limited(g, 5, 1.0, 11u, 3);
    SpectralField pu = leray_project(u);

    CHECK(divergence(pu).max_coef_abs() < 1e-12 * std::max(1.0, pu.max_coef_abs()));

    SpectralField ppu = leray_project(pu);
    double err = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t m = 0; m < g.size(); ++m)
            err = std::max(err, std::abs(ppu.coef(c)[m] - pu.coef(c)[m]));
    CHECK(err < 1e-13);
}

TEST_CASE("qg velocity law on a single mode") {
    Grid g(2, 32);
    SpectralField theta = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    theta.make_zero_mean();
    SpectralField v = qg_velocity(theta);
    REQUIRE(v.components() == 2);
    auto v1 = v.to_real(0);
    auto v2 = v.to_real(1);
    auto want2 = sample(g, [](double x, double, double) { return std::cos(x); });
    for (std::size_t i = 0; i < v1.size(); ++i) {
        CHECK(std::abs(v1[i]) < 1e-12);
        CHECK(std::abs(v2[i] - want2[i]) < 1e-12);
    }
    CHECK(divergence(v).max_coef_abs() < 1e-12);
}

TEST_CASE("dealias zeroes the 2/3-rule band and is idempotent") {
    Grid g(2, 32);
    SpectralField f = random_band_limited(g, g.n() / 2 - 1, 0.0, 5u, 1, false);
    SpectralField d = dealias(f);
    for (std::size_t m = 0; m < g.size(); ++m) {
        auto xi = g.wavevector(m);
        if (std::abs(xi[0]) > g.dealias_cutoff() || std::abs(xi[1]) > g.dealias_cutoff())
            CHECK(std::abs(d.coef(0)[m]) == 0.0);
    }
    SpectralField dd = dealias(d);
    double err = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m)
        err = std::max(err, std::abs(dd.coef(0)[m] - d.coef(0)[m]));
    CHECK(err == 0.0);
}

TEST_CASE("curl of a shear is the expected vorticity") {
    Grid g(3, 16);
    std::vector<std::vector<double>> comps(3, std::vector<double>(g.size(), 0.0));
    comps[2] = sample(g, [](double x, double, double) { return std::sin(x); });
    SpectralField u = SpectralField::from_real(g, comps);
    SpectralField w = curl(u);
    auto w2 = w.to_real(1);
    auto want = sample(g, [](double x, double, double) { return -std::cos(x); });
    for (std::size_t i = 0; i < w2.size(); ++i) CHECK(std::abs(w2[i] - want[i]) < 1e-12);
    CHECK(lp_norm(w, kInfExponent) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pointwise product with dealiasing matches the analytic product") {
    Grid g(2, 32);
    SpectralField a = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    SpectralField b = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    SpectralField prod = multiply_dealias(a, 0, b, 0);
    auto got = prod.to_real(0);
    auto want = sample(g, [](double x, double, double) { return 0.5 * std::sin(2.0 * x); });
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("advection of a transverse gradient") {
    Grid g(2, 32);
    std::vector<std::vector<double>> comps(2, std::vector<double>(g.size(), 0.0));
    comps[1] = sample(g, [](double x, double, double) { return std::cos(x); });
    SpectralField u = SpectralField::from_real(g, comps);
    SpectralField w = scalar_field(g, [](double, double y, double) { return std::sin(y); });
    SpectralField adv = advect(u, w);
    auto got = adv.to_real(0);
    auto want = sample(g, [](double x, double y, double) { return std::cos(x) * std::cos(y); });
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("single-mode shear annihilates its own advection") {
    Grid g(3, 16);
    std::vector<std::vector<double>> comps(3, std::vector<double>(g.size(), 0.0));
    comps[0] = sample(g, [](double, double y, double) { return std::sin(y); });
    SpectralField v = SpectralField::from_real(g, comps);
    SpectralField adv = advect(v, v);
    CHECK(adv.max_coef_abs() < 1e-13);
}

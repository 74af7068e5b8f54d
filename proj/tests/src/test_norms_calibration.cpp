#include <cmath>
#include <numbers>
#include <vector>

#include "apriori/besov.hpp"
#include "apriori/calibrate.hpp"
#include "apriori/norms.hpp"
#include "apriori/ops.hpp"
#include "apriori/random_fields.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apriori;
using testutil::rel_err;
using testutil::sample;
using testutil::scalar_field;

TEST_CASE("lp norms of analytic fields") {
    Grid g(2, 64);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    const double pi = std::numbers::pi;

    CHECK(lp_norm(f, 2.0) == doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(lp_norm(f, 4.0) == doctest::Approx(std::pow(1.5 * pi * pi, 0.25)).epsilon(1e-12));
    CHECK(lp_norm(f, kInfExponent) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(lp_norm(f, 0.5));
}

TEST_CASE("vector lp norm uses the pointwise euclidean magnitude") {
    Grid g(2, 32);
    std::vector<std::vector<double>> comps{
        sample(g, [](double x, double, double) { return std::sin(x); }),
        sample(g, [](double x, double, double) { return std::cos(x); })};
    SpectralField f = SpectralField::from_real(g, comps);
    // |f| = 1 everywhere
    CHECK(lp_norm(f, kInfExponent) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp_norm(f, 2.0) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("multi-index enumeration") {
    auto m23 = multi_indices(2, 3);
    CHECK(m23.size() == 4);
    auto m33 = multi_indices(3, 3);
    CHECK(m33.size() == 10);
    for (const auto& a : m33) {
        int total = 0;
        for (int v : a) total += v;
        CHECK(total == 3);
    }
}

TEST_CASE("homogeneous sobolev norm against the mode-sum oracle") {
    for (int dims : {2, 3}) {
        Grid g(dims, dims == 2 ? 48 : 24);
        SpectralField f = random_band_limited(g, g.n() / 8, 1.5, 77u);
        for (int k : {1, 2, 3}) {
            double quad = homogeneous_sobolev(f, k, 2.0);
            double modesum = testutil::sobolev_l2_modesum(f, k);
            CHECK(rel_err(quad, modesum) < 1e-10);
        }
    }
}

TEST_CASE("sobolev degenerate orders") {
    Grid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double y, double) { return std::sin(x + y); });
    CHECK(homogeneous_sobolev(f, 0, 4.0) == doctest::Approx(lp_norm(f, 4.0)).epsilon(1e-13));
    // k = 1, p = inf: max over the two first derivatives, each a unit cosine
    CHECK(homogeneous_sobolev(f, 1, kInfExponent) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("gradient sup norm of a product state") {
    Grid g(2, 64);
    SpectralField f =
        scalar_field(g, [](double x, double y, double) { return std::sin(x) * std::sin(y); });
    CHECK(grad_linf(f) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("spectral dissipation integrand matches the sobolev route") {
    Grid g(2, 32);
    SpectralField f = random_band_limited(g, 8, 1.0, 5u);
    double direct = grad_l2_squared(f);
    double h1 = homogeneous_sobolev(f, 1, 2.0);
    CHECK(rel_err(direct, h1 * h1) < 1e-10);
}

TEST_CASE("besov partition telescopes on every covered mode") {
    for (int n : {32, 64}) {
        Grid g(2, n);
        BesovPartition part = BesovPartition::for_grid(g);
        CHECK(part.partition_residual() <= 1e-12);
        CHECK(part.coverage_radius() >= std::sqrt(2.0) * (n / 2.0));
    }
}

TEST_CASE("besov norm of separated shells is the sum of amplitudes") {
    Grid g(2, 64);
    BesovPartition part = BesovPartition::for_grid(g);
    SpectralField f = scalar_field(
        g, [](double x, double, double) { return 2.0 * std::sin(x) + 0.75 * std::sin(8.0 * x); });
    f.make_zero_mean();
    CHECK(besov_b0inf1(f, part) == doctest::Approx(2.75).epsilon(1e-10));
}

TEST_CASE("sup norm is dominated by the besov norm") {
    Grid g(2, 48);
    BesovPartition part = BesovPartition::for_grid(g);
    for (int trial = 0; trial < 25; ++trial) {
        SpectralField f = random_band_limited(g, 12, 1.0, 1000u + trial);
        CHECK(lp_norm(f, kInfExponent) <= besov_b0inf1(f, part) * (1.0 + 1e-12));
    }
}

TEST_CASE("besov norm requires zero mean") {
    Grid g(2, 32);
    BesovPartition part = BesovPartition::for_grid(g);
    SpectralField f = scalar_field(g, [](double x, double, double) { return 1.0 + std::sin(x); });
    CHECK_THROWS(besov_b0inf1(f, part));
}

TEST_CASE("commutator ratio against the leibniz expansion") {
    Grid g(2, 48);
    SpectralField f = random_band_limited(g, g.n() / 8, 1.0, 21u);
    SpectralField u = random_band_limited(g, g.n() / 8, 1.0, 22u);
    const int k = 3;
    const double p = 2.0;

    auto ratio = commutator_ratio(f, u, k, p);
    REQUIRE(ratio.has_value());

    // independent numerator: D^a(fu) - f D^a u = sum_{0 < b <= a} C(a,b) D^b f D^{a-b} u,
    // exact in real space because both factors are band-limited below n/6
    auto binom = [](int n_, int k_) {
        double r = 1.0;
        for (int i = 1; i <= k_; ++i) r = r * (n_ - k_ + i) / i;
        return r;
    };
    double acc = 0.0;
    for (const auto& alpha : multi_indices(2, k)) {
        std::vector<double> term(g.size(), 0.0);
        for (int b0 = 0; b0 <= alpha[0]; ++b0)
            for (int b1 = 0; b1 <= alpha[1]; ++b1) {
                if (b0 == 0 && b1 == 0) continue;
                double c = binom(alpha[0], b0) * binom(alpha[1], b1);
                auto df = spectral_derivative(f, {b0, b1}).to_real(0);
                auto du = spectral_derivative(u, {alpha[0] - b0, alpha[1] - b1}).to_real(0);
                for (std::size_t i = 0; i < term.size(); ++i) term[i] += c * df[i] * du[i];
            }
        for (double v : term) acc += std::pow(std::abs(v), p);
    }
    double numerator_oracle = std::pow(acc * g.quad_weight(), 1.0 / p);
    double denominator = grad_linf(f) * homogeneous_sobolev(u, k - 1, p) +
                         homogeneous_sobolev(f, k, p) * lp_norm(u, kInfExponent);
    CHECK(rel_err(*ratio, numerator_oracle / denominator) < 1e-9);
}

TEST_CASE("commutator and gn ratios are amplitude invariant") {
    Grid g(2, 48);
    SpectralField f = random_band_limited(g, 6, 1.0, 31u);
    SpectralField u = random_band_limited(g, 6, 1.0, 32u);
    SpectralField f2 = f, u2 = u;
    for (auto& c : f2.coef(0)) c *= 3.0;
    for (auto& c : u2.coef(0)) c *= 0.25;

    auto r1 = commutator_ratio(f, u, 3, 2.0);
    auto r2 = commutator_ratio(f2, u2, 3, 2.0);
    REQUIRE(r1.has_value());
    REQUIRE(r2.has_value());
    CHECK(rel_err(*r1, *r2) < 1e-12);

    CHECK(rel_err(gn_ratio(f, 3, 2.0), gn_ratio(f2, 3, 2.0)) < 1e-12);
}

TEST_CASE("supercriticality is enforced") {
    Grid g(2, 32);
    SpectralField f = random_band_limited(g, 5, 1.0, 3u);
    CHECK_THROWS(gn_ratio(f, 2, 1.0));                    // k <= 2/p + 1 at p = 1
    CHECK_THROWS(commutator_ratio(f, f, 2, 2.0));         // k = 2 = 2/2 + 1 boundary
    CHECK_NOTHROW(commutator_ratio(f, f, 3, 2.0));
}

TEST_CASE("fractional inequality is an identity at p = 2") {
    Grid g(2, 32);
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        SpectralField f = random_band_limited(g, 8, 1.0, 99u);
        FractionalCheck c = fractional_inequality_check(f, 2.0, a);
        CHECK(c.ok);
        CHECK(std::abs(c.margin) <= 1e-10 * std::max(1.0, std::abs(c.rhs)));
    }
}

TEST_CASE("fractional inequality margins are nonnegative") {
    Grid g(2, 32);
    for (int trial = 0; trial < 20; ++trial) {
        SpectralField f = random_band_limited(g, 6, 1.5, 500u + trial);
        for (double p : {2.0, 3.0, 4.0})
            for (double a : {0.0, 0.5, 1.0, 2.0}) {
                FractionalCheck c = fractional_inequality_check(f, p, a, 1e-8);
                CHECK(c.ok);
            }
    }
}

TEST_CASE("cz ratio is exactly 1 on a single mode") {
    Grid g(2, 32);
    BesovPartition part = BesovPartition::for_grid(g);
    SpectralField theta = scalar_field(g, [](double x, double, double) { return std::sin(x); });
    theta.make_zero_mean();
    CHECK(cz_ratio(theta, part) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("calibration is deterministic and reports its argmax") {
    Grid g(2, 32);
    CalibrationReport a = calibrate(ConstantKind::gagliardo_nirenberg, 8, 7u, g, 3, 2.0);
    CalibrationReport b = calibrate(ConstantKind::gagliardo_nirenberg, 8, 7u, g, 3, 2.0);
    CHECK(a.constant == b.constant);
    CHECK(a.argmax_descriptor == b.argmax_descriptor);
    CHECK(a.constant > 0.0);
    CHECK(std::isfinite(a.constant));

    CalibrationReport rt = CalibrationReport::from_json(a.to_json());
    CHECK(rt.constant == a.constant);
    CHECK(rt.kind == a.kind);
    CHECK(rt.seed == a.seed);
}

TEST_CASE("calibrated constants are stable under grid refinement") {
    Grid coarse(2, 32), fine(2, 64);
    for (ConstantKind kind :
         {ConstantKind::commutator, ConstantKind::gagliardo_nirenberg, ConstantKind::calderon_zygmund}) {
        double c1 = calibrate(kind, 12, 5u, coarse, 3, 2.0).constant;
        double c2 = calibrate(kind, 12, 5u, fine, 3, 2.0).constant;
        CHECK(c1 > 0.0);
        CHECK(c2 > 0.0);
        double spread = std::max(c1, c2) / std::min(c1, c2);
        CHECK(spread < 2.0);
    }
}

#include <cmath>
#include <vector>

#include "apriori/series.hpp"
#include "apriori/transforms.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apriori;
using testutil::rel_err;

namespace {

NormSeries synthetic_series(std::size_t samples, double t_end,
                            const std::function<double(double)>& dk32,
                            const std::function<double(double)>& besov) {
    NormSeries s;
    s.columns = {"t", "l2", "lp_3", "lp_4", "dkl_3_2", "grad_linf", "besov_b0inf1"};
    for (std::size_t i = 0; i < samples; ++i) {
        double t = t_end * double(i) / double(samples - 1);
        s.append({t, 1.5, 1.2, 1.1, dk32(t), 0.9 * besov(t), besov(t)});
    }
    return s;
}

}  // namespace

TEST_CASE("driving norms raise the right column to the family exponent") {
    NormSeries s = synthetic_series(5, 1.0, [](double t) { return 2.0 + t; },
                                    [](double) { return 1.0; });

    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 3;
    auto a = driving_norm(s, hk);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(rel_err(a[i], std::pow(2.0 + s.rows[i][0], 5.0 / 6.0)) < 1e-14);

    TransformParams lp;
    lp.family = Family::NSLp;
    lp.p = 4.0;
    auto b = driving_norm(s, lp);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(rel_err(b[i], std::pow(1.1, 8.0)) < 1e-13);

    TransformParams besov;
    besov.family = Family::QGBesov;
    besov.lambda = 1.0;
    auto c = driving_norm(s, besov);
    for (double v : c) CHECK(v == 1.0);
}

TEST_CASE("missing columns are reported by name") {
    NormSeries s;
    s.columns = {"t", "l2"};
    s.append({0.0, 1.0});
    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 3;
    try {
        driving_norm(s, hk);
        FAIL("expected an error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("dkl_3_2") != std::string::npos);
    }
}

TEST_CASE("s_of_t closed forms") {
    const double gamma = 0.7, A0 = 1.3;
    std::size_t n = 4001;
    std::vector<double> t(n), A(n, A0), zero(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) t[i] = double(i) / double(n - 1);

    auto s_plus = s_of_t(A, t, gamma, +1);
    for (std::size_t i = 0; i < n; i += 500) {
        double want = (std::exp(gamma * A0 * t[i]) - 1.0) / (gamma * A0);
        CHECK(rel_err(s_plus[i], want) < 1e-7);
    }

    auto s_zero = s_of_t(zero, t, gamma, +1);
    for (std::size_t i = 0; i < n; i += 500) CHECK(std::abs(s_zero[i] - t[i]) < 1e-14);
}

TEST_CASE("s_of_t agrees with a 10x refined quadrature") {
    auto afun = [](double t) { return 1.0 + 0.5 * std::sin(3.0 * t) + 0.3 * std::cos(5.0 * t); };
    std::size_t n = 8193;
    std::size_t nf = (n - 1) * 10 + 1;
    std::vector<double> t(n), A(n), tf(nf), Af(nf);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = double(i) / double(n - 1);
        A[i] = afun(t[i]);
    }
    for (std::size_t i = 0; i < nf; ++i) {
        tf[i] = double(i) / double(nf - 1);
        Af[i] = afun(tf[i]);
    }
    auto coarse = s_of_t(A, t, 0.9, +1);
    auto fine = s_of_t(Af, tf, 0.9, +1);
    CHECK(rel_err(coarse.back(), fine.back()) < 1e-8);
}

TEST_CASE("s_of_t brackets t according to the sign") {
    std::size_t n = 101;
    std::vector<double> t(n), A(n, 0.8);
    for (std::size_t i = 0; i < n; ++i) t[i] = double(i) / double(n - 1);
    auto plus = s_of_t(A, t, 1.0, +1);
    auto minus = s_of_t(A, t, 1.0, -1);
    for (std::size_t i = 1; i < n; ++i) {
        CHECK(plus[i] >= t[i] - 1e-12);
        CHECK(minus[i] <= t[i] + 1e-12);
        CHECK(plus[i] > plus[i - 1]);
        CHECK(minus[i] > minus[i - 1]);
    }
}

TEST_CASE("scale-invariant transfer factors vanish algebraically") {
    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 4;
    CHECK(std::abs(hk.transfer_log_coeff(0, 2.0)) <= 1e-15);

    TransformParams lp;
    lp.family = Family::NSLp;
    lp.p = 5.0;
    CHECK(std::abs(lp.transfer_log_coeff(0, 3.0)) <= 1e-15);

    TransformParams wkp;
    wkp.family = Family::QGWkp;
    wkp.k = 3;
    wkp.p = 3.0;
    CHECK(std::abs(wkp.transfer_log_coeff(0, 3.0)) <= 1e-15);

    TransformParams besov;
    besov.family = Family::QGBesov;
    besov.lambda = 0.7;
    CHECK(std::abs(besov.transfer_log_coeff(1, kInfExponent) + 1.0) <= 1e-15);
}

TEST_CASE("norm transfer keeps the invariant norm and the initial factors") {
    NormSeries s = synthetic_series(64, 1.0, [](double t) { return 2.0 + std::sin(t); },
                                    [](double t) { return 1.0 + 0.2 * t; });
    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 3;
    hk.gamma = 1.1;

    TransformedSeries ts = norm_transfer(s, hk);
    REQUIRE(ts.columns.size() >= 5);
    CHECK(ts.columns[0] == "t");
    CHECK(ts.columns[1] == "s");
    CHECK(ts.columns[2] == "E");
    CHECK(ts.columns[3] == "L");
    CHECK(ts.rows.front()[1] == 0.0);
    CHECK(ts.rows.front()[2] == 1.0);
    CHECK(ts.rows.front()[3] == 1.0);

    std::size_t l2_idx = 0;
    for (std::size_t c = 0; c < ts.columns.size(); ++c)
        if (ts.columns[c] == "l2") l2_idx = c;
    for (std::size_t i = 0; i < ts.rows.size(); ++i) {
        CHECK(rel_err(ts.rows[i][l2_idx], 1.5) < 1e-12);
        if (i) CHECK(ts.rows[i][1] > ts.rows[i - 1][1]);
    }
}

TEST_CASE("sign flip gives reciprocal amplitude factors") {
    NormSeries s = synthetic_series(32, 1.0, [](double t) { return 2.0 + t * t; },
                                    [](double) { return 1.0; });
    TransformParams plus;
    plus.family = Family::NSHk;
    plus.k = 3;
    plus.gamma = 0.8;
    TransformParams minus = plus;
    minus.sign = -1;

    TransformedSeries a = norm_transfer(s, plus);
    TransformedSeries b = norm_transfer(s, minus);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(rel_err(a.rows[i][2] * b.rows[i][2], 1.0) < 1e-12);
}

TEST_CASE("integral invariant on a constant series has a closed form") {
    const double A0raw = 2.0;
    NormSeries s = synthetic_series(257, 1.0, [&](double) { return A0raw; },
                                    [](double) { return 1.0; });
    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 3;
    hk.gamma = 1.0;

    InvariantReport rep = invariant_report(s, hk, 4, 1e-12, 1e-8);
    CHECK(rep.factor_ok);
    CHECK(rep.integral_ok);
    CHECK(rep.integral_mismatch.front() == 0.0);
    CHECK(rep.max_integral_mismatch < 1e-8);
}

TEST_CASE("invariant mismatch drops at least tenfold under stride halving") {
    auto make = [](std::size_t samples) {
        return synthetic_series(samples, 1.0,
                                [](double t) { return 2.0 + std::sin(2.0 * t); },
                                [](double t) { return 1.0 + 0.3 * std::cos(t); });
    };
    TransformParams hk;
    hk.family = Family::NSHk;
    hk.k = 3;
    hk.gamma = 1.2;

    double coarse = invariant_report(make(65), hk, 4).max_integral_mismatch;
    double fine = invariant_report(make(129), hk, 4).max_integral_mismatch;
    CHECK(fine > 0.0);
    CHECK(coarse / fine >= 10.0);
}

TEST_CASE("family validation") {
    TransformParams t;
    t.family = Family::NSHk;
    t.k = 2;
    CHECK_THROWS(t.validate());
    t.k = 3;
    CHECK_NOTHROW(t.validate());

    t.family = Family::NSLp;
    t.p = 3.0;
    CHECK_THROWS(t.validate());
    t.p = 4.0;
    CHECK_NOTHROW(t.validate());

    t.family = Family::QGWkp;
    t.k = 1;
    t.p = 2.0;
    CHECK_THROWS(t.validate());
    t.k = 3;
    CHECK_NOTHROW(t.validate());

    t.family = Family::QGBesov;
    t.lambda = -1.0;
    CHECK_THROWS(t.validate());
    t.lambda = 0.5;
    CHECK_NOTHROW(t.validate());

    t.sign = 2;
    CHECK_THROWS(t.validate());
}

TEST_CASE("norm column slots") {
    auto l2 = norm_slot("l2");
    REQUIRE(l2.has_value());
    CHECK(l2->first == 0);
    CHECK(l2->second == 2.0);

    auto dkl = norm_slot("dkl_3_2");
    REQUIRE(dkl.has_value());
    CHECK(dkl->first == 3);
    CHECK(dkl->second == 2.0);

    auto grad = norm_slot("grad_linf");
    REQUIRE(grad.has_value());
    CHECK(grad->first == 1);
    CHECK(std::isinf(grad->second));

    CHECK(!norm_slot("dissipation").has_value());
    CHECK(!norm_slot("t").has_value());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fcast/benchmarks.hpp"

using namespace fcast;

namespace {

// Independent least-squares oracle: builds the design explicitly and solves
// the normal equations by Cramer-free full inversion via Gauss-Jordan on an
// augmented matrix. Deliberately separate from the production solver.
std::vector<double> ols_oracle(const std::vector<double>& y, int p, int p_max) {
    int n = static_cast<int>(y.size());
    int k = p + 1;
    std::vector<std::vector<double>> x;
    std::vector<double> yy;
    for (int t = p_max; t < n; ++t) {
        std::vector<double> row{1.0};
        for (int j = 1; j <= p; ++j) row.push_back(y[t - j]);
        x.push_back(row);
        yy.push_back(y[t]);
    }
    // augmented [X'X | X'y], Gauss-Jordan
    std::vector<std::vector<double>> aug(k, std::vector<double>(k + 1, 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (std::size_t t = 0; t < x.size(); ++t) aug[i][j] += x[t][i] * x[t][j];
        for (std::size_t t = 0; t < x.size(); ++t) aug[i][k] += x[t][i] * yy[t];
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::fabs(aug[r][col]) > std::fabs(aug[piv][col])) piv = r;
        std::swap(aug[col], aug[piv]);
        double d = aug[col][col];
        for (int c = 0; c <= k; ++c) aug[col][c] /= d;
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            double f = aug[r][col];
            for (int c = 0; c <= k; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::vector<double> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = aug[i][k];
    return beta;
}

double rss_of(const std::vector<double>& y, const ARFit& fit, int p_max) {
    double rss = 0;
    for (int t = p_max; t < static_cast<int>(y.size()); ++t) {
        double pred = fit.intercept;
        for (int j = 1; j <= fit.lag_order; ++j) pred += fit.coefficients[j - 1] * y[t - j];
        rss += (y[t] - pred) * (y[t] - pred);
    }
    return rss;
}

std::vector<double> ar_series(double phi1, double phi2, double c, int n, double start,
                              unsigned seed, double sigma) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> eps(0.0, sigma);
    std::vector<double> y{start, start * 0.7};
    while (static_cast<int>(y.size()) < n) {
        double prev1 = y[y.size() - 1];
        double prev2 = y[y.size() - 2];
        y.push_back(c + phi1 * prev1 + phi2 * prev2 + (sigma > 0 ? eps(rng) : 0.0));
    }
    return y;
}

}  // namespace

TEST_CASE("fit_ar recovers an exact AR(1) recursion") {
    // y_t = 0.5 y_{t-1}, noise-free after a nonzero start: residual variance 0
    std::vector<double> y{8.0};
    for (int i = 0; i < 20; ++i) y.push_back(0.5 * y.back());
    ARFit fit = fit_ar(y, 1);
    CHECK(fit.intercept == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.coefficients[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(fit.residual_variance == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("fit_ar matches the independent least-squares oracle") {
    std::mt19937 rng(21);
    std::normal_distribution<double> noise(2.0, 1.0);
    std::vector<double> y;
    for (int i = 0; i < 12; ++i) y.push_back(noise(rng));
    ARFit fit = fit_ar(y, 1);
    auto beta = ols_oracle(y, 1, 1);
    CHECK(fit.intercept == doctest::Approx(beta[0]).epsilon(1e-10));
    CHECK(fit.coefficients[0] == doctest::Approx(beta[1]).epsilon(1e-10));
}

TEST_CASE("nested models: RSS(p=2) <= RSS(p=1) on the common sample") {
    std::mt19937 rng(22);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> y;
        for (int i = 0; i < 30; ++i) y.push_back(noise(rng));
        ARFit f1 = fit_ar(y, 1, 2);
        ARFit f2 = fit_ar(y, 2, 2);
        CHECK(rss_of(y, f2, 2) <= rss_of(y, f1, 2) + 1e-9);
    }
}

TEST_CASE("fit_ar guards") {
    CHECK_THROWS_AS(fit_ar(std::vector<double>{1, 2}, 1), ComputeError);
    CHECK_THROWS_AS(fit_ar(std::vector<double>(20, 3.0), 1), ComputeError);
}

TEST_CASE("select_lag_aic equals exhaustive enumeration") {
    std::mt19937 rng(23);
    std::normal_distribution<double> noise(0.0, 0.4);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<double> y = ar_series(0.6, -0.2, 0.5, 60, 1.0 + rep * 0.1, 100 + rep, 0.4);
        ARFit chosen = select_lag_aic(y, 4);
        int best_p = 0;
        double best_aic = 0;
        for (int p = 1; p <= 4; ++p) {
            auto beta = ols_oracle(y, p, 4);
            double rss = 0;
            for (int t = 4; t < static_cast<int>(y.size()); ++t) {
                double pred = beta[0];
                for (int j = 1; j <= p; ++j) pred += beta[j] * y[t - j];
                rss += (y[t] - pred) * (y[t] - pred);
            }
            int n_eff = static_cast<int>(y.size()) - 4;
            double aic = n_eff * std::log(rss / n_eff) + 2.0 * (p + 1);
            if (best_p == 0 || aic < best_aic) {
                best_p = p;
                best_aic = aic;
            }
        }
        CHECK(chosen.lag_order == best_p);
        CHECK(chosen.aic == doctest::Approx(best_aic).epsilon(1e-10));
    }
}

TEST_CASE("select_lag_aic picks p=2 on noise-free AR(2) data") {
    // complex roots keep the signal oscillating instead of settling on the
    // fixed point; machine-level noise keeps log(residual_variance) defined
    std::vector<double> y = ar_series(1.4, -0.9, 0.1, 70, 2.0, 24, 1e-6);
    ARFit fit = select_lag_aic(y, 4);
    CHECK(fit.lag_order == 2);
    CHECK(fit.coefficients[0] == doctest::Approx(1.4).epsilon(1e-3));
    CHECK(fit.coefficients[1] == doctest::Approx(-0.9).epsilon(1e-3));
}

TEST_CASE("select_lag_aic with p_max=1 equals fit_ar") {
    std::mt19937 rng(25);
    std::normal_distribution<double> noise(1.0, 0.8);
    std::vector<double> y;
    for (int i = 0; i < 40; ++i) y.push_back(noise(rng));
    ARFit a = select_lag_aic(y, 1);
    ARFit b = fit_ar(y, 1, 1);
    CHECK(a.lag_order == 1);
    CHECK(a.intercept == b.intercept);
    CHECK(a.coefficients[0] == b.coefficients[0]);
    CHECK(a.aic == b.aic);
}

TEST_CASE("iterated forecasts follow the recursion") {
    ARFit fit;
    fit.lag_order = 1;
    fit.intercept = 0.0;
    fit.coefficients = {0.5};
    std::vector<double> window{1.0, 2.0, 4.0};
    auto f = fit.iterate_forecasts(window, 3);
    CHECK(f[0] == doctest::Approx(2.0));
    CHECK(f[1] == doctest::Approx(1.0));
    CHECK(f[2] == doctest::Approx(0.5));

    ARFit meanonly;
    meanonly.lag_order = 1;
    meanonly.intercept = 3.0;
    meanonly.coefficients = {0.0};
    auto g = meanonly.iterate_forecasts(window, 5);
    for (double v : g) CHECK(v == doctest::Approx(3.0));
}

TEST_CASE("iterated forecasts converge to the unconditional mean") {
    std::vector<double> y = ar_series(0.6, 0.2, 0.4, 80, 1.5, 31, 0.3);
    ARFit fit = select_lag_aic(y, 4);
    double csum = 0;
    for (double c : fit.coefficients) csum += c;
    REQUIRE(std::fabs(csum) < 1.0);  // stable fit expected on this DGP
    double mu = fit.intercept / (1.0 - csum);
    auto f = fit.iterate_forecasts(y, 200);
    CHECK(f.back() == doctest::Approx(mu).epsilon(1e-6));
}

TEST_CASE("random walk panel") {
    RealizationSeries real(QuarterlyPeriod(2020, 1), {1.0, 2.0, 3.0, 4.0});
    std::vector<QuarterlyPeriod> origins{QuarterlyPeriod(2020, 4), QuarterlyPeriod(2019, 1)};
    std::vector<int> horizons{0, 1, 2, 12};
    ForecastPanel panel = random_walk_panel(real, origins, horizons, 1);
    // availability lag 1: origin at the 4th period sees values through the 3rd
    for (int h : horizons) CHECK(panel.get(QuarterlyPeriod(2020, 4), h) == 3.0);
    // origin before the series start is omitted
    CHECK(!panel.get(QuarterlyPeriod(2019, 1), 0));
    CHECK(panel.size() == horizons.size());
}

TEST_CASE("random walk shift equivariance") {
    std::mt19937 rng(32);
    std::normal_distribution<double> noise(2.0, 1.0);
    std::vector<double> vals;
    for (int i = 0; i < 70; ++i) vals.push_back(noise(rng));
    std::vector<double> shifted;
    for (double v : vals) shifted.push_back(v + 5.0);
    RealizationSeries a(QuarterlyPeriod(2000, 1), vals);
    RealizationSeries b(QuarterlyPeriod(2000, 1), shifted);
    std::vector<QuarterlyPeriod> origins{QuarterlyPeriod(2016, 1), QuarterlyPeriod(2016, 2)};
    std::vector<int> horizons{0, 1, 4};

    ForecastPanel pa = random_walk_panel(a, origins, horizons);
    ForecastPanel pb = random_walk_panel(b, origins, horizons);
    for (const auto& [key, v] : pa.entries())
        CHECK(*pb.get(key.origin, key.horizon) == doctest::Approx(v + 5.0).epsilon(1e-12));

    // AR with intercept is affine equivariant too
    ForecastPanel aa = ar_panel(a, origins, horizons, 60, 4);
    ForecastPanel ab = ar_panel(b, origins, horizons, 60, 4);
    for (const auto& [key, v] : aa.entries())
        CHECK(*ab.get(key.origin, key.horizon) == doctest::Approx(v + 5.0).epsilon(1e-8));
}

TEST_CASE("ar_panel matches an iterate-forward oracle") {
    // synthetic AR(1), phi = 0.8, 200 obs, rolling window 60
    std::mt19937 rng(33);
    std::normal_distribution<double> eps(0.0, 0.5);
    std::vector<double> vals{2.0};
    while (vals.size() < 200) vals.push_back(0.4 + 0.8 * vals.back() + eps(rng));
    RealizationSeries real(QuarterlyPeriod(1974, 1), vals);

    std::vector<QuarterlyPeriod> origins;
    for (int i = 150; i < 160; ++i) origins.push_back(QuarterlyPeriod(1974, 1).plus(i));
    std::vector<int> horizons{0, 1, 2, 4, 8, 12};
    ForecastPanel panel = ar_panel(real, origins, horizons, 60, 4, 1);

    for (QuarterlyPeriod origin : origins) {
        auto avail = real.values_through(origin.plus(-1));
        std::vector<double> window(avail.end() - 60, avail.end());
        ARFit fit = select_lag_aic(window, 4);
        // oracle recursion, hand-rolled over a copy of the tail
        std::vector<double> tail(window.end() - fit.lag_order, window.end());
        std::vector<double> path;
        for (int s = 0; s < 13; ++s) {
            double next = fit.intercept;
            for (int j = 0; j < fit.lag_order; ++j)
                next += fit.coefficients[j] * tail[tail.size() - 1 - j];
            path.push_back(next);
            tail.push_back(next);
        }
        for (int h : horizons)
            CHECK(*panel.get(origin, h) == doctest::Approx(path[h]).epsilon(1e-10));
    }
}

TEST_CASE("ar_panel skips origins with insufficient history") {
    RealizationSeries real(QuarterlyPeriod(2020, 1), std::vector<double>(30, 1.0));
    std::vector<QuarterlyPeriod> origins{QuarterlyPeriod(2021, 1)};
    std::vector<int> horizons{1};
    std::vector<std::string> warnings;
    ForecastPanel panel = ar_panel(real, origins, horizons, 60, 4, 1, "AR", &warnings);
    CHECK(panel.size() == 0);
    CHECK(warnings.size() == 1);
}

TEST_CASE("rw panel is horizon-constant") {
    std::mt19937 rng(34);
    std::normal_distribution<double> noise(2.0, 1.5);
    std::vector<double> vals;
    for (int i = 0; i < 50; ++i) vals.push_back(noise(rng));
    RealizationSeries real(QuarterlyPeriod(2000, 1), vals);
    std::vector<QuarterlyPeriod> origins;
    for (int i = 5; i < 45; ++i) origins.push_back(QuarterlyPeriod(2000, 1).plus(i));
    std::vector<int> horizons{0, 1, 2, 4, 8, 12};
    ForecastPanel panel = random_walk_panel(real, origins, horizons);
    for (QuarterlyPeriod o : origins)
        for (int h : horizons) CHECK(*panel.get(o, h) == *panel.get(o, 0));
}

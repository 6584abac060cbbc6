#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fcast/loss.hpp"

using namespace fcast;

TEST_CASE("loss values") {
    CHECK(loss(LossSpec::linex(0.5), 0.0) == 0.0);
    // exp(0.5) - 1.5, evaluated independently
    CHECK(loss(LossSpec::linex(0.5), 1.0) == doctest::Approx(0.14872127070013).epsilon(1e-12));
    CHECK(loss(LossSpec::linex(-0.5), -1.0) == doctest::Approx(0.14872127070013).epsilon(1e-12));
    CHECK(loss(LossSpec::quadratic(), -2.34) == doctest::Approx(5.4756).epsilon(1e-12));
    CHECK(loss(LossSpec::absolute(), -2.34) == doctest::Approx(2.34).epsilon(1e-12));
}

TEST_CASE("loss guards") {
    CHECK_THROWS_AS(LossSpec::linex(0.0), ConfigError);
    CHECK_THROWS_AS(loss(LossSpec::linex(0.5), 1500.0), ComputeError);
    CHECK_THROWS_AS(loss(LossSpec::quadratic(), std::nan("")), ComputeError);
}

TEST_CASE("loss spec parsing round trip") {
    CHECK(LossSpec::parse("quadratic").kind == LossKind::quadratic);
    CHECK(LossSpec::parse("absolute").kind == LossKind::absolute);
    CHECK(LossSpec::parse("linex:0.5").alpha == 0.5);
    CHECK(LossSpec::parse("linex(-0.5)").alpha == -0.5);
    CHECK(LossSpec::parse(LossSpec::linex(0.5).name()).alpha == 0.5);
    CHECK_THROWS_AS(LossSpec::parse("huber"), ConfigError);
}

TEST_CASE("loss properties") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        double e = u(rng);
        double a = u(rng);
        if (a == 0) continue;
        for (auto spec : {LossSpec::quadratic(), LossSpec::absolute(), LossSpec::linex(a)}) {
            double l = loss(spec, e);
            CHECK(l >= 0.0);
            if (e != 0.0) CHECK(l > 0.0);
        }
        // linex(a, e) == linex(-a, -e) exactly
        CHECK(loss(LossSpec::linex(a), e) == loss(LossSpec::linex(-a), -e));
        // quadratic and absolute are even
        CHECK(loss(LossSpec::quadratic(), e) == loss(LossSpec::quadratic(), -e));
        CHECK(loss(LossSpec::absolute(), e) == loss(LossSpec::absolute(), -e));
    }
}

namespace {

// Spreadsheet-style brute-force oracle, kept independent of summarize().
SummaryStats oracle_stats(std::vector<double> e) {
    SummaryStats s;
    int n = static_cast<int>(e.size());
    s.n = n;
    double sum = 0;
    for (double x : e) sum += x;
    s.mean = sum / n;
    std::vector<double> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    s.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    s.max = sorted.back();
    s.min = sorted.front();
    std::vector<double> absd;
    double mae = 0;
    for (double x : e) {
        absd.push_back(std::fabs(x));
        mae += std::fabs(x);
    }
    s.mae = mae / n;
    std::sort(absd.begin(), absd.end());
    s.mdae = n % 2 ? absd[n / 2] : 0.5 * (absd[n / 2 - 1] + absd[n / 2]);
    double ss = 0, s3 = 0;
    for (double x : e) {
        ss += (x - s.mean) * (x - s.mean);
        s3 += std::pow(x - s.mean, 3);
    }
    s.std = std::sqrt(ss / (n - 1));
    s.skew = (s3 / n) / std::pow(ss / n, 1.5);
    auto ac = [&](int k) {
        double num = 0;
        for (int t = k; t < n; ++t) num += (e[t] - s.mean) * (e[t - k] - s.mean);
        return num / ss;
    };
    s.ac1 = ac(1);
    s.ac4 = ac(4);
    return s;
}

}  // namespace

TEST_CASE("summarize matches the brute-force oracle") {
    std::vector<double> alternating{1, -1, 1, -1, 1, -1};
    SummaryStats s = summarize(alternating);
    SummaryStats o = oracle_stats(alternating);
    CHECK(s.mean == doctest::Approx(0.0));
    CHECK(s.mae == doctest::Approx(1.0));
    CHECK(s.std == doctest::Approx(std::sqrt(6.0 / 5.0)).epsilon(1e-12));
    CHECK(s.ac1 == doctest::Approx(o.ac1).epsilon(1e-12));
    CHECK(s.ac4 == doctest::Approx(o.ac4).epsilon(1e-12));

    std::mt19937 rng(4);
    std::normal_distribution<double> noise(0.3, 1.2);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<int> len(5, 60);
        std::vector<double> e;
        for (int i = 0, n = len(rng); i < n; ++i) e.push_back(noise(rng));
        SummaryStats a = summarize(e);
        SummaryStats b = oracle_stats(e);
        CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-12));
        CHECK(a.median == doctest::Approx(b.median).epsilon(1e-12));
        CHECK(a.mae == doctest::Approx(b.mae).epsilon(1e-12));
        CHECK(a.mdae == doctest::Approx(b.mdae).epsilon(1e-12));
        CHECK(a.std == doctest::Approx(b.std).epsilon(1e-12));
        CHECK(a.max == b.max);
        CHECK(a.min == b.min);
        CHECK(a.skew == doctest::Approx(b.skew).epsilon(1e-10));
        CHECK(a.ac1 == doctest::Approx(b.ac1).epsilon(1e-12));
        CHECK(a.ac4 == doctest::Approx(b.ac4).epsilon(1e-12));
        // invariants from the battery definition
        CHECK(a.mae >= std::fabs(a.mean) - 1e-12);
        CHECK(a.mdae >= 0.0);
        CHECK(a.min <= a.median);
        CHECK(a.median <= a.max);
        CHECK(std::fabs(a.ac1) <= 1.0 + 1e-12);
        CHECK(std::fabs(a.ac4) <= 1.0 + 1e-12);
    }
}

TEST_CASE("summarize sign-flip symmetry") {
    std::mt19937 rng(5);
    std::normal_distribution<double> noise(0.5, 2.0);
    std::vector<double> e;
    for (int i = 0; i < 30; ++i) e.push_back(noise(rng));
    std::vector<double> neg;
    for (double x : e) neg.push_back(-x);
    SummaryStats a = summarize(e), b = summarize(neg);
    CHECK(a.mean == doctest::Approx(-b.mean).epsilon(1e-12));
    CHECK(a.median == doctest::Approx(-b.median).epsilon(1e-12));
    CHECK(a.skew == doctest::Approx(-b.skew).epsilon(1e-10));
    CHECK(a.max == doctest::Approx(-b.min).epsilon(1e-12));
    CHECK(a.min == doctest::Approx(-b.max).epsilon(1e-12));
    CHECK(a.mae == doctest::Approx(b.mae).epsilon(1e-12));
    CHECK(a.mdae == doctest::Approx(b.mdae).epsilon(1e-12));
    CHECK(a.std == doctest::Approx(b.std).epsilon(1e-12));
    CHECK(a.ac1 == doctest::Approx(b.ac1).epsilon(1e-12));
    CHECK(a.ac4 == doctest::Approx(b.ac4).epsilon(1e-12));
}

TEST_CASE("summarize guards") {
    CHECK_THROWS_AS(summarize(std::vector<double>{1, 2, 3, 4}), ComputeError);
    CHECK_THROWS_AS(summarize(std::vector<double>(10, 0.0)), ComputeError);
    CHECK_THROWS_AS(summarize(std::vector<double>(10, 3.7)), ComputeError);
}

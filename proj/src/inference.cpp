#include "fcast/inference.hpp"

#include <algorithm>
#include <cmath>

namespace fcast {

int bandwidth_rule(int n) {
    if (n < 1) throw ComputeError("sample size must be >= 1");
    return static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
}

double bartlett_lrv(std::span<const double> d, int bandwidth) {
    const int n = static_cast<int>(d.size());
    if (n < 2) throw ComputeError("need at least 2 observations for the long-run variance");
    if (bandwidth < 1 || bandwidth > n) throw ComputeError("bandwidth out of range 1..n");

    double mean = 0;
    for (double x : d) mean += x;
    mean /= n;

    std::vector<double> dm(d.size());
    for (int t = 0; t < n; ++t) dm[t] = d[t] - mean;

    double gamma0 = 0;
    for (double x : dm) gamma0 += x * x;
    gamma0 /= n;

    double lrv = gamma0;
    for (int j = 1; j < bandwidth; ++j) {
        double gj = 0;
        for (int t = j; t < n; ++t) gj += dm[t] * dm[t - j];
        gj /= n;
        lrv += 2.0 * (1.0 - static_cast<double>(j) / bandwidth) * gj;
    }
    return lrv;
}

double fixed_b_cv(double b, double level) {
    if (!(b > 0.0 && b <= 1.0)) throw ComputeError("b ratio must lie in (0, 1]");
    // Cubic fits to the fixed-b limit quantiles for the Bartlett kernel;
    // cross-checked against a simulated Brownian-functional oracle in tests.
    if (level == 0.05)
        return 1.9600 + 2.9694 * b + 0.4160 * b * b - 0.5324 * b * b * b;
    if (level == 0.10)
        return 1.6449 + 2.1859 * b + 0.3142 * b * b - 0.3427 * b * b * b;
    throw ComputeError("unsupported significance level (use 0.10 or 0.05)");
}

DMOutcome test_dm(std::span<const double> loss_a, std::span<const double> loss_b,
                  CvSource cv_source) {
    if (loss_a.size() != loss_b.size()) throw ComputeError("loss series length mismatch");
    const int n = static_cast<int>(loss_a.size());
    if (n < 8) throw ComputeError("need at least 8 paired observations");

    std::vector<double> d(loss_a.size());
    for (int t = 0; t < n; ++t) d[t] = loss_a[t] - loss_b[t];

    DMOutcome out;
    out.n = n;
    out.bandwidth = bandwidth_rule(n);
    out.b_ratio = static_cast<double>(out.bandwidth) / n;
    out.cv_source = cv_source;

    double mean = 0;
    for (double x : d) mean += x;
    out.mean_differential = mean / n;

    out.lrv = bartlett_lrv(d, out.bandwidth);
    if (out.lrv <= 0.0)
        throw ComputeError("zero long-run variance -- degenerate differential");

    out.statistic = out.mean_differential / std::sqrt(out.lrv / n);
    if (cv_source == CvSource::fixed_b) {
        out.cv10 = fixed_b_cv(out.b_ratio, 0.10);
        out.cv05 = fixed_b_cv(out.b_ratio, 0.05);
    } else {
        out.cv10 = 1.6449;
        out.cv05 = 1.9600;
    }
    out.reject10 = std::abs(out.statistic) > out.cv10;
    out.reject05 = std::abs(out.statistic) > out.cv05;
    return out;
}

namespace {

struct PairedErrors {
    std::vector<QuarterlyPeriod> targets;
    std::vector<double> a, b;
};

// Intersection of target periods at a horizon, sorted by target.
PairedErrors paired_errors(
    const ErrorPanel& err_a, const ErrorPanel& err_b, int horizon,
    const std::optional<std::pair<QuarterlyPeriod, QuarterlyPeriod>>& window) {
    auto rows_a = err_a.at_horizon(horizon);
    auto rows_b = err_b.at_horizon(horizon);
    PairedErrors out;
    std::size_t i = 0, j = 0;
    while (i < rows_a.size() && j < rows_b.size()) {
        if (rows_a[i].first < rows_b[j].first) {
            ++i;
        } else if (rows_b[j].first < rows_a[i].first) {
            ++j;
        } else {
            QuarterlyPeriod t = rows_a[i].first;
            if (!window || (t >= window->first && t <= window->second)) {
                out.targets.push_back(t);
                out.a.push_back(rows_a[i].second);
                out.b.push_back(rows_b[j].second);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

DMOutcome compare_forecasts(const ErrorPanel& err_a, const ErrorPanel& err_b,
                            const LossSpec& spec, int horizon, CvSource cv_source,
                            std::optional<std::pair<QuarterlyPeriod, QuarterlyPeriod>> window) {
    auto pairs = paired_errors(err_a, err_b, horizon, window);
    if (pairs.a.size() < 8)
        throw ComputeError("insufficient overlap at horizon " + std::to_string(horizon) +
                           ": " + std::to_string(pairs.a.size()) + " common targets");
    return test_dm(losses(spec, pairs.a), losses(spec, pairs.b), cv_source);
}

MZOutcome mz_regression(std::span<const double> forecasts, std::span<const double> realizations,
                        int bandwidth) {
    if (forecasts.size() != realizations.size()) throw ComputeError("length mismatch");
    const int n = static_cast<int>(forecasts.size());
    if (n < 8) throw ComputeError("need at least 8 paired observations");
    if (bandwidth < 1) throw ComputeError("bandwidth must be >= 1");

    // OLS of y on [1, f]
    double sf = 0, sy = 0, sff = 0, sfy = 0;
    for (int t = 0; t < n; ++t) {
        sf += forecasts[t];
        sy += realizations[t];
        sff += forecasts[t] * forecasts[t];
        sfy += forecasts[t] * realizations[t];
    }
    double det = n * sff - sf * sf;
    if (std::abs(det) < 1e-12 * n * std::max(1.0, sff))
        throw ComputeError("singular design: constant forecasts");
    double slope = (n * sfy - sf * sy) / det;
    double intercept = (sy - slope * sf) / n;

    // Bartlett HAC covariance of the scores u_t * x_t, sandwich form
    std::vector<double> u(n);
    for (int t = 0; t < n; ++t) u[t] = realizations[t] - intercept - slope * forecasts[t];

    auto score = [&](int t, int i) { return u[t] * (i == 0 ? 1.0 : forecasts[t]); };
    double omega[2][2] = {{0, 0}, {0, 0}};
    for (int j = 0; j < bandwidth; ++j) {
        double w = j == 0 ? 1.0 : 2.0 * (1.0 - static_cast<double>(j) / bandwidth);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) {
                double acc = 0;
                for (int t = j; t < n; ++t)
                    acc += j == 0 ? score(t, i) * score(t, k)
                                  : 0.5 * (score(t, i) * score(t - j, k) +
                                           score(t - j, i) * score(t, k));
                omega[i][k] += w * acc / n;
            }
    }

    // (X'X)^-1, X'X = [[n, sf], [sf, sff]]
    double inv[2][2] = {{sff / det, -sf / det}, {-sf / det, n / det}};
    double v[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            double acc = 0;
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) acc += inv[i][a] * omega[a][c] * inv[c][k];
            v[i][k] = acc * n;  // scores were averaged; rescale to coefficient covariance
        }

    MZOutcome out;
    out.intercept = intercept;
    out.slope = slope;
    out.n = n;
    out.bandwidth = bandwidth;
    out.se_intercept = std::sqrt(std::max(0.0, v[0][0]));
    out.se_slope = std::sqrt(std::max(0.0, v[1][1]));

    // Wald for (intercept, slope) = (0, 1)
    double r0 = intercept, r1 = slope - 1.0;
    double vdet = v[0][0] * v[1][1] - v[0][1] * v[1][0];
    if (std::abs(vdet) < 1e-300) {
        // perfect fit: zero residuals give a zero covariance; the restriction
        // holds exactly or the statistic is undefined
        if (std::abs(r0) < 1e-10 && std::abs(r1) < 1e-10) {
            out.joint_wald = 0.0;
            return out;
        }
        throw ComputeError("degenerate covariance in Wald statistic");
    }
    out.joint_wald =
        (r0 * (v[1][1] * r0 - v[0][1] * r1) + r1 * (v[0][0] * r1 - v[1][0] * r0)) / vdet;
    return out;
}

std::vector<FluctuationPoint> fluctuation_dm(const ErrorPanel& err_a, const ErrorPanel& err_b,
                                             const LossSpec& spec, int horizon,
                                             int window_length, CvSource cv_source) {
    if (window_length < 8) throw ComputeError("fluctuation window must be >= 8");

    auto pairs = paired_errors(err_a, err_b, horizon, std::nullopt);
    const auto& targets = pairs.targets;
    const auto& ea = pairs.a;
    const auto& eb = pairs.b;
    const int n = static_cast<int>(targets.size());
    if (n < window_length) throw ComputeError("span shorter than fluctuation window");

    std::vector<FluctuationPoint> out;
    for (int end = window_length - 1; end < n; ++end) {
        int begin = end - window_length + 1;
        std::span<const double> wa(ea.data() + begin, static_cast<std::size_t>(window_length));
        std::span<const double> wb(eb.data() + begin, static_cast<std::size_t>(window_length));
        FluctuationPoint pt;
        pt.window_end = targets[static_cast<std::size_t>(end)];
        try {
            pt.outcome = test_dm(losses(spec, wa), losses(spec, wb), cv_source);
        } catch (const ComputeError& err) {
            pt.note = err.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace fcast

#include "fcast/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fcast {

namespace {

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// A is k x k row-major. Throws on (numerically) singular systems.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b, int k) {
    double scale = 0;
    for (int i = 0; i < k; ++i) scale = std::max(scale, std::abs(a[i * k + i]));
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r * k + col]) > std::abs(a[pivot * k + col])) pivot = r;
        if (std::abs(a[pivot * k + col]) < 1e-10 * scale)
            throw ComputeError("collinear window: singular design matrix");
        if (pivot != col) {
            for (int c = 0; c < k; ++c) std::swap(a[col * k + c], a[pivot * k + c]);
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < k; ++r) {
            double f = a[r * k + col] / a[col * k + col];
            for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(k);
    for (int r = k - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < k; ++c) acc -= a[r * k + c] * x[c];
        x[r] = acc / a[r * k + r];
    }
    return x;
}

bool is_constant(std::span<const double> w) {
    for (double v : w)
        if (v != w.front()) return false;
    return true;
}

}  // namespace

ARFit fit_ar(std::span<const double> window, int p, int p_max) {
    if (p_max <= 0) p_max = p;
    const int n = static_cast<int>(window.size());
    if (p < 1) throw ComputeError("lag order must be >= 1");
    if (p > p_max) throw ComputeError("lag order exceeds p_max");
    if (n < p_max + 2) throw ComputeError("window too short: need >= p_max + 2 observations");
    if (is_constant(window)) throw ComputeError("degenerate window: constant values");

    // Condition on the first p_max observations so that every candidate order
    // is scored on the same n - p_max residuals.
    const int n_eff = n - p_max;
    const int k = p + 1;  // intercept + p lags

    // Normal equations X'X beta = X'y with X = [1, y_{t-1}, ..., y_{t-p}]
    std::vector<double> xtx(static_cast<std::size_t>(k) * k, 0.0);
    std::vector<double> xty(k, 0.0);
    for (int t = p_max; t < n; ++t) {
        double row[6];  // k <= 6 in practice (p_max <= 5); assert below
        row[0] = 1.0;
        for (int j = 1; j <= p; ++j) row[j] = window[t - j];
        double y = window[t];
        for (int i = 0; i < k; ++i) {
            xty[i] += row[i] * y;
            for (int j = 0; j < k; ++j) xtx[i * k + j] += row[i] * row[j];
        }
    }
    if (k > 6) throw ComputeError("lag order too large");

    std::vector<double> beta = solve_linear(std::move(xtx), std::move(xty), k);

    double rss = 0;
    for (int t = p_max; t < n; ++t) {
        double pred = beta[0];
        for (int j = 1; j <= p; ++j) pred += beta[j] * window[t - j];
        double u = window[t] - pred;
        rss += u * u;
    }

    ARFit fit;
    fit.lag_order = p;
    fit.intercept = beta[0];
    fit.coefficients.assign(beta.begin() + 1, beta.end());
    fit.residual_variance = rss / n_eff;
    fit.window_length = n;
    fit.aic = fit.residual_variance > 0
                  ? n_eff * std::log(fit.residual_variance) + 2.0 * (p + 1)
                  : -std::numeric_limits<double>::infinity();
    return fit;
}

ARFit select_lag_aic(std::span<const double> window, int p_max) {
    if (p_max < 1) throw ComputeError("p_max must be >= 1");
    ARFit best;
    bool have = false;
    std::exception_ptr last_error;
    for (int p = 1; p <= p_max; ++p) {
        ARFit fit;
        try {
            fit = fit_ar(window, p, p_max);
        } catch (const ComputeError&) {
            // an exactly-fit lower order makes higher-order designs collinear;
            // such candidates drop out of the enumeration
            last_error = std::current_exception();
            continue;
        }
        if (!have || fit.aic < best.aic) {  // strict < breaks ties toward smaller p
            best = std::move(fit);
            have = true;
        }
    }
    if (!have) std::rethrow_exception(last_error);
    return best;
}

std::vector<double> ARFit::iterate_forecasts(std::span<const double> window, int steps) const {
    const int p = lag_order;
    if (static_cast<int>(window.size()) < p)
        throw ComputeError("window shorter than lag order");
    // state holds the p most recent values, newest last
    std::vector<double> state(window.end() - p, window.end());
    std::vector<double> out;
    out.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        double next = intercept;
        for (int j = 0; j < p; ++j) next += coefficients[j] * state[state.size() - 1 - j];
        out.push_back(next);
        state.erase(state.begin());
        state.push_back(next);
    }
    return out;
}

ForecastPanel random_walk_panel(const RealizationSeries& real,
                                std::span<const QuarterlyPeriod> origins,
                                std::span<const int> horizons, int availability_lag,
                                std::string source) {
    ForecastPanel panel(std::move(source));
    for (QuarterlyPeriod origin : origins) {
        auto avail = real.values_through(origin.plus(-availability_lag));
        if (avail.empty()) continue;
        double latest = avail.back();
        for (int h : horizons) panel.insert(origin, h, latest);
    }
    return panel;
}

ForecastPanel ar_panel(const RealizationSeries& real, std::span<const QuarterlyPeriod> origins,
                       std::span<const int> horizons, int window_length, int p_max,
                       int availability_lag, std::string source,
                       std::vector<std::string>* warnings) {
    ForecastPanel panel(std::move(source));
    int max_h = 0;
    for (int h : horizons) max_h = std::max(max_h, h);
    for (QuarterlyPeriod origin : origins) {
        auto avail = real.values_through(origin.plus(-availability_lag));
        if (static_cast<int>(avail.size()) < window_length) {
            if (warnings)
                warnings->push_back("insufficient history at origin " + origin.str() +
                                    ": have " + std::to_string(avail.size()) + ", need " +
                                    std::to_string(window_length));
            continue;
        }
        std::span<const double> window(avail.data() + avail.size() - window_length,
                                       static_cast<std::size_t>(window_length));
        ARFit fit = select_lag_aic(window, p_max);
        // step s ahead of the last available obs lands on origin + (s - lag)
        auto path = fit.iterate_forecasts(window, max_h + availability_lag);
        for (int h : horizons) panel.insert(origin, h, path[h + availability_lag - 1]);
    }
    return panel;
}

}  // namespace fcast

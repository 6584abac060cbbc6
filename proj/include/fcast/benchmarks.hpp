#ifndef FCAST_BENCHMARKS_HPP
#define FCAST_BENCHMARKS_HPP

#include <span>
#include <string>
#include <vector>

#include "fcast/series.hpp"

namespace fcast {

/// One rolling-window autoregression, fit by least squares with an intercept.
struct ARFit {
    int lag_order = 0;
    double intercept = 0;
    std::vector<double> coefficients;  // lag 1 first
    double residual_variance = 0;      // RSS / n_eff
    int window_length = 0;
    double aic = 0;  // n_eff * ln(residual_variance) + 2*(p+1)

    /// Iterates the fitted recursion forward from the window tail,
    /// substituting previous iterates for unobserved values.
    /// Returns forecasts for steps 1..steps ahead of the last observation.
    std::vector<double> iterate_forecasts(std::span<const double> window, int steps) const;
};

/// Least-squares AR(p) on a window. Candidates are made comparable by
/// conditioning on the first p_max observations, so the effective sample is
/// n - p_max for every p <= p_max. p_max = 0 means condition on p itself.
ARFit fit_ar(std::span<const double> window, int p, int p_max = 0);

/// Minimum-AIC fit over p = 1..p_max on the common effective sample.
/// Ties break toward the smaller order.
ARFit select_lag_aic(std::span<const double> window, int p_max);

/// Random-walk benchmark: forecast(origin, h) = latest realization available
/// at the origin, identical across horizons. availability_lag shifts what
/// counts as available (default: the origin quarter itself is not yet known).
ForecastPanel random_walk_panel(const RealizationSeries& real,
                                std::span<const QuarterlyPeriod> origins,
                                std::span<const int> horizons, int availability_lag = 1,
                                std::string source = "RW");

/// Rolling AR benchmark: per origin, select_lag_aic on the most recent
/// window_length available observations, then iterated multi-step forecasts.
/// Origins with insufficient history are skipped; a note per skip is appended
/// to *warnings when given.
ForecastPanel ar_panel(const RealizationSeries& real, std::span<const QuarterlyPeriod> origins,
                       std::span<const int> horizons, int window_length = 60, int p_max = 4,
                       int availability_lag = 1, std::string source = "AR",
                       std::vector<std::string>* warnings = nullptr);

}  // namespace fcast

#endif

#ifndef FCAST_INFERENCE_HPP
#define FCAST_INFERENCE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fcast/loss.hpp"
#include "fcast/series.hpp"

namespace fcast {

enum class CvSource { fixed_b, standard_normal };

/// Diebold-Mariano test outcome. A negative statistic means the first-named
/// forecast had the lower loss.
struct DMOutcome {
    double statistic = 0;
    int n = 0;
    int bandwidth = 0;
    double b_ratio = 0;  // bandwidth / n
    double mean_differential = 0;
    double lrv = 0;
    double cv10 = 0, cv05 = 0;  // two-sided critical values
    bool reject10 = false, reject05 = false;
    CvSource cv_source = CvSource::fixed_b;
};

struct MZOutcome {
    double intercept = 0;
    double slope = 0;
    double joint_wald = 0;  // H0: (intercept, slope) = (0, 1)
    double se_intercept = 0, se_slope = 0;
    int n = 0;
    int bandwidth = 0;
};

/// floor(sqrt(n)); the paper's bandwidth choice (6 at n=40, 4 at n=20).
int bandwidth_rule(int n);

/// Bartlett-kernel long-run variance of a demeaned series:
/// gamma_0 + 2 * sum_{j=1}^{M-1} (1 - j/M) gamma_j with biased
/// autocovariances. Nonnegative for every input.
double bartlett_lrv(std::span<const double> d, int bandwidth);

/// Two-sided fixed-b critical value for the Bartlett kernel at level 0.10 or
/// 0.05, as a cubic in b = M/T. Recovers the standard normal quantile at
/// b -> 0 and the 2.09 / 2.57 pair at b = 0.2.
double fixed_b_cv(double b, double level);

/// DM test of equal predictive accuracy on paired loss series.
/// Throws ComputeError on degenerate (zero-LRV) differentials.
DMOutcome test_dm(std::span<const double> loss_a, std::span<const double> loss_b,
                  CvSource cv_source = CvSource::fixed_b);

/// Applies a loss to paired errors on the intersection of target periods at
/// one horizon, optionally restricted to a target-period window, then test_dm.
DMOutcome compare_forecasts(
    const ErrorPanel& err_a, const ErrorPanel& err_b, const LossSpec& spec, int horizon,
    CvSource cv_source = CvSource::fixed_b,
    std::optional<std::pair<QuarterlyPeriod, QuarterlyPeriod>> window = std::nullopt);

/// Mincer-Zarnowitz regression realization = a + b * forecast + u with
/// Bartlett HAC standard errors and joint Wald for (a, b) = (0, 1).
MZOutcome mz_regression(std::span<const double> forecasts, std::span<const double> realizations,
                        int bandwidth);

struct FluctuationPoint {
    QuarterlyPeriod window_end;
    std::optional<DMOutcome> outcome;  // empty when the window is degenerate
    std::string note;                  // reason code for degenerate windows
};

/// test_dm over rolling windows of consecutive common target periods;
/// degenerate windows are reported, not fatal.
std::vector<FluctuationPoint> fluctuation_dm(const ErrorPanel& err_a, const ErrorPanel& err_b,
                                             const LossSpec& spec, int horizon, int window_length,
                                             CvSource cv_source = CvSource::fixed_b);

}  // namespace fcast

#endif

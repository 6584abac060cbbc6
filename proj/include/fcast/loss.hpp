#ifndef FCAST_LOSS_HPP
#define FCAST_LOSS_HPP

#include <span>
#include <string>
#include <vector>

#include "fcast/error.hpp"

namespace fcast {

enum class LossKind { quadratic, absolute, linex };

struct LossSpec {
    LossKind kind = LossKind::quadratic;
    double alpha = 0.0;  // linex only, nonzero

    static LossSpec quadratic() { return {LossKind::quadratic, 0.0}; }
    static LossSpec absolute() { return {LossKind::absolute, 0.0}; }
    static LossSpec linex(double alpha) {
        if (alpha == 0.0) throw ConfigError("linex alpha must be nonzero");
        return {LossKind::linex, alpha};
    }

    /// "quadratic", "absolute", "linex(0.5)" -- used in report keys.
    std::string name() const;

    /// Inverse of name(); also accepts "linex:0.5".
    static LossSpec parse(const std::string& token);
};

/// Loss of a single forecast error. Nonnegative, zero iff e == 0.
/// linex: exp(alpha*e) - alpha*e - 1. Throws ComputeError when |alpha*e| > 700.
double loss(const LossSpec& spec, double e);

std::vector<double> losses(const LossSpec& spec, std::span<const double> errors);

/// The forecast-error summary battery: one row of the descriptive table.
struct SummaryStats {
    int n = 0;
    double mean = 0, median = 0, mae = 0, mdae = 0, std = 0;
    double max = 0, min = 0, skew = 0, ac1 = 0, ac4 = 0;
};

/// Requires n >= 5 (for the lag-4 autocorrelation) and nonzero variance.
/// std uses denominator n-1; skew is the unadjusted moment ratio; ac_k uses
/// the full-sample-variance denominator, so it lies in [-1, 1].
SummaryStats summarize(std::span<const double> errors);

}  // namespace fcast

#endif

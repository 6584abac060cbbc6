#include "fcast/loss.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fcast {

std::string LossSpec::name() const {
    switch (kind) {
        case LossKind::quadratic: return "quadratic";
        case LossKind::absolute: return "absolute";
        case LossKind::linex: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "linex(%g)", alpha);
            return buf;
        }
    }
    return "?";
}

LossSpec LossSpec::parse(const std::string& token) {
    if (token == "quadratic" || token == "squared") return quadratic();
    if (token == "absolute") return absolute();
    std::string inner;
    if (token.rfind("linex(", 0) == 0 && token.back() == ')')
        inner = token.substr(6, token.size() - 7);
    else if (token.rfind("linex:", 0) == 0)
        inner = token.substr(6);
    else
        throw ConfigError("unknown loss spec: " + token);
    std::size_t used = 0;
    double alpha = std::stod(inner, &used);
    if (used != inner.size()) throw ConfigError("bad linex alpha: " + inner);
    return linex(alpha);
}

double loss(const LossSpec& spec, double e) {
    if (!std::isfinite(e)) throw ComputeError("non-finite forecast error");
    switch (spec.kind) {
        case LossKind::quadratic: return e * e;
        case LossKind::absolute: return std::abs(e);
        case LossKind::linex: {
            double x = spec.alpha * e;
            if (std::abs(x) > 700.0) throw ComputeError("loss overflow: |alpha*e| > 700");
            // expm1 keeps precision near zero, where exp(x)-x-1 cancels
            return std::expm1(x) - x;
        }
    }
    throw ComputeError("unknown loss kind");
}

std::vector<double> losses(const LossSpec& spec, std::span<const double> errors) {
    std::vector<double> out;
    out.reserve(errors.size());
    for (double e : errors) out.push_back(loss(spec, e));
    return out;
}

namespace {

double median_of_sorted(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double autocorr(std::span<const double> x, double mean, double ss, int lag) {
    double num = 0;
    for (std::size_t t = static_cast<std::size_t>(lag); t < x.size(); ++t)
        num += (x[t] - mean) * (x[t - lag] - mean);
    return num / ss;
}

}  // namespace

SummaryStats summarize(std::span<const double> errors) {
    const int n = static_cast<int>(errors.size());
    if (n < 5) throw ComputeError("insufficient observations: need n >= 5, got " +
                                  std::to_string(n));

    SummaryStats s;
    s.n = n;
    double sum = 0;
    for (double e : errors) sum += e;
    s.mean = sum / n;

    double m2 = 0, m3 = 0;
    for (double e : errors) {
        double d = e - s.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    double ss = m2;  // sum of squared deviations
    if (ss == 0.0) throw ComputeError("degenerate sample: zero variance");
    m2 /= n;
    m3 /= n;

    s.std = std::sqrt(ss / (n - 1));
    s.skew = m3 / std::pow(m2, 1.5);
    s.max = *std::max_element(errors.begin(), errors.end());
    s.min = *std::min_element(errors.begin(), errors.end());

    std::vector<double> v(errors.begin(), errors.end());
    s.median = median_of_sorted(v);
    double mae = 0;
    for (double& x : v) {
        x = std::abs(x);
        mae += x;
    }
    s.mae = mae / n;
    s.mdae = median_of_sorted(v);

    s.ac1 = autocorr(errors, s.mean, ss, 1);
    s.ac4 = autocorr(errors, s.mean, ss, 4);
    return s;
}

}  // namespace fcast

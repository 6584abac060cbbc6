#include "fcast/series.hpp"

#include <algorithm>

namespace fcast {

std::vector<double> RealizationSeries::values_through(QuarterlyPeriod cutoff) const {
    int off = cutoff.index() - start_.index();
    if (off < 0) return {};
    std::size_t count = std::min(values_.size(), static_cast<std::size_t>(off) + 1);
    return std::vector<double>(values_.begin(), values_.begin() + count);
}

std::vector<std::pair<QuarterlyPeriod, double>> ErrorPanel::at_horizon(int horizon) const {
    std::vector<std::pair<QuarterlyPeriod, double>> out;
    for (const auto& [key, e] : entries_)
        if (key.horizon == horizon) out.emplace_back(key.target, e);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ErrorPanel::horizons() const {
    std::vector<int> hs;
    for (const auto& [key, e] : entries_)
        if (std::find(hs.begin(), hs.end(), key.horizon) == hs.end()) hs.push_back(key.horizon);
    std::sort(hs.begin(), hs.end());
    return hs;
}

ErrorPanel build_error_panel(const ForecastPanel& panel, const RealizationSeries& real) {
    ErrorPanel errors(panel.source());
    for (const auto& [key, forecast] : panel.entries()) {
        QuarterlyPeriod target = key.origin.plus(key.horizon);
        if (auto realized = real.get(target))
            errors.insert(target, key.horizon, *realized - forecast);
    }
    return errors;
}

std::pair<ErrorPanel, ErrorPanel> split_subsamples(const ErrorPanel& panel, QuarterlyPeriod cut) {
    ErrorPanel first(panel.source());
    ErrorPanel second(panel.source());
    for (const auto& [key, e] : panel.entries()) {
        if (key.target <= cut)
            first.insert(key.target, key.horizon, e);
        else
            second.insert(key.target, key.horizon, e);
    }
    if (first.size() == 0 || second.size() == 0)
        throw DataError("empty sub-sample: cut " + cut.str() + " outside the panel span");
    return {std::move(first), std::move(second)};
}

}  // namespace fcast

#ifndef FCAST_SERIES_HPP
#define FCAST_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcast/period.hpp"

namespace fcast {

/// Contiguous quarterly series of realized values. Value k belongs to
/// start + k quarters; missingness is expressed by ending the series,
/// never by sentinels.
class RealizationSeries {
public:
    RealizationSeries(QuarterlyPeriod start, std::vector<double> values)
        : start_(start), values_(std::move(values)) {
        if (values_.empty()) throw DataError("realization series must be nonempty");
    }

    QuarterlyPeriod start() const { return start_; }
    QuarterlyPeriod last_period() const { return start_.plus(static_cast<int>(values_.size()) - 1); }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    bool contains(QuarterlyPeriod p) const {
        int off = p.index() - start_.index();
        return off >= 0 && off < static_cast<int>(values_.size());
    }

    double at(QuarterlyPeriod p) const {
        if (!contains(p)) throw DataError("period outside series span: " + p.str());
        return values_[static_cast<std::size_t>(p.index() - start_.index())];
    }

    std::optional<double> get(QuarterlyPeriod p) const {
        if (!contains(p)) return std::nullopt;
        return values_[static_cast<std::size_t>(p.index() - start_.index())];
    }

    /// Values at periods <= cutoff, oldest first. Empty if cutoff precedes the start.
    std::vector<double> values_through(QuarterlyPeriod cutoff) const;

private:
    QuarterlyPeriod start_;
    std::vector<double> values_;
};

/// Forecasts keyed by (origin period, horizon in quarters). h = 0 is the nowcast.
class ForecastPanel {
public:
    struct Key {
        QuarterlyPeriod origin;
        int horizon = 0;
        auto operator<=>(const Key&) const = default;
    };

    explicit ForecastPanel(std::string source) : source_(std::move(source)) {}

    const std::string& source() const { return source_; }
    const std::map<Key, double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    void insert(QuarterlyPeriod origin, int horizon, double value) {
        if (horizon < 0) throw DataError("negative horizon");
        auto [it, ok] = entries_.emplace(Key{origin, horizon}, value);
        if (!ok)
            throw DataError("duplicate forecast entry at " + origin.str() + " h=" +
                            std::to_string(horizon));
    }

    std::optional<double> get(QuarterlyPeriod origin, int horizon) const {
        auto it = entries_.find(Key{origin, horizon});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::string source_;
    std::map<Key, double> entries_;
};

/// Forecast errors e = realization - forecast, keyed by (target period, horizon)
/// so that loss differentials at a horizon pair forecasts of the same realization.
class ErrorPanel {
public:
    struct Key {
        QuarterlyPeriod target;
        int horizon = 0;
        auto operator<=>(const Key&) const = default;
    };

    explicit ErrorPanel(std::string source) : source_(std::move(source)) {}

    const std::string& source() const { return source_; }
    const std::map<Key, double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    void insert(QuarterlyPeriod target, int horizon, double error) {
        if (horizon < 0) throw DataError("negative horizon");
        auto [it, ok] = entries_.emplace(Key{target, horizon}, error);
        if (!ok)
            throw DataError("duplicate error entry at " + target.str() + " h=" +
                            std::to_string(horizon));
    }

    /// Errors at one horizon ordered by target period.
    std::vector<std::pair<QuarterlyPeriod, double>> at_horizon(int horizon) const;

    std::vector<int> horizons() const;

private:
    std::string source_;
    std::map<Key, double> entries_;
};

/// Pairs every forecast with its realization at origin + h; entries without a
/// realization are dropped, so the result may be empty.
ErrorPanel build_error_panel(const ForecastPanel& panel, const RealizationSeries& real);

/// Splits by target period: first part <= cut, second part > cut.
/// Throws DataError("empty sub-sample") when either side would be empty.
std::pair<ErrorPanel, ErrorPanel> split_subsamples(const ErrorPanel& panel, QuarterlyPeriod cut);

}  // namespace fcast

#endif

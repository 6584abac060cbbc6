#ifndef FCAST_PERIOD_HPP
#define FCAST_PERIOD_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "fcast/error.hpp"

namespace fcast {

/// Calendar quarter, e.g. 2014Q1. Totally ordered by (year, quarter).
struct QuarterlyPeriod {
    int year = 0;
    int quarter = 1;  // 1..4

    QuarterlyPeriod() = default;
    QuarterlyPeriod(int y, int q) : year(y), quarter(q) {
        if (q < 1 || q > 4)
            throw DataError("quarter out of range 1..4: " + std::to_string(q));
    }

    // Quarters since year 0; the group action for period arithmetic.
    int index() const { return year * 4 + (quarter - 1); }

    static QuarterlyPeriod from_index(int idx) {
        int y = idx >= 0 ? idx / 4 : -((-idx + 3) / 4);
        int q = idx - y * 4;
        return QuarterlyPeriod(y, q + 1);
    }

    QuarterlyPeriod plus(int quarters) const { return from_index(index() + quarters); }

    auto operator<=>(const QuarterlyPeriod&) const = default;

    std::string str() const { return std::to_string(year) + "Q" + std::to_string(quarter); }

    /// Parses "YYYYQn" (also accepts lowercase q). Empty optional on failure.
    static std::optional<QuarterlyPeriod> parse(std::string_view s);
};

/// Calendar month; used only for fixed-event survey publication dates.
struct MonthlyPeriod {
    int year = 0;
    int month = 1;  // 1..12

    MonthlyPeriod() = default;
    MonthlyPeriod(int y, int m) : year(y), month(m) {
        if (m < 1 || m > 12)
            throw DataError("month out of range 1..12: " + std::to_string(m));
    }

    auto operator<=>(const MonthlyPeriod&) const = default;
};

}  // namespace fcast

#endif

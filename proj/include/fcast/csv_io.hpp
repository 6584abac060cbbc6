#ifndef FCAST_CSV_IO_HPP
#define FCAST_CSV_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fcast/series.hpp"

namespace fcast {

/// One fixed-event survey forecast: Q4-on-Q4 annual inflation for target_year,
/// published in a given month.
struct SurveyRecord {
    MonthlyPeriod publication;
    int target_year = 0;
    double value = 0;
};

// CSV schemas (UTF-8, comma-separated, one header row, LF or CRLF):
//   realizations: period,value         period token YYYYQn
//   forecasts:    origin,horizon,value
//   survey:       pub_year,pub_month,target_year,value

/// Rows must be sorted by period with no gaps or duplicates.
RealizationSeries read_realizations(const std::filesystem::path& path);

ForecastPanel read_forecast_panel(const std::filesystem::path& path,
                                  const std::string& source_label);

std::vector<SurveyRecord> read_survey(const std::filesystem::path& path);

/// Fixed-event -> fixed-horizon alignment of Q4 survey forecasts:
///   August of Y, target Y   -> origin Y.Q3, h=1
///   May of Y, target Y      -> origin Y.Q2, h=2
///   November of Y, target Y+1 -> origin Y.Q4, h=4
/// Records from other months are ignored; *ignored counts them when given.
/// Two records mapping to one (origin, horizon) is an error.
ForecastPanel align_survey(const std::vector<SurveyRecord>& records,
                           const std::string& source_label = "survey", int* ignored = nullptr);

/// Canonical writers; values use shortest round-trip decimal form, so
/// read -> write -> read is the identity.
void write_realizations(const RealizationSeries& real, const std::filesystem::path& path);
void write_forecast_panel(const ForecastPanel& panel, const std::filesystem::path& path);

/// Shortest decimal representation that parses back to exactly x.
std::string format_double(double x);

}  // namespace fcast

#endif

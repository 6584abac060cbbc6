#include "fcast/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fcast {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_value(const std::string& token, int line) {
    std::string t = trim(token);
    const char* begin = t.data();
    const char* end = begin + t.size();
    double v = 0;
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end)
        throw ParseError("format error: bad numeric value '" + t + "'", line);
    return v;
}

long parse_int(const std::string& token, int line) {
    std::string t = trim(token);
    long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ParseError("format error: bad integer '" + t + "'", line);
    return v;
}

QuarterlyPeriod parse_period(const std::string& token, int line) {
    auto p = QuarterlyPeriod::parse(trim(token));
    if (!p) throw ParseError("format error: bad period '" + trim(token) + "'", line);
    return *p;
}

// Reads all data lines (header consumed and checked), skipping blank lines.
std::vector<std::pair<int, std::vector<std::string>>> read_rows(
    const std::filesystem::path& path, const std::string& expected_header, std::size_t fields) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty file: " + path.string(), 1);
    ++lineno;
    if (trim(line) != expected_header)
        throw ParseError("format error: expected header '" + expected_header + "'", lineno);
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto f = split_fields(line);
        if (f.size() != fields)
            throw ParseError("format error: expected " + std::to_string(fields) + " fields, got " +
                                 std::to_string(f.size()),
                             lineno);
        rows.emplace_back(lineno, std::move(f));
    }
    return rows;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

RealizationSeries read_realizations(const std::filesystem::path& path) {
    auto rows = read_rows(path, "period,value", 2);
    if (rows.empty()) throw DataError("no data rows in " + path.string());

    std::vector<double> values;
    QuarterlyPeriod start;
    int prev_index = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& [lineno, f] = rows[i];
        QuarterlyPeriod p = parse_period(f[0], lineno);
        double v = parse_value(f[1], lineno);
        if (i == 0) {
            start = p;
        } else if (p.index() == prev_index) {
            throw ParseError("duplicate row for period " + p.str(), lineno);
        } else if (p.index() != prev_index + 1) {
            throw ParseError("non-contiguous series: gap before " + p.str(), lineno);
        }
        prev_index = p.index();
        values.push_back(v);
    }
    return RealizationSeries(start, std::move(values));
}

ForecastPanel read_forecast_panel(const std::filesystem::path& path,
                                  const std::string& source_label) {
    auto rows = read_rows(path, "origin,horizon,value", 3);
    ForecastPanel panel(source_label);
    for (const auto& [lineno, f] : rows) {
        QuarterlyPeriod origin = parse_period(f[0], lineno);
        long h = parse_int(f[1], lineno);
        if (h < 0) throw ParseError("negative horizon", lineno);
        double v = parse_value(f[2], lineno);
        try {
            panel.insert(origin, static_cast<int>(h), v);
        } catch (const DataError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return panel;
}

std::vector<SurveyRecord> read_survey(const std::filesystem::path& path) {
    auto rows = read_rows(path, "pub_year,pub_month,target_year,value", 4);
    std::vector<SurveyRecord> records;
    for (const auto& [lineno, f] : rows) {
        SurveyRecord r;
        long py = parse_int(f[0], lineno);
        long pm = parse_int(f[1], lineno);
        if (pm < 1 || pm > 12) throw ParseError("month out of range 1..12", lineno);
        r.publication = MonthlyPeriod(static_cast<int>(py), static_cast<int>(pm));
        r.target_year = static_cast<int>(parse_int(f[2], lineno));
        if (r.target_year != r.publication.year && r.target_year != r.publication.year + 1)
            throw ParseError("target_year must be the publication year or the next", lineno);
        r.value = parse_value(f[3], lineno);
        records.push_back(r);
    }
    return records;
}

ForecastPanel align_survey(const std::vector<SurveyRecord>& records,
                           const std::string& source_label, int* ignored) {
    ForecastPanel panel(source_label);
    int skipped = 0;
    for (const auto& r : records) {
        int y = r.publication.year;
        QuarterlyPeriod origin;
        int horizon = 0;
        if (r.publication.month == 8 && r.target_year == y) {
            origin = QuarterlyPeriod(y, 3);
            horizon = 1;
        } else if (r.publication.month == 5 && r.target_year == y) {
            origin = QuarterlyPeriod(y, 2);
            horizon = 2;
        } else if (r.publication.month == 11 && r.target_year == y + 1) {
            origin = QuarterlyPeriod(y, 4);
            horizon = 4;
        } else {
            ++skipped;
            continue;
        }
        try {
            panel.insert(origin, horizon, r.value);
        } catch (const DataError&) {
            throw DataError("ambiguous survey record: two records map to origin " +
                            origin.str() + " h=" + std::to_string(horizon));
        }
    }
    if (ignored) *ignored = skipped;
    return panel;
}

void write_realizations(const RealizationSeries& real, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << "period,value\n";
    for (std::size_t k = 0; k < real.size(); ++k)
        out << real.start().plus(static_cast<int>(k)).str() << ","
            << format_double(real.values()[k]) << "\n";
}

void write_forecast_panel(const ForecastPanel& panel, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << "origin,horizon,value\n";
    for (const auto& [key, v] : panel.entries())
        out << key.origin.str() << "," << key.horizon << "," << format_double(v) << "\n";
}

}  // namespace fcast

#include "fcast/period.hpp"

#include <cctype>
#include <charconv>

namespace fcast {

std::optional<QuarterlyPeriod> QuarterlyPeriod::parse(std::string_view s) {
    // YYYYQn, year may have any number of digits, optional leading minus
    std::size_t qpos = s.find_first_of("Qq");
    if (qpos == std::string_view::npos || qpos == 0 || qpos + 1 != s.size() - 1)
        return std::nullopt;
    int year = 0, quarter = 0;
    auto [yp, yec] = std::from_chars(s.data(), s.data() + qpos, year);
    if (yec != std::errc() || yp != s.data() + qpos) return std::nullopt;
    auto [qp, qec] = std::from_chars(s.data() + qpos + 1, s.data() + s.size(), quarter);
    if (qec != std::errc() || qp != s.data() + s.size()) return std::nullopt;
    if (quarter < 1 || quarter > 4) return std::nullopt;
    return QuarterlyPeriod(year, quarter);
}

}  // namespace fcast

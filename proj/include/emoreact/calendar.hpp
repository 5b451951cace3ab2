#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace emoreact {

using Date = std::chrono::sys_days;

// "YYYY-MM-DD" -> Date. Throws DataError on malformed or impossible dates.
Date parse_date(std::string_view text);
std::string format_date(Date date);

// ISO-8601 timestamp -> seconds since the Unix epoch. Accepts a bare date,
// "YYYY-MM-DDTHH:MM[:SS[.fff]]" with either 'T' or ' ' as separator, and an
// optional "Z" or "+HH:MM"/"-HH:MM"/"+HHMM" offset. No offset means UTC.
std::optional<std::int64_t> parse_iso8601(std::string_view text);

// Calendar-day assignment for epoch timestamps. "UTC", fixed offsets such as
// "+05:30", and IANA zone names (resolved through ICU) are accepted.
class TimeZone {
public:
    TimeZone();  // UTC
    static TimeZone from_name(const std::string& name);

    const std::string& name() const { return name_; }
    std::int64_t offset_seconds(std::int64_t epoch_seconds) const;
    Date local_date(std::int64_t epoch_seconds) const;
    // Epoch second of local midnight starting `date`.
    std::int64_t local_midnight(Date date) const;

private:
    std::string name_;
    std::int32_t fixed_offset_ = 0;
    struct Zone;
    std::shared_ptr<const Zone> zone_;
};

// Inclusive calendar range plus the zone used to bucket timestamps into days.
struct StudyWindow {
    Date first_day;
    Date last_day;
    TimeZone zone;

    std::size_t length() const;
    std::optional<std::size_t> day_index(std::int64_t epoch_seconds) const;
    Date date_at(std::size_t day) const { return first_day + std::chrono::days(day); }
};

} // namespace emoreact

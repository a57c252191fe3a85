#pragma once

#include <cstdint>
#include <string>

namespace notikit {

// UTC instant plus the fixed zone offset the device reported. All
// time-of-day logic (buckets, weekdays) runs on the local wall clock.
struct Timestamp {
    std::int64_t utc_millis = 0;
    std::int32_t tz_offset_minutes = 0;

    std::int64_t local_millis() const {
        return utc_millis + static_cast<std::int64_t>(tz_offset_minutes) * 60'000;
    }
    bool operator==(const Timestamp&) const = default;
};

// Validates invariants (utc_millis >= 0, offset within +/-14 h).
Timestamp make_timestamp(std::int64_t utc_millis, std::int32_t tz_offset_minutes);

enum class Weekday { Monday = 0, Tuesday, Wednesday, Thursday, Friday, Saturday, Sunday };

enum class DayBucket { Midnight = 0, Morning, Afternoon, Evening };

Weekday weekday_local(const Timestamp& ts);
// Bucket bounds: midnight [00,06), morning [06,12), afternoon [12,18),
// evening [18,24); left-closed.
DayBucket day_bucket_local(const Timestamp& ts);
bool is_weekend_local(const Timestamp& ts);
int hour_local(const Timestamp& ts);
std::int64_t millis_of_local_day(const Timestamp& ts);

const char* weekday_name(Weekday d);
const char* day_bucket_name(DayBucket b);

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

}  // namespace notikit

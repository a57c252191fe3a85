#include "notikit/time.hpp"

#include "notikit/common.hpp"

namespace notikit {

namespace {
constexpr std::int64_t kDayMs = 86'400'000;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}
}  // namespace

Timestamp make_timestamp(std::int64_t utc_millis, std::int32_t tz_offset_minutes) {
    if (utc_millis < 0)
        fail(ErrorCode::SchemaError, "negative utc_millis " + std::to_string(utc_millis));
    if (tz_offset_minutes < -840 || tz_offset_minutes > 840)
        fail(ErrorCode::SchemaError, "tz offset out of range: " + std::to_string(tz_offset_minutes));
    return Timestamp{utc_millis, tz_offset_minutes};
}

std::int64_t millis_of_local_day(const Timestamp& ts) {
    std::int64_t local = ts.local_millis();
    return local - floor_div(local, kDayMs) * kDayMs;
}

Weekday weekday_local(const Timestamp& ts) {
    std::int64_t days = floor_div(ts.local_millis(), kDayMs);
    // 1970-01-01 was a Thursday
    std::int64_t idx = (days + 3) % 7;
    if (idx < 0) idx += 7;
    return static_cast<Weekday>(idx);
}

DayBucket day_bucket_local(const Timestamp& ts) {
    int h = hour_local(ts);
    if (h < 6) return DayBucket::Midnight;
    if (h < 12) return DayBucket::Morning;
    if (h < 18) return DayBucket::Afternoon;
    return DayBucket::Evening;
}

bool is_weekend_local(const Timestamp& ts) {
    Weekday d = weekday_local(ts);
    return d == Weekday::Saturday || d == Weekday::Sunday;
}

int hour_local(const Timestamp& ts) {
    return static_cast<int>(millis_of_local_day(ts) / 3'600'000);
}

const char* weekday_name(Weekday d) {
    static const char* names[] = {"Monday", "Tuesday", "Wednesday", "Thursday",
                                  "Friday", "Saturday", "Sunday"};
    return names[static_cast<int>(d)];
}

const char* day_bucket_name(DayBucket b) {
    static const char* names[] = {"midnight", "morning", "afternoon", "evening"};
    return names[static_cast<int>(b)];
}

std::int64_t days_from_civil(int year, unsigned month, unsigned day) {
    // Howard Hinnant's algorithm
    year -= month <= 2;
    const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(year - era * 400);
    const unsigned doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

}  // namespace notikit

#include "notikit/events.hpp"

#include <algorithm>
#include <cmath>

#include "notikit/common.hpp"

namespace notikit {

const char* activity_name(ActivityKind a) {
    static const char* names[] = {"still", "walking", "running", "cycling",
                                  "in_vehicle", "on_foot", "tilting", "unknown"};
    return names[static_cast<int>(a)];
}

std::optional<ActivityKind> activity_from_name(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(ActivityKind::Unknown); ++i)
        if (s == activity_name(static_cast<ActivityKind>(i)))
            return static_cast<ActivityKind>(i);
    return std::nullopt;
}

namespace {
constexpr std::string_view kPlusAlphabet = "23456789CFGHJMPQRVWX";

bool in_plus_alphabet(char c) { return kPlusAlphabet.find(c) != std::string_view::npos; }
}  // namespace

bool is_valid_plus_code_10(std::string_view code) {
    // ten code digits: 8, then '+', then 2
    if (code.size() != 11) return false;
    if (code[8] != '+') return false;
    for (std::size_t i = 0; i < 8; ++i)
        if (!in_plus_alphabet(code[i])) return false;
    for (std::size_t i = 9; i < 11; ++i)
        if (!in_plus_alphabet(code[i])) return false;
    return true;
}

std::string plus_code_8_prefix(std::string_view code10) {
    if (!is_valid_plus_code_10(code10))
        fail(ErrorCode::SchemaError, "invalid plus code: " + std::string(code10));
    return std::string(code10.substr(0, 8));
}

const char* social_role_name(SocialRole r) {
    static const char* names[] = {"work", "private", "both"};
    return names[static_cast<int>(r)];
}

const char* interruptibility_name(Interruptibility i) {
    static const char* names[] = {"work", "private", "both", "none"};
    return names[static_cast<int>(i)];
}

std::optional<SocialRole> social_role_from_name(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(SocialRole::Both); ++i)
        if (s == social_role_name(static_cast<SocialRole>(i)))
            return static_cast<SocialRole>(i);
    return std::nullopt;
}

std::optional<Interruptibility> interruptibility_from_name(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(Interruptibility::None); ++i)
        if (s == interruptibility_name(static_cast<Interruptibility>(i)))
            return static_cast<Interruptibility>(i);
    return std::nullopt;
}

const char* relation_name(Relation r) {
    static const char* names[] = {"family", "friend", "work", "none"};
    return names[static_cast<int>(r)];
}

std::optional<Relation> relation_from_name(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(Relation::None); ++i)
        if (s == relation_name(static_cast<Relation>(i)))
            return static_cast<Relation>(i);
    return std::nullopt;
}

const char* channel_name(ChannelKind k) {
    static const char* names[] = {"EDA", "BVP", "HR", "ST", "ACC_X", "ACC_Y", "ACC_Z"};
    return names[static_cast<int>(k)];
}

const ContactRelation* EventLog::relation_for(std::string_view contact_hash) const {
    for (const auto& r : contact_relations)
        if (r.contact_hash == contact_hash) return &r;
    return nullptr;
}

namespace {
template <typename T, typename GetMs>
std::span<const T> slice_events(std::span<const T> v, const Timestamp& end,
                                double duration_s, GetMs get_ms) {
    if (duration_s <= 0.0) fail(ErrorCode::InvalidConfig, "window duration must be > 0");
    std::int64_t dur_ms = static_cast<std::int64_t>(std::llround(duration_s * 1000.0));
    return slice_window_ms(v, end.utc_millis, dur_ms, get_ms);
}
}  // namespace

std::span<const NotificationEvent> slice_window(std::span<const NotificationEvent> v,
                                                const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const NotificationEvent& e) { return e.arrival.utc_millis; });
}

std::span<const AppForegroundEvent> slice_window(std::span<const AppForegroundEvent> v,
                                                 const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const AppForegroundEvent& e) { return e.at.utc_millis; });
}

std::span<const ScreenEvent> slice_window(std::span<const ScreenEvent> v,
                                          const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const ScreenEvent& e) { return e.at.utc_millis; });
}

std::span<const ActivityEvent> slice_window(std::span<const ActivityEvent> v,
                                            const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const ActivityEvent& e) { return e.at.utc_millis; });
}

std::span<const LocationEvent> slice_window(std::span<const LocationEvent> v,
                                            const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const LocationEvent& e) { return e.at.utc_millis; });
}

std::span<const EsmResponse> slice_window(std::span<const EsmResponse> v,
                                          const Timestamp& end, double duration_s) {
    return slice_events(v, end, duration_s,
                        [](const EsmResponse& e) { return e.at.utc_millis; });
}

std::span<const double> slice_window(const PhysioChannel& ch, const Timestamp& end,
                                     double duration_s) {
    if (duration_s <= 0.0) fail(ErrorCode::InvalidConfig, "window duration must be > 0");
    if (ch.rate_hz <= 0.0) fail(ErrorCode::ZeroRate, "channel has no rate");
    double end_s = static_cast<double>(end.utc_millis) / 1000.0;
    double start_s = static_cast<double>(ch.start.utc_millis) / 1000.0;
    double lo = end_s - duration_s;
    // first index with time >= lo, clamped into range; adjust for fp edges
    auto index_time = [&](std::int64_t i) { return start_s + static_cast<double>(i) / ch.rate_hz; };
    std::int64_t n = static_cast<std::int64_t>(ch.samples.size());
    std::int64_t first = static_cast<std::int64_t>(std::ceil((lo - start_s) * ch.rate_hz));
    while (first < n && first >= 0 && index_time(first) < lo) ++first;
    while (first > 0 && index_time(first - 1) >= lo) --first;
    if (first < 0) first = 0;
    std::int64_t last = static_cast<std::int64_t>(std::ceil((end_s - start_s) * ch.rate_hz));
    while (last > first && index_time(last - 1) >= end_s) --last;
    while (last < n && index_time(last) < end_s) ++last;
    if (last > n) last = n;
    if (first >= last) return {};
    return std::span<const double>(ch.samples).subspan(static_cast<std::size_t>(first),
                                                       static_cast<std::size_t>(last - first));
}

std::span<const IbiEntry> slice_window(const IbiSeries& ibi, const Timestamp& end,
                                       double duration_s) {
    if (duration_s <= 0.0) fail(ErrorCode::InvalidConfig, "window duration must be > 0");
    double start_s = static_cast<double>(ibi.start.utc_millis) / 1000.0;
    double end_s = static_cast<double>(end.utc_millis) / 1000.0;
    double lo = end_s - duration_s;
    std::span<const IbiEntry> all(ibi.entries);
    std::size_t first = 0, last = all.size();
    while (first < last && start_s + all[first].offset_s < lo) ++first;
    std::size_t e = first;
    while (e < last && start_s + all[e].offset_s < end_s) ++e;
    return all.subspan(first, e - first);
}

}  // namespace notikit

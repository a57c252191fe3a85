#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "notikit/time.hpp"

namespace notikit {

struct NotificationEvent {
    std::string id;
    std::string app_package;
    Timestamp arrival;
    std::int64_t content_length = 0;  // characters
    std::optional<std::string> contact_hash;
    std::optional<Timestamp> removed_at;
};

struct AppForegroundEvent {
    std::string app_package;
    std::string app_name;
    Timestamp at;
};

enum class ScreenState { On, Off };

struct ScreenEvent {
    ScreenState state = ScreenState::Off;
    Timestamp at;
};

enum class ActivityKind {
    Still, Walking, Running, Cycling, InVehicle, OnFoot, Tilting, Unknown
};

const char* activity_name(ActivityKind a);
std::optional<ActivityKind> activity_from_name(std::string_view s);

struct ActivityEvent {
    ActivityKind activity = ActivityKind::Unknown;
    int confidence = 0;  // 0..100
    Timestamp at;
};

struct LocationEvent {
    std::string plus_code_10;  // e.g. 8FVC9G8F+6W
    Timestamp at;
};

// Plus-code helpers (syntax only; no geodesy).
bool is_valid_plus_code_10(std::string_view code);
std::string plus_code_8_prefix(std::string_view code10);

enum class SocialRole { Work = 0, Private, Both };
enum class Interruptibility { Work = 0, Private, Both, None };

const char* social_role_name(SocialRole r);
const char* interruptibility_name(Interruptibility i);
std::optional<SocialRole> social_role_from_name(std::string_view s);
std::optional<Interruptibility> interruptibility_from_name(std::string_view s);

struct EsmResponse {
    Timestamp at;
    int valence = 3;  // 1..5
    int arousal = 3;  // 1..5
    SocialRole social_role = SocialRole::Both;
    Interruptibility interruptibility = Interruptibility::Both;
};

enum class Relation { Family = 0, Friend, Work, None };

const char* relation_name(Relation r);
std::optional<Relation> relation_from_name(std::string_view s);

struct ContactRelation {
    std::string contact_hash;
    std::set<Relation> relations;  // non-empty; {None} exclusive
};

enum class ChannelKind { EDA = 0, BVP, HR, ST, ACC_X, ACC_Y, ACC_Z };

const char* channel_name(ChannelKind k);

// Uniformly sampled signal; sample i sits at start + i/rate seconds.
struct PhysioChannel {
    ChannelKind kind = ChannelKind::EDA;
    Timestamp start;
    double rate_hz = 0.0;
    std::vector<double> samples;

    double sample_time_s(std::size_t i) const {
        return static_cast<double>(start.utc_millis) / 1000.0 +
               static_cast<double>(i) / rate_hz;
    }
};

struct IbiEntry {
    double offset_s = 0.0;    // beat time relative to start
    double interval_s = 0.0;  // inter-beat interval ending at that beat
};

struct IbiSeries {
    Timestamp start;
    std::vector<IbiEntry> entries;  // offsets strictly increasing
    std::size_t dropped_artifacts = 0;
};

struct PhysioRecording {
    std::optional<PhysioChannel> eda, bvp, hr, st, acc_x, acc_y, acc_z;
    std::optional<IbiSeries> ibi;
};

using ParticipantId = std::string;

struct EventLog {
    ParticipantId participant;
    std::vector<NotificationEvent> notifications;
    std::vector<AppForegroundEvent> app_events;
    std::vector<ScreenEvent> screen_events;
    std::vector<ActivityEvent> activity_events;
    std::vector<LocationEvent> location_events;
    std::vector<EsmResponse> esm_responses;
    std::vector<ContactRelation> contact_relations;  // keyed by contact_hash
    PhysioRecording physio;
    std::vector<std::string> warnings;
    std::string source_config_hash;  // carried through canonical round-trips

    const ContactRelation* relation_for(std::string_view contact_hash) const;
};

// --- windowing ----------------------------------------------------------------

// Returns the subrange of `events` (sorted by time accessor) whose times
// fall in [end - duration, end); half-open on the right.
template <typename T, typename GetMs>
std::span<const T> slice_window_ms(std::span<const T> events, std::int64_t end_ms,
                                   std::int64_t duration_ms, GetMs get_ms) {
    std::int64_t lo = end_ms - duration_ms;
    std::size_t b = 0, e = events.size();
    // lower bounds for lo and end
    std::size_t first = [&] {
        std::size_t l = b, r = e;
        while (l < r) {
            std::size_t m = (l + r) / 2;
            if (get_ms(events[m]) < lo)
                l = m + 1;
            else
                r = m;
        }
        return l;
    }();
    std::size_t last = [&] {
        std::size_t l = first, r = e;
        while (l < r) {
            std::size_t m = (l + r) / 2;
            if (get_ms(events[m]) < end_ms)
                l = m + 1;
            else
                r = m;
        }
        return l;
    }();
    return events.subspan(first, last - first);
}

std::span<const NotificationEvent> slice_window(std::span<const NotificationEvent> v,
                                                const Timestamp& end, double duration_s);
std::span<const AppForegroundEvent> slice_window(std::span<const AppForegroundEvent> v,
                                                 const Timestamp& end, double duration_s);
std::span<const ScreenEvent> slice_window(std::span<const ScreenEvent> v,
                                          const Timestamp& end, double duration_s);
std::span<const ActivityEvent> slice_window(std::span<const ActivityEvent> v,
                                            const Timestamp& end, double duration_s);
std::span<const LocationEvent> slice_window(std::span<const LocationEvent> v,
                                            const Timestamp& end, double duration_s);
std::span<const EsmResponse> slice_window(std::span<const EsmResponse> v,
                                          const Timestamp& end, double duration_s);

// Sample view [end - duration, end) of a uniform channel.
std::span<const double> slice_window(const PhysioChannel& ch, const Timestamp& end,
                                     double duration_s);
// IBI entries whose beat time falls in the window.
std::span<const IbiEntry> slice_window(const IbiSeries& ibi, const Timestamp& end,
                                       double duration_s);

}  // namespace notikit

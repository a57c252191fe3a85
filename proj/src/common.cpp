#include "notikit/common.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

namespace notikit {

ErrorCategory error_category(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidConfig:
        case ErrorCode::UnknownCategoryName:
            return ErrorCategory::Config;
        case ErrorCode::Internal:
        case ErrorCode::NotFitted:
        case ErrorCode::DimensionMismatch:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::Data;
    }
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::NonMonotonicTimestamp: return "NonMonotonicTimestamp";
        case ErrorCode::BadHeader: return "BadHeader";
        case ErrorCode::NonNumericSample: return "NonNumericSample";
        case ErrorCode::ZeroRate: return "ZeroRate";
        case ErrorCode::EmptyWindow: return "EmptyWindow";
        case ErrorCode::DegenerateWindow: return "DegenerateWindow";
        case ErrorCode::WindowTooShort: return "WindowTooShort";
        case ErrorCode::TooFewIntervals: return "TooFewIntervals";
        case ErrorCode::UnknownCategoryName: return "UnknownCategoryName";
        case ErrorCode::DegenerateTarget: return "DegenerateTarget";
        case ErrorCode::NotFitted: return "NotFitted";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::TooFewInstances: return "TooFewInstances";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::EmptyIntersection: return "EmptyIntersection";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::ConstantInput: return "ConstantInput";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::CalibrationFailed: return "CalibrationFailed";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::below(std::uint64_t n) {
    // multiply-shift bounded draw; bias is < 2^-64 per call, irrelevant here,
    // and the mapping is identical on every platform.
    unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

double Rng::exponential(double rate) {
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    return -std::log(u) / rate;
}

std::uint64_t Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
        // Knuth's product method
        double limit = std::exp(-mean);
        double prod = 1.0;
        std::uint64_t k = 0;
        do {
            prod *= uniform();
            ++k;
        } while (prod > limit);
        return k - 1;
    }
    double draw = normal(mean, std::sqrt(mean));
    return draw < 0.0 ? 0 : static_cast<std::uint64_t>(draw + 0.5);
}

Rng Rng::fork(std::uint64_t stream_id) const {
    Rng child(state_ ^ (0x94d049bb133111ebULL * (stream_id + 1)));
    child.next_u64();
    return child;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::MissingFile, path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        h = fnv1a64(std::string_view(buf, static_cast<std::size_t>(in.gcount())), h);
        if (!in) break;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

void log_line(std::string_view level, std::string_view stage, std::string_view message) {
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    std::fprintf(stderr, "level=%.*s stage=%.*s msg=\"%.*s\"\n",
                 static_cast<int>(level.size()), level.data(),
                 static_cast<int>(stage.size()), stage.data(),
                 static_cast<int>(message.size()), message.data());
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, bool* ok) {
    // tolerate surrounding spaces, from_chars does not
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    double value = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    bool good = res.ec == std::errc() && res.ptr == text.data() + text.size() && !text.empty();
    if (ok) *ok = good;
    return good ? value : 0.0;
}

std::int64_t parse_int(std::string_view text, bool* ok) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    std::int64_t value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    bool good = res.ec == std::errc() && res.ptr == text.data() + text.size() && !text.empty();
    if (ok) *ok = good;
    return good ? value : 0;
}

}  // namespace notikit

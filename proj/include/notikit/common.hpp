#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace notikit {

// Error taxonomy. The category decides the CLI exit status (config=1,
// data=2, internal=3); the code is what tests assert on.
enum class ErrorCode {
    // parsing / data
    MissingFile,
    SchemaError,
    NonMonotonicTimestamp,
    BadHeader,
    NonNumericSample,
    ZeroRate,
    // feature extraction
    EmptyWindow,
    DegenerateWindow,
    WindowTooShort,
    TooFewIntervals,
    UnknownCategoryName,
    // models / evaluation
    DegenerateTarget,
    NotFitted,
    DimensionMismatch,
    TooFewInstances,
    LengthMismatch,
    Empty,
    EmptyIntersection,
    // analysis
    TooFewSamples,
    ConstantInput,
    // generator / config
    InvalidConfig,
    CalibrationFailed,
    Internal,
};

enum class ErrorCategory { Config, Data, Internal };

ErrorCategory error_category(ErrorCode code);
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const { return code_; }
    ErrorCategory category() const { return error_category(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

// Deterministic RNG wrapper. All randomness in the project goes through
// this class so results do not depend on the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    // xoshiro-style splitmix advance; full 64-bit output.
    std::uint64_t next_u64();

    // uniform in [0, 1)
    double uniform();
    // uniform in [lo, hi)
    double uniform(double lo, double hi);
    // uniform integer in [0, n), n > 0
    std::uint64_t below(std::uint64_t n);
    // standard normal (Box-Muller, no cached spare so sequence is obvious)
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }
    // exponential with given rate
    double exponential(double rate);
    // Poisson (inversion for small means, normal approx for large)
    std::uint64_t poisson(double mean);
    // derive an independent stream; stable under reordering of calls
    Rng fork(std::uint64_t stream_id) const;

  private:
    std::uint64_t state_;
};

// FNV-1a 64-bit, used for config/artifact hashes.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t value);

// Machine-parseable log lines: level=<lvl> stage=<stage> msg="..."
void log_line(std::string_view level, std::string_view stage, std::string_view message);

// Runs fn(i) for i in [0, n) on `jobs` threads. Results must be written to
// pre-sized slots indexed by i; the call order within a thread is
// ascending, so a jobs=1 run and a jobs=N run perform identical work per
// index.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Shortest round-trip decimal form of a double (std::to_chars), used by
// every writer so artifacts are byte-stable.
std::string format_double(double v);
double parse_double(std::string_view text, bool* ok = nullptr);
std::int64_t parse_int(std::string_view text, bool* ok = nullptr);

}  // namespace notikit

#include "notikit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "notikit/common.hpp"

namespace notikit::stats {

double mean(std::span<const double> x) {
    if (x.empty()) fail(ErrorCode::EmptyWindow, "mean of empty window");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) { return std::sqrt(variance(x)); }

double min(std::span<const double> x) {
    if (x.empty()) fail(ErrorCode::EmptyWindow, "min of empty window");
    return *std::min_element(x.begin(), x.end());
}

double max(std::span<const double> x) {
    if (x.empty()) fail(ErrorCode::EmptyWindow, "max of empty window");
    return *std::max_element(x.begin(), x.end());
}

double rms(std::span<const double> x) {
    if (x.empty()) fail(ErrorCode::EmptyWindow, "rms of empty window");
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s / static_cast<double>(x.size()));
}

double median(std::vector<double> x) {
    if (x.empty()) fail(ErrorCode::Empty, "median of empty sequence");
    std::sort(x.begin(), x.end());
    std::size_t n = x.size();
    return n % 2 == 1 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) fail(ErrorCode::LengthMismatch, "pearson inputs");
    if (x.size() < 2) fail(ErrorCode::TooFewSamples, "pearson needs n >= 2");
    double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) fail(ErrorCode::ConstantInput, "pearson on constant input");
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> x) {
    std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        double r = 0.5 * static_cast<double>(i + j) + 1.0;  // mean of 1-based ranks i+1..j+1
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

// --- special functions -----------------------------------------------------

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double upper_incomplete_gamma(double a, double x) {
    if (x < 0.0 || a <= 0.0) fail(ErrorCode::Internal, "upper_incomplete_gamma domain");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // series for P(a,x), return 1 - P
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 3e-16) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // continued fraction for Q(a,x)
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 3e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double f_sf(double f, double d1, double d2) {
    if (f <= 0.0) return 1.0;
    return incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

double student_t_sf(double t, double dof) {
    double p_two = incomplete_beta(dof / 2.0, 0.5, dof / (dof + t * t));
    return t >= 0.0 ? 0.5 * p_two : 1.0 - 0.5 * p_two;
}

double chi2_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return upper_incomplete_gamma(dof / 2.0, x / 2.0);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) fail(ErrorCode::Internal, "normal_quantile domain");
    // bisection + Newton polish; plenty for calibration use
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (normal_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi);
}

// --- spectral ----------------------------------------------------------------

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
    std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) fail(ErrorCode::Internal, "fft size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double angle = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = data[i + k];
                std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& v : data) v /= static_cast<double>(n);
}

std::vector<double> welch_psd(std::span<const double> signal, const WelchSpec& spec) {
    std::size_t nseg = spec.segment_len;
    if (signal.size() < nseg) fail(ErrorCode::WindowTooShort, "signal shorter than one segment");
    std::size_t hop = static_cast<std::size_t>(static_cast<double>(nseg) * (1.0 - spec.overlap));
    if (hop == 0) hop = 1;

    std::vector<double> window(nseg);
    double wsum_sq = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                                          static_cast<double>(nseg - 1)));
        wsum_sq += window[i] * window[i];
    }

    std::vector<double> psd(nseg / 2 + 1, 0.0);
    std::vector<std::complex<double>> buf(nseg);
    std::size_t count = 0;
    for (std::size_t start = 0; start + nseg <= signal.size(); start += hop) {
        for (std::size_t i = 0; i < nseg; ++i)
            buf[i] = std::complex<double>(signal[start + i] * window[i], 0.0);
        fft_radix2(buf, false);
        for (std::size_t k = 0; k <= nseg / 2; ++k) {
            double mag2 = std::norm(buf[k]);
            double scale = (k == 0 || k == nseg / 2) ? 1.0 : 2.0;  // one-sided
            psd[k] += scale * mag2 / (spec.sample_rate_hz * wsum_sq);
        }
        ++count;
    }
    if (count == 0) fail(ErrorCode::WindowTooShort, "no full segment");
    for (auto& v : psd) v /= static_cast<double>(count);
    return psd;
}

double band_power(std::span<const double> psd, double sample_rate_hz,
                  std::size_t segment_len, double lo_hz, double hi_hz) {
    double df = sample_rate_hz / static_cast<double>(segment_len);
    double power = 0.0;
    for (std::size_t k = 0; k < psd.size(); ++k) {
        double f = df * static_cast<double>(k);
        if (f >= lo_hz && f < hi_hz) power += psd[k] * df;
    }
    return power;
}

}  // namespace notikit::stats

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace notikit::stats {

// Descriptive statistics. Variance is the population variance throughout
// the project (documented in the feature manifest).
double mean(std::span<const double> x);
double variance(std::span<const double> x);  // population
double stddev(std::span<const double> x);
double min(std::span<const double> x);
double max(std::span<const double> x);
double rms(std::span<const double> x);
double median(std::vector<double> x);  // by value, sorts its copy

double pearson(std::span<const double> x, std::span<const double> y);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> x);

// --- special functions -----------------------------------------------------

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);
// Regularized upper incomplete gamma Q(a, x).
double upper_incomplete_gamma(double a, double x);

// Survival functions (upper tails).
double f_sf(double f, double d1, double d2);
double student_t_sf(double t, double dof);   // one-sided, P(T > t)
double chi2_sf(double x, double dof);
double normal_cdf(double z);
double normal_sf(double z);
double normal_quantile(double p);  // inverse of normal_cdf

// --- spectral ----------------------------------------------------------------

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse);

struct WelchSpec {
    double sample_rate_hz = 4.0;
    std::size_t segment_len = 256;  // power of two
    double overlap = 0.5;
};

// Hann-tapered, segment-averaged one-sided PSD. Returns power density per
// frequency bin; bin k sits at k * sample_rate / segment_len. The input is
// used as-is (callers detrend first).
std::vector<double> welch_psd(std::span<const double> signal, const WelchSpec& spec);

// Integrates the PSD over [lo_hz, hi_hz) with rectangle rule on bin centers.
double band_power(std::span<const double> psd, double sample_rate_hz,
                  std::size_t segment_len, double lo_hz, double hi_hz);

}  // namespace notikit::stats

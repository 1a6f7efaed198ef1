#pragma once

namespace wskdc {

/// Success/total counts of a Binomial experiment. Both fields may be
/// fractional (kernel-weighted pseudo-counts); 0 <= successes <= total.
struct Counts {
    double successes = 0.0;
    double total = 0.0;
};

/// Symmetric confidence interval [center - halfwidth, center + halfwidth]
/// on a Binomial success probability, at the level encoded by z.
struct ConfidenceBound {
    double center;
    double halfwidth;
    double z;

    double lower() const { return center - halfwidth; }
    double upper() const { return center + halfwidth; }
};

/// Two-sided standard-normal quantile for a confidence level in (0,1):
/// the z with Phi(z) = 1 - (1 - alpha)/2. Absolute error below 1e-8.
double z_quantile(double alpha);

/// Wilson score interval over (possibly fractional) counts:
///
///   center    = (s + z^2/2) / (n + z^2)
///   halfwidth = z / (n + z^2) * sqrt(s*(n - s)/n + z^2/4)
///
/// with s*(n - s)/n taken as 0 when n = 0, so the no-data limit is the
/// maximally uncertain interval [0, 1]. The bounds are clamped into [0, 1];
/// an excursion beyond 1e-12 indicates a broken input and throws.
ConfidenceBound wilson_interval(const Counts& counts, double z);

}  // namespace wskdc

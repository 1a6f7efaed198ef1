#include "wskdc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wskdc {

namespace {

constexpr double kClampTolerance = 1e-12;

// Rational-polynomial inverse of the standard normal CDF (the classic
// three-region split used by AS 241). Relative error below 1e-15.
double inverse_normal_cdf(double p) {
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num = (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                             1.3314166789178437745e2) * r + 3.3871328727963666080e0);
        const double den = (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                             4.2313330701600911252e1) * r + 1.0);
        return q * num / den;
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        const double num = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                                 2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                               3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                             4.63033784615654529590e0) * r + 1.42343711074968357734e0);
        const double den = (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                                 1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                               6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                             2.05319162663775882187e0) * r + 1.0);
        value = num / den;
    } else {
        r -= 5.0;
        const double num = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                                 1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                               2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                             5.46378491116411436990e0) * r + 6.65790464350110377720e0);
        const double den = (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-9) * r +
                                 1.84631831751005468180e-6) * r + 7.86869131145613259100e-4) * r +
                               1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                             5.99832206555887937690e-1) * r + 1.0);
        value = num / den;
    }
    return (q < 0.0) ? -value : value;
}

}  // namespace

double z_quantile(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("z_quantile: confidence level must lie in (0,1), got " +
                                    std::to_string(alpha));
    return inverse_normal_cdf(1.0 - (1.0 - alpha) / 2.0);
}

ConfidenceBound wilson_interval(const Counts& counts, double z) {
    const double s = counts.successes;
    const double n = counts.total;
    if (!(std::isfinite(s) && std::isfinite(n)))
        throw std::invalid_argument("wilson_interval: counts must be finite");
    if (s < 0.0 || n < 0.0)
        throw std::invalid_argument("wilson_interval: counts must be nonnegative");
    if (s > n)
        throw std::invalid_argument("wilson_interval: successes exceed total");
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument("wilson_interval: z must be positive and finite");

    const double z2 = z * z;
    const double denom = n + z2;
    double center = (s + 0.5 * z2) / denom;
    const double spread = (n > 0.0) ? s * (n - s) / n : 0.0;
    // At s = 0 or s = n the halfwidth reduces to z*(z/2)/denom, which equals
    // the center's distance to 0 or 1; the reduced form keeps those interval
    // endpoints exact (no data gives exactly [0, 1], all successes reach 1).
    double halfwidth = (s == 0.0)  ? center
                       : (s == n) ? 1.0 - center
                                  : z / denom * std::sqrt(spread + 0.25 * z2);

    if (center < -kClampTolerance || center > 1.0 + kClampTolerance ||
        center - halfwidth < -kClampTolerance || center + halfwidth > 1.0 + kClampTolerance)
        throw std::logic_error("wilson_interval: bounds left [0,1] beyond tolerance");
    center = std::clamp(center, 0.0, 1.0);
    halfwidth = std::min(halfwidth, std::min(center, 1.0 - center));

    return ConfidenceBound{center, halfwidth, z};
}

}  // namespace wskdc

#include "ifd/numerics.hpp"

#include <cmath>

namespace ifd {

double next_uniform(RngState& rng) {
    std::uint64_t z = (rng.state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    double u = static_cast<double>(z >> 11) * 0x1.0p-53;
    if (u == 0.0)
        u = 0x1.0p-53;
    return u;
}

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125739; // 2/sqrt(pi)
constexpr double kSqrtPi = 1.7724538509055160273;

// erf(x) = (2/sqrt(pi)) * exp(-x^2) * sum_{n>=0} (2x^2)^n x / (2n+1)!!
// All-positive terms, no cancellation; used for |x| <= 2.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 0; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 3.0);
        sum += term;
        if (term <= 1e-18 * sum)
            break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// erfc(x) = Gamma(1/2, x^2) / sqrt(pi) for x > 0, via the continued
// fraction for the upper incomplete gamma function (modified Lentz).
double erfc_continued_fraction(double x) {
    const double a = 0.5;
    const double x2 = x * x;
    const double tiny = 1e-300;
    double b = x2 + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= 1e-16)
            break;
    }
    // Gamma(1/2, x^2) = exp(-x^2) * x * h
    return std::exp(-x2) * x * h / kSqrtPi;
}

} // namespace

double erf(double x) {
    if (std::isnan(x))
        return x;
    if (std::isinf(x))
        return std::signbit(x) ? -1.0 : 1.0;
    const double ax = std::fabs(x);
    double r;
    if (ax <= 2.0)
        r = erf_series(ax);
    else
        r = 1.0 - erfc_continued_fraction(ax);
    return std::signbit(x) ? -r : r;
}

} // namespace ifd

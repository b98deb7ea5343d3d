#include "ifd/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace ifd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kSqrt2 = 1.4142135623730950488;

// Acklam's rational approximation to the standard normal quantile,
// accurate to ~1.2e-9; polished afterwards with Newton steps on the CDF.
double inverse_normal_cdf_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double standard_normal_cdf(double z) {
    return 0.5 * (1.0 + ifd::erf(z / kSqrt2));
}

double standard_normal_pdf(double z) {
    constexpr double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

} // namespace

SourceDistribution SourceDistribution::uniform(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
        throw DomainError("uniform distribution requires finite a < b");
    return SourceDistribution(Uniform{a, b});
}

SourceDistribution SourceDistribution::exponential(double rate) {
    if (!(std::isfinite(rate) && rate > 0.0))
        throw DomainError("exponential distribution requires rate > 0");
    return SourceDistribution(Exponential{rate});
}

SourceDistribution SourceDistribution::normal(double mean, double stddev) {
    if (!(std::isfinite(mean) && std::isfinite(stddev) && stddev > 0.0))
        throw DomainError("normal distribution requires finite mean and stddev > 0");
    return SourceDistribution(Normal{mean, stddev});
}

SourceDistribution SourceDistribution::custom(ExprPtr pdf_expr, double lo, double hi) {
    if (!pdf_expr)
        throw DomainError("custom distribution requires a pdf expression");
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw DomainError("custom distribution requires finite lo < hi");
    const int grid = 1024;
    for (int i = 0; i <= grid; ++i) {
        const double t = lo + (hi - lo) * i / grid;
        const double v = evaluate(pdf_expr, t);
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("custom pdf must be finite and nonnegative on its support");
    }
    const double total =
        integrate_adaptive([&](double t) { return evaluate(pdf_expr, t); }, lo, hi);
    if (std::fabs(total - 1.0) > 1e-6) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", total);
        throw DomainError(std::string("custom pdf integrates to ") + buf +
                          ", not 1; normalize it explicitly");
    }
    return SourceDistribution(Custom{std::move(pdf_expr), lo, hi});
}

double SourceDistribution::pdf(double a) const {
    return std::visit(
        overloaded{
            [a](const Uniform& u) {
                return (u.a <= a && a <= u.b) ? 1.0 / (u.b - u.a) : 0.0;
            },
            [a](const Exponential& e) {
                return a >= 0.0 ? e.rate * std::exp(-e.rate * a) : 0.0;
            },
            [a](const Normal& n) {
                return standard_normal_pdf((a - n.mean) / n.stddev) / n.stddev;
            },
            [a](const Custom& c) {
                return (c.lo <= a && a <= c.hi) ? evaluate(c.pdf_expr, a) : 0.0;
            },
        },
        dist_);
}

double SourceDistribution::cdf(double a) const {
    return std::visit(
        overloaded{
            [a](const Uniform& u) {
                if (a <= u.a) return 0.0;
                if (a >= u.b) return 1.0;
                return (a - u.a) / (u.b - u.a);
            },
            [a](const Exponential& e) {
                return a > 0.0 ? -std::expm1(-e.rate * a) : 0.0;
            },
            [a](const Normal& n) {
                return standard_normal_cdf((a - n.mean) / n.stddev);
            },
            [a](const Custom& c) {
                if (a <= c.lo) return 0.0;
                if (a >= c.hi) return 1.0;
                const double v = integrate_adaptive(
                    [&](double t) { return evaluate(c.pdf_expr, t); }, c.lo, a);
                return std::fmin(1.0, std::fmax(0.0, v));
            },
        },
        dist_);
}

double SourceDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("quantile requires 0 < p < 1");
    return std::visit(
        overloaded{
            [p](const Uniform& u) { return u.a + p * (u.b - u.a); },
            [p](const Exponential& e) { return -std::log1p(-p) / e.rate; },
            [p](const Normal& n) {
                double z = inverse_normal_cdf_approx(p);
                // Newton polish on the CDF; two steps reach ~1e-15 in p.
                for (int i = 0; i < 4; ++i) {
                    const double err = standard_normal_cdf(z) - p;
                    const double dens = standard_normal_pdf(z);
                    if (dens < 1e-300 || std::fabs(err) < 1e-14)
                        break;
                    z -= err / dens;
                }
                return n.mean + n.stddev * z;
            },
            [p](const Custom& c) {
                auto cdf_fn = [&](double t) {
                    if (t <= c.lo) return 0.0;
                    const double v = integrate_adaptive(
                        [&](double s) { return evaluate(c.pdf_expr, s); }, c.lo, t);
                    return v;
                };
                auto pdf_fn = [&](double t) { return evaluate(c.pdf_expr, t); };
                const double hi_mass = cdf_fn(c.hi);
                const double target = std::fmin(p, hi_mass);
                Tolerances tol;
                return solve_monotone(cdf_fn, pdf_fn, target, Bracket(c.lo, c.hi), tol);
            },
        },
        dist_);
}

double SourceDistribution::sample(RngState& rng) const {
    return quantile(next_uniform(rng));
}

double SourceDistribution::support_lo() const {
    return std::visit(overloaded{
                          [](const Uniform& u) { return u.a; },
                          [](const Exponential&) { return 0.0; },
                          [](const Normal&) { return -std::numeric_limits<double>::infinity(); },
                          [](const Custom& c) { return c.lo; },
                      },
                      dist_);
}

double SourceDistribution::support_hi() const {
    return std::visit(overloaded{
                          [](const Uniform& u) { return u.b; },
                          [](const Exponential&) { return std::numeric_limits<double>::infinity(); },
                          [](const Normal&) { return std::numeric_limits<double>::infinity(); },
                          [](const Custom& c) { return c.hi; },
                      },
                      dist_);
}

Bracket SourceDistribution::effective_support() const {
    return std::visit(
        overloaded{
            [](const Uniform& u) { return Bracket(u.a, u.b); },
            [](const Exponential& e) {
                // quantile(1 - 1e-12)
                return Bracket(0.0, -std::log(1e-12) / e.rate);
            },
            [](const Normal& n) {
                return Bracket(n.mean - 8.0 * n.stddev, n.mean + 8.0 * n.stddev);
            },
            [](const Custom& c) { return Bracket(c.lo, c.hi); },
        },
        dist_);
}

std::string SourceDistribution::describe() const {
    char buf[128];
    return std::visit(
        overloaded{
            [&](const Uniform& u) {
                std::snprintf(buf, sizeof buf, "uniform(%g, %g)", u.a, u.b);
                return std::string(buf);
            },
            [&](const Exponential& e) {
                std::snprintf(buf, sizeof buf, "exponential(rate=%g)", e.rate);
                return std::string(buf);
            },
            [&](const Normal& n) {
                std::snprintf(buf, sizeof buf, "normal(mean=%g, stddev=%g)", n.mean, n.stddev);
                return std::string(buf);
            },
            [&](const Custom& c) {
                std::snprintf(buf, sizeof buf, "custom pdf on [%g, %g]", c.lo, c.hi);
                return std::string(buf);
            },
        },
        dist_);
}

} // namespace ifd

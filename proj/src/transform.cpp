#include "ifd/transform.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace ifd {

Bracket MonotoneMap::image() const {
    const double f_lo = f_at(domain_.lo);
    const double f_hi = f_at(domain_.hi);
    return Bracket(std::fmin(f_lo, f_hi), std::fmax(f_lo, f_hi));
}

double MonotoneMap::inverse(double a) const {
    Tolerances tol;
    return solve_monotone([this](double t) { return f_at(t); },
                          [this](double t) { return df_at(t); }, a, domain_, tol);
}

MonotoneMap build_monotone_map(ExprPtr f_expr, const Bracket& domain, int grid_points) {
    if (!f_expr)
        throw DomainError("build_monotone_map requires an expression");
    if (grid_points < 64)
        throw DomainError("build_monotone_map requires grid_points >= 64");

    ExprPtr df = differentiate(f_expr);
    constexpr double kDerivativeZero = 1e-12;
    double floor = std::numeric_limits<double>::infinity();
    int sign = 0;
    for (int i = 0; i <= grid_points; ++i) {
        const double t = domain.lo + domain.width() * i / grid_points;
        const double fv = evaluate(f_expr, t);
        if (!std::isfinite(fv))
            throw NonFinite(t, "f is non-finite on the verification grid");
        const double dv = evaluate(df, t);
        if (!std::isfinite(dv))
            throw NonFinite(t, "f' is non-finite on the verification grid");
        if (std::fabs(dv) < kDerivativeZero)
            throw NotMonotone(t, "|f'| falls below 1e-12; strict monotonicity fails");
        const int s = dv > 0.0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            throw NotMonotone(t, "f' changes sign on the domain");
        floor = std::fmin(floor, std::fabs(dv));
    }
    return MonotoneMap(std::move(f_expr), std::move(df), domain,
                       sign > 0 ? Direction::Increasing : Direction::Decreasing, floor);
}

ImplicitDensity::ImplicitDensity(MonotoneMap map, SourceDistribution source)
    : map_(std::move(map)), source_(std::move(source)), x_support_(map_.domain()) {
    const Bracket img = map_.image();
    image_lo_ = img.lo;
    image_hi_ = img.hi;

    const double s_lo = source_.support_lo();
    const double s_hi = source_.support_hi();
    if (s_lo >= image_hi_ || s_hi <= image_lo_)
        throw SupportMismatch("f(domain) misses the source support");

    const double a_lo = std::fmax(image_lo_, s_lo);
    const double a_hi = std::fmin(image_hi_, s_hi);
    const double t_a = map_.inverse(a_lo);
    const double t_b = map_.inverse(a_hi);
    const double t_lo = std::fmin(t_a, t_b);
    const double t_hi = std::fmax(t_a, t_b);
    if (!(t_lo < t_hi))
        throw SupportMismatch("overlap of f(domain) with the source support is "
                              "numerically empty");
    x_support_ = Bracket(t_lo, t_hi);
    transported_mass_ = source_.cdf(image_hi_) - source_.cdf(image_lo_);
}

double ImplicitDensity::pdf(double t) const {
    if (!map_.domain().contains(t))
        return 0.0;
    return source_.pdf(map_.f_at(t)) * std::fabs(map_.df_at(t));
}

double ImplicitDensity::cdf(double t) const {
    const double tc = std::fmin(map_.domain().hi, std::fmax(map_.domain().lo, t));
    const double base = source_.cdf(map_.f_at(tc));
    const double v = map_.direction() == Direction::Increasing ? base : 1.0 - base;
    return std::fmin(1.0, std::fmax(0.0, v));
}

double ImplicitDensity::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("quantile requires 0 < p < 1");
    const double q = map_.direction() == Direction::Increasing ? p : 1.0 - p;
    const double a = source_.quantile(q);
    if (a < image_lo_ || a > image_hi_)
        throw SupportMismatch("the source quantile falls outside f(domain); "
                              "widen the working domain");
    return map_.inverse(a);
}

double ImplicitDensity::sample(RngState& rng) const {
    if (transported_mass_ < 1.0 - 1e-9)
        throw SupportMismatch("P(A in f(domain)) < 1 - 1e-9; the working domain "
                              "truncates too much mass to sample faithfully");
    return from_source_value(source_.sample(rng));
}

double ImplicitDensity::from_source_value(double a) const {
    const double ac = std::fmin(image_hi_, std::fmax(image_lo_, a));
    return map_.inverse(ac);
}

} // namespace ifd

#ifndef IFD_NUMERICS_HPP
#define IFD_NUMERICS_HPP

#include <cmath>
#include <cstdint>
#include <limits>

#include "ifd/errors.hpp"

namespace ifd {

// A finite search interval with lo < hi.
struct Bracket {
    double lo;
    double hi;

    Bracket(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)))
            throw DomainError("bracket endpoints must be finite");
        if (!(lo < hi))
            throw DomainError("bracket requires lo < hi");
    }

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double t) const { return lo <= t && t <= hi; }
};

struct Tolerances {
    double root_abs = 1e-12;
    double quad_abs = 1e-9;
    int max_iter = 200;
    int max_quad_depth = 60;

    void validate() const {
        if (!(root_abs > 0.0 && quad_abs > 0.0 && max_iter > 0 && max_quad_depth > 0))
            throw DomainError("tolerances must be positive");
    }
};

// Deterministic seeded generator state (splitmix64). The output stream is
// a pure function of the seed and is identical on every platform.
struct RngState {
    std::uint64_t state = 0;
};

// Advances the splitmix64 recurrence and returns a double strictly
// inside (0,1): (z >> 11) * 2^-53, with an exact 0 clamped up to 2^-53.
double next_uniform(RngState& rng);

// |result - erf(x)| <= 1e-10; erf(-x) == -erf(x) exactly.
double erf(double x);

namespace detail {

// Adaptive Simpson recursion. Accepts a panel when the fine and coarse
// estimates agree to 15 * local tolerance, Richardson-corrects the result.
// A finite panel narrower than width_floor is accepted as-is: a feature at
// machine resolution contributes at most max|g| * width_floor, so refining
// it further (e.g. chasing a bounded jump) cannot improve the result.
template <class F>
double simpson_recurse(F&& g, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, double width_floor, int depth,
                       int max_depth) {
    if (depth > max_depth)
        throw MaxDepth("adaptive quadrature exceeded maximum recursion depth");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (b - a <= width_floor && std::isfinite(delta))
        return left + right + delta / 15.0;
    return simpson_recurse(g, a, m, fa, flm, fm, left, 0.5 * tol, width_floor,
                           depth + 1, max_depth) +
           simpson_recurse(g, m, b, fm, frm, fb, right, 0.5 * tol, width_floor,
                           depth + 1, max_depth);
}

} // namespace detail

// Adaptive Simpson quadrature of g over [lo, hi] with absolute error
// target tol.quad_abs for bounded integrands; a bounded discontinuity adds
// at most ~max|g| * eps * |interval|. Throws MaxDepth when the integrand is
// too wild to resolve (e.g. an interior singularity).
template <class F>
double integrate_adaptive(F&& g, double lo, double hi, const Tolerances& tol = {}) {
    tol.validate();
    if (!(lo <= hi))
        throw DomainError("integrate_adaptive requires lo <= hi");
    if (lo == hi)
        return 0.0;
    const double fa = g(lo);
    const double fb = g(hi);
    const double fm = g(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    const double width_floor = std::numeric_limits<double>::epsilon() *
                               std::fmax(1.0, std::fmax(std::fabs(lo), std::fabs(hi)));
    return detail::simpson_recurse(g, lo, hi, fa, fm, fb, whole, tol.quad_abs,
                                   width_floor, 0, tol.max_quad_depth);
}

// Finds x in [b.lo, b.hi] with g(x) == target for strictly monotone g.
// Newton steps from the bracket midpoint, falling back to bisection when
// the Newton iterate leaves the current bracket or |dg| < 1e-14; one
// endpoint is replaced every iteration so the bracket always shrinks.
// Never evaluates g outside the initial bracket.
template <class F, class DF>
double solve_monotone(F&& g, DF&& dg, double target, const Bracket& b,
                      const Tolerances& tol = {}) {
    tol.validate();
    double lo = b.lo;
    double hi = b.hi;
    double flo = g(lo) - target;
    double fhi = g(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi))
        throw NoBracket("endpoint values do not straddle the target");

    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        const double fx = g(x) - target;
        if (std::fabs(fx) <= tol.root_abs)
            return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        if (hi - lo <= tol.root_abs * std::fmax(1.0, std::fabs(x)))
            return 0.5 * (lo + hi);
        const double d = dg(x);
        double next = std::numeric_limits<double>::quiet_NaN();
        if (std::isfinite(d) && std::fabs(d) >= 1e-14)
            next = x - fx / d;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        x = next;
    }
    throw MaxIterations("root tolerance not reached within max_iter steps");
}

} // namespace ifd

#endif

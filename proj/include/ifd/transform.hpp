#ifndef IFD_TRANSFORM_HPP
#define IFD_TRANSFORM_HPP

#include "ifd/distribution.hpp"
#include "ifd/expr.hpp"
#include "ifd/numerics.hpp"

namespace ifd {

enum class Direction { Increasing, Decreasing };

// A strictly monotone C^1 map on a finite working interval, certified at
// construction by dense sampling of its symbolic derivative. Immutable.
class MonotoneMap {
public:
    const ExprPtr& f() const { return f_; }
    const ExprPtr& df() const { return df_; }
    const Bracket& domain() const { return domain_; }
    Direction direction() const { return direction_; }

    // Smallest |f'| seen on the certification grid; > 0 by construction.
    double derivative_floor() const { return derivative_floor_; }

    double f_at(double t) const { return evaluate(f_, t); }
    double df_at(double t) const { return evaluate(df_, t); }

    // f(domain) as an ordered interval.
    Bracket image() const;

    // Solves f(t) = a inside the domain. Throws NoBracket when a lies
    // outside the image.
    double inverse(double a) const;

private:
    friend MonotoneMap build_monotone_map(ExprPtr f_expr, const Bracket& domain,
                                          int grid_points);

    MonotoneMap(ExprPtr f, ExprPtr df, const Bracket& domain, Direction direction,
                double derivative_floor)
        : f_(std::move(f)), df_(std::move(df)), domain_(domain), direction_(direction),
          derivative_floor_(derivative_floor) {}

    ExprPtr f_;
    ExprPtr df_;
    Bracket domain_;
    Direction direction_;
    double derivative_floor_;
};

// Certifies strict monotonicity of f_expr on the domain by evaluating f
// and its symbolic derivative at grid_points+1 uniform nodes. Requires a
// constant derivative sign with |f'| >= 1e-12 everywhere on the grid.
// A pathological f oscillating between nodes defeats the check; that is
// a documented limitation of grid certification.
//
// Throws NotMonotone (with a witness node) on a sign change or a
// derivative below the floor, NonFinite when f or f' fails to evaluate,
// DomainError when grid_points < 64.
MonotoneMap build_monotone_map(ExprPtr f_expr, const Bracket& domain,
                               int grid_points = 4096);

// The law of X defined by f(X) = A: density f_A(f(t))·|f'(t)|, the two
// CDF branches, quantiles and exact sampling. Immutable; pdf/cdf/quantile
// are pure, sample mutates only the caller's RngState.
class ImplicitDensity {
public:
    // Locates the x-support by inverting f at the (clipped) source
    // support endpoints. Throws SupportMismatch when f(domain) misses
    // the source support entirely.
    ImplicitDensity(MonotoneMap map, SourceDistribution source);

    const MonotoneMap& map() const { return map_; }
    const SourceDistribution& source() const { return source_; }

    // Subinterval of the domain on which the density may be positive.
    const Bracket& x_support() const { return x_support_; }

    // P(A ∈ f(domain)); 1 up to rounding when the domain covers the
    // source, smaller when the working interval truncates it.
    double transported_mass() const { return transported_mass_; }

    // f_A(f(t))·|f'(t)| inside the domain, hard 0 outside.
    double pdf(double t) const;

    // F_A(f(t)) for increasing f, 1 − F_A(f(t)) for decreasing; t is
    // clamped to the domain, the result to [0,1].
    double cdf(double t) const;

    // Inverts the CDF by mapping p through the source quantile and then
    // through f⁻¹. Throws DomainError unless 0 < p < 1, SupportMismatch
    // when the A-quantile falls outside f(domain).
    double quantile(double p) const;

    // Draws A and solves f(X) = A. Requires transported_mass ≥ 1 − 1e-9
    // (throws SupportMismatch otherwise, deterministically: the check
    // never depends on the draw).
    double sample(RngState& rng) const;

    // Clamps a into f(domain) and returns f⁻¹(a); the sampling kernel,
    // shared with the batch module.
    double from_source_value(double a) const;

private:
    MonotoneMap map_;
    SourceDistribution source_;
    Bracket x_support_;
    double image_lo_;
    double image_hi_;
    double transported_mass_;
};

} // namespace ifd

#endif

#ifndef IFD_DISTRIBUTION_HPP
#define IFD_DISTRIBUTION_HPP

#include <string>
#include <variant>

#include "ifd/expr.hpp"
#include "ifd/numerics.hpp"

namespace ifd {

// The law of the source variable A: density, CDF, quantile and exact
// inverse-transform sampling. Values are immutable and cheap to copy;
// pdf/cdf/quantile are pure, sample mutates only the caller's RngState.
class SourceDistribution {
public:
    static SourceDistribution uniform(double a, double b);
    static SourceDistribution exponential(double rate);
    static SourceDistribution normal(double mean, double stddev);
    // pdf_expr must be nonnegative on [lo, hi] and integrate to 1 there
    // (within 1e-6); both are checked at construction and violations are
    // rejected rather than rescaled away.
    static SourceDistribution custom(ExprPtr pdf_expr, double lo, double hi);

    // Density f_A(a); exactly 0 outside the (closed) support.
    double pdf(double a) const;

    // F_A(a), nondecreasing with limits 0 and 1.
    double cdf(double a) const;

    // Value a with cdf(a) == p to within 1e-10 in p. Throws DomainError
    // unless 0 < p < 1.
    double quantile(double p) const;

    // Inverse-transform draw: quantile(u) for u ~ U(0,1) from rng.
    double sample(RngState& rng) const;

    // Support endpoints; may be infinite for exponential/normal.
    double support_lo() const;
    double support_hi() const;

    // Finite interval carrying all but ~1e-12 of the mass; used for
    // quadrature. Equals the support when the support is bounded.
    Bracket effective_support() const;

    std::string describe() const;

private:
    struct Uniform {
        double a, b;
    };
    struct Exponential {
        double rate;
    };
    struct Normal {
        double mean, stddev;
    };
    struct Custom {
        ExprPtr pdf_expr;
        double lo, hi;
    };

    using Variant = std::variant<Uniform, Exponential, Normal, Custom>;

    explicit SourceDistribution(Variant v) : dist_(std::move(v)) {}

    Variant dist_;
};

} // namespace ifd

#endif

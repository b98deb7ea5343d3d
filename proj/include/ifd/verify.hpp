#ifndef IFD_VERIFY_HPP
#define IFD_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ifd/transform.hpp"

namespace ifd {

struct NormalizationResult {
    double integral;
    bool pass;
};

// Integrates pdf over the x-support and compares against the transported
// mass P(A ∈ f(domain)) — which is 1 whenever the domain covers the
// source, and smaller for deliberately truncated domains.
NormalizationResult check_normalization(const ImplicitDensity& d, double tol);

// Exact one-sample Kolmogorov–Smirnov statistic
//   sup_i max(|i/n − F(x_i)|, |(i−1)/n − F(x_i)|)
// for samples sorted ascending. Throws EmptyInput on an empty list and
// DomainError when the samples are out of order.
template <class Cdf>
double ks_distance(const std::vector<double>& samples, Cdf&& cdf) {
    if (samples.empty())
        throw EmptyInput("ks_distance requires at least one sample");
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    double prev = samples.front();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] < prev)
            throw DomainError("ks_distance requires samples sorted ascending");
        prev = samples[i];
        const double F = cdf(samples[i]);
        const double above = static_cast<double>(i + 1) / n - F;
        const double below = F - static_cast<double>(i) / n;
        const double gap = std::fmax(std::fabs(above), std::fabs(below));
        worst = std::fmax(worst, gap);
    }
    return worst;
}

// Max over interior grid nodes of |central difference of cdf − pdf| with
// h = 1e-5, skipping nodes within 10·h of the support endpoints where
// the density may jump and one-sided limits defeat the central stencil.
double cdf_pdf_consistency(const ImplicitDensity& d, int grid_points);

struct VerificationReport {
    double normalization_integral;
    bool normalization_pass;
    double ks_statistic;
    double ks_critical;
    bool ks_pass;
    double max_cdf_pdf_deviation;
    bool consistency_pass;
    std::size_t n_samples;
    std::uint64_t seed;

    bool all_pass() const { return normalization_pass && ks_pass && consistency_pass; }
};

// Normalization (tol 1e-6), KS against cdf at critical value 1.63/√n
// (α = 0.01), and CDF/PDF consistency on 101 nodes (tol 1e-4).
// Deterministic given (d, n_samples, seed).
VerificationReport run_full_verification(const ImplicitDensity& d, std::size_t n_samples,
                                         std::uint64_t seed);

} // namespace ifd

#endif

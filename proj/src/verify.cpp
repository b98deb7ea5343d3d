#include "ifd/verify.hpp"

#include <algorithm>
#include <cmath>

#include "ifd/batch.hpp"

namespace ifd {

NormalizationResult check_normalization(const ImplicitDensity& d, double tol) {
    if (!(tol > 0.0))
        throw DomainError("check_normalization requires tol > 0");
    const Bracket s = d.x_support();
    const double integral =
        integrate_adaptive([&](double t) { return d.pdf(t); }, s.lo, s.hi);
    const bool pass = std::fabs(integral - d.transported_mass()) <= tol;
    return {integral, pass};
}

double cdf_pdf_consistency(const ImplicitDensity& d, int grid_points) {
    if (grid_points < 16)
        throw DomainError("cdf_pdf_consistency requires grid_points >= 16");
    const double h = 1e-5;
    const Bracket s = d.x_support();
    double worst = 0.0;
    for (int i = 1; i + 1 < grid_points; ++i) {
        const double t = s.lo + s.width() * i / (grid_points - 1);
        if (t - s.lo < 10.0 * h || s.hi - t < 10.0 * h)
            continue;
        const double slope = (d.cdf(t + h) - d.cdf(t - h)) / (2.0 * h);
        worst = std::fmax(worst, std::fabs(slope - d.pdf(t)));
    }
    return worst;
}

VerificationReport run_full_verification(const ImplicitDensity& d, std::size_t n_samples,
                                         std::uint64_t seed) {
    if (n_samples < 1000)
        throw DomainError("run_full_verification requires n_samples >= 1000");

    VerificationReport r{};
    r.n_samples = n_samples;
    r.seed = seed;

    const NormalizationResult norm = check_normalization(d, 1e-6);
    r.normalization_integral = norm.integral;
    r.normalization_pass = norm.pass;

    std::vector<double> xs = sample_batch(d, n_samples, seed);
    std::sort(xs.begin(), xs.end());
    r.ks_statistic = ks_distance(xs, [&](double x) { return d.cdf(x); });
    r.ks_critical = 1.63 / std::sqrt(static_cast<double>(n_samples));
    r.ks_pass = r.ks_statistic <= r.ks_critical;

    r.max_cdf_pdf_deviation = cdf_pdf_consistency(d, 101);
    r.consistency_pass = r.max_cdf_pdf_deviation <= 1e-4;
    return r;
}

} // namespace ifd

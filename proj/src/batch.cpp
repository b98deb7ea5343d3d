#include "ifd/batch.hpp"

#include <cstdint>

namespace ifd {

std::vector<double> linspace(double lo, double hi, std::size_t n_points) {
    if (n_points < 2)
        throw DomainError("linspace requires at least 2 points");
    if (!(lo < hi))
        throw DomainError("linspace requires lo < hi");
    std::vector<double> ts(n_points);
    const double w = hi - lo;
    for (std::size_t i = 0; i < n_points; ++i)
        ts[i] = lo + w * static_cast<double>(i) / static_cast<double>(n_points - 1);
    ts.back() = hi;
    return ts;
}

std::vector<double> eval_grid(const ExprPtr& e, const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = evaluate(e, ts[i]);
    return out;
}

std::vector<double> eval_grid_serial(const ExprPtr& e, const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = evaluate(e, ts[i]);
    return out;
}

std::vector<double> density_series(const ImplicitDensity& d, const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = d.pdf(ts[i]);
    return out;
}

std::vector<double> density_series_serial(const ImplicitDensity& d,
                                          const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = d.pdf(ts[i]);
    return out;
}

std::vector<double> cdf_series(const ImplicitDensity& d, const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = d.cdf(ts[i]);
    return out;
}

std::vector<double> cdf_series_serial(const ImplicitDensity& d, const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = d.cdf(ts[i]);
    return out;
}

namespace {

// The draw phase is intentionally serial in both flavors: a_i depends on
// the i-th state of one splitmix64 stream. Only the root solves fan out.
std::vector<double> draw_source_values(const ImplicitDensity& d, std::size_t n,
                                       std::uint64_t seed) {
    if (d.transported_mass() < 1.0 - 1e-9)
        throw SupportMismatch("P(A in f(domain)) < 1 - 1e-9; the working domain "
                              "truncates too much mass to sample faithfully");
    RngState rng{seed};
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = d.source().sample(rng);
    return a;
}

} // namespace

std::vector<double> sample_batch(const ImplicitDensity& d, std::size_t n, std::uint64_t seed) {
    const std::vector<double> a = draw_source_values(d, n, seed);
    std::vector<double> out(n);
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 512)
    for (std::int64_t i = 0; i < count; ++i)
        out[i] = d.from_source_value(a[i]);
    return out;
}

std::vector<double> sample_batch_serial(const ImplicitDensity& d, std::size_t n,
                                        std::uint64_t seed) {
    const std::vector<double> a = draw_source_values(d, n, seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = d.from_source_value(a[i]);
    return out;
}

} // namespace ifd

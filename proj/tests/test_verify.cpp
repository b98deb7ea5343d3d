#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "ifd/batch.hpp"
#include "ifd/verify.hpp"
#include "oracles.hpp"

using namespace ifd;

namespace {

ImplicitDensity example1() {
    return {build_monotone_map(parse("t^5 + t"), Bracket(-2.0, 2.0)),
            SourceDistribution::uniform(0.0, 1.0)};
}

ImplicitDensity example3() {
    return {build_monotone_map(parse("t + .9*sin(t)"), Bracket(-10.0, 10.0)),
            SourceDistribution::uniform(0.0, 1.0)};
}

} // namespace

TEST_CASE("normalization of the worked examples") {
    const auto [i1, p1] = check_normalization(example1(), 1e-6);
    CHECK(p1);
    CHECK(std::fabs(i1 - 1.0) <= 1e-6);

    const auto [i3, p3] = check_normalization(example3(), 1e-6);
    CHECK(p3);
    CHECK(std::fabs(i3 - 1.0) <= 1e-6);
}

TEST_CASE("normalization compares against the transported mass") {
    const ImplicitDensity half{build_monotone_map(parse("t"), Bracket(0.0, 0.5)),
                               SourceDistribution::uniform(0.0, 1.0)};
    const auto [integral, pass] = check_normalization(half, 1e-6);
    CHECK(std::fabs(integral - 0.5) <= 1e-6);
    CHECK(pass);  // 0.5 of mass transported, and the integral matches it
    CHECK_THROWS_AS(check_normalization(half, 0.0), DomainError);
}

TEST_CASE("normalization survives a support-edge jump inside x_support") {
    // exp(t) crosses the custom pdf's upper support edge a solver residual
    // short of t = 0, so the integrand has a bounded jump strictly inside
    // the integration interval.
    const ImplicitDensity d{
        build_monotone_map(parse("exp(t)"), Bracket(-6.0, 0.1)),
        SourceDistribution::custom(parse("2*t"), 0.0, 1.0)};
    const auto [integral, pass] = check_normalization(d, 1e-6);
    CHECK(pass);
    CHECK(std::fabs(integral - d.transported_mass()) <= 1e-6);
    CHECK(std::fabs(integral - 1.0) <= 1e-4);  // e^-12 of mass lies below f(-6)
}

TEST_CASE("ks_distance basics") {
    const auto ucdf = [](double x) { return std::fmin(1.0, std::fmax(0.0, x)); };
    CHECK(ks_distance(std::vector<double>{0.5}, ucdf) == 0.5);

    // empirical quantiles (i - 0.5)/n leave a uniform gap of 1/(2n)
    std::vector<double> qs(100);
    for (int i = 0; i < 100; ++i)
        qs[i] = (i + 0.5) / 100.0;
    CHECK(ks_distance(qs, ucdf) == doctest::Approx(0.005).scale(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ks_distance(std::vector<double>{}, ucdf), EmptyInput);
    CHECK_THROWS_AS(ks_distance(std::vector<double>{0.5, 0.25}, ucdf), DomainError);
}

TEST_CASE("ks_distance stays within [0,1]") {
    const auto d = example1();
    std::vector<double> xs = sample_batch(d, 5000, 9);
    std::sort(xs.begin(), xs.end());
    const double ks = ks_distance(xs, [&](double x) { return d.cdf(x); });
    CHECK(ks >= 0.0);
    CHECK(ks <= 1.0);
    CHECK(ks <= 1.63 / std::sqrt(5000.0));
}

TEST_CASE("cdf/pdf consistency on the worked examples") {
    CHECK(cdf_pdf_consistency(example1(), 101) <= 1e-4);
    CHECK(cdf_pdf_consistency(example3(), 101) <= 1e-4);
    CHECK_THROWS_AS(cdf_pdf_consistency(example1(), 15), DomainError);
}

TEST_CASE("cdf/pdf consistency is tight for a linear cdf") {
    const ImplicitDensity d{build_monotone_map(parse("t"), Bracket(-0.5, 1.5)),
                            SourceDistribution::uniform(0.0, 1.0)};
    CHECK(cdf_pdf_consistency(d, 101) <= 1e-10);
}

TEST_CASE("full verification passes on a worked example") {
    const VerificationReport r = run_full_verification(example1(), 20000, 42);
    CHECK(r.normalization_pass);
    CHECK(r.ks_pass);
    CHECK(r.consistency_pass);
    CHECK(r.all_pass());
    CHECK(r.ks_statistic <= r.ks_critical);
    CHECK(r.ks_critical == doctest::Approx(1.63 / std::sqrt(20000.0)).epsilon(1e-15));
    CHECK(r.n_samples == 20000);
    CHECK(r.seed == 42);
    CHECK_THROWS_AS(run_full_verification(example1(), 999, 42), DomainError);
}

TEST_CASE("verification reports are bitwise reproducible") {
    const VerificationReport a = run_full_verification(example1(), 5000, 7);
    const VerificationReport b = run_full_verification(example1(), 5000, 7);
    CHECK(a.normalization_integral == b.normalization_integral);
    CHECK(a.ks_statistic == b.ks_statistic);
    CHECK(a.max_cdf_pdf_deviation == b.max_cdf_pdf_deviation);
    CHECK(a.all_pass() == b.all_pass());
}

TEST_CASE("mismatched samples fail the KS gate") {
    // negative control: samples drawn from example 3 tested against the
    // law of example 1
    const auto d1 = example1();
    const auto d3 = example3();
    std::vector<double> xs = sample_batch(d3, 5000, 42);
    std::sort(xs.begin(), xs.end());
    const double ks = ks_distance(xs, [&](double x) { return d1.cdf(x); });
    CHECK(ks > 1.63 / std::sqrt(5000.0));
}

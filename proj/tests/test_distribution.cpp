#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ifd/distribution.hpp"
#include "oracles.hpp"

using namespace ifd;

namespace {

void check_quantile_round_trip(const SourceDistribution& d, double tol) {
    for (double p = 0.01; p < 1.0; p += 0.02) {
        CAPTURE(p);
        const double a = d.quantile(p);
        CHECK(d.cdf(a) == doctest::Approx(p).scale(1.0).epsilon(tol));
    }
}

} // namespace

TEST_CASE("uniform pdf/cdf/quantile") {
    const auto u = SourceDistribution::uniform(0.0, 1.0);
    CHECK(u.pdf(0.5) == 1.0);
    CHECK(u.pdf(0.0) == 1.0);  // closed endpoints
    CHECK(u.pdf(1.0) == 1.0);
    CHECK(u.pdf(-0.1) == 0.0);
    CHECK(u.pdf(1.1) == 0.0);
    CHECK(u.cdf(0.25) == 0.25);
    CHECK(u.cdf(-1.0) == 0.0);
    CHECK(u.cdf(2.0) == 1.0);
    CHECK(u.quantile(0.75) == 0.75);
    check_quantile_round_trip(u, 1e-10);

    const auto v = SourceDistribution::uniform(-2.0, 6.0);
    CHECK(v.pdf(0.0) == 0.125);
    CHECK(v.cdf(0.0) == 0.25);
    CHECK(v.quantile(0.5) == 2.0);
    check_quantile_round_trip(v, 1e-10);
}

TEST_CASE("exponential pdf/cdf/quantile") {
    const auto e = SourceDistribution::exponential(0.1);
    CHECK(e.pdf(0.0) == 0.1);
    CHECK(e.pdf(-1.0) == 0.0);
    CHECK(e.cdf(-1.0) == 0.0);
    CHECK(e.cdf(0.0) == 0.0);
    CHECK(e.cdf(10.0) == doctest::Approx(oracles::kOneMinusExpMinus1).scale(1.0).epsilon(1e-10));
    CHECK(e.quantile(0.5) == doctest::Approx(oracles::kTenLn2).scale(1.0).epsilon(1e-9));
    check_quantile_round_trip(e, 1e-10);
}

TEST_CASE("normal pdf/cdf/quantile") {
    const auto n = SourceDistribution::normal(0.0, 1.0);
    CHECK(n.pdf(0.0) == doctest::Approx(oracles::kInvSqrt2Pi).scale(1.0).epsilon(1e-15));
    CHECK(n.cdf(0.0) == 0.5);
    CHECK(n.quantile(0.5) == 0.0);
    CHECK(n.quantile(0.01) == doctest::Approx(oracles::kZ01).scale(1.0).epsilon(1e-8));
    CHECK(n.quantile(0.975) == doctest::Approx(oracles::kZ975).scale(1.0).epsilon(1e-8));
    check_quantile_round_trip(n, 1e-10);
    // symmetry of the polished quantile
    for (double p : {0.001, 0.1, 0.3, 0.45})
        CHECK(n.quantile(p) == doctest::Approx(-n.quantile(1.0 - p)).scale(1.0).epsilon(1e-9));

    const auto m = SourceDistribution::normal(3.0, 2.0);
    CHECK(m.cdf(3.0) == 0.5);
    CHECK(m.pdf(3.0) == doctest::Approx(oracles::kInvSqrt2Pi / 2.0).scale(1.0).epsilon(1e-15));
    CHECK(m.quantile(0.975) == doctest::Approx(3.0 + 2.0 * oracles::kZ975).scale(1.0).epsilon(1e-8));
    check_quantile_round_trip(m, 1e-10);
}

TEST_CASE("quantile rejects p outside (0,1)") {
    const auto u = SourceDistribution::uniform(0.0, 1.0);
    CHECK_THROWS_AS(u.quantile(0.0), DomainError);
    CHECK_THROWS_AS(u.quantile(1.0), DomainError);
    CHECK_THROWS_AS(u.quantile(-0.5), DomainError);
    CHECK_THROWS_AS(u.quantile(std::nan("")), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SourceDistribution::uniform(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::uniform(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::exponential(0.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::exponential(-0.1), DomainError);
    CHECK_THROWS_AS(SourceDistribution::normal(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::normal(std::nan(""), 1.0), DomainError);
}

TEST_CASE("custom distribution: triangular density 2t on [0,1]") {
    const auto c = SourceDistribution::custom(parse("2*t"), 0.0, 1.0);
    CHECK(c.pdf(0.5) == 1.0);
    CHECK(c.pdf(-0.5) == 0.0);
    CHECK(c.pdf(1.5) == 0.0);
    CHECK(c.cdf(0.5) == doctest::Approx(0.25).scale(1.0).epsilon(1e-9));
    CHECK(c.cdf(-1.0) == 0.0);
    CHECK(c.cdf(2.0) == 1.0);
    CHECK(c.quantile(0.25) == doctest::Approx(0.5).scale(1.0).epsilon(1e-9));
    check_quantile_round_trip(c, 1e-8);
    const Bracket s = c.effective_support();
    CHECK(s.lo == 0.0);
    CHECK(s.hi == 1.0);
}

TEST_CASE("custom distribution construction rejects bad densities") {
    // integrates to 0.5, not 1
    CHECK_THROWS_AS(SourceDistribution::custom(parse("t"), 0.0, 1.0), DomainError);
    // negative on part of the support
    CHECK_THROWS_AS(SourceDistribution::custom(parse("0 - t"), 0.0, 1.0), DomainError);
    // singular at the left endpoint
    CHECK_THROWS_AS(SourceDistribution::custom(parse("1/t"), 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::custom(nullptr, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(SourceDistribution::custom(parse("1"), 1.0, 0.0), DomainError);
}

TEST_CASE("sampling is deterministic per seed") {
    const auto n = SourceDistribution::normal(0.0, 1.0);
    RngState a{2024}, b{2024}, c{2025};
    const double s0 = n.sample(a);
    CHECK(s0 == n.sample(b));
    CHECK(s0 != n.sample(c));
}

TEST_CASE("sample agrees with quantile of the uniform draw") {
    const auto e = SourceDistribution::exponential(0.1);
    RngState rng{42};
    RngState mirror{42};
    for (int i = 0; i < 100; ++i) {
        const double expected = e.quantile(next_uniform(mirror));
        CHECK(e.sample(rng) == expected);
    }
}

TEST_CASE("exponential sample mean over 1e5 draws") {
    const auto e = SourceDistribution::exponential(0.1);
    RngState rng{42};
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        sum += e.sample(rng);
    CHECK(std::fabs(sum / n - 10.0) <= 0.15);  // 3 sigma of the sample mean
}

TEST_CASE("effective support carries all but ~1e-12 of the mass") {
    const auto u = SourceDistribution::uniform(-1.0, 4.0);
    CHECK(u.effective_support().lo == -1.0);
    CHECK(u.effective_support().hi == 4.0);

    const auto e = SourceDistribution::exponential(0.1);
    const Bracket se = e.effective_support();
    CHECK(se.lo == 0.0);
    CHECK(e.cdf(se.hi) >= 1.0 - 2e-12);

    const auto n = SourceDistribution::normal(1.0, 2.0);
    const Bracket sn = n.effective_support();
    CHECK(sn.lo == 1.0 - 16.0);
    CHECK(sn.hi == 1.0 + 16.0);
}

TEST_CASE("describe names the variant") {
    CHECK(SourceDistribution::uniform(0.0, 1.0).describe() == "uniform(0, 1)");
    CHECK(SourceDistribution::exponential(0.1).describe() == "exponential(rate=0.1)");
    CHECK(SourceDistribution::normal(0.0, 1.0).describe() == "normal(mean=0, stddev=1)");
    CHECK(SourceDistribution::custom(parse("2*t"), 0.0, 1.0).describe() ==
          "custom pdf on [0, 1]");
}

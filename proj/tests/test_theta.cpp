#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/theta.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace xyrenyi;

namespace {

struct Brute {
    long double t2, t3, t4;
};

// Plain q-series summed over a fixed, very long window.
Brute brute_force_direct(long double t) {
    const long double pi = std::numbers::pi_v<long double>;
    Brute b{0, 1, 1};
    for (int n = 1; n <= 400; ++n) {
        const long double e = std::exp(-pi * t * n * n);
        b.t3 += 2 * e;
        b.t4 += (n % 2 == 0 ? 2 : -2) * e;
    }
    for (int n = 0; n <= 400; ++n)
        b.t2 += 2 * std::exp(-pi * t * (n + 0.5L) * (n + 0.5L));
    return b;
}

} // namespace

TEST(ThetaConstants, LargeTLimit) {
    const ThetaConstants c = theta_constants(50.0);
    EXPECT_NEAR(c.t3, 1.0, 1e-15);
    EXPECT_NEAR(c.t4, 1.0, 1e-15);
    EXPECT_LT(c.t2, 1e-16);
    EXPECT_GT(c.t2, 0.0);
    EXPECT_EQ(c.series, ThetaSeries::Direct);
}

TEST(ThetaConstants, SelfDualPoint) {
    const ThetaConstants c = theta_constants(1.0);
    EXPECT_NEAR(c.t2, c.t4, 1e-15);
    EXPECT_NEAR(c.t3 * c.t3, std::sqrt(2.0) * c.t2 * c.t2, 1e-15);
}

TEST(ThetaConstants, TransformedMatchesLongDirectSum) {
    for (double t : {0.1, 0.3, 0.7}) {
        const ThetaConstants c = theta_constants(t);
        const Brute b = brute_force_direct(t);
        EXPECT_EQ(c.series, ThetaSeries::Transformed);
        EXPECT_NEAR(c.t2, static_cast<double>(b.t2), 1e-12) << t;
        EXPECT_NEAR(c.t3, static_cast<double>(b.t3), 1e-12) << t;
        EXPECT_NEAR(c.t4, static_cast<double>(b.t4), 1e-12) << t;
    }
}

TEST(ThetaConstants, DualSeriesAgree) {
    for (double t : {0.3, 0.5, 0.8, 1.0, 1.25, 2.0, 3.0}) {
        const ThetaConstants a = theta_constants_direct(t), b = theta_constants_transformed(t);
        EXPECT_NEAR(a.t2, b.t2, 1e-12) << t;
        EXPECT_NEAR(a.t3, b.t3, 1e-12) << t;
        EXPECT_NEAR(a.t4, b.t4, 1e-12) << t;
    }
}

TEST(ThetaConstants, NoJumpAtSeriesSwitch) {
    for (double t : {1 - 1e-9, 1.0, 1 + 1e-9}) {
        const ThetaConstants a = theta_constants_direct(t), b = theta_constants_transformed(t);
        EXPECT_LE(std::max({std::abs(a.t2 - b.t2), std::abs(a.t3 - b.t3), std::abs(a.t4 - b.t4)}), 1e-12);
    }
    // Across the switch only the slope of the functions is visible.
    const ThetaConstants lo = theta_constants(1 - 1e-9), hi = theta_constants(1 + 1e-9);
    EXPECT_LE(std::abs(lo.t3 - hi.t3), 2e-9);
    EXPECT_LE(std::abs(lo.t2 - hi.t2), 2e-9);
    EXPECT_LE(std::abs(lo.t4 - hi.t4), 2e-9);
}

TEST(ThetaConstants, ImaginaryInversionAtZeroArgument) {
    for (double t : {0.3, 0.7, 2.0, 5.0}) {
        const ThetaConstants a = theta_constants(t), b = theta_constants(1 / t);
        const double s = std::sqrt(t);
        EXPECT_NEAR(b.t3, s * a.t3, 1e-12) << t;
        EXPECT_NEAR(b.t2, s * a.t4, 1e-12) << t;
        EXPECT_NEAR(b.t4, s * a.t2, 1e-12) << t;
    }
}

TEST(ThetaConstants, JacobiQuartic) {
    for (double t = 0.05; t <= 20.0; t *= 1.3) {
        const ThetaConstants c = theta_constants(t);
        const double lhs = std::pow(c.t3, 4), rhs = std::pow(c.t2, 4) + std::pow(c.t4, 4);
        EXPECT_LE(std::abs(lhs - rhs), 1e-13) << t;
    }
}

TEST(ThetaConstants, PositiveAndNonvanishing) {
    for (double t = 0.05; t <= 20.0; t *= 1.1) {
        const ThetaConstants c = theta_constants(t);
        EXPECT_GT(std::min({c.t2, c.t3, c.t4}), 0.0) << t;
        EXPECT_TRUE(std::isfinite(c.log_t2) && std::isfinite(c.log_t4)) << t;
    }
}

TEST(ThetaConstants, TruncationRecorded) {
    for (double t : {0.2, 1.0, 4.0}) {
        const ThetaConstants c = theta_constants(t);
        EXPECT_GT(c.terms_used, 0);
        EXPECT_LT(c.tail_bound, 1e-16);
        EXPECT_EQ(c.tau, t);
    }
}

TEST(ThetaConstants, DomainErrors) {
    EXPECT_THROW(theta_constants(0.0), DomainError);
    EXPECT_THROW(theta_constants(-1.0), DomainError);
    EXPECT_THROW(theta_constants(INFINITY), DomainError);
}

TEST(NomeToK, SelfDualNome) {
    const auto [k, kp] = nome_to_k(std::exp(-std::numbers::pi));
    EXPECT_NEAR(k, 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(kp, 1 / std::sqrt(2.0), 1e-15);
}

TEST(NomeToK, SmallNome) {
    const double q = 1e-40;
    const auto [k, kp] = nome_to_k(q);
    EXPECT_NEAR(k / (4 * std::sqrt(q)), 1.0, 1e-12);
    EXPECT_EQ(kp, 1.0);
}

TEST(NomeToK, RoundTripThroughEllipticCore) {
    const EllipticData e = modulus_data(make_phase_point(3, 1));
    const auto [k, kp] = nome_to_k(e.q);
    EXPECT_NEAR(k, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(kp, std::sqrt(5.0) / 3, 1e-12);
    for (double k0 : {0.01, 0.2, 0.5, 0.9, 0.999}) {
        const double kp0 = std::sqrt((1 - k0) * (1 + k0));
        const auto [k1, kp1] = nome_to_k(modulus_data(k0, kp0).q);
        EXPECT_NEAR(k1, k0, 1e-12) << k0;
        EXPECT_NEAR(k1 * k1 + kp1 * kp1, 1.0, 1e-13) << k0;
    }
}

TEST(NomeToK, DomainErrors) {
    EXPECT_THROW(nome_to_k(0.0), DomainError);
    EXPECT_THROW(nome_to_k(1.0), DomainError);
    EXPECT_THROW(nome_to_k(-0.5), DomainError);
}

TEST(ProductIdentities, Residuals) {
    const ProductResiduals a = product_identity_residuals(std::exp(-std::numbers::pi));
    EXPECT_LE(a.odd, 1e-13);
    EXPECT_LE(a.even, 1e-13);
    const ProductResiduals b = product_identity_residuals(0.01);
    EXPECT_LE(b.odd, 1e-14);
    EXPECT_LE(b.even, 1e-14);
    for (double q : {1e-10, 0.1, 0.3, 0.6})
        EXPECT_LE(std::max(product_identity_residuals(q).odd, product_identity_residuals(q).even), 1e-13) << q;
}

TEST(ProductIdentities, LeadingOrderAtSmallNome) {
    // k^2 ~ 16 q, so (16 q / k^2)^{1/24} -> 1 like the product.
    const double q = 1e-12;
    const auto [k, kp] = nome_to_k(q);
    EXPECT_NEAR(std::pow(16 * q / (k * k * kp * kp), 1.0 / 24), 1.0, 1e-12);
}

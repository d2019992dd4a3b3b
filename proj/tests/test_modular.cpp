#include <xyrenyi/modular.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace xyrenyi;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kLambda2i = (3 - 2 * kSqrt2) * (3 - 2 * kSqrt2);

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Lambda, SelfDualPoint) {
    EXPECT_NEAR(lambda_modular(1.0), 0.5, 1e-15);
    EXPECT_NEAR(one_minus_lambda_modular(1.0), 0.5, 1e-15);
}

TEST(Lambda, LargeT) {
    EXPECT_LT(lambda_modular(20.0), 1e-25);
    EXPECT_GT(lambda_modular(20.0), 0.0);
}

TEST(Lambda, AtTwoI) {
    EXPECT_NEAR(lambda_modular(2.0), kLambda2i, 1e-15);
}

TEST(Lambda, ComplementIndependent) {
    for (double t = 0.1; t <= 10.0; t *= 1.25) {
        const ModularValues m = modular_values(t);
        EXPECT_NEAR(m.lambda + m.one_minus_lambda, 1.0, 1e-14) << t;
        EXPECT_GT(m.lambda, 0.0);
        EXPECT_LT(m.lambda, 1.0);
    }
}

TEST(Lambda, StrictlyDecreasing) {
    double prev = lambda_modular(0.1);
    for (double t = 0.11; t <= 10.0; t += 0.01) {
        const double l = lambda_modular(t);
        EXPECT_LT(l, prev) << t;
        prev = l;
    }
}

TEST(FAndG, SelfDualPoint) {
    const auto [f, g] = f_and_g(1.0);
    EXPECT_NEAR(f, 0.25, 1e-15);
    EXPECT_NEAR(g, 0.5, 1e-15);
}

TEST(FAndG, LargeT) {
    const auto [f, g] = f_and_g(15.0);
    EXPECT_GT(f, 0.0);
    EXPECT_GT(g, 0.0);
    EXPECT_LT(f, 1e-18);
    EXPECT_LT(g, 1e-36);
}

TEST(FAndG, InversionOfF) {
    for (double t : {0.3, 0.5, 2.0})
        EXPECT_NEAR(f_and_g(1 / t).first, f_and_g(t).first, 1e-12) << t;
}

TEST(FAndG, InversionOfG) {
    // g(-1/tau) = (1 - lambda)^2 / lambda = f(tau) / g(tau).
    for (double t : {0.3, 0.5, 2.0}) {
        const auto [f, g] = f_and_g(t);
        EXPECT_LE(rel(f_and_g(1 / t).second, f / g), 1e-11) << t;
    }
}

TEST(Landen, Examples) {
    EXPECT_NEAR(landen_step(0.5), kLambda2i, 1e-16);
    const double l = 1e-8;
    EXPECT_NEAR(landen_step(l) / (l * l / 16), 1.0, 1e-8);
    EXPECT_NEAR(landen_step(lambda_modular(0.7)), lambda_modular(1.4), 1e-12);
}

TEST(Landen, Composition) {
    for (double t : {0.2, 0.5, 1.0, 1.7}) {
        double l = lambda_modular(t);
        for (int n = 1; n <= 4; ++n) {
            l = landen_step(l);
            EXPECT_NEAR(l, lambda_modular(std::ldexp(t, n)), 1e-10) << t << ' ' << n;
        }
    }
}

TEST(Landen, DomainErrors) {
    EXPECT_THROW(landen_step(0.0), DomainError);
    EXPECT_THROW(landen_step(1.0), DomainError);
    EXPECT_THROW(landen_step(-0.2), DomainError);
}

TEST(KleinJ, FixedPoints) {
    EXPECT_NEAR(klein_J(1.0), 1.0, 1e-13);
    // j(2i) = 287496
    EXPECT_LE(rel(klein_J(2.0), 287496.0 / 1728.0), 1e-13);
}

TEST(KleinJ, ModularInvariance) {
    EXPECT_LE(rel(klein_J(0.5), klein_J(2.0)), 1e-11);
    EXPECT_LE(rel(klein_J(0.25), klein_J(4.0)), 1e-11);
}

TEST(KleinJ, AtLeastOneOnImaginaryAxis) {
    for (double t = 0.2; t <= 5.0; t *= 1.2)
        EXPECT_GE(klein_J(t), 1.0 - 1e-13) << t;
}

TEST(KleinJ, EisensteinRoute) {
    EXPECT_NEAR(klein_J_eisenstein(1.0), 1.0, 1e-12);
    for (double t : {1.0, 1.5, 2.0, 3.0})
        EXPECT_LE(rel(klein_J_eisenstein(t), klein_J(t)), 1e-10) << t;
}

TEST(KleinJ, EisensteinTermCap) {
    EXPECT_THROW(eisenstein_series(1e-7), ConvergenceError);
}

TEST(DivisorSigma, Values) {
    EXPECT_EQ(divisor_sigma(3, 6), 252.0);
    EXPECT_EQ(divisor_sigma(5, 1), 1.0);
    EXPECT_EQ(divisor_sigma(3, 9), 1.0 + 27 + 729);
    EXPECT_EQ(divisor_sigma(5, 4), 1.0 + 32 + 1024);
    EXPECT_THROW(divisor_sigma(3, 0), DomainError);
}

TEST(Schwarzian, ClassicalOdeResidual) {
    EXPECT_LE(schwarzian_residual(1.0), 1e-6);
    EXPECT_LE(schwarzian_residual(1.5), 1e-6);
    EXPECT_LE(schwarzian_check(1.0, 1e-3, true).residual, 1e-6);
}

TEST(Schwarzian, FourthOrderConvergence) {
    for (double t : {1.0, 1.5}) {
        const double r1 = schwarzian_residual(t, 0.08), r2 = schwarzian_residual(t, 0.04);
        const double ratio = r1 / r2;
        EXPECT_GT(ratio, 12.0) << t;
        EXPECT_LT(ratio, 20.0) << t;
    }
}

TEST(Schwarzian, PrintedRightHandSideDoesNotHold) {
    const SchwarzianCheck c = schwarzian_check(1.0);
    EXPECT_GT(c.printed_residual, 1.0);
    EXPECT_NEAR(c.printed_rhs, -8.0, 1e-12);
}

TEST(Schwarzian, DomainErrors) {
    EXPECT_THROW(schwarzian_check(0.0), DomainError);
    EXPECT_THROW(schwarzian_check(0.1, 0.05), DomainError);
}

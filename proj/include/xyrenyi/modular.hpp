#ifndef XYRENYI_MODULAR_HPP
#define XYRENYI_MODULAR_HPP

// Elliptic lambda function on the imaginary axis and the modular objects
// built on it: f = lambda(1-lambda), g = lambda^2/(1-lambda), Landen's
// doubling, Klein's absolute invariant (two routes) and a finite-difference
// check of the Schwarzian ODE satisfied by lambda.

#include <xyrenyi/errors.hpp>
#include <xyrenyi/theta.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <utility>

namespace xyrenyi {

struct ModularValues {
    double lambda = 0.0;
    double one_minus_lambda = 1.0;
    double f = 0.0;
    double g = 0.0;
    double J = 0.0;
};

/// lambda(i t) = (theta_2/theta_3)^4.
template <std::floating_point Real = double>
Real lambda_modular(Real t) {
    detail::check_tau(static_cast<double>(t));
    const ThetaLogs<Real> l = theta_logs<Real>(t);
    return std::exp(4 * (l.log_t2 - l.log_t3));
}

/// 1 - lambda(i t) = (theta_4/theta_3)^4, evaluated independently of lambda.
template <std::floating_point Real = double>
Real one_minus_lambda_modular(Real t) {
    detail::check_tau(static_cast<double>(t));
    const ThetaLogs<Real> l = theta_logs<Real>(t);
    return std::exp(4 * (l.log_t4 - l.log_t3));
}

/// ln f(i t) and ln g(i t) straight from theta logarithms.
inline std::pair<double, double> log_f_and_g(double t) {
    detail::check_tau(t);
    const ThetaLogs<double> l = theta_logs(t);
    const double log_lambda = 4 * (l.log_t2 - l.log_t3);
    const double log_comp = 4 * (l.log_t4 - l.log_t3);
    return {log_lambda + log_comp, 2 * log_lambda - log_comp};
}

inline std::pair<double, double> f_and_g(double t) {
    const auto [lf, lg] = log_f_and_g(t);
    return {std::exp(lf), std::exp(lg)};
}

/// J from lambda: (4/27) (1 - lambda + lambda^2)^3 / (lambda^2 (1-lambda)^2).
inline double klein_J_from_lambda(double lambda, double one_minus_lambda) {
    const double f = lambda * one_minus_lambda;
    const double c = 1.0 - f; // 1 - lambda + lambda^2
    return 4.0 / 27.0 * c * c * c / (f * f);
}

inline double klein_J(double t) {
    return klein_J_from_lambda(lambda_modular(t), one_minus_lambda_modular(t));
}

inline ModularValues modular_values(double t) {
    ModularValues m;
    m.lambda = lambda_modular(t);
    m.one_minus_lambda = one_minus_lambda_modular(t);
    m.f = m.lambda * m.one_minus_lambda;
    m.g = m.lambda * m.lambda / m.one_minus_lambda;
    m.J = klein_J_from_lambda(m.lambda, m.one_minus_lambda);
    return m;
}

/// Landen's transformation lambda(tau) -> lambda(2 tau).
inline double landen_step(double lambda) {
    if (!(lambda > 0) || !(lambda < 1))
        throw DomainError("landen_step needs lambda in (0, 1)");
    const double s = std::sqrt(1.0 - lambda);
    // (1 - s)/(1 + s) written as lambda/(1+s)^2 to avoid cancellation at small lambda
    const double root = lambda / ((1.0 + s) * (1.0 + s));
    return root * root;
}

/// Divisor function sigma_k(n) = sum_{d | n} d^k by direct enumeration.
inline double divisor_sigma(int k, std::int64_t n) {
    if (n < 1)
        throw DomainError("divisor_sigma needs n >= 1");
    double s = 0.0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        s += std::pow(static_cast<double>(d), k);
        const std::int64_t e = n / d;
        if (e != d)
            s += std::pow(static_cast<double>(e), k);
    }
    return s;
}

inline constexpr std::int64_t kMaxEisensteinTerms = 1'000'000;

struct EisensteinValues {
    double E4 = 1.0;
    double E6 = 1.0;
    double discriminant = 0.0; // E4^3 - E6^2
    std::int64_t terms = 0;
};

/// E4 and E6 at tau = i t from their divisor-sum q-series in Q = q^2 = e^{-2 pi t}.
inline EisensteinValues eisenstein_series(double t) {
    detail::check_tau(t);
    const double Q = std::exp(-2.0 * std::numbers::pi * t);
    double a = 0.0, b = 0.0; // sum sigma_3(n) Q^n, sum sigma_5(n) Q^n
    double Qn = 1.0;
    std::int64_t n = 1;
    for (;; ++n) {
        if (n > kMaxEisensteinTerms)
            throw ConvergenceError("Eisenstein series needs more than 1e6 terms; map t -> 1/t first");
        Qn *= Q;
        const double s5 = divisor_sigma(5, n) * Qn;
        if (n > 1 && s5 < kThetaTruncation * a)
            break;
        a += divisor_sigma(3, n) * Qn;
        b += s5;
    }
    EisensteinValues e;
    e.E4 = 1.0 + 240.0 * a;
    e.E6 = 1.0 - 504.0 * b;
    // (1+240a)^3 - (1-504b)^2 with the constant terms cancelled exactly.
    e.discriminant = 720.0 * a + 1008.0 * b + 172800.0 * a * a - 254016.0 * b * b +
                     13824000.0 * a * a * a;
    e.terms = n - 1;
    return e;
}

/// J = E4^3 / (E4^3 - E6^2).
inline double klein_J_eisenstein(double t) {
    const EisensteinValues e = eisenstein_series(t);
    return e.E4 * e.E4 * e.E4 / e.discriminant;
}

struct SchwarzianCheck {
    double schwarzian = 0.0;       // {lambda, tau} along tau = i t
    double rhs = 0.0;              // -lambda'(tau)^2 (1 - lambda + lambda^2) / (2 lambda^2 (1-lambda)^2)
    double residual = 0.0;         // |schwarzian - rhs|
    double printed_rhs = 0.0;      // -1/(2 l^2) - 1/(2 (l-1)^2) + 1/(l (l-1)), no lambda'^2 factor
    double printed_residual = 0.0; // diagnostic only; this form does not hold
};

namespace detail {

struct LambdaDerivatives {
    long double value, d1, d2, d3;
};

// Fourth-order central differences of lambda(i t) in t.
inline LambdaDerivatives lambda_derivatives(long double t, long double h) {
    auto L = [](long double x) { return lambda_modular<long double>(x); };
    const long double f0 = L(t);
    const long double p1 = L(t + h), m1 = L(t - h);
    const long double p2 = L(t + 2 * h), m2 = L(t - 2 * h);
    const long double p3 = L(t + 3 * h), m3 = L(t - 3 * h);
    LambdaDerivatives d;
    d.value = f0;
    d.d1 = (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h);
    d.d2 = (-p2 + 16 * p1 - 30 * f0 + 16 * m1 - m2) / (12 * h * h);
    d.d3 = (-p3 + 8 * p2 - 13 * p1 + 13 * m1 - 8 * m2 + m3) / (8 * h * h * h);
    return d;
}

inline long double schwarzian_along_axis(const LambdaDerivatives& d) {
    // tau = i t: d/dtau = -i d/dt, so {lambda, tau} = -{lambda, t}.
    const long double r2 = d.d2 / d.d1;
    return -(d.d3 / d.d1 - 1.5L * r2 * r2);
}

} // namespace detail

/// Standard Schwarzian {lambda, tau} = l'''/l' - (3/2)(l''/l')^2 by finite differences,
/// compared with the classical ODE for lambda. With `richardson` the h^4 error is
/// removed by combining steps h and h/2.
inline SchwarzianCheck schwarzian_check(double t, double step = 1e-3, bool richardson = false) {
    detail::check_tau(t);
    if (!(step > 0) || 3 * step >= t)
        throw DomainError("finite-difference step must satisfy 0 < 3 step < t");
    const long double tl = t, hl = step;
    detail::LambdaDerivatives d = detail::lambda_derivatives(tl, hl);
    long double S = detail::schwarzian_along_axis(d);
    if (richardson) {
        const detail::LambdaDerivatives dh = detail::lambda_derivatives(tl, hl / 2);
        S = (16 * detail::schwarzian_along_axis(dh) - S) / 15;
        d.d1 = (16 * dh.d1 - d.d1) / 15;
    }
    const long double l = d.value;
    const long double lc = one_minus_lambda_modular<long double>(tl);
    // lambda'(tau)^2 = -(d lambda / dt)^2
    const long double rhs = d.d1 * d.d1 * (1 - l * lc) / (2 * l * l * lc * lc);
    const long double printed = -1 / (2 * l * l) - 1 / (2 * lc * lc) - 1 / (l * lc);

    SchwarzianCheck c;
    c.schwarzian = static_cast<double>(S);
    c.rhs = static_cast<double>(rhs);
    c.residual = static_cast<double>(std::abs(S - rhs));
    c.printed_rhs = static_cast<double>(printed);
    c.printed_residual = static_cast<double>(std::abs(S - printed));
    return c;
}

inline double schwarzian_residual(double t, double step = 1e-3) {
    return schwarzian_check(t, step).residual;
}

} // namespace xyrenyi

#endif

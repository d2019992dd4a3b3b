#ifndef XYRENYI_THETA_HPP
#define XYRENYI_THETA_HPP

// Zero-argument Jacobi theta constants theta_2, theta_3, theta_4 at tau = i t.
//
// For t >= 1 the q-series with q = exp(-pi t) is summed directly. For t < 1
// the Jacobi imaginary transformation is used:
//   theta_2(0|it) = t^{-1/2} theta_4(0|i/t)
//   theta_3(0|it) = t^{-1/2} theta_3(0|i/t)
//   theta_4(0|it) = t^{-1/2} theta_2(0|i/t)
// so every evaluation runs a series with nome <= exp(-pi).
//
// Logarithms are carried alongside the values; theta_2 at large t and
// theta_4 at small t underflow long before their logarithms do.

#include <xyrenyi/errors.hpp>

#include <cmath>
#include <concepts>
#include <numbers>
#include <utility>

namespace xyrenyi {

inline constexpr double kThetaTruncation = 1e-18;

enum class ThetaSeries { Direct, Transformed };

template <std::floating_point Real>
struct ThetaLogs {
    Real log_t2 = 0;
    Real log_t3 = 0;
    Real log_t4 = 0;
    int terms = 0;
    Real tail = 0; // bound on the absolute error of each normalized sum
};

struct ThetaConstants {
    double t2 = 0.0;
    double t3 = 1.0;
    double t4 = 1.0;
    double log_t2 = 0.0;
    double log_t3 = 0.0;
    double log_t4 = 0.0;
    double tau = 0.0; // Im tau; tau = i * tau
    int terms_used = 0;
    double tail_bound = 0.0;
    ThetaSeries series = ThetaSeries::Direct;
};

namespace detail {

inline void check_tau(double t) {
    if (!(t > 0) || !std::isfinite(t))
        throw DomainError("theta constants need tau = i t with finite t > 0");
}

} // namespace detail

/// Direct q-series at tau = i t. Accurate for any t >= ~0.3; used for t >= 1.
template <std::floating_point Real>
ThetaLogs<Real> theta_logs_direct(Real t) {
    constexpr Real pi = std::numbers::pi_v<Real>;
    Real sum3 = 1, sum4 = 1, sum2 = 1; // sum2 = sum_{n>=0} q^{n(n+1)}
    int n = 1;
    Real next = 0;
    for (;; ++n) {
        const Real nn = static_cast<Real>(n);
        const Real term = std::exp(-pi * t * nn * nn);
        const Real term2 = std::exp(-pi * t * nn * (nn + 1));
        if (term < Real(kThetaTruncation) * sum3) {
            next = term;
            break;
        }
        sum3 += 2 * term;
        sum4 += (n % 2 == 0 ? 2 : -2) * term;
        sum2 += term2;
    }
    const Real q = std::exp(-pi * t);
    ThetaLogs<Real> out;
    out.log_t2 = std::numbers::ln2_v<Real> - pi * t / 4 + std::log(sum2);
    out.log_t3 = std::log(sum3);
    out.log_t4 = std::log(sum4);
    out.terms = n;
    out.tail = 2 * next / (1 - q);
    return out;
}

/// Jacobi-transformed series at tau = i t (direct series at i/t). Used for t < 1.
template <std::floating_point Real>
ThetaLogs<Real> theta_logs_transformed(Real t) {
    const ThetaLogs<Real> d = theta_logs_direct<Real>(1 / t);
    const Real half_log_s = -std::log(t) / 2;
    ThetaLogs<Real> out;
    out.log_t2 = half_log_s + d.log_t4;
    out.log_t3 = half_log_s + d.log_t3;
    out.log_t4 = half_log_s + d.log_t2;
    out.terms = d.terms;
    out.tail = d.tail / std::sqrt(t);
    return out;
}

template <std::floating_point Real>
ThetaLogs<Real> theta_logs(Real t) {
    return t >= 1 ? theta_logs_direct<Real>(t) : theta_logs_transformed<Real>(t);
}

namespace detail {

inline ThetaConstants pack(const ThetaLogs<double>& l, double t, ThetaSeries s) {
    ThetaConstants c;
    c.log_t2 = l.log_t2;
    c.log_t3 = l.log_t3;
    c.log_t4 = l.log_t4;
    c.t2 = std::exp(l.log_t2);
    c.t3 = std::exp(l.log_t3);
    c.t4 = std::exp(l.log_t4);
    c.tau = t;
    c.terms_used = l.terms;
    c.tail_bound = l.tail;
    c.series = s;
    return c;
}

} // namespace detail

/// Theta constants at tau = i t with automatic series selection (crossover t = 1).
inline ThetaConstants theta_constants(double t) {
    detail::check_tau(t);
    if (t >= 1.0)
        return detail::pack(theta_logs_direct(t), t, ThetaSeries::Direct);
    return detail::pack(theta_logs_transformed(t), t, ThetaSeries::Transformed);
}

inline ThetaConstants theta_constants_direct(double t) {
    detail::check_tau(t);
    return detail::pack(theta_logs_direct(t), t, ThetaSeries::Direct);
}

inline ThetaConstants theta_constants_transformed(double t) {
    detail::check_tau(t);
    return detail::pack(theta_logs_transformed(t), t, ThetaSeries::Transformed);
}

/// Modulus t of the nome q = exp(-pi t).
inline double nome_to_tau(double q) {
    if (!(q > 0) || !(q < 1))
        throw DomainError("nome must lie in (0, 1)");
    return -std::log(q) / std::numbers::pi;
}

/// k(q) = theta_2^2 / theta_3^2 and k'(q) = theta_4^2 / theta_3^2.
inline std::pair<double, double> nome_to_k(double q) {
    const ThetaConstants c = theta_constants(nome_to_tau(q));
    return {std::exp(2 * (c.log_t2 - c.log_t3)), std::exp(2 * (c.log_t4 - c.log_t3))};
}

struct ProductResiduals {
    double odd = 0.0;  // |prod_{m>=0}(1+q^{2m+1}) - (16q/(k^2 k'^2))^{1/24}|
    double even = 0.0; // |prod_{m>=1}(1+q^{2m}) - (k^2/(16 q k'))^{1/12}|
};

/// Residuals of the two infinite-product identities in k(q), k'(q).
inline ProductResiduals product_identity_residuals(double q) {
    const ThetaConstants c = theta_constants(nome_to_tau(q));
    const double log_k = 2 * (c.log_t2 - c.log_t3);
    const double log_kp = 2 * (c.log_t4 - c.log_t3);
    const double log_q = std::log(q);
    const double log16 = 4 * std::numbers::ln2;

    double odd = 1.0, even = 1.0;
    for (double qp = q; qp >= kThetaTruncation; qp *= q * q)
        odd *= 1.0 + qp;
    for (double qp = q * q; qp >= kThetaTruncation; qp *= q * q)
        even *= 1.0 + qp;

    const double rhs_odd = std::exp((log16 + log_q - 2 * log_k - 2 * log_kp) / 24);
    const double rhs_even = std::exp((2 * log_k - log16 - log_q - log_kp) / 12);
    return {std::abs(odd - rhs_odd), std::abs(even - rhs_even)};
}

} // namespace xyrenyi

#endif

#ifndef XYRENYI_RENYI_HPP
#define XYRENYI_RENYI_HPP

// Large-block Renyi entropy of the XY chain in closed form.
//
// With tau0 = I(k')/I(k) and theta_j = theta_j(0 | i alpha tau0):
//
//   h > 2:  S = (1/6) a/(1-a) ln(k k')   - (1/3) 1/(1-a) ln(theta_2 theta_4 / theta_3^2) + ln2/3
//   h < 2:  S = (1/6) a/(1-a) ln(k'/k^2) + (1/3) 1/(1-a) ln(theta_2^2 / (theta_3 theta_4)) + ln2/3
//
// plus the alpha -> 1, 0, infinity limits, the critical-line estimates, the
// alpha -> 1/(alpha tau0^2) relations and the elementary alpha = 2^n ladder.
// All entropies are in nats.

#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/errors.hpp>
#include <xyrenyi/modular.hpp>
#include <xyrenyi/result.hpp>
#include <xyrenyi/theta.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace xyrenyi {

/// |alpha - 1| at or below this is evaluated by the von Neumann closed form.
inline constexpr double kVonNeumannBand = 1e-6;
inline constexpr double kSmallAlphaGuard = 0.2;      // alpha * tau0 must stay below
inline constexpr double kCriticalFieldWindow = 0.5;  // |h - 2| must stay below
inline constexpr double kXXWindow = 0.5;             // gamma must stay below
inline constexpr double kInversionSingularity = 1e-10;
inline constexpr int kMaxLadderExponent = 8;

namespace detail {

inline void require_alpha(double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha))
        throw DomainError("Renyi order alpha must be finite and > 0");
}

inline void require_not_critical(const PhasePoint& p) {
    if (is_critical(p.region))
        throw CriticalPointError("closed forms degenerate on the critical line " +
                                 std::string(to_string(p.region)));
}

inline void require_bulk(const PhasePoint& p, const char* what) {
    require_not_critical(p);
    if (!is_bulk(p.region))
        throw DomainError(std::string(what) + " needs a bulk phase point (tau0 finite)");
}

inline RenyiResult factorizing_result(const PhasePoint& p, double alpha) {
    return RenyiResult{std::numbers::ln2, Method::Factorizing, alpha, p, 0.0};
}

// ln of the elliptic prefactor: ln(k k') above the critical field, ln(k'/k^2) below.
inline double log_prefactor(const EllipticData& e, bool above) {
    return above ? std::log(e.k) + std::log(e.kprime) : std::log(e.kprime) - 2 * std::log(e.k);
}

// Theta-route closed form, no alpha = 1 routing.
inline RenyiResult closed_form_raw(const PhasePoint& p, const EllipticData& e, double alpha) {
    const bool above = above_critical_field(p.region);
    const ThetaConstants th = theta_constants(alpha * e.tau0);
    const double log_ratio = above ? th.log_t2 + th.log_t4 - 2 * th.log_t3
                                   : 2 * th.log_t2 - th.log_t3 - th.log_t4;
    const double a = alpha / (1 - alpha) * log_prefactor(e, above) / 6;
    const double b = (above ? -1.0 : 1.0) * log_ratio / (3 * (1 - alpha));
    const double c = std::numbers::ln2 / 3;
    RenyiResult r;
    r.value = a + b + c;
    r.method = Method::ClosedForm;
    r.alpha = alpha;
    r.point = p;
    r.tol_attained = 8 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b) + c) +
                     th.tail_bound / (3 * std::abs(1 - alpha));
    return r;
}

} // namespace detail

/// Von Neumann entropy from the explicit alpha -> 1 limit of the closed form.
inline RenyiResult von_neumann(const PhasePoint& p) {
    detail::require_not_critical(p);
    if (p.region == Region::FactorizingLine)
        return detail::factorizing_result(p, 1.0);
    const EllipticData e = modulus_data(p);
    const double k2 = e.k * e.k, kp2 = e.kprime * e.kprime;
    const double w = 2 * e.Ik * e.Ikprime / std::numbers::pi;
    double value;
    if (above_critical_field(p.region))
        value = (std::log(4 / (e.k * e.kprime)) + (k2 - kp2) * w) / 6;
    else
        value = (std::log(4 * k2 / e.kprime) + (2 - k2) * w) / 6;
    return RenyiResult{value, Method::VonNeumann, 1.0, p,
                       8 * std::numeric_limits<double>::epsilon() * (std::abs(value) + w)};
}

/// Closed-form Renyi entropy; alpha within kVonNeumannBand of 1 is routed to von_neumann.
inline RenyiResult renyi_closed_form(const PhasePoint& p, double alpha) {
    detail::require_alpha(alpha);
    detail::require_not_critical(p);
    if (p.region == Region::FactorizingLine)
        return detail::factorizing_result(p, alpha);
    if (std::abs(alpha - 1) <= kVonNeumannBand) {
        RenyiResult r = von_neumann(p);
        r.alpha = alpha;
        return r;
    }
    return detail::closed_form_raw(p, modulus_data(p), alpha);
}

/// Von Neumann entropy as the alpha-derivative at alpha = 1 of ln(k_a k'_a)
/// (h > 2) or ln(k'_a / k_a^2) (h < 2). Verification route only.
inline double von_neumann_derivative_route(const PhasePoint& p, double step = 1e-3) {
    detail::require_bulk(p, "von_neumann_derivative_route");
    const EllipticData e = modulus_data(p);
    const bool above = above_critical_field(p.region);
    auto log_modulus = [&](double a) {
        const ThetaConstants th = theta_constants(a * e.tau0);
        const double log_k = 2 * (th.log_t2 - th.log_t3);
        const double log_kp = 2 * (th.log_t4 - th.log_t3);
        return above ? log_k + log_kp : log_kp - 2 * log_k;
    };
    const double d = (-log_modulus(1 + 2 * step) + 8 * log_modulus(1 + step) -
                      8 * log_modulus(1 - step) + log_modulus(1 - 2 * step)) /
                     (12 * step);
    return -detail::log_prefactor(e, above) / 6 + std::numbers::ln2 / 3 + d / 6;
}

/// Single-copy entanglement S_inf = -ln p_max, the alpha -> infinity limit.
inline RenyiResult large_alpha_limit(const PhasePoint& p) {
    detail::require_bulk(p, "large_alpha_limit");
    const EllipticData e = modulus_data(p);
    const double pi = std::numbers::pi;
    double value;
    if (above_critical_field(p.region))
        value = -std::log(e.k * e.kprime / 4) / 6 - pi * e.tau0 / 12;
    else
        value = -std::log(e.kprime / (4 * e.k * e.k)) / 6 + pi * e.tau0 / 6;
    return RenyiResult{value, Method::AsymptoticLargeAlpha,
                       std::numeric_limits<double>::infinity(), p, 0.0};
}

/// Large-alpha representation at finite alpha; the remainder is O(e^{-alpha pi tau0}/alpha).
inline RenyiResult large_alpha_asymptotic(const PhasePoint& p, double alpha) {
    detail::require_alpha(alpha);
    detail::require_bulk(p, "large_alpha_asymptotic");
    if (alpha == 1.0)
        throw SingularityError("large-alpha representation has a pole at alpha = 1");
    const EllipticData e = modulus_data(p);
    const double pi = std::numbers::pi;
    const double r = alpha / (1 - alpha);
    double value;
    double remainder;
    if (above_critical_field(p.region)) {
        value = r * (std::log(e.k * e.kprime / 4) / 6 + pi * e.tau0 / 12);
        remainder = std::exp(-alpha * pi * e.tau0) / alpha;
    } else {
        value = r * (std::log(e.kprime / (4 * e.k * e.k)) / 6 - pi * e.tau0 / 6) +
                std::numbers::ln2 / (1 - alpha);
        remainder = std::exp(-2 * alpha * pi * e.tau0) / alpha;
    }
    return RenyiResult{value, Method::AsymptoticLargeAlpha, alpha, p, remainder};
}

/// Leading small-alpha behaviour ((1+a)/a)(pi/12) I(k)/I(k'); requires alpha tau0 < 0.2.
inline RenyiResult small_alpha_estimate(const PhasePoint& p, double alpha) {
    detail::require_alpha(alpha);
    detail::require_bulk(p, "small_alpha_estimate");
    const EllipticData e = modulus_data(p);
    if (!(alpha * e.tau0 < kSmallAlphaGuard))
        throw GuardError("small-alpha estimate needs alpha*tau0 < 0.2 (got " +
                         std::to_string(alpha * e.tau0) + ")");
    const double value = (1 + alpha) / alpha * std::numbers::pi / 12 / e.tau0;
    return RenyiResult{value, Method::AsymptoticSmallAlpha, alpha, p, alpha * value};
}

/// S ~ ((1+a)/a)(-(1/12) ln|2-h| + (1/6) ln 4 gamma) as h -> 2 at fixed gamma.
inline double critical_field_estimate(double gamma, double h, double alpha) {
    detail::require_alpha(alpha);
    if (!(gamma > 0))
        throw DomainError("critical-field estimate needs gamma > 0");
    const double d = std::abs(h - 2.0);
    if (!(d > 0) || !(d < kCriticalFieldWindow))
        throw DomainError("critical-field estimate needs 0 < |h - 2| < 0.5");
    return (1 + alpha) / alpha * (-std::log(d) / 12 + std::log(4 * gamma) / 6);
}

/// S ~ ((1+a)/a)(-(1/6) ln gamma + (1/12) ln(4 - h^2) + (1/6) ln 2) as gamma -> 0 with h < 2.
inline double xx_limit_estimate(double gamma, double h, double alpha) {
    detail::require_alpha(alpha);
    if (!(gamma > 0) || !(gamma < kXXWindow))
        throw DomainError("XX-limit estimate needs 0 < gamma < 0.5");
    if (!(h >= 0) || !(h < factorizing_field(gamma)))
        throw DomainError("XX-limit estimate needs 0 <= h < 2 sqrt(1 - gamma^2)");
    return (1 + alpha) / alpha *
           (-std::log(gamma) / 6 + std::log((2 - h) * (2 + h)) / 12 + std::numbers::ln2 / 6);
}

/// Entropy at the dual order 1/(alpha tau0^2), obtained from S(alpha) through the
/// tau -> -1/tau symmetry of f (h > 2) and g (h < 2).
inline RenyiResult alpha_inversion(const PhasePoint& p, double alpha) {
    detail::require_alpha(alpha);
    detail::require_bulk(p, "alpha_inversion");
    const EllipticData e = modulus_data(p);
    const double t2 = e.tau0 * e.tau0;
    const double at2 = alpha * t2;
    if (std::abs(at2 - 1) < kInversionSingularity)
        throw SingularityError("alpha_inversion is singular at alpha*tau0^2 = 1");
    const RenyiResult base = renyi_closed_form(p, alpha);
    const double s = base.value;
    const double a2t2 = alpha * alpha * t2;
    const double d = at2 - 1;
    double value;
    if (above_critical_field(p.region)) {
        value = at2 / d * (1 - alpha) * s + (1 - a2t2) / d * std::log(e.k * e.kprime / 4) / 6;
    } else {
        // g(-1/tau) = f(tau)/g(tau)
        const double log_f = log_f_and_g(alpha * e.tau0).first;
        value = -at2 * (1 - alpha) / d * s +
                (1 + a2t2) / (6 * d) * (std::log(e.kprime) - 2 * std::log(e.k)) +
                std::numbers::ln2 / 3 * (2 * at2 - a2t2 - 1) / d + at2 / d * log_f / 12;
    }
    const double gain = std::abs(at2 * (1 - alpha) / d);
    return RenyiResult{value, Method::AlphaInversion, 1 / at2, p,
                       gain * base.tol_attained + 8 * std::numeric_limits<double>::epsilon() * std::abs(value)};
}

/// h < 2 relation exactly as it is usually printed (with g(-1/tau) = g/f and the
/// f-term at i alpha tau0, or at i tau0 when `f_at_tau0`). It does not hold; kept
/// so the verification report can show the discrepancy.
inline double alpha_inversion_printed_h_lt_2(const PhasePoint& p, double alpha, bool f_at_tau0 = false) {
    detail::require_bulk(p, "alpha_inversion_printed_h_lt_2");
    const EllipticData e = modulus_data(p);
    const double t2 = e.tau0 * e.tau0, at2 = alpha * t2, d = at2 - 1;
    const double s = renyi_closed_form(p, alpha).value;
    const double log_f = log_f_and_g((f_at_tau0 ? 1.0 : alpha) * e.tau0).first;
    return (at2 - alpha * alpha * t2) / d * s +
           (1 - alpha * alpha * t2) / d * std::log(e.kprime / (4 * e.k * e.k)) / 6 -
           at2 / d * log_f / 12;
}

/// Renyi entropy at alpha = 2^n from Landen's transformation alone (no theta series).
inline RenyiResult landen_ladder(const PhasePoint& p, int n) {
    if (n < 1 || n > kMaxLadderExponent)
        throw GuardError("landen_ladder needs 1 <= n <= 8");
    const double alpha = std::ldexp(1.0, n);
    detail::require_not_critical(p);
    if (p.region == Region::FactorizingLine) {
        RenyiResult r = detail::factorizing_result(p, alpha);
        r.method = Method::LandenLadder;
        return r;
    }
    const EllipticData e = modulus_data(p);
    const bool above = above_critical_field(p.region);
    const double k = e.k, kp = e.kprime;
    const double log_k = std::log(k), log_kp = std::log(kp);
    const double log_1pkp = std::log1p(kp);
    double value;
    if (n == 1) {
        const double log_1mkp = 2 * log_k - log_1pkp; // 1 - k' = k^2/(1 + k')
        if (above)
            value = -(2 * log_k + 1.5 * log_kp + 2 * log_1pkp - log_1mkp) / 6 + std::numbers::ln2 / 2;
        else
            value = -(1.5 * log_kp - 4 * log_k + 2 * log_1mkp - log_1pkp) / 6 + std::numbers::ln2 / 2;
    } else {
        // (k, k') -> ((1-k')/(1+k'), 2 sqrt(k')/(1+k')), carried as logarithms.
        double lk = log_k, lkp = log_kp, kpv = kp;
        for (int i = 0; i < n; ++i) {
            const double l1p = std::log1p(kpv);
            const double lk_next = 2 * lk - 2 * l1p;
            const double k_next = std::exp(lk_next);
            lkp = k_next < 0.7 ? 0.5 * std::log1p(-k_next * k_next)
                               : std::numbers::ln2 + 0.5 * lkp - l1p;
            lk = lk_next;
            kpv = std::exp(lkp);
        }
        const double pre = alpha / (1 - alpha) / 6;
        if (above)
            value = pre * (log_k + log_kp) - (lk + lkp) / (6 * (1 - alpha)) + std::numbers::ln2 / 3;
        else
            value = pre * (log_kp - 2 * log_k) + (2 * lk - lkp) / (6 * (1 - alpha)) +
                    std::numbers::ln2 / 3;
    }
    return RenyiResult{value, Method::LandenLadder, alpha, p,
                       16 * std::numeric_limits<double>::epsilon() * (1 + std::abs(value))};
}

} // namespace xyrenyi

#endif

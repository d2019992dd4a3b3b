#ifndef XYRENYI_ELLIPTIC_CORE_HPP
#define XYRENYI_ELLIPTIC_CORE_HPP

// Phase-diagram classification of the XY chain and the map (h, gamma) ->
// elliptic parameter k -> complete integrals -> modulus tau0 and nome q.

#include <xyrenyi/errors.hpp>

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

namespace xyrenyi {

inline constexpr double kDefaultTieTol = 1e-9;

enum class Region { Case1a, Case1b, Case2, FactorizingLine, CriticalField, CriticalXX };

constexpr std::string_view to_string(Region r) noexcept {
    switch (r) {
    case Region::Case1a: return "Case1a";
    case Region::Case1b: return "Case1b";
    case Region::Case2: return "Case2";
    case Region::FactorizingLine: return "FactorizingLine";
    case Region::CriticalField: return "CriticalField";
    case Region::CriticalXX: return "CriticalXX";
    }
    return "?";
}

constexpr bool is_bulk(Region r) noexcept {
    return r == Region::Case1a || r == Region::Case1b || r == Region::Case2;
}

constexpr bool is_critical(Region r) noexcept {
    return r == Region::CriticalField || r == Region::CriticalXX;
}

/// True for the h > 2 branch of every closed form (half-integer spectrum).
constexpr bool above_critical_field(Region r) noexcept { return r == Region::Case2; }

/// Physical coordinates with the region they were classified into.
struct PhasePoint {
    double h = 0.0;
    double gamma = 0.0;
    Region region = Region::Case2;
};

/// Factorizing field h_f(gamma) = 2 sqrt(1 - gamma^2); only defined for gamma <= 1.
inline double factorizing_field(double gamma) {
    return 2.0 * std::sqrt((1.0 - gamma) * (1.0 + gamma));
}

/// Special lines (critical field, XX line, factorizing line) win over bulk cases.
inline Region classify_region(double h, double gamma, double tie_tol = kDefaultTieTol) {
    if (!std::isfinite(h) || !std::isfinite(gamma))
        throw DomainError("h and gamma must be finite");
    if (h < -tie_tol)
        throw DomainError("magnetic field h must be >= 0");
    if (gamma < -tie_tol)
        throw DomainError("anisotropy gamma must be > 0");
    if (std::abs(h - 2.0) <= tie_tol)
        return Region::CriticalField;
    if (gamma <= tie_tol) {
        if (h < 2.0)
            return Region::CriticalXX;
        throw DomainError("anisotropy gamma must be > 0");
    }
    if (gamma <= 1.0 && std::abs(h - factorizing_field(gamma)) <= tie_tol)
        return Region::FactorizingLine;
    if (h > 2.0)
        return Region::Case2;
    if (gamma < 1.0 && h < factorizing_field(gamma))
        return Region::Case1b;
    return Region::Case1a;
}

inline PhasePoint make_phase_point(double h, double gamma, double tie_tol = kDefaultTieTol) {
    return PhasePoint{h, gamma, classify_region(h, gamma, tie_tol)};
}

/// (k, k') from the region formulas. Each is evaluated directly in factored
/// form so that neither loses digits near the critical or factorizing lines.
inline std::pair<double, double> elliptic_moduli(const PhasePoint& p) {
    const double h = p.h;
    const double g = p.gamma;
    switch (p.region) {
    case Region::CriticalField:
    case Region::CriticalXX:
        throw CriticalPointError(std::string("elliptic parameter degenerates to k = 1 on ") +
                                 std::string(to_string(p.region)));
    case Region::FactorizingLine:
        return {0.0, 1.0};
    case Region::Case2: {
        const double above = (h - 2.0) * (h + 2.0) / 4.0; // h^2/4 - 1 > 0
        const double denom = above + g * g;
        return {g / std::sqrt(denom), std::sqrt(above / denom)};
    }
    case Region::Case1a: {
        double num; // h^2/4 + gamma^2 - 1
        if (g < 1.0) {
            const double hf = factorizing_field(g);
            num = (h - hf) * (h + hf) / 4.0;
        } else {
            num = h * h / 4.0 + (g - 1.0) * (g + 1.0);
        }
        const double below = (2.0 - h) * (2.0 + h) / 4.0; // 1 - h^2/4
        return {std::sqrt(num) / g, std::sqrt(below) / g};
    }
    case Region::Case1b: {
        const double hf = factorizing_field(g);
        const double num = (hf - h) * (hf + h) / 4.0; // 1 - h^2/4 - gamma^2
        const double below = (2.0 - h) * (2.0 + h) / 4.0;
        return {std::sqrt(num / below), g / std::sqrt(below)};
    }
    }
    throw DomainError("unknown region");
}

inline double elliptic_parameter(const PhasePoint& p) { return elliptic_moduli(p).first; }

namespace detail {

/// Arithmetic-geometric mean of (1, b), b in (0, 1].
template <std::floating_point Real>
Real agm_unit(Real b) {
    Real a = 1;
    for (int it = 0; it < 64; ++it) {
        if (std::abs(a - b) <= Real(1e-16) * a)
            break;
        const Real an = (a + b) / 2;
        const Real bn = std::sqrt(a * b);
        if (an == a && bn == b)
            break;
        a = an;
        b = bn;
    }
    return (a + b) / 2;
}

} // namespace detail

/// I(k) = pi / (2 AGM(1, k')) given the complementary parameter k' in (0, 1].
template <std::floating_point Real = double>
Real complete_elliptic_K_from_complement(Real kprime) {
    if (!(kprime > 0) || kprime > 1)
        throw DomainError("complementary parameter must lie in (0, 1]");
    return std::numbers::pi_v<Real> / (2 * detail::agm_unit(kprime));
}

/// Complete elliptic integral of the first kind, I(k) for k in [0, 1).
template <std::floating_point Real = double>
Real complete_elliptic_K(Real k) {
    if (!(k >= 0) || k >= 1)
        throw DomainError("elliptic parameter must lie in [0, 1)");
    return complete_elliptic_K_from_complement(std::sqrt((1 - k) * (1 + k)));
}

/// Elliptic data of a phase point. On the factorizing line k = 0 and the
/// modulus is infinite (q = 0); `degenerate` flags that case.
struct EllipticData {
    double k = 0.0;
    double kprime = 1.0;
    double Ik = std::numbers::pi / 2;
    double Ikprime = std::numeric_limits<double>::infinity();
    double tau0 = std::numeric_limits<double>::infinity();
    double eps = std::numeric_limits<double>::infinity();
    double q = 0.0;
    bool degenerate = true;
};

/// Elliptic data for an explicit (k, k') pair with k in (0, 1).
inline EllipticData modulus_data(double k, double kprime) {
    if (!(k > 0) || !(kprime > 0) || k >= 1 || kprime >= 1)
        throw DomainError("modulus data needs k, k' in (0, 1)");
    EllipticData d;
    d.k = k;
    d.kprime = kprime;
    d.Ik = complete_elliptic_K_from_complement(kprime);
    d.Ikprime = complete_elliptic_K_from_complement(k);
    d.tau0 = d.Ikprime / d.Ik;
    d.eps = std::numbers::pi * d.tau0;
    d.q = std::exp(-std::numbers::pi * d.Ikprime / d.Ik);
    d.degenerate = false;
    return d;
}

inline EllipticData modulus_data(const PhasePoint& p) {
    const auto [k, kp] = elliptic_moduli(p);
    if (p.region == Region::FactorizingLine)
        return EllipticData{};
    return modulus_data(k, kp);
}

} // namespace xyrenyi

#endif

#ifndef XYRENYI_SERIES_ORACLE_HPP
#define XYRENYI_SERIES_ORACLE_HPP

// Direct summation of the large-block entropy over the limiting spectrum
//   lambda_m = tanh((m + (1 - sigma)/2) pi tau0),   m in Z,
// with sigma = 0 above the critical field (h > 2) and sigma = 1 below it.
// Each eigen-pair contributes probabilities 1/(1 + e^{-x}) and e^{-x}/(1 + e^{-x})
// with x = 2 |m + (1 - sigma)/2| pi tau0; every summand is written in x so
// nothing underflows or cancels when lambda_m -> +-1.
//
// Shares no code with the theta-function route.

#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/errors.hpp>
#include <xyrenyi/result.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace xyrenyi {

inline constexpr double kDefaultSeriesTol = 1e-13;
inline constexpr std::int64_t kMaxSeriesTerms = 1'000'000;

/// Branch selector of the limiting spectrum.
inline int spectrum_sigma(Region r) { return above_critical_field(r) ? 0 : 1; }

struct EigenvalueSpectrum {
    double tau0 = 0.0;
    int sigma = 1;
    std::int64_t first_index = 0; // m of lambdas[0]
    std::vector<double> lambdas;
};

/// lambda_m over a window symmetric about the spectrum's centre
/// (m in [-M, M] for sigma = 1, m in [-M-1, M] for sigma = 0).
inline EigenvalueSpectrum eigenvalue_spectrum(double tau0, int sigma, std::int64_t half_window) {
    if (sigma != 0 && sigma != 1)
        throw DomainError("sigma must be 0 or 1");
    EigenvalueSpectrum s;
    s.tau0 = tau0;
    s.sigma = sigma;
    s.first_index = sigma == 1 ? -half_window : -half_window - 1;
    for (std::int64_t m = s.first_index; m <= half_window; ++m) {
        const double y = (static_cast<double>(m) + (1 - sigma) / 2.0) * std::numbers::pi * tau0;
        s.lambdas.push_back(std::tanh(y));
    }
    return s;
}

struct SeriesSum {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms = 0;
};

namespace detail {

// ln[p^a + (1-p)^a] with p = 1/(1+e^{-x}), x >= 0.
inline double renyi_pair_log(double x, double alpha) {
    return std::log1p(std::exp(-alpha * x)) - alpha * std::log1p(std::exp(-x));
}

// Binary entropy H(p) with p = 1/(1+e^{-x}), x >= 0.
inline double binary_entropy(double x) {
    const double e = std::exp(-x);
    if (e == 0.0)
        return 0.0;
    return std::log1p(e) + x * e / (1.0 + e);
}

inline void check_tau0(double tau0) {
    if (!(tau0 > 0))
        throw DomainError("spectrum needs tau0 > 0");
}

template <class Summand, class Tail>
SeriesSum fold_sum(double tau0, int sigma, double tol, double prefactor, Summand summand, Tail tail) {
    check_tau0(tau0);
    if (!(tol > 0))
        throw DomainError("series tolerance must be > 0");
    const double eps = std::numbers::pi * tau0;
    SeriesSum s;
    // sigma = 1: m = 0 is handled by the caller, pairs m, -m for m >= 1 give x = 2 m eps.
    // sigma = 0: pairs m, -m-1 for m >= 0 give x = (2m+1) eps.
    for (std::int64_t m = sigma == 1 ? 1 : 0;; ++m) {
        const double x = (2.0 * static_cast<double>(m) + 1.0 - sigma) * eps;
        const double bound = std::abs(prefactor) * 2.0 * tail(x, eps);
        if (bound < tol) {
            s.tail_bound = bound;
            break;
        }
        if (s.terms >= kMaxSeriesTerms)
            throw ConvergenceError("entropy series exceeds 1e6 terms (tau0 too small: near-critical input)");
        s.value += 2.0 * summand(x);
        ++s.terms;
    }
    s.value *= prefactor;
    return s;
}

} // namespace detail

/// Renyi entropy of the spectrum with modulus tau0 and branch sigma.
inline SeriesSum renyi_series_sum(double tau0, int sigma, double alpha, double tol = kDefaultSeriesTol) {
    if (!(alpha > 0) || alpha == 1.0)
        throw DomainError("renyi_series needs alpha > 0, alpha != 1");
    auto summand = [alpha](double x) { return detail::renyi_pair_log(x, alpha); };
    // sum_{j>=0} e^{-a(x + 2 j eps)} + a e^{-(x + 2 j eps)} bounds the folded tail.
    auto tail = [alpha](double x, double eps) {
        return std::exp(-alpha * x) / -std::expm1(-2.0 * alpha * eps) +
               alpha * std::exp(-x) / -std::expm1(-2.0 * eps);
    };
    SeriesSum s = detail::fold_sum(tau0, sigma, tol, 1.0 / (1.0 - alpha), summand, tail);
    if (sigma == 1)
        s.value += std::numbers::ln2; // m = 0: ln(2 * 2^{-alpha}) / (1 - alpha)
    return s;
}

/// Von Neumann entropy of the same spectrum, sum of binary entropies.
inline SeriesSum von_neumann_series_sum(double tau0, int sigma, double tol = kDefaultSeriesTol) {
    auto tail = [](double x, double eps) {
        const double r = -std::expm1(-2.0 * eps);
        return std::exp(-x) * (1.0 + x + 2.0 * eps / r) / r;
    };
    SeriesSum s = detail::fold_sum(tau0, sigma, tol, 1.0, detail::binary_entropy, tail);
    if (sigma == 1)
        s.value += std::numbers::ln2;
    return s;
}

/// Same sum taken term by term over the symmetric window of eigenvalue_spectrum.
inline double renyi_series_unfolded(double tau0, int sigma, double alpha, std::int64_t half_window) {
    detail::check_tau0(tau0);
    const double eps = std::numbers::pi * tau0;
    const std::int64_t first = sigma == 1 ? -half_window : -half_window - 1;
    double sum = 0.0;
    for (std::int64_t m = first; m <= half_window; ++m) {
        const double x = std::abs(2.0 * static_cast<double>(m) + 1.0 - sigma) * eps;
        sum += detail::renyi_pair_log(x, alpha);
    }
    return sum / (1.0 - alpha);
}

/// -ln p_max: every mode contributes its larger probability 1/(1 + e^{-x}).
inline double single_copy_entropy_series(double tau0, int sigma, double tol = kDefaultSeriesTol) {
    auto tail = [](double x, double eps) { return std::exp(-x) / -std::expm1(-2.0 * eps); };
    auto summand = [](double x) { return std::log1p(std::exp(-x)); };
    SeriesSum s = detail::fold_sum(tau0, sigma, tol, 1.0, summand, tail);
    if (sigma == 1)
        s.value += std::numbers::ln2;
    return s.value;
}

namespace detail {

inline double series_tau0(const PhasePoint& p) {
    if (is_critical(p.region))
        throw CriticalPointError("series oracle undefined on the critical line " +
                                 std::string(to_string(p.region)));
    return modulus_data(p).tau0;
}

} // namespace detail

/// Renyi entropy of a phase point by direct summation of the spectrum.
inline RenyiResult renyi_series(const PhasePoint& p, double alpha, double tol = kDefaultSeriesTol) {
    if (!(alpha > 0))
        throw DomainError("Renyi order alpha must be > 0");
    RenyiResult r;
    r.alpha = alpha;
    r.point = p;
    r.method = Method::Series;
    if (p.region == Region::FactorizingLine) {
        // tau0 = infinity: all lambda_m = +-1 except lambda_0 = 0.
        r.value = std::numbers::ln2;
        return r;
    }
    const SeriesSum s = renyi_series_sum(detail::series_tau0(p), spectrum_sigma(p.region), alpha, tol);
    r.value = s.value;
    r.tol_attained = s.tail_bound;
    return r;
}

inline RenyiResult von_neumann_series(const PhasePoint& p, double tol = kDefaultSeriesTol) {
    RenyiResult r;
    r.point = p;
    r.method = Method::Series;
    if (p.region == Region::FactorizingLine) {
        r.value = std::numbers::ln2;
        return r;
    }
    const SeriesSum s = von_neumann_series_sum(detail::series_tau0(p), spectrum_sigma(p.region), tol);
    r.value = s.value;
    r.tol_attained = s.tail_bound;
    return r;
}

} // namespace xyrenyi

#endif

#ifndef XYRENYI_VERIFY_HPP
#define XYRENYI_VERIFY_HPP

// Identity and oracle checks grouped into suites, each family reporting its
// largest residual against a declared tolerance.

#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/modular.hpp>
#include <xyrenyi/renyi.hpp>
#include <xyrenyi/series_oracle.hpp>
#include <xyrenyi/theta.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace xyrenyi {

struct FamilyResult {
    std::string name;
    int checks = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool informational = false; // reported, never fails the suite

    bool passed() const { return informational || max_residual <= tolerance; }
};

struct VerifyReport {
    std::string suite;
    std::vector<FamilyResult> families;

    bool passed() const {
        return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.passed(); });
    }
    int checks() const {
        int n = 0;
        for (const auto& f : families)
            n += f.checks;
        return n;
    }
};

inline void print_report(std::ostream& os, const VerifyReport& r) {
    os << "suite " << r.suite << ": " << r.checks() << " checks\n";
    for (const auto& f : r.families) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-28s checks=%-4d max_residual=%-12.3e tol=%-9.1e %s\n",
                      f.name.c_str(), f.checks, f.max_residual, f.tolerance,
                      f.informational ? "INFO" : (f.passed() ? "PASS" : "FAIL"));
        os << line;
    }
    os << (r.passed() ? "PASS" : "FAIL") << '\n';
}

namespace verify_detail {

class Family {
public:
    Family(std::string name, double tol, std::optional<double> override_tol, bool info = false) {
        r_.name = std::move(name);
        r_.tolerance = override_tol && !info ? *override_tol : tol;
        r_.informational = info;
    }
    void add(double residual) {
        ++r_.checks;
        if (!(residual <= r_.max_residual)) // NaN propagates as failure
            r_.max_residual = std::isnan(residual) ? INFINITY : residual;
    }
    FamilyResult done() const { return r_; }

private:
    FamilyResult r_;
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// I(k) as the periodic integral over theta in [0, pi/2] of (1 - k^2 sin^2)^{-1/2};
// the trapezoid rule converges geometrically for it.
inline double elliptic_K_trapezoid(double k) {
    double prev = 0.0;
    for (int n = 16;; n *= 2) {
        const double hstep = std::numbers::pi / 2 / n;
        double s = 0.5 * (1.0 + 1.0 / std::sqrt(1 - k * k));
        for (int i = 1; i < n; ++i) {
            const double sn = std::sin(i * hstep);
            s += 1.0 / std::sqrt(1 - k * k * sn * sn);
        }
        s *= hstep;
        if (n > 16 && std::abs(s - prev) <= 1e-15 * s)
            return s;
        if (n > (1 << 22))
            return s;
        prev = s;
    }
}

inline const std::array<double, 6>& grid_h() {
    static const std::array<double, 6> v{0.5, 1.2, 1.9, 2.5, 3.0, 5.0};
    return v;
}
inline const std::array<double, 3>& grid_gamma() {
    static const std::array<double, 3> v{0.25, 0.5, 1.0};
    return v;
}
inline const std::array<double, 6>& grid_alpha() {
    static const std::array<double, 6> v{0.3, 0.5, 2.0, 3.0, 7.0, 10.0};
    return v;
}

} // namespace verify_detail

inline VerifyReport verify_elliptic(std::optional<double> tol = std::nullopt) {
    using namespace verify_detail;
    VerifyReport rep{"elliptic", {}};
    Family agm("agm_vs_quadrature", 1e-12, tol);
    for (double k : {0.1, 0.5, std::sqrt(0.5), 0.9, 0.99})
        agm.add(rel(complete_elliptic_K(k), elliptic_K_trapezoid(k)));
    rep.families.push_back(agm.done());

    Family sym("K_symmetry_at_1/sqrt2", 1e-15, tol);
    sym.add(rel(complete_elliptic_K(std::sqrt(0.5)), complete_elliptic_K_from_complement(std::sqrt(0.5))));
    rep.families.push_back(sym.done());

    Family unit("k2_plus_kprime2", 1e-15, tol);
    Family dual("case2_case1a_duality", 1e-13, tol);
    for (double h : grid_h())
        for (double g : grid_gamma()) {
            const PhasePoint p = make_phase_point(h, g);
            const auto [k, kp] = elliptic_moduli(p);
            unit.add(std::abs(k * k + kp * kp - 1));
            if (h > 2)
                dual.add(std::abs(k * (std::sqrt(h * h / 4 + g * g - 1) / g) - 1));
        }
    rep.families.push_back(unit.done());
    rep.families.push_back(dual.done());
    return rep;
}

inline VerifyReport verify_theta(std::optional<double> tol = std::nullopt) {
    using namespace verify_detail;
    VerifyReport rep{"theta", {}};
    Family jac("jacobi_dual_series", 1e-12, tol);
    Family quart("jacobi_quartic", 1e-13, tol);
    Family nonzero("nonvanishing_min_theta", 0.0, tol);
    Family modz("theta_inversion_z0", 1e-12, tol);
    for (double t : {0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0}) {
        const auto d = theta_constants_direct(t), x = theta_constants_transformed(t);
        jac.add(std::max({std::abs(d.t2 - x.t2), std::abs(d.t3 - x.t3), std::abs(d.t4 - x.t4)}));
    }
    for (double t = 0.05; t <= 20.0; t *= 1.25) {
        const auto c = theta_constants(t);
        const double t3_4 = std::pow(c.t3, 4);
        quart.add(std::abs(t3_4 - std::pow(c.t2, 4) - std::pow(c.t4, 4)));
        nonzero.add(std::min({c.log_t2, c.log_t3, c.log_t4}) > -700 && std::min({c.t2, c.t3, c.t4}) > 0 ? 0.0 : 1.0);
    }
    for (double t : {0.3, 0.7, 2.0, 5.0}) {
        const auto a = theta_constants(t), b = theta_constants(1 / t);
        const double s = std::sqrt(t); // sqrt(tau / i)
        modz.add(std::max({std::abs(b.t3 - s * a.t3), std::abs(b.t2 - s * a.t4), std::abs(b.t4 - s * a.t2)}));
    }
    rep.families.push_back(jac.done());
    rep.families.push_back(quart.done());
    rep.families.push_back(nonzero.done());
    rep.families.push_back(modz.done());

    Family prod("product_identities", 1e-13, tol);
    for (double q : {0.001, 0.01, std::exp(-std::numbers::pi), 0.1, 0.2}) {
        const auto r = product_identity_residuals(q);
        prod.add(std::max(r.odd, r.even));
    }
    rep.families.push_back(prod.done());

    Family round("nome_to_k_roundtrip", 1e-12, tol);
    for (double h : grid_h())
        for (double g : grid_gamma()) {
            const EllipticData e = modulus_data(make_phase_point(h, g));
            round.add(std::abs(nome_to_k(e.q).first - e.k));
        }
    rep.families.push_back(round.done());

    // Jump between the two series at t = 1 +- 1e-9: each side against the other branch at the same t.
    Family sw("series_switch_continuity", 1e-12, tol);
    for (double t : {1 - 1e-9, 1 + 1e-9}) {
        const auto a = theta_constants_direct(t), b = theta_constants_transformed(t);
        sw.add(std::max({std::abs(a.t2 - b.t2), std::abs(a.t3 - b.t3), std::abs(a.t4 - b.t4)}));
    }
    rep.families.push_back(sw.done());
    // Raw difference across the switch; dominated by the slope of theta_2, theta_4 (~1e-9).
    Family raw("series_switch_raw_difference", 1e-12, tol, true);
    const auto lo = theta_constants(1 - 1e-9), hi = theta_constants(1 + 1e-9);
    raw.add(std::max({std::abs(lo.t2 - hi.t2), std::abs(lo.t3 - hi.t3), std::abs(lo.t4 - hi.t4)}));
    rep.families.push_back(raw.done());
    return rep;
}

inline VerifyReport verify_modular(std::optional<double> tol = std::nullopt) {
    using namespace verify_detail;
    VerifyReport rep{"modular", {}};
    Family comp("lambda_plus_complement", 1e-14, tol);
    Family fixed("lambda(i)=1/2_J(i)=1", 1e-13, tol);
    Family jj("J_theta_vs_eisenstein_rel", 1e-10, tol);
    Family jinv("J_inversion_rel", 1e-11, tol);
    Family finv("f_inversion", 1e-12, tol);
    Family ginv("g_inversion_f_over_g", 1e-11, tol);
    Family land("landen_composition", 1e-10, tol);
    Family mono("lambda_decreasing", 0.0, tol);
    for (double t = 0.1; t <= 10; t *= 1.3)
        comp.add(std::abs(lambda_modular(t) + one_minus_lambda_modular(t) - 1));
    fixed.add(std::abs(lambda_modular(1.0) - 0.5));
    fixed.add(std::abs(klein_J(1.0) - 1));
    fixed.add(std::abs(klein_J_eisenstein(1.0) - 1));
    for (double t : {1.0, 2.0, 3.0})
        jj.add(rel(klein_J(t), klein_J_eisenstein(t)));
    for (double t : {0.5, 0.8, 2.0})
        jinv.add(rel(klein_J(t), klein_J(1 / t)));
    for (double t : {0.3, 0.5, 2.0}) {
        const auto [f, g] = f_and_g(t);
        const auto [fi, gi] = f_and_g(1 / t);
        finv.add(std::abs(fi - f));
        ginv.add(std::abs(gi - f / g) / std::max(1.0, std::abs(gi)));
    }
    for (double t : {0.3, 0.7, 1.0}) {
        double l = lambda_modular(t);
        for (int n = 1; n <= 4; ++n) {
            l = landen_step(l);
            land.add(std::abs(l - lambda_modular(std::ldexp(t, n))));
        }
    }
    double prev = 2.0;
    for (double t = 0.1; t <= 10; t *= 1.1) {
        const double l = lambda_modular(t);
        mono.add(l < prev ? 0.0 : 1.0);
        prev = l;
    }
    for (Family* f : {&comp, &fixed, &jj, &jinv, &finv, &ginv, &land, &mono})
        rep.families.push_back(f->done());

    Family schw("schwarzian_classical_ode", 1e-6, tol);
    Family schw_printed("schwarzian_printed_rhs", 1e-6, tol, true);
    for (double t : {1.0, 1.5}) {
        const SchwarzianCheck c = schwarzian_check(t);
        schw.add(c.residual);
        schw_printed.add(c.printed_residual);
    }
    rep.families.push_back(schw.done());
    rep.families.push_back(schw_printed.done());
    return rep;
}

inline VerifyReport verify_entropy(std::optional<double> tol = std::nullopt) {
    using namespace verify_detail;
    VerifyReport rep{"entropy", {}};
    Family oracle("closed_vs_series", 1e-10, tol);
    Family vns("von_neumann_vs_series", 1e-10, tol);
    Family vnl("von_neumann_vs_alpha_limit", 1e-7, tol);
    Family vnd("von_neumann_derivative_route", 1e-7, tol);
    Family inv("alpha_inversion", 1e-9, tol);
    Family inv_printed("alpha_inversion_printed_h<2", 1e-9, tol, true);
    Family ladder("landen_ladder", 1e-11, tol);
    Family mono("monotone_in_alpha", 1e-12, tol);
    for (double h : grid_h())
        for (double g : grid_gamma()) {
            const PhasePoint p = make_phase_point(h, g);
            const EllipticData e = modulus_data(p);
            for (double a : grid_alpha()) {
                oracle.add(std::abs(renyi_closed_form(p, a).value - renyi_series(p, a).value));
                if (std::abs(a * e.tau0 * e.tau0 - 1) >= 0.05) {
                    const RenyiResult r = alpha_inversion(p, a);
                    inv.add(std::abs(r.value - renyi_closed_form(p, r.alpha).value));
                    if (!above_critical_field(p.region))
                        inv_printed.add(std::abs(alpha_inversion_printed_h_lt_2(p, a) -
                                                 renyi_closed_form(p, r.alpha).value));
                }
            }
            const double vn = von_neumann(p).value;
            vns.add(std::abs(vn - von_neumann_series(p).value));
            auto sym = [&](double d) {
                return 0.5 * (renyi_closed_form(p, 1 + d).value + renyi_closed_form(p, 1 - d).value);
            };
            vnl.add(std::abs((4 * sym(0.5e-4) - sym(1e-4)) / 3 - vn));
            vnd.add(std::abs(von_neumann_derivative_route(p) - vn));
            for (int n = 1; n <= 3; ++n)
                ladder.add(std::abs(landen_ladder(p, n).value - renyi_closed_form(p, std::ldexp(1.0, n)).value));
            double prev = INFINITY;
            for (double a : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
                const double s = renyi_closed_form(p, a).value;
                mono.add(std::max(0.0, s - prev));
                prev = s;
            }
        }
    Family fact("factorizing_ln2", 1e-8, tol);
    for (double g : {0.25, 0.5, 0.8}) {
        const PhasePoint p = make_phase_point(factorizing_field(g), g);
        for (double a : {0.1, 1.0, 2.0, 50.0}) {
            fact.add(std::abs(renyi_closed_form(p, a).value - std::numbers::ln2));
            const double series = a == 1.0 ? von_neumann_series_sum(50.0, 1).value
                                           : renyi_series_sum(50.0, 1, a).value;
            fact.add(std::abs(series - std::numbers::ln2));
        }
    }
    for (Family* f : {&oracle, &vns, &vnl, &vnd, &inv, &inv_printed, &ladder, &mono, &fact})
        rep.families.push_back(f->done());
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"elliptic", "theta", "modular", "entropy", "all"};
    return names;
}

/// Runs one named suite; "all" merges every suite into one report.
inline VerifyReport run_verify_suite(const std::string& name, std::optional<double> tol = std::nullopt) {
    if (name == "elliptic") return verify_elliptic(tol);
    if (name == "theta") return verify_theta(tol);
    if (name == "modular") return verify_modular(tol);
    if (name == "entropy") return verify_entropy(tol);
    if (name == "all") {
        VerifyReport all{"all", {}};
        for (auto* fn : {&verify_elliptic, &verify_theta, &verify_modular, &verify_entropy}) {
            VerifyReport r = (*fn)(tol);
            for (auto& f : r.families) {
                f.name = r.suite + "." + f.name;
                all.families.push_back(std::move(f));
            }
        }
        return all;
    }
    throw DomainError("unknown verification suite '" + name + "'");
}

} // namespace xyrenyi

#endif

#ifndef XYRENYI_SWEEP_HPP
#define XYRENYI_SWEEP_HPP

// Row evaluation and CSV serialization shared by the `eval` and `sweep` commands.
//
// Columns: h,gamma,alpha,region,k,kprime,tau0,q,S_renyi,S_vonNeumann,method,tol_attained,reason
// Numbers use 17 significant digits; guarded points leave numeric fields empty
// and name the failing guard in `reason`.

#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/errors.hpp>
#include <xyrenyi/renyi.hpp>

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace xyrenyi {

inline constexpr std::string_view kCsvHeader =
    "h,gamma,alpha,region,k,kprime,tau0,q,S_renyi,S_vonNeumann,method,tol_attained,reason";

struct Range {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i)
            v.push_back(steps == 1 ? min : min + (max - min) * i / (steps - 1));
        return v;
    }
};

/// Parses "MIN:MAX:STEPS".
inline Range parse_range(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw DomainError("range must look like MIN:MAX:STEPS, got '" + std::string(text) + "'");
    Range r;
    try {
        std::size_t used = 0;
        const std::string a(text.substr(0, c1)), b(text.substr(c1 + 1, c2 - c1 - 1)),
            s(text.substr(c2 + 1));
        r.min = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        r.max = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        r.steps = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw DomainError("range must look like MIN:MAX:STEPS, got '" + std::string(text) + "'");
    }
    if (r.steps < 1)
        throw DomainError("range needs STEPS >= 1");
    if (r.max < r.min)
        throw DomainError("range needs MIN <= MAX");
    return r;
}

struct SweepConfig {
    Range h_range;
    Range gamma_range;
    std::vector<double> alpha_list;
    std::string out_path;
    double tol = kDefaultTieTol; // special-line tie tolerance

    void validate() const {
        if (h_range.min < 0)
            throw DomainError("h range must be >= 0");
        if (gamma_range.min <= 0)
            throw DomainError("gamma range must be > 0");
        if (alpha_list.empty())
            throw DomainError("alpha list must not be empty");
        for (double a : alpha_list)
            if (!(a > 0))
                throw DomainError("alpha list entries must be > 0");
        if (!(tol >= 0))
            throw DomainError("tolerance must be >= 0");
    }
};

struct CsvRow {
    double h = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;
    std::optional<Region> region;
    std::optional<EllipticData> elliptic;
    std::optional<RenyiResult> renyi;
    std::optional<double> von_neumann;
    std::string reason;
};

/// Full evaluation; throws on any guard.
inline CsvRow evaluate_point(double h, double gamma, double alpha, double tie_tol = kDefaultTieTol) {
    CsvRow row;
    row.h = h;
    row.gamma = gamma;
    row.alpha = alpha;
    const PhasePoint p = make_phase_point(h, gamma, tie_tol);
    row.region = p.region;
    if (is_critical(p.region))
        throw CriticalPointError(std::string("CriticalPointError: ") + std::string(to_string(p.region)) +
                                 " (closed forms degenerate, k -> 1)");
    row.elliptic = modulus_data(p);
    row.renyi = renyi_closed_form(p, alpha);
    row.von_neumann = von_neumann(p).value;
    return row;
}

/// Evaluation that records guards in `reason` instead of throwing.
inline CsvRow evaluate_row(double h, double gamma, double alpha, double tie_tol = kDefaultTieTol) {
    try {
        return evaluate_point(h, gamma, alpha, tie_tol);
    } catch (const Error& e) {
        CsvRow row;
        row.h = h;
        row.gamma = gamma;
        row.alpha = alpha;
        try {
            const Region r = classify_region(h, gamma, tie_tol);
            row.region = r;
            row.reason = is_critical(r) ? std::string(to_string(r)) : e.what();
        } catch (const Error& inner) {
            row.reason = inner.what();
        }
        return row;
    }
}

inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace detail

inline std::string format_row(const CsvRow& r) {
    std::ostringstream os;
    os << format_number(r.h) << ',' << format_number(r.gamma) << ',' << format_number(r.alpha) << ',';
    os << (r.region ? to_string(*r.region) : "") << ',';
    if (r.elliptic) {
        os << format_number(r.elliptic->k) << ',' << format_number(r.elliptic->kprime) << ','
           << format_number(r.elliptic->tau0) << ',' << format_number(r.elliptic->q) << ',';
    } else {
        os << ",,,,";
    }
    if (r.renyi)
        os << format_number(r.renyi->value);
    os << ',';
    if (r.von_neumann)
        os << format_number(*r.von_neumann);
    os << ',';
    if (r.renyi)
        os << to_string(r.renyi->method) << ',' << format_number(r.renyi->tol_attained);
    else
        os << ',';
    os << ',' << detail::csv_field(r.reason);
    return os.str();
}

/// Rows in h-major, then gamma, then alpha order.
inline std::vector<CsvRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<CsvRow> rows;
    for (double h : cfg.h_range.values())
        for (double g : cfg.gamma_range.values())
            for (double a : cfg.alpha_list)
                rows.push_back(evaluate_row(h, g, a, cfg.tol));
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<CsvRow>& rows, bool header = true) {
    if (header)
        os << kCsvHeader << '\n';
    for (const CsvRow& r : rows)
        os << format_row(r) << '\n';
}

} // namespace xyrenyi

#endif

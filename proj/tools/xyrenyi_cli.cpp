// Command-line front end: eval, sweep, verify, limits.

#include <xyrenyi.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;

struct PointArgs {
    double h = 0.0;
    double gamma = 0.0;
    double alpha = 1.0;
    double tie_tol = xyrenyi::kDefaultTieTol;
    bool header = false;
};

void add_point_options(CLI::App* cmd, PointArgs& a) {
    cmd->add_option("--h", a.h, "transverse magnetic field h >= 0")->required();
    cmd->add_option("--gamma", a.gamma, "anisotropy gamma > 0")->required();
    cmd->add_option("--alpha", a.alpha, "Renyi order alpha > 0")->required();
    cmd->add_option("--tol", a.tie_tol, "tie tolerance for the special lines")->capture_default_str();
}

int cmd_eval(const PointArgs& a) {
    const xyrenyi::CsvRow row = xyrenyi::evaluate_point(a.h, a.gamma, a.alpha, a.tie_tol);
    if (a.header)
        std::cout << xyrenyi::kCsvHeader << '\n';
    std::cout << xyrenyi::format_row(row) << '\n';
    return kExitOk;
}

int cmd_limits(const PointArgs& a) {
    using namespace xyrenyi;
    const PhasePoint p = make_phase_point(a.h, a.gamma, a.tie_tol);
    const RenyiResult closed = renyi_closed_form(p, a.alpha); // throws on critical lines
    std::cout << "quantity,value,note\n";
    auto line = [](std::string_view name, std::optional<double> v, std::string_view note) {
        std::cout << name << ',' << (v ? format_number(*v) : std::string()) << ',' << note << '\n';
    };
    line("closed_form", closed.value, to_string(closed.method));
    line("von_neumann", von_neumann(p).value, "");
    if (!is_bulk(p.region)) {
        line("large_alpha_limit", std::nullopt, "needs bulk point");
        return kExitOk;
    }
    line("large_alpha_limit", large_alpha_limit(p).value, "alpha -> infinity");
    if (a.alpha != 1.0)
        line("large_alpha_asymptotic", large_alpha_asymptotic(p, a.alpha).value, "finite alpha");
    try {
        line("small_alpha_estimate", small_alpha_estimate(p, a.alpha).value, "");
    } catch (const GuardError& e) {
        line("small_alpha_estimate", std::nullopt, e.what());
    }
    try {
        line("critical_field_estimate", critical_field_estimate(a.gamma, a.h, a.alpha), "");
    } catch (const DomainError& e) {
        line("critical_field_estimate", std::nullopt, e.what());
    }
    try {
        line("xx_limit_estimate", xx_limit_estimate(a.gamma, a.h, a.alpha), "");
    } catch (const DomainError& e) {
        line("xx_limit_estimate", std::nullopt, e.what());
    }
    return kExitOk;
}

int cmd_sweep(const xyrenyi::SweepConfig& cfg, bool header) {
    const auto rows = xyrenyi::run_sweep(cfg);
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        xyrenyi::write_csv(std::cout, rows, header);
        return kExitOk;
    }
    std::ofstream out(cfg.out_path);
    if (!out)
        throw xyrenyi::DomainError("IOError: cannot open '" + cfg.out_path + "' for writing");
    xyrenyi::write_csv(out, rows, header);
    if (!out)
        throw xyrenyi::DomainError("IOError: failed writing '" + cfg.out_path + "'");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Large-block Renyi entropy of the XY spin chain"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    PointArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate one phase point as a CSV row");
    add_point_options(eval, eval_args);
    eval->add_flag("--header,!--no-header", eval_args.header, "print the CSV header line");

    PointArgs limit_args;
    auto* limits = app.add_subcommand("limits", "closed form beside the asymptotic estimates");
    add_point_options(limits, limit_args);

    xyrenyi::SweepConfig sweep_cfg;
    std::string h_range, gamma_range;
    bool sweep_header = true;
    auto* sweep = app.add_subcommand("sweep", "phase-diagram grid to CSV");
    sweep->add_option("--h-range", h_range, "MIN:MAX:STEPS")->required();
    sweep->add_option("--gamma-range", gamma_range, "MIN:MAX:STEPS")->required();
    sweep->add_option("--alpha-list", sweep_cfg.alpha_list, "comma-separated Renyi orders")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out", sweep_cfg.out_path, "output CSV path (stdout if omitted)");
    sweep->add_option("--tol", sweep_cfg.tol, "tie tolerance for the special lines")->capture_default_str();
    sweep->add_flag("--header,!--no-header", sweep_header, "write the CSV header line");

    std::string suite = "all";
    std::optional<double> verify_tol;
    auto* verify = app.add_subcommand("verify", "run identity and oracle checks");
    verify->add_option("--suite", suite, "elliptic | theta | modular | entropy | all")
        ->check(CLI::IsMember(xyrenyi::suite_names()));
    verify->add_option("--tol", verify_tol, "replace every family tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*eval)
            return cmd_eval(eval_args);
        if (*limits)
            return cmd_limits(limit_args);
        if (*sweep) {
            sweep_cfg.h_range = xyrenyi::parse_range(h_range);
            sweep_cfg.gamma_range = xyrenyi::parse_range(gamma_range);
            return cmd_sweep(sweep_cfg, sweep_header);
        }
        if (*verify) {
            const xyrenyi::VerifyReport rep = xyrenyi::run_verify_suite(suite, verify_tol);
            xyrenyi::print_report(std::cout, rep);
            return rep.passed() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const xyrenyi::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

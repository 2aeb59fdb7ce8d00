#include "cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "projkernel/projkernel.hpp"

namespace projkernel::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFlags {
    std::optional<double> half_width;
    std::optional<double> step;
    std::optional<double> eps;
    std::optional<std::string> rule;

    QuadratureConfig resolve() const
    {
        QuadratureConfig cfg = default_config();
        if (half_width) {
            cfg.half_width = *half_width;
        }
        if (step) {
            cfg.step = *step;
        }
        if (eps) {
            cfg.pv_exclusion = *eps;
        }
        if (rule) {
            const auto parsed = parse_rule(*rule);
            if (!parsed) {
                throw UsageError("--rule must be trapezoid or simpson");
            }
            cfg.rule = *parsed;
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path);
    }
    file << text << '\n';
}

IdentityReport single_entry_report(IdentityEntry entry, const QuadratureConfig& cfg)
{
    IdentityReport report;
    report.tool_version = std::string(kVersion);
    report.config = {{"L", num(cfg.half_width)},
                     {"step", num(cfg.step)},
                     {"eps", num(cfg.pv_exclusion)},
                     {"rule", std::string(to_string(cfg.rule))}};
    report.entries.push_back(std::move(entry));
    return report;
}

Side parse_side(const std::string& side)
{
    if (side == "plus") {
        return Side::plus;
    }
    if (side == "minus") {
        return Side::minus;
    }
    throw UsageError("--side must be plus or minus");
}

// --- kernel -----------------------------------------------------------------

struct KernelArgs {
    std::string type = "sinc";
    std::optional<double> band_a;
    std::vector<double> dx;
    double from = -10.0;
    double to = 10.0;
    std::size_t count = 201;
    std::string out_path;
};

int run_kernel(const KernelArgs& args, std::ostream& out)
{
    std::optional<SplitKernel> split;
    if (args.type == "halfline-plus") {
        split = halfline_kernel(Side::plus);
    } else if (args.type == "halfline-minus") {
        split = halfline_kernel(Side::minus);
    } else if (args.type == "momentum-plus") {
        split = momentum_halfline_kernel(Side::plus);
    } else if (args.type == "momentum-minus") {
        split = momentum_halfline_kernel(Side::minus);
    } else if (args.type == "difference") {
        split = difference_kernel();
    } else if (args.type != "sinc") {
        throw UsageError("unknown kernel type '" + args.type + "'");
    }

    std::optional<BandParams> band;
    if (!split) {
        if (!args.band_a) {
            throw UsageError("the sinc kernel needs --band-a");
        }
        try {
            band.emplace(*args.band_a);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    // Split kernels have no value at dx = 0; the delta coefficient stands in for it.
    auto evaluate = [&](double dx) -> Complex {
        if (band) {
            return {sinc_kernel(dx, *band), 0.0};
        }
        return dx == 0.0 ? Complex{} : split->regular(dx);
    };

    if (split) {
        out << "delta_coeff=" << num(split->delta_coeff().real()) << ','
            << num(split->delta_coeff().imag()) << " pole=" << num(split->pole().real()) << ','
            << num(split->pole().imag()) << '\n';
    }
    if (!args.dx.empty()) {
        out << "dx,re,im\n";
        for (const double dx : args.dx) {
            const Complex v = evaluate(dx);
            out << num(dx) << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
    }
    if (!args.out_path.empty()) {
        if (args.count < 2 || !(args.to > args.from)) {
            throw UsageError("--from/--to/--count must describe at least two increasing points");
        }
        const UniformGrid grid(args.from, (args.to - args.from) / static_cast<double>(args.count - 1),
                               args.count);
        write_signal(args.out_path, SampledSignal::from_function(grid, evaluate));
    }
    if (band && args.dx.empty() && args.out_path.empty()) {
        throw UsageError("kernel: give --dx values or --out");
    }
    return kExitOk;
}

// --- kronecker --------------------------------------------------------------

struct BandArgs {
    int K = 0;
    int k1 = 0;
    int k2 = 0;
};

DiscreteProjection make_projection(const BandArgs& band)
{
    try {
        return {band.K, band.k1, band.k2};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int run_kronecker(const BandArgs& band, bool closed, const std::string& out_path, std::ostream& out)
{
    const DiscreteProjection P = make_projection(band);
    const IncompleteKroneckerMatrix M = incomplete_kronecker_sum(P);
    const Eigen::MatrixXcd& m = M.matrix();

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            throw std::runtime_error("cannot write " + out_path);
        }
        sink = &file;
    }
    *sink << "k,n,re,im\n";
    for (int k = 1; k <= P.dimension(); ++k) {
        for (int n = 1; n <= P.dimension(); ++n) {
            const Complex v = closed ? incomplete_kronecker_closed(P, k, n) : M(k, n);
            *sink << k << ',' << n << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
    }
    if (!out_path.empty()) {
        out << "rank=" << P.rank() << " trace=" << num(m.trace().real())
            << " idempotency=" << num((m * m - m).cwiseAbs().maxCoeff())
            << " hermiticity=" << num((m - m.adjoint()).cwiseAbs().maxCoeff())
            << (P.degenerate() ? " degenerate_band" : "") << '\n';
    }
    return kExitOk;
}

// --- support-test -------------------------------------------------------------

int run_support_test(const BandArgs& band, const std::string& in_path, double tol,
                     const std::string& report_path, std::ostream& out)
{
    const DiscreteProjection P = make_projection(band);
    const SampledSignal signal = read_signal(in_path, Domain::time);
    if (static_cast<int>(signal.size()) != P.dimension()) {
        throw UsageError("input has " + std::to_string(signal.size()) + " samples but --K is " +
                         std::to_string(P.dimension()));
    }
    if (!(tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    ComplexVectorK u(P.dimension());
    for (int i = 0; i < P.dimension(); ++i) {
        u(i) = signal[static_cast<std::size_t>(i)];
    }
    const SupportVerdict verdict = support_test(u, P, tol);
    out << "verdict=" << (verdict.supported ? "supported" : "rejected")
        << " residual=" << num(verdict.residual) << '\n';

    if (!report_path.empty()) {
        IdentityEntry entry;
        entry.name = "support_test";
        entry.equation = "Eq 4.12";
        entry.parameters = {{"K", band.K}, {"K1", band.k1}, {"K2", band.k2}};
        entry.lhs_summary = "||P u - u|| / ||u||";
        entry.rhs_summary = "0";
        entry.residual = verdict.residual;
        entry.tolerance = tol;
        if (P.degenerate()) {
            entry.flags.push_back("degenerate_band");
        }
        write_text(report_path, single_entry_report(std::move(entry), QuadratureConfig{}).to_json());
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Projection-operator kernels, PV quadrature and dispersion checks", "projkernel"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    QuadratureFlags quad;
    app.add_option("--L", quad.half_width, "Truncation half width of real-line integrals");
    app.add_option("--step", quad.step, "Working grid step");
    app.add_option("--eps", quad.eps, "PV exclusion half width (multiple of the step)");
    app.add_option("--rule", quad.rule, "Quadrature rule: trapezoid | simpson");

    KernelArgs kernel_args;
    auto* kernel = app.add_subcommand("kernel", "Evaluate an incomplete delta kernel");
    kernel->add_option("--type", kernel_args.type,
                       "sinc | halfline-plus | halfline-minus | momentum-plus | momentum-minus | difference");
    kernel->add_option("--band-a", kernel_args.band_a, "Momentum cutoff a > 0 (sinc)");
    kernel->add_option("--dx", kernel_args.dx, "Displacements to evaluate");
    kernel->add_option("--from", kernel_args.from, "First displacement for --out");
    kernel->add_option("--to", kernel_args.to, "Last displacement for --out");
    kernel->add_option("--count", kernel_args.count, "Number of displacements for --out");
    kernel->add_option("--out", kernel_args.out_path, "Write the kernel as a signal CSV");

    double project_a = 0.0;
    std::string project_in;
    std::string project_out;
    auto* project = app.add_subcommand("project", "Band-limit a signal with the sinc kernel");
    project->add_option("--band-a", project_a, "Momentum cutoff a > 0")->required();
    project->add_option("--in", project_in, "Input signal CSV")->required();
    project->add_option("--out", project_out, "Output signal CSV")->required();

    BandArgs band;
    double support_tol = 1e-6;
    std::string support_in;
    std::string support_report;
    auto* support = app.add_subcommand("support-test", "Test whether a sampled signal lies in a DFT band");
    support->add_option("--K", band.K, "Dimension")->required();
    support->add_option("--k1", band.k1, "First frequency index (1-based)")->required();
    support->add_option("--k2", band.k2, "Last frequency index (inclusive)")->required();
    support->add_option("--in", support_in, "Signal CSV with K samples")->required();
    support->add_option("--tol", support_tol, "Relative residual tolerance");
    support->add_option("--report", support_report, "Write a JSON identity report");

    std::string hilbert_in;
    std::string hilbert_out;
    std::string hilbert_method = "spectral";
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert transform (1/pi) PV int f(p')/(p-p') dp'");
    hilbert->add_option("--in", hilbert_in, "Input signal CSV")->required();
    hilbert->add_option("--out", hilbert_out, "Output signal CSV")->required();
    hilbert->add_option("--method", hilbert_method, "pv | spectral");

    std::string disp_in;
    std::string disp_side = "plus";
    bool disp_causal = false;
    std::string disp_project_out;
    std::string disp_report;
    auto* dispersion = app.add_subcommand("dispersion", "Dispersion-relation residual of a signal");
    dispersion->add_option("--in", disp_in, "Input signal CSV")->required();
    dispersion->add_option("--side", disp_side, "plus | minus");
    dispersion->add_flag("--causal", disp_causal,
                         "Treat the input as a time signal and check its spectral amplitude");
    dispersion->add_option("--project-out", disp_project_out,
                           "Also write the half-line projection of the input");
    dispersion->add_option("--report", disp_report, "Write a JSON identity report");

    std::string suite_level = "desk";
    std::string suite_report;
    bool suite_summary = false;
    auto* suite = app.add_subcommand("identity-suite", "Run every identity check and emit a report");
    suite->add_option("--level", suite_level, "quick | desk");
    suite->add_option("--report", suite_report, "Also write the JSON report to a file");
    suite->add_flag("--summary", suite_summary, "Print one pass/fail line per check instead of JSON");

    BandArgs kron_band;
    bool kron_closed = false;
    std::string kron_out;
    auto* kronecker = app.add_subcommand("kronecker", "Incomplete Kronecker delta matrix of a DFT band");
    kronecker->add_option("--K", kron_band.K, "Dimension")->required();
    kronecker->add_option("--k1", kron_band.k1, "First frequency index (1-based)")->required();
    kronecker->add_option("--k2", kron_band.k2, "Last frequency index (inclusive)")->required();
    kronecker->add_flag("--closed", kron_closed, "Use the closed geometric-sum form");
    kronecker->add_option("--out", kron_out, "Write the matrix CSV to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*kernel) {
            return run_kernel(kernel_args, out);
        }
        if (*project) {
            const QuadratureConfig cfg = quad.resolve();
            const SampledSignal f = read_signal(project_in, Domain::coordinate);
            BandParams band_params = [&] {
                try {
                    return BandParams(project_a);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            write_signal(project_out, bandlimit_project(f, band_params, cfg));
            return kExitOk;
        }
        if (*support) {
            return run_support_test(band, support_in, support_tol, support_report, out);
        }
        if (*hilbert) {
            const QuadratureConfig cfg = quad.resolve();
            const SampledSignal f = read_signal(hilbert_in, Domain::momentum);
            if (hilbert_method == "pv") {
                write_signal(hilbert_out, hilbert_pv(f, cfg));
            } else if (hilbert_method == "spectral") {
                write_signal(hilbert_out, hilbert_spectral(f));
            } else {
                throw UsageError("--method must be pv or spectral");
            }
            return kExitOk;
        }
        if (*dispersion) {
            const QuadratureConfig cfg = quad.resolve();
            const Side side = parse_side(disp_side);
            if (disp_causal) {
                const SampledSignal u = read_signal(disp_in, Domain::time);
                IdentityEntry entry = causal_spectrum_check(u, cfg);
                out << "residual=" << num(entry.residual) << " verdict="
                    << (entry.passed() ? "pass" : "fail")
                    << (entry.flags.empty() ? "" : " noncausal_input") << '\n';
                if (!disp_report.empty()) {
                    write_text(disp_report, single_entry_report(std::move(entry), cfg).to_json());
                }
                return kExitOk;
            }
            const SampledSignal g = read_signal(disp_in, Domain::coordinate);
            const double residual = dispersion_residual(g, side, cfg);
            out << "residual=" << num(residual) << '\n';
            if (!disp_project_out.empty()) {
                write_signal(disp_project_out, analytic_projection(g, cfg, side));
            }
            if (!disp_report.empty()) {
                IdentityEntry entry;
                entry.name = side == Side::plus ? "dispersion_relation_plus" : "dispersion_relation_minus";
                entry.equation = "Eq 3.16a";
                entry.lhs_summary = "g(x)";
                entry.rhs_summary = "(+-1/(pi i)) PV int g(x')/(x'-x) dx'";
                entry.residual = residual;
                entry.tolerance = 5e-2;
                write_text(disp_report, single_entry_report(std::move(entry), cfg).to_json());
            }
            return kExitOk;
        }
        if (*suite) {
            const auto level = parse_suite_level(suite_level);
            if (!level) {
                throw UsageError("--level must be quick or desk");
            }
            const IdentityReport report = run_identity_suite(*level, quad.resolve());
            const std::string json = report.to_json();
            if (suite_summary) {
                for (const IdentityEntry& e : report.entries) {
                    out << (e.passed() ? "PASS " : "FAIL ") << e.name << " (" << e.equation
                        << ") residual=" << num(e.residual) << " tolerance=" << num(e.tolerance)
                        << '\n';
                }
            } else {
                out << json << '\n';
            }
            if (!suite_report.empty()) {
                write_text(suite_report, json);
            }
            return report.all_passed() ? kExitOk : kExitSuiteFailure;
        }
        if (*kronecker) {
            return run_kronecker(kron_band, kron_closed, kron_out, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SignalIoError& e) {
        err << "input error (" << to_string(e.code()) << "): " << e.what();
        if (e.line() != 0) {
            err << " at line " << e.line();
        }
        err << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace projkernel::cli

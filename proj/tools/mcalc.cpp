// Command-line surface for the M-derivative calculus library: special-function
// evaluation, derivatives, integrals, eigen-equation solving, figure curve
// families, and the verification suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcalc/battery.hpp"
#include "mcalc/errors.hpp"
#include "mcalc/format.hpp"
#include "mcalc/integration.hpp"
#include "mcalc/ode.hpp"
#include "mcalc/operators.hpp"
#include "mcalc/special.hpp"
#include "mcalc/verify.hpp"

namespace {

using namespace mcalc;

// A post-parse problem with the invocation itself (exit code 2, not 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    // Write once, atomically: temp file in the target directory, then rename.
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

std::string scalar_text(const std::string& header, double value, const std::string& format) {
    if (format == "csv") return header + "\n" + format_double(value) + "\n";
    return format_double(value) + "\n";
}

std::string curve_text(const Curve& c, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "t,u\n";
        for (std::size_t i = 0; i < c.ts.size(); ++i)
            os << format_double(c.ts[i]) << ',' << format_double(c.us[i]) << '\n';
    } else {
        os << std::left << std::setw(24) << "t" << "u\n";
        for (std::size_t i = 0; i < c.ts.size(); ++i)
            os << std::left << std::setw(24) << format_double(c.ts[i])
               << format_double(c.us[i]) << '\n';
    }
    return os.str();
}

const struct FigureParams {
    double beta, lambda, u0;
} kFigures[3] = {{0.5, 1.0, 20.0}, {1.0, 2.0, 20.0}, {1.5, 2.5, 20.0}};

const struct AlphaColumn {
    double alpha;
    const char* label;
} kFigureAlphas[5] = {{0.3, "0.3"}, {0.5, "0.5"}, {0.7, "0.7"}, {0.9, "0.9"}, {1.0, "1.0"}};

std::string figure_text(int which, const std::string& format) {
    const FigureParams p = kFigures[which - 1];
    const auto ts = linspace(0.0, 5.0, 501);
    std::vector<Curve> curves;
    for (const AlphaColumn& col : kFigureAlphas)
        curves.push_back(solve_eigen(p.lambda, p.u0, FracOrder{col.alpha, p.beta}, ts));
    std::ostringstream os;
    const char sep = format == "pretty" ? '\t' : ',';
    os << "t";
    for (const AlphaColumn& col : kFigureAlphas) os << sep << "u_alpha" << col.label;
    os << '\n';
    for (std::size_t i = 0; i < ts.size(); ++i) {
        os << format_double(ts[i]);
        for (const Curve& c : curves) os << sep << format_double(c.us[i]);
        os << '\n';
    }
    return os.str();
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("MCALC_SEED");
    if (env == nullptr || *env == '\0') return verify::kDefaultSeed;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw UsageError("MCALC_SEED must be an unsigned integer");
    }
}

std::string verify_text(const std::vector<verify::CheckResult>& results,
                        const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "key,pass,max_residual,tolerance\n";
        for (const auto& r : results)
            os << r.key << ',' << (r.pass ? "1" : "0") << ','
               << format_double(r.max_residual) << ',' << format_double(r.tolerance)
               << '\n';
        return os.str();
    }
    int failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(40) << r.key
           << " max_residual=" << format_double(r.max_residual)
           << " tol=" << format_double(r.tolerance);
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << '\n';
    }
    os << results.size() << " checks, " << failed << " failed\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mcalc: numerical calculus of the local M-derivative"};
    app.require_subcommand(1);

    std::string output_path;
    std::string format;
    app.add_option("--output", output_path, "write the emitted artifact to this path")
        ->capture_default_str();
    auto* format_opt =
        app.add_option("--format", format,
                       "output format (default: pretty for scalars and verify, csv for curves)")
            ->check(CLI::IsMember({"csv", "pretty"}));
    // Scalar and report commands default to pretty, curve commands to csv.
    auto chosen_format = [&](const char* fallback) {
        return format_opt->count() > 0 ? format : std::string(fallback);
    };

    int exit_code = 0;

    // ml --beta B --x X
    double ml_beta = 1.0, ml_x = 0.0;
    auto* ml = app.add_subcommand("ml", "evaluate the Mittag-Leffler function E_beta(x)");
    ml->add_option("--beta", ml_beta, "Mittag-Leffler parameter, > 0")->required();
    ml->add_option("--x", ml_x, "argument")->required();
    ml->callback([&] {
        emit(scalar_text("value", mittag_leffler(ml_beta, ml_x), chosen_format("pretty")),
             output_path);
    });

    // deriv --alpha A --beta B --fn NAME --t T [--method limit|closed]
    double d_alpha = 0.5, d_beta = 1.0, d_t = 1.0;
    std::string d_fn, d_method = "closed";
    auto* deriv = app.add_subcommand("deriv", "M-derivative of a registry function at t");
    deriv->add_option("--alpha", d_alpha, "order alpha in (0, 1]")->required();
    deriv->add_option("--beta", d_beta, "Mittag-Leffler parameter, > 0")->required();
    deriv->add_option("--fn", d_fn, "registry function name")
        ->required()
        ->check(CLI::IsMember(battery::registry_names()));
    deriv->add_option("--t", d_t, "evaluation point, > 0")->required();
    deriv->add_option("--method", d_method, "closed form or limit definition")
        ->check(CLI::IsMember({"closed", "limit"}));
    deriv->callback([&] {
        const FracOrder ord{d_alpha, d_beta};
        const ScalarFn f = battery::make(d_fn, ord);
        const double v = d_method == "limit" ? m_derivative_limit(f, ord, d_t)
                                             : m_derivative_closed(f, ord, d_t);
        emit(scalar_text("value", v, chosen_format("pretty")), output_path);
    });

    // integral --alpha A --beta B --fn NAME --a A0 --t T
    double i_alpha = 0.5, i_beta = 1.0, i_a = 0.0, i_t = 1.0;
    std::string i_fn;
    auto* integral = app.add_subcommand("integral", "M-integral of a registry function");
    integral->add_option("--alpha", i_alpha, "order alpha in (0, 1]")->required();
    integral->add_option("--beta", i_beta, "Mittag-Leffler parameter, > 0")->required();
    integral->add_option("--fn", i_fn, "registry function name")
        ->required()
        ->check(CLI::IsMember(battery::registry_names()));
    integral->add_option("--a", i_a, "lower limit, >= 0")->required();
    integral->add_option("--t", i_t, "upper limit, >= a")->required();
    integral->callback([&] {
        const FracOrder ord{i_alpha, i_beta};
        emit(scalar_text("value", m_integral(battery::make(i_fn, ord), ord, i_a, i_t),
                         chosen_format("pretty")),
             output_path);
    });

    // solve --alpha A --beta B --lambda L --u0 U --t-max TMAX --n N
    double s_alpha = 0.5, s_beta = 1.0, s_lambda = 1.0, s_u0 = 1.0, s_tmax = 5.0;
    int s_n = 501;
    auto* solve = app.add_subcommand("solve", "solve D_M u = lambda u, u(0) = u0");
    solve->add_option("--alpha", s_alpha, "order alpha in (0, 1]")->required();
    solve->add_option("--beta", s_beta, "Mittag-Leffler parameter, > 0")->required();
    solve->add_option("--lambda", s_lambda, "eigenvalue")->required();
    solve->add_option("--u0", s_u0, "initial value u(0)")->required();
    solve->add_option("--t-max", s_tmax, "right end of the sample window")
        ->required()
        ->check(CLI::PositiveNumber);
    solve->add_option("--n", s_n, "number of samples, >= 2")->check(CLI::Range(2, 1000000));
    solve->callback([&] {
        const Curve c =
            solve_eigen(s_lambda, s_u0, FracOrder{s_alpha, s_beta}, linspace(0.0, s_tmax, s_n));
        emit(curve_text(c, chosen_format("csv")), output_path);
    });

    // figure --which 1|2|3
    int f_which = 1;
    auto* figure = app.add_subcommand("figure", "caption curve family over the alpha sweep");
    figure->add_option("--which", f_which, "figure index")->required()->check(CLI::Range(1, 3));
    figure->callback(
        [&] { emit(figure_text(f_which, chosen_format("csv")), output_path); });

    // verify [--suite ...]
    std::string v_suite = "all";
    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    ver->add_option("--suite", v_suite, "which suite to run")
        ->check(CLI::IsMember({"all", "operators", "integration", "ode", "theorems"}));
    ver->callback([&] {
        const std::uint64_t seed = seed_from_env();
        std::vector<verify::CheckResult> results;
        if (v_suite == "all")
            results = verify::all_suites(seed);
        else if (v_suite == "operators")
            results = verify::operators_suite(seed);
        else if (v_suite == "integration")
            results = verify::integration_suite(seed);
        else if (v_suite == "ode")
            results = verify::ode_suite(seed);
        else
            results = verify::theorems_suite(seed);
        emit(verify_text(results, chosen_format("pretty")), output_path);
        for (const auto& r : results)
            if (!r.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "mcalc: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mcalc: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

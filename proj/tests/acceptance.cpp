// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcalc/format.hpp"
#include "mcalc/special.hpp"
#include "mcalc/verify.hpp"

namespace {

using mcalc::format_double;
using mcalc::verify::CheckResult;

std::string g_cli_path;

const CheckResult& get(const std::vector<CheckResult>& results, const std::string& key) {
    for (const CheckResult& r : results)
        if (r.key == key) return r;
    std::cerr << "acceptance: missing check " << key << '\n';
    std::exit(1);
}

int g_failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
    if (!pass) ++g_failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << " ("
              << detail << ")\n";
    std::cout.flush();
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = "'" + g_cli_path + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep)) parts.push_back(part);
    return parts;
}

// Figure CSVs must carry the caption parameters exactly: u(0) = 20 in every
// column, columns strictly increasing, and sampled values matching the
// analytic solution for the caption's (beta, lambda, u0).
bool check_figure(int which, double beta, double lambda, double u0, std::string& detail) {
    int code = 0;
    const std::string out = run_cli("figure --which " + std::to_string(which), code);
    if (code != 0) {
        detail = "CLI exited with " + std::to_string(code);
        return false;
    }
    const auto lines = split(out, '\n');
    if (lines.size() != 502) {
        detail = "expected 502 lines, got " + std::to_string(lines.size());
        return false;
    }
    if (lines[0] != "t,u_alpha0.3,u_alpha0.5,u_alpha0.7,u_alpha0.9,u_alpha1.0") {
        detail = "unexpected header: " + lines[0];
        return false;
    }
    if (lines[1] != "0,20,20,20,20,20") {
        detail = "first row is not t=0 with u0=20: " + lines[1];
        return false;
    }
    const double alphas[5] = {0.3, 0.5, 0.7, 0.9, 1.0};
    double worst = 0.0;
    std::vector<double> prev(5, u0);
    for (std::size_t row = 2; row < lines.size(); ++row) {
        const auto fields = split(lines[row], ',');
        if (fields.size() != 6) {
            detail = "malformed row " + std::to_string(row);
            return false;
        }
        const double t = std::stod(fields[0]);
        for (int col = 0; col < 5; ++col) {
            const double u = std::stod(fields[col + 1]);
            if (!(u > prev[col])) {
                detail = "column " + std::to_string(col + 1) + " not increasing at t=" +
                         fields[0];
                return false;
            }
            prev[col] = u;
            const double want =
                u0 * std::exp(lambda * mcalc::gamma(beta + 1.0) *
                              std::pow(t, alphas[col]) / alphas[col]);
            worst = std::max(worst, std::fabs(u - want) / want);
        }
    }
    if (worst > 1e-12) {
        detail = "caption parameters not reproduced, worst rel err " + format_double(worst);
        return false;
    }
    detail = "501 rows, caption values reproduced to " + format_double(worst);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
    }
    if (g_cli_path.empty()) {
        if (const char* env = std::getenv("MCALC_CLI")) g_cli_path = env;
    }
    if (g_cli_path.empty()) {
        std::cerr << "acceptance: pass --cli <mcalc binary> or set MCALC_CLI\n";
        return 1;
    }
    std::uint64_t seed = mcalc::verify::kDefaultSeed;
    if (const char* env = std::getenv("MCALC_SEED")) {
        if (*env != '\0') seed = std::strtoull(env, nullptr, 10);
    }

    // Criterion 1 is timed on its own.
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult agreement = mcalc::verify::limit_closed_agreement();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const auto ops = mcalc::verify::operators_suite(seed);
    const auto integ = mcalc::verify::integration_suite(seed);
    const auto ode = mcalc::verify::ode_suite(seed);
    const auto thm = mcalc::verify::theorems_suite(seed);

    report(1, agreement.max_residual <= 1e-6 && elapsed < 5.0,
           "closed form vs limit definition on the battery grid",
           agreement.detail + ", max rel err " + format_double(agreement.max_residual) +
               ", " + format_double(elapsed) + " s of < 5 s");

    {
        const auto& r = get(ops, "operators/golden_derivative_rows");
        report(2, r.max_residual <= 1e-10, "derivative table golden values",
               "max rel err " + format_double(r.max_residual) + " tol 1e-10");
    }
    {
        const auto& alt = get(ops, "operators/alternative_reduction");
        const auto& cls = get(ops, "operators/classical_reduction");
        report(3, alt.max_residual <= 1e-8 && cls.max_residual <= 1e-8,
               "beta = 1 reduction and classical limit",
               "alternative " + format_double(alt.max_residual) + ", classical " +
                   format_double(cls.max_residual) + " tol 1e-8");
    }
    {
        const double worst = std::max({get(ops, "operators/linearity").max_residual,
                                       get(ops, "operators/product_rule").max_residual,
                                       get(ops, "operators/quotient_rule").max_residual,
                                       get(ops, "operators/chain_rule").max_residual});
        report(4, worst <= 1e-7, "algebraic rules on randomized draws",
               "worst scaled residual " + format_double(worst) + " tol 1e-7");
    }
    {
        const auto& rt = get(integ, "integration/ftc_roundtrip");
        const auto& inv = get(integ, "integration/ftc_inverse");
        report(5, rt.max_residual <= 1e-8 && inv.max_residual <= 1e-6,
               "fundamental theorem round trip and inverse",
               "roundtrip " + format_double(rt.max_residual) + " tol 1e-8, inverse " +
                   format_double(inv.max_residual) + " tol 1e-6");
    }
    {
        const auto& r = get(integ, "integration/by_parts");
        report(6, r.max_residual <= 1e-8, "integration by parts residuals",
               r.detail + ", worst " + format_double(r.max_residual) + " tol 1e-8");
    }
    {
        const auto& r = get(integ, "integration/bound_chain");
        report(7, r.max_residual <= 1e-10, "integral inequality chain",
               r.detail + ", worst violation " + format_double(r.max_residual) +
                   " slack 1e-10");
    }
    {
        const auto& e1 = get(ops, "special/ml_exp_identity");
        const auto& e2 = get(ops, "special/ml_cosh_identity");
        report(8, e1.max_residual <= 1e-12 && e2.max_residual <= 1e-10,
               "Mittag-Leffler identities",
               "exp " + format_double(e1.max_residual) + " tol 1e-12, cosh " +
                   format_double(e2.max_residual) + " tol 1e-10");
    }
    {
        const auto& res = get(ode, "ode/eigen_residual");
        const auto& pert = get(ode, "ode/perturbation_detected");
        const auto& agree = get(ode, "ode/linear_eigen_agreement");
        report(9,
               res.max_residual <= 1e-6 && pert.pass && agree.max_residual <= 1e-9,
               "eigen-equation residuals and solver cross-agreement",
               "residual " + format_double(res.max_residual) +
                   " tol 1e-6, perturbed residual " + format_double(pert.max_residual) +
                   " > 1e-3, cross-agreement " + format_double(agree.max_residual) +
                   " tol 1e-9");
    }
    {
        bool pass = true;
        std::string detail;
        const double params[3][3] = {{0.5, 1.0, 20.0}, {1.0, 2.0, 20.0}, {1.5, 2.5, 20.0}};
        for (int which = 1; which <= 3; ++which) {
            std::string d;
            if (!check_figure(which, params[which - 1][0], params[which - 1][1],
                              params[which - 1][2], d)) {
                pass = false;
                detail = "figure " + std::to_string(which) + ": " + d;
                break;
            }
            detail = d;
        }
        report(10, pass, "figure curve families match the captions", detail);
    }
    {
        const auto& rolle = get(thm, "theorems/rolle_instances");
        const auto& mvt = get(thm, "theorems/mvt_instances");
        report(11, rolle.max_residual <= 1e-8 && mvt.max_residual <= 1e-8,
               "Rolle and mean value witnesses",
               "rolle " + format_double(rolle.max_residual) + ", mvt " +
                   format_double(mvt.max_residual) + " tol 1e-8");
    }

    if (g_failures > 0) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}

// Command-line front end: identity verification suites, spectral
// decomposition, polarization reconstruction, functional calculus, adjoint
// and norm queries over JSON operator files.
//
// Exit codes: 0 success, 1 verification failures, 2 unknown suite or
// function domain error, 3 operator not self-adjoint, 4 eigenvalue not
// standard strong, 5 parse/validation error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "octopara/json_io.hpp"
#include "octopara/oracle.hpp"
#include "octopara/verify.hpp"

namespace {

using namespace octopara;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUnknownSuite = 2;
constexpr int kExitFnDomain = 2;
constexpr int kExitNotSelfAdjoint = 3;
constexpr int kExitNotStandardStrong = 4;
constexpr int kExitParse = 5;

json report_to_json(const RunReport& r) {
    json props = json::array();
    for (const auto& p : r.properties) {
        props.push_back(json{{"name", p.name},
                             {"trials", p.trials},
                             {"failures", p.failures},
                             {"max_residual", p.max_residual},
                             {"threshold", p.threshold},
                             {"informational", p.informational},
                             {"failing_trials", p.failing_trials}});
    }
    // wall time varies run to run and would break byte-stable output; it
    // goes to stderr instead.
    return json{{"suite", r.suite},
                {"trials", r.trials},
                {"failures", r.total_failures()},
                {"properties", props}};
}

void print_report_text(const RunReport& r) {
    std::printf("suite %-12s  trials %llu  failures %llu\n", r.suite.c_str(),
                (unsigned long long)r.trials, (unsigned long long)r.total_failures());
    for (const auto& p : r.properties) {
        std::printf("  %-38s %s  max residual %.3e  (threshold %.1e)%s\n", p.name.c_str(),
                    p.informational ? "info" : (p.failures == 0 ? "ok  " : "FAIL"),
                    p.max_residual, p.threshold, p.informational ? "  [rate]" : "");
        if (!p.failing_trials.empty()) {
            std::printf("    failing trials:");
            for (uint64_t t : p.failing_trials) std::printf(" %llu", (unsigned long long)t);
            std::printf("\n");
        }
    }
}

int cmd_verify(const std::vector<std::string>& suites, uint64_t trials, uint64_t seed, double tol,
               const std::string& format) {
    std::vector<std::string> run = suites.empty() ? suite_names() : suites;
    uint64_t failures = 0;
    json out = json::array();
    for (const auto& name : run) {
        RunReport rep;
        try {
            rep = run_suite(name, trials, seed, tol);
        } catch (const UnknownSuiteError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUnknownSuite;
        }
        failures += rep.total_failures();
        std::fprintf(stderr, "[%s] %.2fs\n", rep.suite.c_str(), rep.wall_seconds);
        if (format == "json")
            out.push_back(report_to_json(rep));
        else
            print_report_text(rep);
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_decompose(const std::string& input, const std::string& output, double tol,
                  uint64_t seed) {
    const ParaLinearOperator t = operator_from_json(load_json_file(input), tol);
    const SpectralDecomposition d = decompose(t, tol, seed);
    const double residual = op_distance(reconstruct(d), t);
    const json j = to_json(d, residual);
    if (output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(output, j);
    return kExitOk;
}

int cmd_polarize(const std::string& input, const std::string& output, double tol) {
    const ParaLinearOperator t = operator_from_json(load_json_file(input), tol);
    const auto probe = QuadraticFormProbe::from_operator(t);
    const ParaLinearOperator rec = reconstruct_operator(probe);
    const double deviation = max_abs(rec.matrix() - t.matrix());
    json j{{"operator", to_json(rec)}, {"max_deviation", deviation}};
    if (output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(output, j);
    return kExitOk;
}

int cmd_funcalc(const std::string& input, const std::string& poly, const std::string& table_path,
                const std::string& side, const std::string& output, double tol, uint64_t seed) {
    const ParaLinearOperator t = operator_from_json(load_json_file(input), tol);
    const SpectralDecomposition d = decompose(t, tol, seed);
    const auto pts = spectrum_points(d);

    SpectrumFunction f{{}};
    if (!poly.empty()) {
        std::vector<double> coeffs;
        std::string item;
        for (std::stringstream ss(poly); std::getline(ss, item, ',');) {
            try {
                coeffs.push_back(std::stod(item));
            } catch (...) {
                throw ParseError("bad polynomial coefficient: " + item);
            }
        }
        f = SpectrumFunction::polynomial(coeffs, pts);
    } else if (!table_path.empty()) {
        f = function_from_json(load_json_file(table_path));
    } else {
        throw ParseError("funcalc needs --poly or --table");
    }

    const ParaLinearOperator result = (side == "left") ? psi(f, d) : phi(f, d);
    const json j = to_json(result);
    if (output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(output, j);
    return kExitOk;
}

int cmd_adjoint(const std::string& input, const std::string& output, double tol) {
    const ParaLinearOperator t = operator_from_json(load_json_file(input), tol);
    const json j = to_json(adjoint(t));
    if (output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(output, j);
    return kExitOk;
}

int cmd_norm(const std::string& input, double tol) {
    const ParaLinearOperator t = operator_from_json(load_json_file(input), tol);
    std::cout << json{{"norm", operator_norm(t)}}.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"octopara: para-linear operator algebra over the octonions"};
    app.require_subcommand(1);

    double tol = 1e-10;
    uint64_t seed = 0;
    uint64_t trials = 500;
    std::string format = "json";
    app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed; all randomness derives from it")
        ->capture_default_str();
    app.add_option("--trials", trials, "trials per verification property")
        ->capture_default_str();
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    std::vector<std::string> suites;
    verify->add_option("suites", suites, "suites to run (default: all)");

    std::string input, output, poly, table, side = "right";
    auto* dec = app.add_subcommand("decompose", "spectral decomposition of an operator file");
    dec->add_option("input", input, "operator JSON file")->required();
    dec->add_option("-o,--output", output, "output file (default: stdout)");

    auto* pol = app.add_subcommand("polarize",
                                   "rebuild an operator from its quadratic form only");
    pol->add_option("input", input, "operator JSON file")->required();
    pol->add_option("-o,--output", output, "output file (default: stdout)");

    auto* fun = app.add_subcommand("funcalc", "apply a spectrum function to an operator");
    fun->add_option("input", input, "operator JSON file")->required();
    fun->add_option("--poly", poly, "comma-separated real coefficients c0,c1,...");
    fun->add_option("--table", table, "function table JSON file");
    fun->add_option("--side", side, "right (phi) or left (psi)")
        ->check(CLI::IsMember({"right", "left"}));
    fun->add_option("-o,--output", output, "output file (default: stdout)");

    auto* adj = app.add_subcommand("adjoint", "adjoint of an operator file");
    adj->add_option("input", input, "operator JSON file")->required();
    adj->add_option("-o,--output", output, "output file (default: stdout)");

    auto* nrm = app.add_subcommand("norm", "operator norm of an operator file");
    nrm->add_option("input", input, "operator JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(suites, trials, seed, tol, format);
        if (dec->parsed()) return cmd_decompose(input, output, tol, seed);
        if (pol->parsed()) return cmd_polarize(input, output, tol);
        if (fun->parsed()) return cmd_funcalc(input, poly, table, side, output, tol, seed);
        if (adj->parsed()) return cmd_adjoint(input, output, tol);
        if (nrm->parsed()) return cmd_norm(input, tol);
    } catch (const NotSelfAdjointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSelfAdjoint;
    } catch (const NotStandardStrongError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotStandardStrong;
    } catch (const SpectrumMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFnDomain;
    } catch (const UnknownSuiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownSuite;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

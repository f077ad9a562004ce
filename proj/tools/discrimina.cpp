// discrimina: count and construct positive solutions of rank-2 Hammerstein
// equations, or count real / positive roots of a rational polynomial.
//
// Exit codes:
//   0  success
//   1  internal or numerical failure
//   2  malformed input (usage, JSON, schema)
//   3  domain violation (zero polynomial, non-positive kernel factor)
//   4  oracle / consistency mismatch

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "discrimina/analyzer.hpp"
#include "discrimina/document.hpp"
#include "discrimina/errors.hpp"
#include "discrimina/report.hpp"

namespace {

using namespace discrimina;

enum ExitCode { Ok = 0, Failure = 1, BadInput = 2, BadDomain = 3, Mismatch = 4 };

// Exact value of a decimal literal such as "1e-12" or "0.0005".
Rational decimal_to_rational(const std::string& text) {
    std::size_t i = 0;
    Integer mantissa = 0;
    long scale = 0;
    bool digits = false, point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (point) --scale;
            digits = true;
        } else if (c == '.' && !point) {
            point = true;
        } else {
            break;
        }
    }
    if (!digits) throw ParseError("invalid tolerance '" + text + "'");
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw ParseError("invalid tolerance '" + text + "'");
        try {
            std::size_t used = 0;
            scale += std::stol(text.substr(i + 1), &used);
            if (i + 1 + used != text.size()) throw ParseError("invalid tolerance '" + text + "'");
        } catch (const std::logic_error&) {
            throw ParseError("invalid tolerance '" + text + "'");
        }
    }
    Rational q(mantissa);
    const Rational ten_power = power(Rational(10), static_cast<unsigned long>(scale < 0 ? -scale : scale));
    q = scale < 0 ? Rational(q / ten_power) : Rational(q * ten_power);
    if (q <= 0) throw ParseError("tolerance must be positive");
    return q;
}

void print(const nlohmann::json& report, bool text, const std::string& summary_text) {
    if (text)
        std::cout << summary_text;
    else
        std::cout << report.dump(2) << "\n";
}

int run_count(bool positive, const std::string& coeffs, bool text) {
    const Polynomial f = parse_coefficients_argument(coeffs);
    const auto report = positive ? positive_count_report(f) : real_count_report(f);
    print(report, text, text ? count_summary(report) : std::string{});
    return Ok;
}

struct AnalyzeArgs {
    std::string input;
    bool solve = false;
    bool oracle = false;
    std::string tol;
    std::string emit;
    bool text = false;
};

int run_analyze(const AnalyzeArgs& args) {
    const KernelDocument doc = load_kernel_document(args.input);
    AnalyzeOptions options;
    options.solve = args.solve;
    options.oracle = args.oracle;

    AnalysisReport report;
    if (doc.mode == Mode::Exact) {
        if (!args.tol.empty()) options.tol = decimal_to_rational(args.tol);
        report = analyze(to_kernel_spec(doc), options);
    } else {
        double quadrature_tol = doc.tol.value_or(1e-12);
        if (!args.tol.empty()) quadrature_tol = parse_tolerance(args.tol);
        options.tol = Rational(quadrature_tol);
        report = analyze_numeric(to_numeric_kernel(doc), quadrature_tol, options);
    }

    if (report.oracle)
        std::cerr << "oracle: Sturm count on (0, B) " << report.oracle->sturm_positive << ", on the even polynomial "
                  << report.oracle->sturm_even << ", isolated roots " << report.oracle->isolated << ", all agree\n";

    const auto json = to_json(report);
    if (!args.emit.empty()) {
        std::ofstream out(args.emit);
        if (!out) throw Error("cannot write '" + args.emit + "'");
        out << json.dump(2) << "\n";
    }
    print(json, args.text, args.text ? summary(report) : std::string{});
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive solutions of rank-2 Hammerstein integral equations"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    std::string coeffs;
    bool count_text = false;
    auto* real = app.add_subcommand("count-real", "Distinct real roots of a polynomial");
    real->add_option("--coeffs", coeffs, "Ascending coefficients: inline JSON array or file")->required();
    real->add_flag("--text", count_text, "Human-readable summary instead of JSON");

    auto* positive = app.add_subcommand("count-positive", "Distinct positive roots of a polynomial");
    positive->add_option("--coeffs", coeffs, "Ascending coefficients: inline JSON array or file")->required();
    positive->add_flag("--text", count_text, "Human-readable summary instead of JSON");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Classify and construct positive solutions of a kernel document");
    analyze->add_option("--input", analyze_args.input, "Kernel document (JSON)")->required();
    analyze->add_flag("--solve", analyze_args.solve, "Construct the solutions and report residuals");
    analyze->add_flag("--oracle", analyze_args.oracle, "Cross-check counts against Sturm chains");
    analyze->add_option("--tol", analyze_args.tol,
                        "Enclosure width of constructed lambdas (exact mode) or quadrature tolerance (numeric mode)");
    analyze->add_option("--emit", analyze_args.emit, "Also write the JSON report to this file");
    analyze->add_flag("--text", analyze_args.text, "Human-readable summary instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*real) return run_count(false, coeffs, count_text);
        if (*positive) return run_count(true, coeffs, count_text);
        return run_analyze(analyze_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const PositivityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadDomain;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Mismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    }
}

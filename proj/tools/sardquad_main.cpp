#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sardquad/discrete_operator.hpp"
#include "sardquad/euler_frobenius.hpp"
#include "sardquad/optimal_weights.hpp"
#include "sardquad/quadrature_engine.hpp"
#include "sardquad/serialization.hpp"
#include "sardquad/sobolev_oracle.hpp"
#include "sardquad/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitInternalError = 3;

constexpr long kMinPrecision = 64;
constexpr long kMaxPrecision = 4096;
constexpr int kMaxEfDegree = 40;

long default_precision() {
    if (const char* env = std::getenv("QUAD_PRECISION_BITS")) {
        char* end = nullptr;
        long bits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0') return bits;
    }
    return sardquad::BigFloat::kDefaultPrecision;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        sardquad::atomic_write_file(out_path, content);
}

struct ArgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_common(int m, long n_count, long precision) {
    if (m < 1) throw ArgError("m must be >= 1");
    if (n_count < m) throw ArgError("N must be >= m");
    if (precision < kMinPrecision || precision > kMaxPrecision)
        throw ArgError("precision must lie in [64, 4096]");
}

int cmd_weights(int m, long n_count, long precision, const std::string& format, const std::string& out_path) {
    check_common(m, n_count, precision);
    if (format != "json" && format != "csv") throw ArgError("format must be json or csv");
    sardquad::QuadratureRule rule = sardquad::build_rule(m, n_count, static_cast<mpfr_prec_t>(precision));
    emit(format == "json" ? sardquad::rule_to_json(rule) : sardquad::rule_to_csv(rule), out_path);
    return kExitOk;
}

int cmd_validate(int m, long n_count, long precision, const std::string& golden_path,
                 const std::string& write_golden_path, const std::string& out_path) {
    check_common(m, n_count, precision);

    sardquad::OracleSolution oracle;
    if (!golden_path.empty()) {
        oracle = sardquad::read_golden_file(golden_path);
        if (oracle.m != m || oracle.grid_count != n_count)
            throw ArgError("golden file is for different (m, N)");
    } else {
        oracle = sardquad::solve_sobolev_system(m, n_count);
    }
    if (!write_golden_path.empty()) sardquad::write_golden_file(write_golden_path, oracle);

    sardquad::ValidationReport report =
        sardquad::run_validators(m, n_count, static_cast<mpfr_prec_t>(precision), &oracle);
    emit(sardquad::report_to_json(report), out_path);
    return report.pass ? kExitOk : kExitValidationFailed;
}

int cmd_converge(int m, const std::string& integrand_id, const std::vector<long>& n_values, long precision,
                 const std::string& out_path) {
    if (m < 1) throw ArgError("m must be >= 1");
    if (precision < kMinPrecision || precision > kMaxPrecision)
        throw ArgError("precision must lie in [64, 4096]");
    const sardquad::Integrand* f = sardquad::find_integrand(integrand_id);
    if (f == nullptr) throw ArgError("unknown integrand '" + integrand_id + "'");
    sardquad::ConvergenceReport report =
        sardquad::convergence_study(m, *f, n_values, static_cast<mpfr_prec_t>(precision));
    emit(sardquad::to_csv(report), out_path);
    return kExitOk;
}

int cmd_ef(int k, long precision) {
    if (k < 0) throw ArgError("k must be >= 0");
    if (k > kMaxEfDegree) throw ArgError("k must be <= 40");
    if (precision < kMinPrecision || precision > kMaxPrecision)
        throw ArgError("precision must lie in [64, 4096]");

    const sardquad::EFPolynomial e = sardquad::ef_by_recurrence(k);
    std::string line;
    for (int i = 0; i <= e.degree(); ++i) {
        if (i > 0) line += " ";
        line += sardquad::to_string(e.coeff(i));
    }
    std::cout << line << "\n";

    if (k >= 2 && k % 2 == 0) {
        const int m = k / 2 + 1;
        const sardquad::RootSet roots = sardquad::isolate_roots(m, static_cast<mpfr_prec_t>(precision));
        const int digits = static_cast<int>(static_cast<double>(precision) * 0.30103) - 1;
        std::string root_line;
        for (int i = 0; i < roots.size(); ++i) {
            if (i > 0) root_line += " ";
            root_line += sardquad::to_decimal_string(roots.value(i), digits);
        }
        std::cout << root_line << "\n";
    }
    return kExitOk;
}

int cmd_operator(int m, long n_count, long window, long precision, const std::string& out_path) {
    check_common(m, n_count, precision);
    if (window < 2 * m) throw ArgError("window must be >= 2m");
    emit(sardquad::operator_report_to_json(m, n_count, static_cast<mpfr_prec_t>(precision), window), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal closed quadrature rules on equally spaced nodes"};
    app.require_subcommand(1);

    int m = 1;
    long n_count = 1;
    long precision = default_precision();
    long window = sardquad::tol::kInverseWindow;
    int ef_degree = 0;
    std::string format = "json";
    std::string out_path;
    std::string golden_path;
    std::string write_golden_path;
    std::string integrand_id;
    std::vector<long> n_values;

    auto* weights = app.add_subcommand("weights", "Construct the optimal weights for (m, N)");
    weights->add_option("--m", m, "Derivative order m")->required();
    weights->add_option("--N", n_count, "Number of subintervals N")->required();
    weights->add_option("--precision", precision, "Working precision in bits");
    weights->add_option("--format", format, "Output format: json or csv");
    weights->add_option("--out", out_path, "Write to file instead of stdout");

    auto* validate = app.add_subcommand("validate", "Run every validator for (m, N)");
    validate->add_option("--m", m, "Derivative order m")->required();
    validate->add_option("--N", n_count, "Number of subintervals N")->required();
    validate->add_option("--precision", precision, "Working precision in bits");
    validate->add_option("--golden", golden_path, "Compare against a stored exact solution");
    validate->add_option("--write-golden", write_golden_path, "Write the exact solution to a golden file");
    validate->add_option("--out", out_path, "Write the JSON report to a file");

    auto* converge = app.add_subcommand("converge", "Convergence study for an integrand");
    converge->add_option("--m", m, "Derivative order m")->required();
    converge->add_option("--f", integrand_id, "Integrand id from the corpus")->required();
    converge->add_option("--Ns", n_values, "Comma-separated N values")->required()->delimiter(',');
    converge->add_option("--precision", precision, "Working precision in bits");
    converge->add_option("--out", out_path, "Write the CSV to a file");

    auto* ef = app.add_subcommand("ef", "Euler-Frobenius coefficients (and roots for even k)");
    ef->add_option("--k", ef_degree, "Polynomial degree k")->required();
    ef->add_option("--precision", precision, "Root precision in bits");

    auto* op = app.add_subcommand("operator", "Discrete-operator stencil and identity residuals");
    op->add_option("--m", m, "Derivative order m")->required();
    op->add_option("--N", n_count, "Number of subintervals N (h = 1/N)");
    op->add_option("--window", window, "Window half-width for the stencil/identity checks");
    op->add_option("--precision", precision, "Working precision in bits");
    op->add_option("--out", out_path, "Write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    try {
        if (weights->parsed()) return cmd_weights(m, n_count, precision, format, out_path);
        if (validate->parsed()) return cmd_validate(m, n_count, precision, golden_path, write_golden_path, out_path);
        if (converge->parsed()) return cmd_converge(m, integrand_id, n_values, precision, out_path);
        if (ef->parsed()) return cmd_ef(ef_degree, precision);
        if (op->parsed()) {
            if (!op->count("--N")) n_count = 10;
            return cmd_operator(m, n_count, window, precision, out_path);
        }
    } catch (const ArgError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitBadArguments;
}

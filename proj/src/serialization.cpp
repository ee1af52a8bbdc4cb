#include "sardquad/serialization.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "sardquad/discrete_operator.hpp"

namespace sardquad {

using ordered_json = nlohmann::ordered_json;

std::string to_decimal_string(const BigFloat& x, int significant_digits) {
    return x.str(significant_digits);
}

namespace {

ordered_json decimal_array(const std::vector<BigFloat>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(to_decimal_string(v));
    return arr;
}

}  // namespace

std::string rule_to_json(const QuadratureRule& rule) {
    ordered_json j;
    j["m"] = rule.m;
    j["N"] = rule.grid_count;
    j["h"] = to_string(rule.h);
    j["weights"] = decimal_array(rule.weights);
    j["d"] = decimal_array(rule.d);
    j["roots"] = decimal_array(rule.roots);
    return j.dump(2) + "\n";
}

std::string rule_to_csv(const QuadratureRule& rule) {
    std::string out = "beta,weight\n";
    for (size_t beta = 0; beta < rule.weights.size(); ++beta)
        out += std::to_string(beta) + "," + to_decimal_string(rule.weights[beta]) + "\n";
    return out;
}

std::string report_to_json(const ValidationReport& report) {
    ordered_json j;
    j["m"] = report.m;
    j["N"] = report.grid_count;
    j["precision"] = static_cast<long>(report.precision_requested);
    j["precision_used"] = static_cast<long>(report.precision_used);
    j["oracle_deviation"] = to_decimal_string(report.oracle_deviation);
    j["moment_residuals"] = decimal_array(report.moment_residuals);
    j["operator_moment_residuals"] = decimal_array(report.operator_moment_residuals);
    j["inverse_residual"] = to_decimal_string(report.inverse_residual);
    if (report.optimality_residual)
        j["optimality_residual"] = to_decimal_string(*report.optimality_residual);
    else
        j["optimality_residual"] = nullptr;
    ordered_json tolerances;
    tolerances["oracle_deviation"] = tol::kOracleDeviation;
    tolerances["moment_residual"] = tol::kMomentResidual;
    tolerances["operator_moment_residual"] = tol::kOperatorMomentResidual;
    tolerances["inverse_residual"] = tol::kInverseResidual;
    tolerances["optimality_residual"] = tol::kOptimalityResidual;
    j["tolerances"] = tolerances;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string oracle_to_json(const OracleSolution& oracle) {
    ordered_json j;
    j["m"] = oracle.m;
    j["N"] = oracle.grid_count;
    ordered_json w = ordered_json::array();
    for (const auto& v : oracle.weights) w.push_back(to_string(v));
    j["weights"] = w;
    ordered_json l = ordered_json::array();
    for (const auto& v : oracle.multipliers) l.push_back(to_string(v));
    j["multipliers"] = l;
    return j.dump(2) + "\n";
}

OracleSolution oracle_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    OracleSolution oracle;
    oracle.m = j.at("m").get<int>();
    oracle.grid_count = j.at("N").get<long>();
    for (const auto& v : j.at("weights")) oracle.weights.push_back(rational_from_string(v.get<std::string>()));
    for (const auto& v : j.at("multipliers")) oracle.multipliers.push_back(rational_from_string(v.get<std::string>()));
    if (oracle.weights.size() != static_cast<size_t>(oracle.grid_count) + 1 ||
        oracle.multipliers.size() != static_cast<size_t>(oracle.m))
        throw std::invalid_argument("oracle_from_json: inconsistent dimensions");
    return oracle;
}

OracleSolution read_golden_file(const std::string& path) { return oracle_from_json(read_file(path)); }

void write_golden_file(const std::string& path, const OracleSolution& oracle) {
    atomic_write_file(path, oracle_to_json(oracle));
}

std::string operator_report_to_json(int m, long grid_count, mpfr_prec_t precision, long window) {
    const RootSet roots = isolate_roots(m, precision);
    const DiscreteOperator op(m, grid_count, roots, precision);
    ordered_json j;
    j["m"] = m;
    j["N"] = grid_count;
    j["h"] = to_string(op.h());
    j["precision"] = static_cast<long>(precision);
    j["window"] = window;
    ordered_json stencil = ordered_json::array();
    for (long beta = 0; beta <= window; ++beta) stencil.push_back(to_decimal_string(op.value(beta)));
    j["stencil"] = stencil;
    ordered_json residuals = ordered_json::array();
    for (int k = 0; k <= 4 * m; ++k) residuals.push_back(to_decimal_string(op.moment_residual(k)));
    j["moment_residuals"] = residuals;
    j["inverse_residual"] = to_decimal_string(op.inverse_residual(std::max<long>(window, 2 * m)));
    return j.dump(2) + "\n";
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp = dir / (target.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("atomic_write_file: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_file: cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace sardquad

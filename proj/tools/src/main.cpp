#include "selftest.hpp"

#include "geoint/config.hpp"
#include "geoint/errors.hpp"
#include "geoint/geodesic.hpp"
#include "geoint/series.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace geoint;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kConfig = 1, kMismatch = 2, kNumeric = 3, kPrecision = 4 };

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

std::string optional_cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_verify(const std::string& path) {
    Config cfg = load_config(path);
    FFormContext ctx = build_context(cfg);
    const Ramification& ram = ctx.ramification();
    std::cout << "algebra            (" << to_string(cfg.a) << ", " << to_string(cfg.b) << ") indefinite\n";
    std::cout << "ramified primes   ";
    for (auto p : ram.finite_primes) std::cout << " " << p;
    std::cout << "\nD_B                " << ram.discriminant << "\n";
    std::cout << "reduced disc       " << ctx.order().reduced_disc().get_str() << "\n";
    std::cout << "level N            " << ctx.level() << "\n";
    std::cout << "D1, D2             " << ctx.D1() << ", " << ctx.D2() << "\n";
    std::cout << "conductors         " << ctx.conductor1() << ", " << ctx.conductor2() << "\n";
    std::cout << "alpha = q_F(1)     " << ctx.alpha() << (totally_positive(ctx.alpha()) ? " (totally positive)" : "")
              << "\n";
    std::cout << "Tr alpha           " << to_string(ctx.alpha().trace()) << "\n";
    std::cout << "u1, u2             " << ctx.u1() << ", " << ctx.u2() << "\n";
    std::cout << "g1, g2             " << ctx.g1() << ", " << ctx.g2() << "\n";
    std::cout << "ok\n";
    return kOk;
}

int cmd_coeffs(const std::string& path, std::optional<std::int64_t> n_max, const std::string& method_name,
               const std::string& format, unsigned threads) {
    const std::string bytes = read_file(path);
    Config cfg = parse_config(bytes);
    FFormContext ctx = build_context(cfg);
    Method method = method_name == "theta" ? Method::theta : method_name == "oracle" ? Method::oracle : Method::both;
    EnumOptions opt;
    opt.slack = cfg.options.box_slack;
    CoeffTable table = report(ctx, n_max.value_or(cfg.options.n_max), method, opt, threads);
    const bool both = method == Method::both;
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const CoeffRow& r : table.rows) {
            ordered_json row;
            row["n"] = r.n;
            row["a_theta"] = r.theta ? ordered_json(*r.theta) : ordered_json(nullptr);
            row["a_oracle"] = r.oracle ? ordered_json(*r.oracle) : ordered_json(nullptr);
            row["match"] = both ? ordered_json(r.match) : ordered_json(nullptr);
            row["coprime"] = r.coprime;
            rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["config_hash"] = sha256_hex(bytes);
        doc["calibration_sign"] = table.calibration_sign;
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n\ta_theta\ta_oracle\tmatch\tcoprime\n";
        for (const CoeffRow& r : table.rows)
            std::cout << r.n << '\t' << optional_cell(r.theta) << '\t' << optional_cell(r.oracle) << '\t'
                      << (both ? (r.match ? "true" : "false") : "-") << '\t' << (r.coprime ? "true" : "false") << '\n';
    }
    if (both && !table.all_match()) {
        std::cerr << "dual-method mismatch (calibration sign " << table.calibration_sign << ")\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_hilbert(const std::string& path, std::int64_t trace_max, const std::string& format) {
    Config cfg = load_config(path);
    FFormContext ctx = build_context(cfg);
    EnumOptions opt;
    opt.slack = cfg.options.box_slack;
    auto coeffs = hilbert_coeffs(trace_max, ctx, opt);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& [beta, c] : coeffs)
            rows.push_back({{"trace", to_string(beta.trace())}, {"u", to_string(beta.a())}, {"v", to_string(beta.b())},
                            {"D", beta.D()}, {"c", c}});
        std::cout << ordered_json{{"rows", rows}}.dump(2) << "\n";
    } else {
        std::cout << "trace\tbeta\tc\n";
        for (const auto& [beta, c] : coeffs)
            std::cout << to_string(beta.trace()) << '\t' << to_string(beta.a()) << " + " << to_string(beta.b()) << "*sqrt("
                      << beta.D() << ")\t" << c << '\n';
    }
    return kOk;
}

int cmd_termwise(const std::string& path, std::int64_t n_max, std::int64_t radius) {
    Config cfg = load_config(path);
    FFormContext ctx = build_context(cfg);
    EnumOptions opt;
    opt.slack = cfg.options.box_slack;
    std::size_t rows = 0, agree = 0, scanned = 0, crossings = 0;
    std::cout << "n\tb\tvarsigma\tcrossing\n";
    for (std::int64_t n = 1; n <= n_max; ++n) {
        TermwiseReport rep = termwise_compare(n, ctx, radius, opt);
        for (const TermwiseRow& r : rep.rows)
            std::cout << n << '\t' << r.orbit.b << '\t' << r.varsigma << '\t' << r.crossing << '\n';
        rows += rep.rows.size();
        agree += rep.agreements;
        scanned += rep.scanned_nonpositive;
        crossings += rep.nonpositive_crossings;
    }
    std::cout << "# termwise agreement " << agree << "/" << rows << "\n";
    std::cout << "# non-positive q_F elements scanned " << scanned << ", with crossings " << crossings << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection numbers of real quadratic geodesics on Shimura curves"};
    app.require_subcommand(1);

    std::string path;
    auto* verify = app.add_subcommand("verify", "Check every invariant of a configuration");
    verify->add_option("config", path, "Configuration JSON")->required()->check(CLI::ExistingFile);

    std::optional<std::int64_t> n_max;
    std::string method = "both", format = "tsv";
    unsigned threads = 0;
    auto* coeffs = app.add_subcommand("coeffs", "Elliptic coefficients a_n by the theta sum and the crossing count");
    coeffs->add_option("config", path, "Configuration JSON")->required()->check(CLI::ExistingFile);
    coeffs->add_option("--n-max", n_max, "Largest n (default: options.n_max)")->check(CLI::NonNegativeNumber);
    coeffs->add_option("--method", method, "theta, oracle or both")->check(CLI::IsMember({"theta", "oracle", "both"}));
    coeffs->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    coeffs->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::int64_t trace_max = 10;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert coefficients c(beta) grouped by totally positive beta");
    hilbert->add_option("config", path, "Configuration JSON")->required()->check(CLI::ExistingFile);
    hilbert->add_option("--trace-max", trace_max, "Largest trace of beta")->check(CLI::NonNegativeNumber);
    hilbert->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    std::int64_t termwise_n = 10, radius = 3;
    auto* termwise = app.add_subcommand("termwise", "Per-orbit varsigma against crossing sign (exploratory)");
    termwise->add_option("config", path, "Configuration JSON")->required()->check(CLI::ExistingFile);
    termwise->add_option("--n-max", termwise_n, "Largest n")->check(CLI::NonNegativeNumber);
    termwise->add_option("--scan-radius", radius, "Coordinate radius of the non-positive scan")
        ->check(CLI::NonNegativeNumber);

    double tolerance = 1e-9;
    auto* selftest = app.add_subcommand("selftest", "Numerical and exact-arithmetic self checks");
    selftest->add_option("--tolerance", tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfig;
    }

    try {
        if (*verify) return cmd_verify(path);
        if (*coeffs) return cmd_coeffs(path, n_max, method, format, threads);
        if (*hilbert) return cmd_hilbert(path, trace_max, format);
        if (*termwise) return cmd_termwise(path, termwise_n, radius);
        if (*selftest) return geoint::cli::run_selftest(tolerance, std::cout) ? kOk : kNumeric;
    } catch (const ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kConfig;
    } catch (const ToleranceError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kPrecision;
    }
    return kOk;
}

// SPDX-License-Identifier: Apache-2.0
//
// marcumq: command-line evaluation of the generalized Marcum Q-function.
//
// Subcommands:
//   eval         point evaluation (or batch from stdin) by one method
//   compare      all four methods side by side with the max pairwise spread
//   tables       built-in reference grid self-test
//   convergence  per-term partial sums vs the a-priori truncation bound
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "marcumq/alt_series.hpp"
#include "marcumq/errors.hpp"
#include "marcumq/laguerre_series.hpp"
#include "marcumq/output_record.hpp"
#include "marcumq/quadrature.hpp"
#include "marcumq/special_functions.hpp"
#include "marcumq/types.hpp"

namespace {

namespace exit_code {
constexpr int ok = 0;
constexpr int internal = 1;
constexpr int bad_args = 2;
constexpr int no_convergence = 3;
constexpr int ill_conditioned = 4;
constexpr int spread = 5;
constexpr int table_mismatch = 6;
}  // namespace exit_code

enum class Format { plain, json, csv };

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw marcumq::DomainError("format must be one of plain, json, csv");
}

// 15 significant digits with trailing zeros kept, so output diffs
// cleanly against fixed-precision reference tables.
std::string fmt15(double v) {
    if (v == 0.0 || !std::isfinite(v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }
    int decimals = 14 - static_cast<int>(std::floor(std::log10(std::fabs(v))));
    decimals = std::max(0, std::min(decimals, 30));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

int default_max_terms() {
    if (const char* env = std::getenv("MARCUMQ_MAX_TERMS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2 && v <= 1000000) return static_cast<int>(v);
        std::cerr << "warning: ignoring invalid MARCUMQ_MAX_TERMS='" << env << "'\n";
    }
    return 500;
}

marcumq::EvalReport run_method(const marcumq::MarcumArgs& args, marcumq::Method method,
                               const marcumq::TruncationPolicy& policy, bool force,
                               const marcumq::LaguerreCache* cache = nullptr) {
    using marcumq::Method;
    if (args.a == 0.0) {
        // Exact limiting value; series coefficients need a > 0.
        marcumq::validate_args(args, /*require_positive_a=*/false);
        return {marcumq::limit_a_zero(args.nu, args.b), 1, 0.0, method};
    }
    switch (method) {
        case Method::laguerre:
            return marcumq::eval_laguerre_series(args, policy, cache, force);
        case Method::canonical:
            return marcumq::eval_canonical(args, policy);
        case Method::gideon_gurland:
            return marcumq::eval_gideon_gurland(args, policy, force);
        case Method::quadrature:
            return marcumq::quadrature_q(args, std::max(policy.target_eps, 1e-13));
    }
    throw marcumq::DomainError("unknown method");
}

marcumq::OutputRecord timed_record(const marcumq::MarcumArgs& args, marcumq::Method method,
                                   const marcumq::TruncationPolicy& policy, bool force,
                                   const marcumq::LaguerreCache* cache = nullptr) {
    const auto start = std::chrono::steady_clock::now();
    const marcumq::EvalReport report = run_method(args, method, policy, force, cache);
    const auto stop = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return marcumq::make_record(args, report, ns);
}

void emit_record(const marcumq::OutputRecord& rec, Format format, bool with_csv_header) {
    switch (format) {
        case Format::plain:
            std::cout << fmt15(rec.value) << "\n";
            break;
        case Format::json:
            std::cout << marcumq::to_json(rec).dump() << "\n";
            break;
        case Format::csv:
            if (with_csv_header) std::cout << marcumq::csv_header() << "\n";
            std::cout << marcumq::to_csv(rec) << "\n";
            break;
    }
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const marcumq::IllConditionedError*>(&e)) return exit_code::ill_conditioned;
    if (dynamic_cast<const marcumq::ConvergenceError*>(&e)) return exit_code::no_convergence;
    if (dynamic_cast<const marcumq::DomainError*>(&e)) return exit_code::bad_args;
    if (dynamic_cast<const marcumq::OverflowError*>(&e)) return exit_code::bad_args;
    return exit_code::internal;
}

struct EvalOptions {
    double nu = 0.0, a = 0.0, b = 0.0;
    std::string method = "laguerre";
    double tol = 1e-12;
    int max_terms = default_max_terms();
    std::string format = "plain";
    bool force = false;
    bool batch = false;
};

int cmd_eval(const EvalOptions& opt) {
    const auto method = marcumq::method_from_name(opt.method);
    if (!method) {
        std::cerr << "error: unknown method '" << opt.method << "'\n";
        return exit_code::bad_args;
    }
    const Format format = parse_format(opt.format);
    const marcumq::TruncationPolicy policy{opt.tol, opt.max_terms};

    if (!opt.batch) {
        const marcumq::OutputRecord rec =
            timed_record({opt.nu, opt.a, opt.b}, *method, policy, opt.force);
        emit_record(rec, format, /*with_csv_header=*/true);
        return exit_code::ok;
    }

    // Batch mode: one "nu,a,b" record per stdin line, output in input
    // order. Consecutive laguerre evaluations sharing (nu, a) reuse one
    // series-coefficient cache.
    std::optional<marcumq::LaguerreCache> cache;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream iss(line);
        double nu, a, b;
        char c1, c2;
        if (!(iss >> nu >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',') {
            if (lineno == 1) continue;  // header row
            std::cerr << "error: bad batch record on line " << lineno << ": '" << line << "'\n";
            return exit_code::bad_args;
        }
        const marcumq::MarcumArgs args{nu, a, b};
        if (*method == marcumq::Method::laguerre && a > 0.0) {
            if (!cache || cache->nu != nu || cache->a != a) {
                cache = marcumq::cache_build(nu, a, 64);
            }
        } else {
            cache.reset();
        }
        const marcumq::OutputRecord rec =
            timed_record(args, *method, policy, opt.force, cache ? &*cache : nullptr);
        emit_record(rec, format, /*with_csv_header=*/first);
        first = false;
    }
    return exit_code::ok;
}

struct CompareOptions {
    double nu = 0.0, a = 0.0, b = 0.0;
    double tol = 1e-12;
    std::string format = "plain";
    bool force = false;
};

int cmd_compare(const CompareOptions& opt) {
    const Format format = parse_format(opt.format);
    const marcumq::TruncationPolicy policy{opt.tol, default_max_terms()};
    const marcumq::MarcumArgs args{opt.nu, opt.a, opt.b};
    marcumq::validate_args(args, /*require_positive_a=*/false);

    constexpr marcumq::Method kMethods[] = {
        marcumq::Method::laguerre,
        marcumq::Method::canonical,
        marcumq::Method::gideon_gurland,
        marcumq::Method::quadrature,
    };

    std::vector<marcumq::OutputRecord> records;
    std::vector<std::string> failures;
    for (const auto method : kMethods) {
        try {
            records.push_back(timed_record(args, method, policy, opt.force));
        } catch (const std::exception& e) {
            failures.push_back(std::string(marcumq::method_name(method)) + ": " + e.what());
        }
    }

    double spread = 0.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            spread = std::max(spread, std::fabs(records[i].value - records[j].value));
        }
    }

    bool first = true;
    for (const auto& rec : records) {
        if (format == Format::plain) {
            std::printf("%-15s %-22s terms=%-8lld bound=%-12.3e time=%lldns\n",
                        marcumq::method_name(rec.method), fmt15(rec.value).c_str(),
                        static_cast<long long>(rec.terms_used), rec.error_bound,
                        static_cast<long long>(rec.elapsed_ns));
        } else {
            emit_record(rec, format, first);
        }
        first = false;
    }
    for (const auto& f : failures) std::cerr << "method failed: " << f << "\n";
    if (format == Format::plain) {
        std::printf("max pairwise spread = %.3e\n", spread);
    } else if (format == Format::json) {
        std::cout << nlohmann::json{{"max_spread", spread}}.dump() << "\n";
    } else {
        std::cerr << "max pairwise spread = " << spread << "\n";
    }
    if (records.size() < 2) return exit_code::internal;
    return spread > 100.0 * opt.tol ? exit_code::spread : exit_code::ok;
}

// Reference grid shipped as a self-test fixture: values of Q_nu(a,b)
// to 15 significant digits on (a,b) in {(0.2,0.6),(1.2,1.6),(2.2,2.6)}
// and nu in {1, 3, 5, 7.7}.
struct TableRow {
    double a, b;
    double q[4];
};
constexpr double kTableNu[4] = {1.0, 3.0, 5.0, 7.7};
constexpr TableRow kReferenceTable[3] = {
    {0.2, 0.6, {0.838249985438908, 0.999166310455636, 0.999998670306184, 0.999999999927717}},
    {1.2, 1.6, {0.501536568390858, 0.916936068900377, 0.994346394491553, 0.999944937223540}},
    {2.2, 2.6, {0.426794627821735, 0.746459898209090, 0.929671935077756, 0.993735633182201}},
};

int cmd_tables() {
    const marcumq::TruncationPolicy policy{1e-13, default_max_terms()};
    bool all_ok = true;
    std::printf("%-12s %-12s", "a", "b");
    for (const double nu : kTableNu) {
        char label[24];
        std::snprintf(label, sizeof label, "nu=%g", nu);
        std::printf(" %-22s", label);
    }
    std::printf("\n");
    for (const auto& row : kReferenceTable) {
        std::printf("%-12g %-12g", row.a, row.b);
        for (int i = 0; i < 4; ++i) {
            const auto report =
                marcumq::eval_laguerre_series({kTableNu[i], row.a, row.b}, policy);
            std::printf(" %-22s", fmt15(report.value).c_str());
            if (std::fabs(report.value - row.q[i]) > 1e-12) {
                all_ok = false;
                std::cerr << "mismatch at nu=" << kTableNu[i] << " a=" << row.a << " b=" << row.b
                          << ": got " << fmt15(report.value) << ", expected " << fmt15(row.q[i])
                          << "\n";
            }
        }
        std::printf("\n");
    }
    std::printf("%s\n", all_ok ? "self-test: all 12 values match" : "self-test: MISMATCH");
    return all_ok ? exit_code::ok : exit_code::table_mismatch;
}

struct ConvergenceOptions {
    double nu = 0.0, a = 0.0, b = 0.0;
    int n_max = 20;
    std::string format = "plain";
};

int cmd_convergence(const ConvergenceOptions& opt) {
    const Format format = parse_format(opt.format);
    if (opt.n_max < 2) throw marcumq::DomainError("convergence: n-max must satisfy n-max >= 2");
    const marcumq::MarcumArgs args{opt.nu, opt.a, opt.b};
    marcumq::validate_args(args, /*require_positive_a=*/true);

    const double reference = marcumq::quadrature_q(args, 1e-13).value;
    if (format == Format::csv) {
        std::cout << "n0,value,actual_err,bound,ratio\n";
    } else if (format == Format::plain) {
        std::printf("%-6s %-22s %-14s %-14s %-14s\n", "n0", "value", "actual_err", "bound",
                    "ratio");
    }
    for (int n0 = 1; n0 <= opt.n_max; ++n0) {
        const double value = marcumq::eval_laguerre_partial(args, n0);
        const double actual = std::fabs(value - reference);
        const double bound = marcumq::truncation_bound(args, n0);
        const double ratio = bound / actual;
        switch (format) {
            case Format::plain:
                std::printf("%-6d %-22s %-14.6e %-14.6e %-14.6e\n", n0, fmt15(value).c_str(),
                            actual, bound, ratio);
                break;
            case Format::csv:
                std::printf("%d,%.17g,%.17g,%.17g,%.17g\n", n0, value, actual, bound, ratio);
                break;
            case Format::json:
                std::cout << nlohmann::json{{"n0", n0},
                                            {"value", value},
                                            {"actual_err", actual},
                                            {"bound", bound},
                                            {"ratio", ratio}}
                                 .dump()
                          << "\n";
                break;
        }
    }
    return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Marcum Q-function evaluator"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "evaluate Q_nu(a,b) by one method");
    eval->add_option("--nu", eval_opt.nu, "order nu (> 0)");
    eval->add_option("--a", eval_opt.a, "first argument a (>= 0)");
    eval->add_option("--b", eval_opt.b, "second argument b (>= 0)");
    eval->add_option("--method", eval_opt.method,
                     "laguerre | canonical | gideon_gurland | quadrature");
    eval->add_option("--tol", eval_opt.tol, "absolute error target");
    eval->add_option("--max-terms", eval_opt.max_terms, "series term cap");
    eval->add_option("--format", eval_opt.format, "plain | json | csv");
    eval->add_flag("--force", eval_opt.force, "evaluate even in refused ill-conditioned regimes");
    eval->add_flag("--batch", eval_opt.batch, "read nu,a,b records from stdin (CSV)");

    CompareOptions cmp_opt;
    auto* compare = app.add_subcommand("compare", "run all four methods and report the spread");
    compare->add_option("--nu", cmp_opt.nu, "order nu (> 0)");
    compare->add_option("--a", cmp_opt.a, "first argument a (>= 0)");
    compare->add_option("--b", cmp_opt.b, "second argument b (>= 0)");
    compare->add_option("--tol", cmp_opt.tol, "absolute error target");
    compare->add_option("--format", cmp_opt.format, "plain | json | csv");
    compare->add_flag("--force", cmp_opt.force, "evaluate even in refused regimes");

    auto* tables = app.add_subcommand("tables", "reproduce the built-in reference grid");

    ConvergenceOptions conv_opt;
    auto* convergence =
        app.add_subcommand("convergence", "partial sums against the a-priori bound");
    convergence->add_option("--nu", conv_opt.nu, "order nu (> 0)");
    convergence->add_option("--a", conv_opt.a, "first argument a (> 0)");
    convergence->add_option("--b", conv_opt.b, "second argument b (>= 0)");
    convergence->add_option("--n-max", conv_opt.n_max, "largest truncation index");
    convergence->add_option("--format", conv_opt.format, "plain | json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_code::ok : exit_code::bad_args;
    }

    try {
        if (*eval) return cmd_eval(eval_opt);
        if (*compare) return cmd_compare(cmp_opt);
        if (*tables) return cmd_tables();
        if (*convergence) return cmd_convergence(conv_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    }
    return exit_code::bad_args;
}

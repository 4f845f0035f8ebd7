// glag: tables and machine-readable reports for the Geronimus-perturbed
// Laguerre family.  Subcommands: eval, lambda, zeros, check.
//
// Exit codes: 0 ok, 1 failed check, 2 invalid parameters, 3 numerical
// nonconvergence.  GL_LOG=info|debug turns on stderr diagnostics.
#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glag/asymptotics.hpp"
#include "glag/checks.hpp"
#include "glag/errors.hpp"
#include "glag/geronimus.hpp"
#include "glag/laguerre.hpp"
#include "glag/scaled.hpp"
#include "glag/second_kind.hpp"

using nlohmann::json;

namespace {

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("GL_LOG");
        if (!env) return 0;
        const std::string s(env);
        if (s == "debug") return 2;
        if (s == "info") return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "glag: " << msg << "\n";
}
void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "glag[debug]: " << msg << "\n";
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommonOpts {
    double alpha = 0.0, c = -1.0, N = 1.0;
    int n = -1, nmin = -1, nmax = -1;
    std::string z_text, format = "csv", out, family = "Q", suite = "all";
    double x = std::numeric_limits<double>::quiet_NaN();
    double tol = 1e-10;
    std::uint64_t seed = 20240901;
};

std::complex<double> parse_z(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

std::vector<int> n_range(const CommonOpts& o, int fallback) {
    if (o.n >= 0) return {o.n};
    if (o.nmin >= 0 && o.nmax >= o.nmin) {
        std::vector<int> r;
        for (int n = o.nmin; n <= o.nmax; ++n) r.push_back(n);
        return r;
    }
    return {fallback};
}

// one table row: column name -> value (string cells keep CSV/JSON identical)
struct Row {
    std::vector<std::pair<std::string, json>> cells;
    void add(const std::string& k, json v) { cells.emplace_back(k, std::move(v)); }
};

void write_table(const CommonOpts& o, const std::vector<Row>& rows, const json& config,
                 const json& summary) {
    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["config"] = config;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json jr;
            for (const auto& [k, v] : r.cells) jr[k] = v;
            j["rows"].push_back(std::move(jr));
        }
        j["summary"] = summary;
        os << j.dump(2) << "\n";
    } else {
        if (!rows.empty()) {
            for (size_t i = 0; i < rows[0].cells.size(); ++i)
                os << rows[0].cells[i].first << (i + 1 < rows[0].cells.size() ? "," : "\n");
            auto csv_cell = [](const std::string& s) -> std::string {
                if (s.find_first_of(",\"\n") == std::string::npos) return s;
                std::string quoted = "\"";
                for (char ch : s) {
                    if (ch == '"') quoted += '"';
                    quoted += ch;
                }
                return quoted + "\"";
            };
            for (const auto& r : rows) {
                for (size_t i = 0; i < r.cells.size(); ++i) {
                    const json& v = r.cells[i].second;
                    if (v.is_string())
                        os << csv_cell(v.get<std::string>());
                    else if (v.is_number_float())
                        os << fmt17(v.get<double>());
                    else if (!v.is_null())
                        os << v.dump();
                    os << (i + 1 < r.cells.size() ? "," : "\n");
                }
            }
        }
        for (const auto& [k, v] : summary.items())
            os << "# " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (o.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(o.out);
        f << os.str();
        log_info("wrote " + o.out);
    }
}

void add_value_cells(Row& row, const glag::LogComplex& v) {
    int sign = 0;
    if (!v.is_zero()) sign = v.phase.real() > 0.0 ? 1 : (v.phase.real() < 0.0 ? -1 : 0);
    row.add("value_sign", sign);
    row.add("value_logmag", v.is_zero() ? json(nullptr) : json(v.logmag));
    row.add("value_arg", v.is_zero() ? json(nullptr) : json(std::arg(v.phase)));
    const bool safe = v.is_zero() || std::abs(v.logmag) < glag::safe_log_range;
    if (safe) {
        const std::complex<double> f = v.value();
        row.add("value_float_re", f.real());
        row.add("value_float_im", f.imag());
    } else {
        row.add("value_float_re", nullptr);
        row.add("value_float_im", nullptr);
    }
}

json config_json(const CommonOpts& o) {
    json j;
    j["alpha"] = o.alpha;
    j["c"] = o.c;
    j["N"] = o.N;
    j["family"] = o.family;
    j["tol"] = o.tol;
    j["seed"] = o.seed;
    return j;
}

void validate_tol(double tol) {
    if (!(tol > 0.0 && tol <= 0.1))
        throw glag::domain_error("tol must lie in (0, 0.1]");
}

int cmd_eval(const CommonOpts& o) {
    validate_tol(o.tol);
    std::complex<double> z{o.c, 0.0};
    if (!o.z_text.empty())
        z = parse_z(o.z_text);
    else if (!std::isnan(o.x))
        z = {o.x, 0.0};

    const std::vector<int> ns = n_range(o, 5);
    const int top = *std::max_element(ns.begin(), ns.end());
    std::vector<Row> rows;

    if (o.family == "L") {
        log_debug("eval family L to n=" + std::to_string(top));
        const glag::LaguerreSequence seq = glag::eval_monic_laguerre(top, o.alpha, z);
        for (int n : ns) {
            Row r;
            r.add("n", n);
            r.add("z_re", z.real());
            r.add("z_im", z.imag());
            add_value_cells(r, seq[n]);
            rows.push_back(std::move(r));
        }
    } else if (o.family == "F") {
        if (!(o.c < 0.0)) throw glag::domain_error("family F requires c < 0");
        log_debug("eval family F to n=" + std::to_string(top));
        const auto f = glag::eval_second_kind_seq(top, o.alpha, o.c, std::min(o.tol, 1e-10));
        for (int n : ns) {
            Row r;
            r.add("n", n);
            r.add("z_re", o.c);
            r.add("z_im", 0.0);
            add_value_cells(r, glag::LogComplex(f[(size_t)n]));
            rows.push_back(std::move(r));
        }
    } else if (o.family == "Q") {
        const glag::GeronimusParams params(o.alpha, o.c, o.N);
        log_debug("eval family Q to n=" + std::to_string(top));
        const glag::LambdaTable table(params, std::max(top, 1));
        for (int n : ns) {
            Row r;
            r.add("n", n);
            r.add("z_re", z.real());
            r.add("z_im", z.imag());
            add_value_cells(r, glag::eval_Q(n, table, z));
            rows.push_back(std::move(r));
        }
    } else {
        throw glag::domain_error("unknown family (expected L, F or Q): " + o.family);
    }

    json cfg = config_json(o);
    cfg["z_re"] = z.real();
    cfg["z_im"] = z.imag();
    write_table(o, rows, cfg, json::object());
    return 0;
}

int cmd_lambda(const CommonOpts& o) {
    validate_tol(o.tol);
    const glag::GeronimusParams params(o.alpha, o.c, o.N);
    const std::vector<int> ns = n_range(o, 10);
    const int top = *std::max_element(ns.begin(), ns.end());
    log_debug("lambda table to n=" + std::to_string(top));
    const glag::LambdaTable table(params, std::max(top, 1));

    std::vector<Row> rows;
    for (int n : ns) {
        if (n < 1) throw glag::domain_error("lambda requires n >= 1");
        Row r;
        r.add("n", n);
        const double exact = table.lambda(n);
        const double asym = glag::lambda_asymptotic(n, params);
        r.add("lambda_exact", exact);
        r.add("lambda_asymptotic", asym);
        r.add("abs_diff", std::abs(exact - asym));
        rows.push_back(std::move(r));
    }

    const glag::CrossoverInfo cross = glag::crossover(params);
    json summary;
    summary["crossover_D"] = cross.D;
    summary["crossover_n_star"] = cross.n_star ? json(*cross.n_star) : json(nullptr);
    write_table(o, rows, config_json(o), summary);
    return 0;
}

int cmd_zeros(const CommonOpts& o) {
    validate_tol(o.tol);
    const glag::GeronimusParams params(o.alpha, o.c, o.N);
    const std::vector<int> ns = n_range(o, 5);

    std::vector<Row> rows;
    std::vector<double> prev;
    for (int n : ns) {
        if (n < 1) throw glag::domain_error("zeros requires n >= 1");
        const std::vector<double> zs = glag::zeros_Q(n, params);
        // interlacing against the previously emitted degree, when consecutive
        json interlaced = nullptr;
        if ((int)prev.size() == n - 1 && n > 1) {
            bool ok = true;
            for (int k = 0; k + 1 < n; ++k)
                ok = ok && zs[(size_t)k] < prev[(size_t)k] && prev[(size_t)k] < zs[(size_t)k + 1];
            interlaced = ok ? 1 : 0;
        }
        for (int k = 0; k < n; ++k) {
            Row r;
            r.add("n", n);
            r.add("k", k + 1);
            r.add("zero_k", zs[(size_t)k]);
            r.add("interlaces_prev", interlaced);
            rows.push_back(std::move(r));
        }
        prev = zs;
    }
    write_table(o, rows, config_json(o), json::object());
    return 0;
}

int cmd_check(const CommonOpts& o, bool user_params_set) {
    glag::CheckConfig cfg;
    cfg.seed = o.seed;
    if (o.nmax > 0) cfg.nmax = o.nmax;
    if (cfg.nmax < 800)
        throw glag::domain_error("check requires --nmax >= 800 (four dyadic grid points)");
    if (user_params_set) {
        cfg.alpha = o.alpha;
        cfg.c = o.c;
        cfg.N = o.N;
    }
    log_info("running check suite '" + o.suite + "'");
    const std::vector<glag::CheckResult> results = glag::run_suite(o.suite, cfg);

    int failed = 0;
    std::vector<Row> rows;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        Row row;
        row.add("suite", r.suite);
        row.add("name", r.name);
        row.add("passed", r.passed ? 1 : 0);
        row.add("observed", r.observed);
        row.add("threshold", r.threshold);
        row.add("p_hat", r.p_hat ? json(*r.p_hat) : json(nullptr));
        row.add("r2", r.r2 ? json(*r.r2) : json(nullptr));
        row.add("detail", r.detail);
        rows.push_back(std::move(row));
    }
    json summary;
    summary["checks"] = (int)results.size();
    summary["failed"] = failed;
    json cfg_json = config_json(o);
    cfg_json["suite"] = o.suite;
    cfg_json["nmax"] = cfg.nmax;
    write_table(o, rows, cfg_json, summary);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geronimus-perturbed Laguerre polynomials: evaluation, "
                 "connection coefficients, zeros, verification suites"};
    app.require_subcommand(1);

    CommonOpts o;
    bool alpha_set = false, c_set = false, N_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "Laguerre parameter alpha > -1")
            ->each([&](const std::string&) { alpha_set = true; });
        sub->add_option("--c", o.c, "Geronimus shift c < 0")
            ->each([&](const std::string&) { c_set = true; });
        sub->add_option("--N", o.N, "mass at the shift, N >= 0")
            ->each([&](const std::string&) { N_set = true; });
        sub->add_option("--n", o.n, "single degree n");
        sub->add_option("--nmin", o.nmin, "range start");
        sub->add_option("--nmax", o.nmax, "range end (check: top of dyadic grid)");
        sub->add_option("--z", o.z_text, "evaluation point, re or re,im");
        sub->add_option("--x", o.x, "real evaluation point");
        sub->add_option("--tol", o.tol, "tolerance in (0, 0.1]");
        sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--seed", o.seed, "seed for randomized property checks");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate Lhat, Fhat or Qhat");
    add_common(eval);
    eval->add_option("--family", o.family, "L, F or Q");

    CLI::App* lambda = app.add_subcommand("lambda", "connection coefficients Lambda_n");
    add_common(lambda);

    CLI::App* zeros = app.add_subcommand("zeros", "zeros of Qhat_n (Jacobi eigenvalues)");
    add_common(zeros);

    CLI::App* check = app.add_subcommand("check", "verification suites");
    add_common(check);
    check->add_option("--suite", o.suite, "gram|recurrence|hypergeom|ode|asymptotics|all")
        ->check(CLI::IsMember({"gram", "recurrence", "hypergeom", "ode", "asymptotics", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (lambda->parsed()) return cmd_lambda(o);
        if (zeros->parsed()) return cmd_zeros(o);
        if (check->parsed()) return cmd_check(o, alpha_set || c_set || N_set);
    } catch (const glag::domain_error& e) {
        std::cerr << "glag: invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const glag::degenerate_error& e) {
        std::cerr << "glag: degenerate case: " << e.what() << "\n";
        return 2;
    } catch (const glag::convergence_error& e) {
        std::cerr << "glag: numerical nonconvergence: " << e.what()
                  << " (achieved " << e.achieved_error << ")\n";
        return 3;
    }
    return 2;
}

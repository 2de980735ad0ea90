#pragma once

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcurv/report.hpp"

namespace qcurv::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

/// A command-line problem attributable to one flag.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

inline int parse_int(const std::string& flag, const std::string& s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) throw UsageError(flag, "expected an integer, got '" + s + "'");
    return value;
}

inline Rational parse_rational(const std::string& flag, const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const Error& e) {
        throw UsageError(flag, "expected a rational 'p/q' or integer, got '" + s + "'");
    }
}

inline int parse_dimension(const std::string& flag, const std::string& s) {
    const int n = parse_int(flag, s);
    if (n % 2 != 0) throw UsageError(flag, "dimension must be even, got " + s);
    if (n < 6) throw UsageError(flag, "dimension must be at least 6, got " + s);
    return n;
}

enum class Format { Text, Json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    throw UsageError("--format", "expected 'text' or 'json', got '" + s + "'");
}

struct VerifyArgs {
    std::vector<std::string> n, J, mu;
    std::string checks;
    std::string max_order = "4";
    std::string format = "text";
    bool parallel = false;
};

inline SuiteConfig make_suite_config(const VerifyArgs& a) {
    SuiteConfig config;
    if (a.n.empty() && a.J.empty()) {
        config.models = default_models();
    } else {
        if (a.n.empty()) throw UsageError("--n", "at least one dimension is required with --J");
        if (a.J.empty()) throw UsageError("--J", "at least one value is required with --n");
        std::vector<int> ns;
        std::vector<Rational> Js;
        for (const auto& s : a.n) ns.push_back(parse_dimension("--n", s));
        for (const auto& s : a.J) Js.push_back(parse_rational("--J", s));
        const std::size_t count = std::max(ns.size(), Js.size());
        if (ns.size() != Js.size() && ns.size() != 1 && Js.size() != 1) {
            throw UsageError("--J", "give one --J per --n, or a single --n or --J to pair with all");
        }
        for (std::size_t i = 0; i < count; ++i) {
            config.models.push_back({ns[ns.size() == 1 ? 0 : i], Js[Js.size() == 1 ? 0 : i]});
        }
    }
    if (a.mu.empty()) {
        config.mus = default_mus();
    } else {
        for (const auto& s : a.mu) {
            Rational mu = parse_rational("--mu", s);
            if (mu.sign() < 0) throw UsageError("--mu", "eigen parameter must be >= 0, got " + s);
            config.mus.push_back(mu);
        }
    }
    if (!a.checks.empty()) {
        config.all_checks = false;
        std::istringstream is(a.checks);
        std::string id;
        while (std::getline(is, id, ',')) {
            if (id.empty()) continue;
            try {
                find_check(id);
            } catch (const Error&) {
                throw UsageError("--checks", "unknown check id '" + id + "'");
            }
            config.checks.push_back(id);
        }
        if (config.checks.empty()) throw UsageError("--checks", "no check ids given");
    }
    config.options.max_order = parse_int("--max-order", a.max_order);
    if (config.options.max_order < 4 || config.options.max_order > 8) {
        throw UsageError("--max-order", "must lie in [4, 8], got " + a.max_order);
    }
    config.parallel = a.parallel;
    return config;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const Format format = parse_format(a.format);
    const SuiteConfig config = make_suite_config(a);
    const VerificationReport report = run_suite(config);
    out << (format == Format::Json ? to_json_string(report) : to_text(report));
    return report.passed() ? kPass : kCheckFailure;
}

inline std::string join_series(const std::vector<Rational>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
    return s + "]";
}

inline int cmd_series(const std::string& n_s, const std::string& J_s, const std::string& order_s, std::ostream& out) {
    const int n = parse_dimension("--n", n_s);
    const Rational J = parse_rational("--J", J_s);
    const int order = parse_int("--order", order_s);
    if (order < 1 || order > 16) throw UsageError("--order", "must lie in [1, 16], got " + order_s);
    const EinsteinModel m(n, J);
    const auto o = static_cast<std::size_t>(order);
    const auto v = volume_series(m, o);
    const auto w = series_sqrt(v);
    const auto psi = series_inv(w);
    const auto dlog = log_derivative(v);
    out << "model " << m.label() << " c=" << m.c().to_string() << " order=" << order << "\n";
    out << "v = " << join_series(v.coefficients()) << "\n";
    out << "w = sqrt(v) = " << join_series(w.coefficients()) << "\n";
    out << "v^(-1/2) = " << join_series(psi.coefficients()) << "\n";
    out << "(log v)' = " << join_series(dlog.coefficients()) << "\n";
    out << "logdet derivatives D^(1..order) = " << join_series(logdet_series(m, o)) << "\n";
    return kPass;
}

inline int cmd_multiplicities(const std::string& N_s, const std::string& format_s, std::ostream& out) {
    const Format format = parse_format(format_s);
    const int N = parse_int("--N", N_s);
    if (N < 1 || N > 16) throw UsageError("--N", "must lie in [1, 16], got " + N_s);
    const auto comps = enumerate_compositions(N);
    if (format == Format::Json) {
        ordered_json j;
        j["N"] = N;
        j["rows"] = ordered_json::array();
        for (const auto& I : comps) {
            j["rows"].push_back({{"composition", I.to_string()}, {"multiplicity", multiplicity(I).to_string()}});
        }
        j["sum"] = multiplicity_sum(N).to_string();
        out << j.dump(2) << "\n";
    } else {
        out << "compositions of " << N << ": " << comps.size() << "\n";
        for (const auto& I : comps) out << I.to_string() << " → " << multiplicity(I).to_string() << "\n";
        out << "sum = " << multiplicity_sum(N).to_string() << "\n";
    }
    return kPass;
}

inline int cmd_qtable(const std::string& n_s, const std::string& J_s, std::ostream& out) {
    const int n = parse_dimension("--n", n_s);
    const Rational J = parse_rational("--J", J_s);
    const ModelConstants mc{EinsteinModel(n, J)};
    out << "model " << mc.model().label() << "\n";
    for (int N = 1; N <= mc.half_n(); ++N) out << "Q" << 2 * N << " = " << q_curvature(mc, N).to_string() << "\n";
    for (int N = 1; N <= mc.half_n(); ++N) out << "P" << 2 * N << "(1) = " << mc.gjms(N).to_string() << "\n";
    for (int j = 1; j <= mc.half_n(); ++j) out << "v" << 2 * j << " = " << mc.v(j).to_string() << "\n";
    for (int j = 1; j <= mc.half_n(); ++j) out << "w" << 2 * j << " = " << mc.w(j).to_string() << "\n";
    return kPass;
}

/// Runs the command line; never throws. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Q-curvature recursion identities on Einstein models"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the identity checks over a grid of models and eigenvalues");
    verify->add_option("--n", va.n, "even dimension n >= 6 (repeatable)");
    verify->add_option("--J", va.J, "Schouten trace J as p/q (repeatable)");
    verify->add_option("--mu", va.mu, "Laplace eigenvalue mu >= 0 as p/q (repeatable)");
    verify->add_option("--checks", va.checks, "comma-separated check ids (default: all)");
    verify->add_option("--max-order", va.max_order, "upper N for per-order identity families (4..8)");
    verify->add_option("--format", va.format, "text or json");
    verify->add_flag("--parallel", va.parallel, "evaluate grid cells concurrently");

    std::string s_n, s_J, s_order = "4";
    auto* series = app.add_subcommand("series", "print v, sqrt(v), v^(-1/2) and log-derivative coefficients");
    series->add_option("--n", s_n, "even dimension")->required();
    series->add_option("--J", s_J, "Schouten trace J")->required();
    series->add_option("--order", s_order, "truncation order in t = r^2");

    std::string m_N, m_format = "text";
    auto* mult = app.add_subcommand("multiplicities", "print the composition multiplicities m_I for |I| = N");
    mult->add_option("--N", m_N, "composition size")->required();
    mult->add_option("--format", m_format, "text or json");

    std::string q_n, q_J;
    auto* qtable = app.add_subcommand("qtable", "print Q-curvatures, GJMS constants, v and w coefficients");
    qtable->add_option("--n", q_n, "even dimension")->required();
    qtable->add_option("--J", q_J, "Schouten trace J")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (verify->parsed()) return cmd_verify(va, out);
        if (series->parsed()) return cmd_series(s_n, s_J, s_order, out);
        if (mult->parsed()) return cmd_multiplicities(m_N, m_format, out);
        return cmd_qtable(q_n, q_J, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailure;
    }
}

} // namespace qcurv::cli

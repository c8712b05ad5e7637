#pragma once

// Command-line front end. run_cli() is the whole program; tools/qeuler.cpp
// only forwards argv and the standard streams.
//
// Exit codes: 0 success (every verdict as expected), 1 verification
// mismatch, 2 usage error.

#include "qeuler/euler.hpp"
#include "qeuler/io.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/suite.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qeuler::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Largest p^N the padic command will sum over.
inline constexpr long max_summands = 300000;

enum class Format { text, json, latex };

namespace detail {

/// Sequence prefix through the in-memory cache, seeded from and written back
/// to QEULER_CACHE_DIR when it is set.
template <class Compute>
std::vector<QRatFn> with_disk_cache(const std::string& key, Compute compute, std::ostream& err) {
    const auto dir = cache_dir_from_env();
    if (dir) {
        if (auto loaded = load_cached_sequence(*dir, key))
            SequenceCache::instance().seed(key, std::move(*loaded));
    }
    const std::size_t before = SequenceCache::instance().cached_size(key);
    auto entries = compute();
    if (dir && entries.size() > before) {
        try {
            save_cached_sequence(*dir, key, entries);
        } catch (const std::exception& e) {
            err << "warning: could not write cache: " << e.what() << '\n';
        }
    }
    return entries;
}

inline std::string number_symbol(const std::string& kind, std::size_t n, Format f) {
    const std::string idx = std::to_string(n);
    if (f == Format::latex) {
        if (kind == "frobenius") return "H_{" + idx + "}(u)";
        if (kind == "weighted") return "\\tilde{E}_{" + idx + ",q}^{(\\alpha)}";
        if (kind == "qeuler-poly") return "\\tilde{E}_{" + idx + ",q}(x)";
        return "\\tilde{E}_{" + idx + ",q}";
    }
    if (kind == "frobenius") return "H_" + idx;
    if (kind == "qeuler-poly") return "E_" + idx + "(x)";
    return "E_" + idx;
}

inline std::string status_line(const IdentityReport& rep) {
    const std::size_t expected_failures = static_cast<std::size_t>(std::count_if(
        rep.instances.begin(), rep.instances.end(), [](const auto& i) { return !i.expected && !i.holds; }));
    std::string status;
    if (!rep.all_as_expected())
        status = "MISMATCH";
    else if (expected_failures == 0)
        status = "PASS";
    else if (expected_failures == rep.instances.size())
        status = "FAIL (expected)";
    else
        status = "PASS (" + std::to_string(expected_failures) + " expected failure" +
                 (expected_failures == 1 ? "" : "s") + ")";
    return std::string(tag(rep.id)) + ": " + status;
}

inline std::string params_string(const IdentityInstance& inst) {
    std::string s;
    for (const auto& [k, v] : inst.params) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    return s;
}

inline std::string side_string(const Side& s) {
    if (const auto* f = std::get_if<QRatFn>(&s)) return pretty(*f);
    return to_string(std::get<XPoly>(s));
}

inline void print_report(const IdentityReport& rep, std::ostream& out) {
    out << status_line(rep) << "  [" << rep.passed() << "/" << rep.instances.size() << " instances hold]\n";
    for (const auto& note : rep.notes) out << "  note: " << note << '\n';
    bool shown_expected = false;
    for (const auto& inst : rep.instances) {
        if (inst.holds && inst.expected) continue;
        out << "  " << params_string(inst) << ": " << (inst.holds ? "holds" : "fails")
            << (inst.as_expected() ? " (expected)" : " (UNEXPECTED)");
        if (!inst.note.empty()) out << " [" << inst.note << "]";
        out << '\n';
        // every unexpected witness, but only the first expected one
        if (inst.witness && (!inst.as_expected() || !shown_expected)) {
            shown_expected = shown_expected || inst.as_expected();
            out << "    left  = " << side_string(inst.witness->left) << '\n';
            out << "    right = " << side_string(inst.witness->right) << '\n';
        }
    }
}

inline std::optional<Format> parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    return std::nullopt;
}

} // namespace detail

struct TableOptions {
    std::string kind = "qeuler";
    long n_max = 10;
    std::optional<long> alpha;
    std::optional<std::string> u;
    std::string format = "text";
};

inline int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    const auto format = detail::parse_format(opt.format);
    if (!format) {
        err << "error: --format must be text, json or latex\n";
        return exit_usage;
    }
    if (opt.n_max < 0) {
        err << "error: --n-max must be nonnegative\n";
        return exit_usage;
    }
    if (opt.kind == "weighted" && !opt.alpha) {
        err << "error: table weighted requires --alpha\n";
        return exit_usage;
    }
    if (opt.kind != "weighted" && opt.alpha) {
        err << "error: --alpha is only valid with table weighted\n";
        return exit_usage;
    }
    if (opt.kind != "frobenius" && opt.u) {
        err << "error: --u is only valid with table frobenius\n";
        return exit_usage;
    }
    if (opt.alpha && *opt.alpha <= 0) {
        err << "error: --alpha must be a positive integer\n";
        return exit_usage;
    }
    const auto n_max = static_cast<std::size_t>(opt.n_max);

    std::vector<QRatFn> numbers;
    std::vector<XPoly> polys;
    json meta{{"sequence", opt.kind}, {"n_max", opt.n_max}};
    try {
        if (opt.kind == "qeuler") {
            numbers = detail::with_disk_cache(qeuler_cache_key, [&] { return q_euler_numbers(n_max).entries; }, err);
        } else if (opt.kind == "frobenius") {
            QRatFn u = minus_q_inverse();
            if (opt.u) u = QRatFn(parse_rat(*opt.u));
            meta["u"] = to_json(u);
            numbers = detail::with_disk_cache(frobenius_cache_key(u),
                                              [&] { return frobenius_numbers(u, n_max).entries; }, err);
        } else if (opt.kind == "weighted") {
            const auto alpha = static_cast<unsigned>(*opt.alpha);
            meta["alpha"] = *opt.alpha;
            numbers = detail::with_disk_cache(weighted_cache_key(alpha),
                                              [&] { return q_euler_numbers_weighted(alpha, n_max); }, err);
        } else if (opt.kind == "qeuler-poly") {
            detail::with_disk_cache(qeuler_cache_key, [&] { return q_euler_numbers(n_max).entries; }, err);
            for (std::size_t n = 0; n <= n_max; ++n) polys.push_back(q_euler_polynomial(n));
        } else {
            err << "error: unknown table kind '" << opt.kind << "' (qeuler, frobenius, weighted, qeuler-poly)\n";
            return exit_usage;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const singular_parameter& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const std::size_t rows = polys.empty() ? numbers.size() : polys.size();
    if (*format == Format::json) {
        json arr = json::array();
        for (std::size_t n = 0; n < rows; ++n) {
            OutputRecord r;
            if (polys.empty())
                r.payload = NumberPayload{static_cast<long>(n), numbers[n]};
            else
                r.payload = PolynomialPayload{static_cast<long>(n), polys[n]};
            r.metadata = meta;
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
        return exit_ok;
    }
    for (std::size_t n = 0; n < rows; ++n) {
        const std::string sym = detail::number_symbol(opt.kind, n, *format);
        if (*format == Format::latex) {
            out << sym << " = " << (polys.empty() ? latex(numbers[n]) : latex(polys[n])) << " \\\\\n";
        } else {
            out << sym << " = " << (polys.empty() ? pretty(numbers[n]) : to_string(polys[n])) << '\n';
        }
    }
    return exit_ok;
}

struct VerifyOptions {
    std::string suite = "all";
    long n_max = 20;
    bool json = false;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (!is_suite_name(opt.suite)) {
        err << "error: unknown suite '" << opt.suite << "'\n";
        return exit_usage;
    }
    if (opt.n_max < 0) {
        err << "error: --n-max must be nonnegative\n";
        return exit_usage;
    }
    const SuiteResult result = run_suite(opt.suite, opt.n_max);
    if (opt.json) {
        json arr = json::array();
        for (const auto& rep : result.reports) {
            OutputRecord r{rep, json{{"suite", opt.suite}, {"n_max", opt.n_max}}};
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
    } else {
        out << "suite " << opt.suite << " (n_max = " << opt.n_max << ")\n";
        for (const auto& rep : result.reports) detail::print_report(rep, out);
        out << (result.ok() ? "all verdicts as expected\n" : "verification MISMATCH\n");
    }
    return result.ok() ? exit_ok : exit_mismatch;
}

struct PadicOptions {
    long n = 1;
    long p = 3;
    long q_offset = 1;
    long precision = default_precision;
    long level_max = 5;
    bool json = false;
};

inline int cmd_padic(const PadicOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.p == 2 || !is_prime(opt.p)) {
        err << "error: p must be an odd prime\n";
        return exit_usage;
    }
    if (opt.n < 0 || opt.precision < 1 || opt.level_max < 1) {
        err << "error: --n must be >= 0, --K and --N-max must be >= 1\n";
        return exit_usage;
    }
    if (ipow(opt.p, opt.level_max) > max_summands) {
        err << "error: p^N-max exceeds " << max_summands << " summands\n";
        return exit_usage;
    }
    std::optional<QChoice> qc;
    try {
        qc = QChoice::one_plus(opt.p, opt.q_offset);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    std::vector<long> levels;
    for (long level = 1; level <= opt.level_max; ++level) levels.push_back(level);
    const auto report = convergence_report(static_cast<std::size_t>(opt.n), *qc, opt.precision, levels);
    const bool converged = shows_convergence(report);

    if (opt.json) {
        OutputRecord r{ConvergencePayload{report, converged},
                       json{{"n", opt.n}, {"p", opt.p}, {"q", to_string(qc->q)}, {"K", opt.precision}}};
        json arr = json::array();
        arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        out << "moment n = " << opt.n << ", p = " << opt.p << ", q = " << qc->q.get_str() << ", K = " << opt.precision
            << '\n';
        out << std::setw(4) << "N" << "  v_p(I_N - exact)\n";
        for (const auto& c : report) {
            out << std::setw(4) << c.level << "  ";
            if (c.exact)
                out << ">= " << opt.precision << " (zero at precision)\n";
            else
                out << c.valuation << '\n';
        }
        out << (converged ? "valuations nondecreasing with growth: ok\n" : "convergence signal NOT observed\n");
    }
    return converged ? exit_ok : exit_mismatch;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Euler / Frobenius-Euler numbers and identity checks"};
    app.require_subcommand(1);

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "Print a table of numbers or polynomials");
    table->add_option("kind", table_opt.kind, "qeuler | frobenius | weighted | qeuler-poly")
        ->check(CLI::IsMember({"qeuler", "frobenius", "weighted", "qeuler-poly"}));
    table->add_option("--n-max", table_opt.n_max, "Largest index")->check(CLI::NonNegativeNumber);
    table->add_option("--alpha", table_opt.alpha, "Weight (table weighted only)");
    table->add_option("--u", table_opt.u, "Constant Frobenius parameter (default -1/q)");
    table->add_option("--format", table_opt.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Check identities in exact arithmetic");
    verify->add_option("--suite", verify_opt.suite, "all | thm1..thm8 | cor3 | classical | erratum | weighted");
    verify->add_option("--n-max", verify_opt.n_max, "Largest index")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", verify_opt.json, "Emit JSON records");

    PadicOptions padic_opt;
    auto* padic = app.add_subcommand("padic", "Convergence of truncated fermionic integrals");
    padic->add_option("--n", padic_opt.n, "Moment index");
    padic->add_option("--p", padic_opt.p, "Odd prime");
    padic->add_option("--q-offset", padic_opt.q_offset, "q = 1 + offset * p");
    padic->add_option("--K", padic_opt.precision, "Absolute precision");
    padic->add_option("--N-max", padic_opt.level_max, "Largest level N");
    padic->add_flag("--json", padic_opt.json, "Emit JSON records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*table) return cmd_table(table_opt, out, err);
        if (*verify) return cmd_verify(verify_opt, out, err);
        if (*padic) return cmd_padic(padic_opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_usage;
}

} // namespace qeuler::cli

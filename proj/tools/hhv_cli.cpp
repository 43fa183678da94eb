// Command-line front end: zeta brackets, weight-bound sweeps, inequality
// verification, and the best-constant probe, with CSV or JSON reports.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhv/hhv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

// CSV carries 12 significant digits for readability; JSON carries 17 so
// every double round-trips exactly.
std::string num_csv(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num_json(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

enum class OutFormat { csv, json };

OutFormat parse_format(const std::string& s) {
    if (s == "csv") return OutFormat::csv;
    if (s == "json") return OutFormat::json;
    throw CLI::ValidationError("--out must be csv or json");
}

// Flat table with fixed column order, rendered to either format.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // pre-formatted cells
    std::vector<std::string> notes;             // skipped cells etc.

    void render(std::ostream& os, OutFormat format) const {
        if (format == OutFormat::csv) {
            for (const auto& note : notes) os << "# " << note << "\n";
            for (std::size_t i = 0; i < columns.size(); ++i)
                os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
            for (const auto& row : rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    os << row[i] << (i + 1 < row.size() ? "," : "\n");
        } else {
            os << "{\"schema\": 1, \"rows\": [";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                os << (r ? ", " : "") << "{";
                for (std::size_t i = 0; i < columns.size(); ++i)
                    os << (i ? ", " : "") << '"' << columns[i] << "\": " << rows[r][i];
                os << "}";
            }
            os << "], \"notes\": [";
            for (std::size_t i = 0; i < notes.size(); ++i)
                os << (i ? ", " : "") << '"' << json_escape(notes[i]) << '"';
            os << "]}\n";
        }
    }
};

void emit(const Table& table, OutFormat format, const std::string& path) {
    if (path.empty()) {
        table.render(std::cout, format);
    } else {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open output file '" + path + "'");
        table.render(out, format);
    }
}

// Default sweep grid over (p, lambda).
const std::vector<double> kDefaultP = {1.2, 1.5, 2.0, 3.0, 4.0};

std::vector<double> default_lambdas(double p) {
    const double q = p / (p - 1.0);
    const double start = 2.0 - std::fmin(p, q) + 0.1;
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double lam = start + 0.1 * i;
        if (lam > 2.0 + 1e-12) break;
        out.push_back(std::fmin(lam, 2.0));
    }
    return out;
}

struct GridFlags {
    std::vector<double> p_values;
    std::vector<double> lambda_values; // empty = derive per p
    std::uint64_t m_max = 500;
};

// Runs fn(params) for each admissible cell; inadmissible cells become notes.
template <typename Fn>
std::size_t for_each_cell(const GridFlags& grid, Table& table, Fn&& fn) {
    const auto& ps = grid.p_values.empty() ? kDefaultP : grid.p_values;
    std::size_t evaluated = 0;
    for (double p : ps) {
        const auto lambdas =
            grid.lambda_values.empty() ? default_lambdas(p) : grid.lambda_values;
        for (double lam : lambdas) {
            try {
                const hhv::HolderParams params(p, lam);
                fn(params);
                ++evaluated;
            } catch (const std::invalid_argument& e) {
                std::ostringstream note;
                note << "skip p=" << num_csv(p) << " lambda=" << num_csv(lam) << ": "
                     << e.what();
                table.notes.push_back(note.str());
            }
        }
    }
    return evaluated;
}

std::string fmt_cell(double v, OutFormat f) {
    return f == OutFormat::csv ? num_csv(v) : num_json(v);
}

// ------------------------------------------------------------------- zeta

int cmd_zeta(double rho, int m, int l) {
    const hhv::Interval z = hhv::zeta_em(rho, hhv::EmSettings{m, l});
    std::printf("lo=%.17g hi=%.17g width=%.17g\n", z.lo, z.hi, z.width());
    return kExitOk;
}

// ------------------------------------------------------------------- weight

int cmd_weight(std::uint64_t m, double p, double lambda, int em_m, int em_l) {
    const hhv::HolderParams params(p, lambda);
    const hhv::EmSettings settings{em_m, em_l};
    const hhv::Interval w = hhv::weight_omega(m, params, settings);
    const hhv::Interval wd = hhv::weight_omega_dual(m, params, settings);
    const double b24 = hhv::bound_24(m, params);
    const double b25 = hhv::bound_25(m, params);
    std::printf("omega_lo=%.17g omega_hi=%.17g bound24=%.17g margin24=%.17g\n",
                w.lo, w.hi, b24, b24 - w.hi);
    std::printf("dual_lo=%.17g dual_hi=%.17g bound25_sym=%.17g margin25=%.17g\n",
                wd.lo, wd.hi, b25, b25 - wd.hi);
    const bool ok = (b24 - w.hi) > -w.width() && (b25 - wd.hi) > -wd.width();
    return ok ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------- check-weights

int cmd_check_weights(const GridFlags& grid, OutFormat format, const std::string& path) {
    Table table;
    table.columns = {"p",        "q",        "lambda",   "m",
                     "omega_lo", "omega_hi", "bound24",  "margin24",
                     "bound25_sym", "margin25", "negativity_gap"};
    bool all_ok = true;
    const std::size_t evaluated = for_each_cell(grid, table, [&](const hhv::HolderParams& params) {
        const auto primal = hhv::check_weight_bounds(params, grid.m_max);
        const auto dual = hhv::check_weight_bounds_dual(params, grid.m_max);
        const auto gaps = hhv::check_negativity_chain(params, grid.m_max);
        for (std::size_t i = 0; i < primal.size(); ++i) {
            const auto& est = primal[i];
            const auto& dst = dual[i];
            all_ok = all_ok && est.confirmed_at_resolution() &&
                     dst.confirmed_at_resolution() && gaps[i].holds_at_resolution();
            table.rows.push_back({fmt_cell(params.p(), format), fmt_cell(params.q(), format),
                                  fmt_cell(params.lambda(), format), std::to_string(est.m),
                                  fmt_cell(est.value.lo, format), fmt_cell(est.value.hi, format),
                                  fmt_cell(est.bound, format), fmt_cell(est.margin, format),
                                  fmt_cell(dst.bound, format), fmt_cell(dst.margin, format),
                                  fmt_cell(gaps[i].gap, format)});
        }
    });
    if (evaluated == 0)
        throw std::invalid_argument("every grid cell was inadmissible");
    emit(table, format, path);
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------- verify

void print_report(const hhv::VerificationReport& r) {
    std::printf("ineq=%s p=%.17g q=%.17g lambda=%.17g a=%s b=%s\n",
                hhv::to_string(r.id), r.p, r.q, r.lambda, r.a_label.c_str(),
                r.b_label.empty() ? "-" : r.b_label.c_str());
    std::printf("lhs=%.17g rhs=%.17g rhs_baseline=%.17g improvement=%.17g "
                "holds=%s",
                r.lhs, r.rhs, r.rhs_baseline, r.improvement, r.holds ? "true" : "false");
    if (r.lhs_truncation)
        std::printf(" lhs_truncation=%llu",
                    static_cast<unsigned long long>(r.lhs_truncation));
    std::printf("\n");
}

int cmd_verify(const std::string& ineq, const std::string& a_spec,
               const std::string& b_spec, double p, double lambda,
               std::uint64_t n_max) {
    const hhv::InequalityId id = hhv::inequality_from_string(ineq);
    const hhv::HolderParams params(p, lambda);
    const hhv::Sequence a = hhv::generate(hhv::SeqSpec::parse(a_spec));

    const bool needs_b = id == hhv::InequalityId::I31 || id == hhv::InequalityId::I33 ||
                         id == hhv::InequalityId::I35 || id == hhv::InequalityId::I37 ||
                         id == hhv::InequalityId::YANG13;
    hhv::Sequence b;
    if (needs_b)
        b = hhv::generate(hhv::SeqSpec::parse(b_spec.empty() ? a_spec : b_spec));

    hhv::VerificationReport r;
    switch (id) {
    case hhv::InequalityId::I31: r = hhv::verify_31(a, b, params); break;
    case hhv::InequalityId::I32: r = hhv::verify_32(a, params, n_max); break;
    case hhv::InequalityId::I33: r = hhv::verify_33(a, b, params); break;
    case hhv::InequalityId::I34: r = hhv::verify_34(a, params, n_max); break;
    case hhv::InequalityId::I35: r = hhv::verify_35(a, b, params); break;
    case hhv::InequalityId::I36: r = hhv::verify_36(a, params, n_max); break;
    case hhv::InequalityId::I37: r = hhv::verify_37(a, b, params); break;
    case hhv::InequalityId::I38: r = hhv::verify_38(a, params, n_max); break;
    case hhv::InequalityId::YANG13: r = hhv::verify_yang13(a, b, params); break;
    }
    print_report(r);
    return r.holds ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------------- sweep

int cmd_sweep(const GridFlags& grid, const std::vector<std::string>& a_specs,
              const std::vector<std::string>& b_specs, std::uint64_t n_max,
              OutFormat format, const std::string& path) {
    std::vector<hhv::Sequence> as, bs;
    for (const auto& s : a_specs) as.push_back(hhv::generate(hhv::SeqSpec::parse(s)));
    for (const auto& s : b_specs) bs.push_back(hhv::generate(hhv::SeqSpec::parse(s)));

    Table table;
    table.columns = {"p",   "q",   "lambda",       "ineq",        "a",     "b",
                     "lhs", "rhs", "rhs_baseline", "improvement", "holds"};
    bool all_hold = true;
    const auto add_row = [&](const hhv::VerificationReport& r) {
        all_hold = all_hold && r.holds;
        table.rows.push_back(
            {fmt_cell(r.p, format), fmt_cell(r.q, format), fmt_cell(r.lambda, format),
             format == OutFormat::csv ? std::string(hhv::to_string(r.id))
                                      : "\"" + std::string(hhv::to_string(r.id)) + "\"",
             format == OutFormat::csv ? r.a_label : "\"" + json_escape(r.a_label) + "\"",
             [&] {
                 const std::string b = r.b_label.empty() ? "-" : r.b_label;
                 return format == OutFormat::csv ? b : "\"" + json_escape(b) + "\"";
             }(),
             fmt_cell(r.lhs, format), fmt_cell(r.rhs, format),
             fmt_cell(r.rhs_baseline, format), fmt_cell(r.improvement, format),
             r.holds ? "true" : "false"});
    };

    const std::size_t evaluated = for_each_cell(grid, table, [&](const hhv::HolderParams& params) {
        for (const auto& a : as) {
            for (const auto& b : bs)
                add_row(hhv::verify_31(a, b, params));
            add_row(hhv::verify_32(a, params, std::max<std::uint64_t>(n_max, a.size())));
        }
    });
    if (evaluated == 0)
        throw std::invalid_argument("every grid cell was inadmissible");
    emit(table, format, path);
    return all_hold ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------------- probe

int cmd_probe(double p, double lambda, const std::vector<double>& eps_list,
              std::uint64_t n_terms) {
    const hhv::HolderParams params(p, lambda);
    double prev = 0.0;
    bool first = true;
    bool monotone = true;
    for (double eps : eps_list) {
        const auto r = hhv::sharpness_probe(params, eps, n_terms);
        std::printf("eps=%.17g n=%llu ratio=%.17g k_lambda=%.17g gap=%.17g\n", eps,
                    static_cast<unsigned long long>(n_terms), r.ratio, r.constant,
                    r.gap);
        if (!first && r.ratio < prev) monotone = false;
        prev = r.ratio;
        first = false;
    }
    if (eps_list.size() > 1)
        std::printf("trend: ratio %s as eps decreases\n",
                    monotone ? "non-decreasing" : "fluctuating");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Series-inequality verifier: certified zeta brackets, weight-bound "
                 "sweeps, and bilinear-form checks over the max-kernel family"};
    app.require_subcommand(1);

    // zeta
    double rho = 0.0;
    int em_m = 16, em_l = 8;
    auto* zeta = app.add_subcommand("zeta", "bracket zeta(rho)");
    zeta->add_option("--rho", rho, "exponent, rho >= 0, rho != 1")->required();
    zeta->add_option("--m", em_m, "split point (default 16)");
    zeta->add_option("--l", em_l, "correction order (default 8)");

    // weight
    std::uint64_t w_m = 1;
    double w_p = 2.0, w_lambda = 1.0;
    auto* weight = app.add_subcommand("weight", "weight estimate at one index");
    weight->add_option("--m", w_m, "index m >= 1")->required();
    weight->add_option("--p", w_p, "Holder exponent p > 1")->required();
    weight->add_option("--lambda", w_lambda, "kernel exponent lambda")->required();
    weight->add_option("--em-m", em_m, "zeta split point");
    weight->add_option("--em-l", em_l, "zeta correction order");

    // shared grid + output flags
    GridFlags grid;
    std::string out_format = "csv";
    std::string out_path;

    auto* check = app.add_subcommand("check-weights", "weight bounds over a grid");
    check->add_option("--p", grid.p_values, "p values (default 1.2 1.5 2 3 4)");
    check->add_option("--lambda", grid.lambda_values,
                      "lambda values (default: admissible range per p, step 0.1)");
    check->add_option("--m-max", grid.m_max, "indices 1..m_max (default 500)");
    check->add_option("--out", out_format, "csv|json (default csv)");
    check->add_option("--output", out_path, "write report to file");

    // verify
    std::string ineq, a_spec, b_spec;
    std::uint64_t n_max = 100000;
    double v_p = 2.0, v_lambda = 1.0;
    auto* verify = app.add_subcommand("verify", "verify one inequality instance");
    verify->add_option("--ineq", ineq, "1.3 or 3.1..3.8")->required();
    verify->add_option("--a", a_spec, "sequence spec: unit:N powerlaw:t:N random:seed:N file:path")
        ->required();
    verify->add_option("--b", b_spec, "second sequence (defaults to --a)");
    verify->add_option("--p", v_p, "Holder exponent p (default 2)");
    verify->add_option("--lambda", v_lambda, "kernel exponent (default 1)");
    verify->add_option("--nmax", n_max, "outer-sum cutoff for series forms");

    // sweep
    std::vector<std::string> sweep_a = {"unit:8", "powerlaw:-0.6:32", "random:7:32"};
    std::vector<std::string> sweep_b = {"unit:8", "powerlaw:-0.75:32", "random:11:32"};
    auto* sweep = app.add_subcommand("sweep", "verify inequalities over a grid");
    sweep->add_option("--p", grid.p_values, "p values (default 1.2 1.5 2 3 4)");
    sweep->add_option("--lambda", grid.lambda_values, "lambda values (default per p)");
    sweep->add_option("--a", sweep_a, "sequence specs for the first slot");
    sweep->add_option("--b", sweep_b, "sequence specs for the second slot");
    sweep->add_option("--nmax", n_max, "outer-sum cutoff for series forms");
    sweep->add_option("--out", out_format, "csv|json (default csv)");
    sweep->add_option("--output", out_path, "write report to file");

    // probe
    std::vector<double> eps_list = {0.05};
    std::uint64_t probe_n = 100000;
    double pr_p = 2.0, pr_lambda = 1.0;
    auto* probe = app.add_subcommand("probe", "best-constant probe on the extremal family");
    probe->add_option("--p", pr_p, "Holder exponent p (default 2)");
    probe->add_option("--lambda", pr_lambda, "kernel exponent (default 1)");
    probe->add_option("--eps", eps_list, "offsets, one probe per value (default 0.05)");
    probe->add_option("--n,--nmax", probe_n, "truncation length (default 100000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        const OutFormat format = parse_format(out_format);
        if (zeta->parsed()) return cmd_zeta(rho, em_m, em_l);
        if (weight->parsed()) return cmd_weight(w_m, w_p, w_lambda, em_m, em_l);
        if (check->parsed()) return cmd_check_weights(grid, format, out_path);
        if (verify->parsed())
            return cmd_verify(ineq, a_spec, b_spec, v_p, v_lambda, n_max);
        if (sweep->parsed())
            return cmd_sweep(grid, sweep_a, sweep_b, n_max, format, out_path);
        if (probe->parsed()) return cmd_probe(pr_p, pr_lambda, eps_list, probe_n);
    } catch (const std::logic_error& e) {
        // includes invalid_argument: malformed flags, inadmissible parameters
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
    return kExitBadInput;
}

// Command-line surface for the Krawtchouk sign-approximation library:
// approximation coefficients and samples, exact steepness, Gibbs overshoot
// tables, the classical Gibbs constant, and the exact verification suites.
// Data goes to stdout (CSV/JSON/bare values, byte-stable across runs and
// thread counts); progress and errors go to stderr.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "kg/approx.hpp"
#include "kg/combinat.hpp"
#include "kg/gibbs.hpp"
#include "kg/output.hpp"
#include "kg/steepness.hpp"

namespace {

using namespace kg;

void emit_table(const OutputTable& table, const std::string& format) {
    std::cout << (format == "json" ? render_json(table) : render_csv(table));
}

void progress(const std::string& line) { std::cerr << "# " << line << "\n"; }

QQ parse_probability(const std::string& text) {
    QQ p = parse_rational(text);
    if (p <= 0 || p >= 1) throw CLI::ValidationError("--p", "p must lie strictly between 0 and 1");
    return p;
}

QQ parse_step(const std::string& text) {
    QQ s = parse_rational(text);
    if (s <= 0) throw CLI::ValidationError("--theta-step", "step must be positive");
    return s;
}

int run_approx(unsigned N, const std::string& p_text, const std::string& emit, unsigned samples,
               const std::string& format) {
    KrawtchoukFamily fam(N, parse_probability(p_text));
    OutputTable table;
    if (emit == "coeffs") {
        table.columns = {"n", "c_n"};
        FourierApprox approx = build_direct(fam);
        for (unsigned n = 1; n <= N; n += 2) {
            table.rows.push_back({std::to_string(n), approx.coefficients[n]});
        }
    } else {
        if (samples < 1) throw CLI::ValidationError("--samples", "need at least one sample");
        table.columns = {"x", "F_N"};
        const Poly F = build_direct(fam).polynomial;
        const QQ span = make_ratio(static_cast<long>(N), 2);
        for (unsigned i = 0; i < samples; ++i) {
            QQ x = samples == 1 ? QQ(0)
                                : QQ(span * QQ(static_cast<long>(i)) /
                                     QQ(static_cast<long>(samples) - 1));
            table.rows.push_back({to_string(x), F.eval(x)});
        }
    }
    emit_table(table, format);
    return 0;
}

int run_steepness(unsigned N, unsigned digits, const std::string& format) {
    QQ value = steepness_exact(N);
    if (format == "exact") {
        std::cout << to_string(value) << "\n";
    } else {
        std::cout << DecimalValue::round_half_even(value, digits).str() << "\n";
    }
    return 0;
}

int run_steepness_table(unsigned from, unsigned to, unsigned step, unsigned digits,
                        const std::string& format) {
    if (from < 2 || from % 2 != 0) throw CLI::ValidationError("--from", "start must be even >= 2");
    if (step == 0 || step % 2 != 0) throw CLI::ValidationError("--step", "step must be even > 0");
    OutputTable table;
    table.columns = {"N", "steepness"};
    for (unsigned N = from; N <= to; N += step) {
        QQ value = steepness_exact(N);
        if (format == "exact") {
            table.rows.push_back({std::to_string(N), value});
        } else {
            table.rows.push_back(
                {std::to_string(N), DecimalValue::round_half_even(value, digits).str()});
        }
        progress("steepness N=" + std::to_string(N) + " done");
    }
    emit_table(table, format == "exact" ? "csv" : format);
    return 0;
}

int run_overshoot(unsigned N, unsigned digits, const std::string& step_text,
                  const std::string& format) {
    OvershootResult res = overshoot_certified(N, digits, parse_step(step_text));
    if (format == "exact") {
        std::cout << to_string(res.value) << "\n";
    } else {
        std::cout << DecimalValue::round_half_even(res.value, digits).str() << "\n";
    }
    return 0;
}

int run_overshoot_table(const std::vector<unsigned>& Ns, unsigned digits,
                        const std::string& step_text, const std::string& format) {
    const QQ step = parse_step(step_text);
    OutputTable table;
    table.columns = {"N", "overshoot"};
    for (unsigned N : Ns) {
        OvershootResult res = overshoot_certified(N, digits, step);
        if (format == "exact") {
            table.rows.push_back({std::to_string(N), res.value});
        } else {
            table.rows.push_back(
                {std::to_string(N), DecimalValue::round_half_even(res.value, digits).str()});
        }
        progress("overshoot N=" + std::to_string(N) + " done");
    }
    emit_table(table, format == "exact" ? "csv" : format);
    return 0;
}

int run_gamma(unsigned digits) {
    std::cout << gibbs_constant(digits).str() << "\n";
    return 0;
}

struct VerifyBounds {
    unsigned st_max = 500;
    unsigned eq_max = 200;
    unsigned xcf_max = 100;
    unsigned p_max = 12;
    unsigned q_max = 12;
    unsigned lemma_max = 40;
    unsigned consequence_max = 100;
    unsigned triple_max = 40;
    unsigned interp_max = 60;
    unsigned pindep_max = 20;
    unsigned kernel_max = 12;
};

bool report_line(const IdentityReport& report) {
    std::string line = report.name + " [" + report.range + "]: ";
    if (report.all_passed) {
        line += "PASS";
    } else {
        line += "FAIL at (";
        const auto& idx = *report.first_failure;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) line += ",";
            line += std::to_string(idx[i]);
        }
        line += ")";
    }
    std::cout << line << "\n";
    progress(report.name + " finished");
    return report.all_passed;
}

int run_verify(const std::string& suite, const VerifyBounds& b) {
    bool ok = true;
    if (suite == "identities" || suite == "all") {
        ok &= report_line(verify_st_equality(b.st_max));
        ok &= report_line(verify_cd_ratio_identity(b.eq_max));
        ok &= report_line(verify_cd_difference_identity(b.eq_max));
        ok &= report_line(verify_x_recurrence(b.eq_max));
        ok &= report_line(verify_wallis_sum(b.eq_max));
        ok &= report_line(verify_x_closed_form(b.xcf_max));
        ok &= report_line(verify_supercatalan_identity(b.p_max, b.q_max));
        ok &= report_line(verify_appendix_lemma(b.lemma_max));
        ok &= report_line(verify_steepness_consequence(b.consequence_max));
    }
    if (suite == "interpolation" || suite == "all") {
        const std::vector<QQ> ps{make_ratio(1, 2), make_ratio(1, 3), make_ratio(3, 5),
                                 make_ratio(9, 10)};
        ok &= report_line(verify_triple_equality(b.triple_max));
        ok &= report_line(verify_interpolation(b.interp_max));
        ok &= report_line(verify_p_independence(b.pindep_max, ps));
        ok &= report_line(verify_leading_coeff(b.interp_max));
    }
    if (suite == "kernel" || suite == "all") {
        const std::vector<QQ> ps{make_ratio(1, 2), make_ratio(2, 5)};
        ok &= report_line(verify_cd_delta(b.kernel_max, ps));
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    kg::apply_thread_env_override();

    CLI::App app{
        "Exact computations for the Krawtchouk Fourier approximation of the sign function"};
    app.require_subcommand(1);

    unsigned N = 0, digits = 6, samples = 65, from = 2, to = 40, step = 2;
    std::string p_text = "1/2", emit = "coeffs", format = "csv", theta_step = "1/8";
    std::string suite = "all";
    std::vector<unsigned> N_list;
    bool corrupt = false;
    VerifyBounds bounds;

    auto* approx_cmd = app.add_subcommand("approx", "Fourier coefficients or plot samples of F_N");
    approx_cmd->add_option("--N", N, "even grid size N >= 2")->required();
    approx_cmd->add_option("--p", p_text, "weight parameter as a/b (default 1/2)");
    approx_cmd->add_option("--emit", emit, "coeffs | samples")
        ->check(CLI::IsMember({"coeffs", "samples"}));
    approx_cmd->add_option("--samples", samples, "sample count over [0, N/2] (default 65)");
    approx_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* steep_cmd = app.add_subcommand("steepness", "exact steepness F_N'(0)");
    steep_cmd->add_option("--N", N, "even grid size N >= 2")->required();
    steep_cmd->add_option("--digits", digits, "decimal places (default 6)");
    steep_cmd->add_option("--format", format, "decimal | exact")
        ->check(CLI::IsMember({"decimal", "exact"}));

    auto* steep_table_cmd = app.add_subcommand("steepness-table", "steepness over a range of N");
    steep_table_cmd->add_option("--from", from, "first N (even, default 2)");
    steep_table_cmd->add_option("--to", to, "last N (default 40)");
    steep_table_cmd->add_option("--step", step, "N increment (even, default 2)");
    steep_table_cmd->add_option("--digits", digits, "decimal places (default 6)");
    steep_table_cmd->add_option("--format", format, "csv | json | exact")
        ->check(CLI::IsMember({"csv", "json", "exact"}));

    auto* over_cmd = app.add_subcommand("overshoot", "certified overshoot F_N(theta_N)");
    over_cmd->add_option("--N", N, "even grid size N >= 4")->required();
    over_cmd->add_option("--digits", digits, "certified decimal places (default 6)");
    over_cmd->add_option("--theta-step", theta_step, "sign-scan step as a/b (default 1/8)");
    over_cmd->add_option("--format", format, "decimal | exact")
        ->check(CLI::IsMember({"decimal", "exact"}));

    auto* over_table_cmd = app.add_subcommand("overshoot-table", "overshoot for listed N");
    over_table_cmd->add_option("--N", N_list, "grid sizes (repeatable)")->required();
    over_table_cmd->add_option("--digits", digits, "certified decimal places (default 6)");
    over_table_cmd->add_option("--theta-step", theta_step, "sign-scan step as a/b (default 1/8)");
    over_table_cmd->add_option("--format", format, "csv | json | exact")
        ->check(CLI::IsMember({"csv", "json", "exact"}));

    auto* gamma_cmd = app.add_subcommand("gamma", "classical Gibbs constant");
    gamma_cmd->add_option("--digits", digits, "decimal places (default 6, max 1000)");

    auto* verify_cmd =
        app.add_subcommand("verify", "exact verification suites; exit 0 iff all pass");
    verify_cmd->add_option("--suite", suite, "identities | interpolation | kernel | all")
        ->check(CLI::IsMember({"identities", "interpolation", "kernel", "all"}));
    verify_cmd->add_option("--M-max", bounds.st_max, "S(M)=T(M) bound (default 500)");
    verify_cmd->add_option("--eq-max", bounds.eq_max, "C/D/X identity bound (default 200)");
    verify_cmd->add_option("--xcf-max", bounds.xcf_max, "X closed-form bound (default 100)");
    verify_cmd->add_option("--p-max", bounds.p_max, "super Catalan p bound (default 12)");
    verify_cmd->add_option("--q-max", bounds.q_max, "super Catalan q bound (default 12)");
    verify_cmd->add_option("--lemma-max", bounds.lemma_max, "appendix lemma N bound (default 40)");
    verify_cmd->add_option("--consequence-max", bounds.consequence_max,
                           "steepness=T cross-check bound (default 100)");
    verify_cmd->add_option("--triple-max", bounds.triple_max, "triple equality bound (default 40)");
    verify_cmd->add_option("--N-max", bounds.interp_max,
                           "interpolation / leading-coefficient bound (default 60)");
    verify_cmd->add_option("--pindep-max", bounds.pindep_max, "p-independence bound (default 20)");
    verify_cmd->add_option("--kernel-max", bounds.kernel_max, "kernel delta bound (default 12)");
    verify_cmd->add_flag("--corrupt-binomial", corrupt, "test hook: corrupt binom(6,3)")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (approx_cmd->parsed()) return run_approx(N, p_text, emit, samples, format);
        if (steep_cmd->parsed()) return run_steepness(N, digits, format);
        if (steep_table_cmd->parsed()) return run_steepness_table(from, to, step, digits, format);
        if (over_cmd->parsed()) return run_overshoot(N, digits, theta_step, format);
        if (over_table_cmd->parsed())
            return run_overshoot_table(N_list, digits, theta_step, format);
        if (gamma_cmd->parsed()) return run_gamma(digits);
        if (verify_cmd->parsed()) {
            kg::combinat::set_binomial_corruption(corrupt);
            return run_verify(suite, bounds);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

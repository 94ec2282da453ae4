#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cassini/determinant.hpp"
#include "cassini/hseries.hpp"
#include "cassini/identities.hpp"
#include "cassini/matrix.hpp"
#include "cassini/report.hpp"
#include "cassini/roots.hpp"
#include "cassini/sequences.hpp"
#include "cassini/sweep.hpp"

namespace {

using namespace cassini;

// Writes to --out PATH when given, standard output otherwise.
struct OutSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

Init parse_init(const std::string& name) {
    return name == "original" ? Init::original : Init::tilde;
}

struct SweepArgs {
    int k_min = 2, k_max = 4;
    int l_min = 2, l_max = 4;
    int j_min = 0, j_max = 0;
    std::string init = "tilde";
    std::string engine = "parallel";
    std::string format = "table";
    std::string out;
    bool fail_fast = false;
};

void add_sweep_options(CLI::App* sub, SweepArgs& a) {
    sub->add_option("--k-min", a.k_min, "smallest k (death delay)")->check(CLI::Range(2, 1000));
    sub->add_option("--k-max", a.k_max, "largest k")->check(CLI::Range(2, 1000));
    sub->add_option("--l-min", a.l_min, "smallest l (maturation age)")->check(CLI::Range(2, 1000));
    sub->add_option("--l-max", a.l_max, "largest l")->check(CLI::Range(2, 1000));
    sub->add_option("--j-min", a.j_min, "smallest shift j")->check(CLI::Range(0, 1000000));
    sub->add_option("--j-max", a.j_max, "largest shift j")->check(CLI::Range(0, 1000000));
    sub->add_option("--init", a.init, "sequence family: initial terms of the tilde or the original sequence")
        ->check(CLI::IsMember({"tilde", "original"}));
    sub->add_option("--engine", a.engine, "serial reference or OpenMP-parallel sweep")
        ->check(CLI::IsMember({"serial", "parallel"}));
    sub->add_flag("--fail-fast", a.fail_fast, "stop at the first mismatching cell (forces serial order)");
}

std::vector<SweepRow> run_sweep(const SweepArgs& a) {
    const SweepRange range{a.k_min, a.k_max, a.l_min, a.l_max, a.j_min, a.j_max};
    const std::vector<SweepCell> cells = make_cells(range);
    const Init init = parse_init(a.init);
    if (a.engine == "parallel" && !a.fail_fast) return sweep_parallel(cells, init);
    return sweep_serial(cells, init, a.fail_fast);
}

bool all_match(const std::vector<SweepRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.match; });
}

void emit_rows(const std::vector<SweepRow>& rows, const std::string& format, OutSink& sink) {
    if (format == "csv")
        sink.stream() << to_csv(rows);
    else if (format == "json")
        sink.stream() << to_json(rows).dump(2) << '\n';
    else
        sink.stream() << to_table(rows);
    sink.stream().flush();
}

int run_gen(const std::string& kind, int k, int l, int count) {
    SequenceKind sk = SequenceKind::fibonacci();
    if (kind == "tilde")
        sk = SequenceKind::tilde(Params(k, l));
    else if (kind == "original")
        sk = SequenceKind::original(Params(k, l));
    else if (kind == "miles")
        sk = SequenceKind::miles(k);

    const std::vector<Term> terms = generate(sk, static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << terms[i].get_str() << (i + 1 < terms.size() ? ", " : "\n");
    return 0;
}

int run_det(int k, int l, int j, const std::string& init) {
    const Params p(k, l);
    Term brute;
    int closed = 0;
    if (parse_init(init) == Init::tilde) {
        brute = determinant(build_tilde_matrix(p, j)).value;
        closed = closed_det_tilde(p, j);
    } else {
        brute = determinant(build_original_matrix(p, j)).value;
        closed = closed_det_original(p, j);
    }
    std::cout << "brute=" << brute.get_str() << " closed=" << closed << '\n';
    return brute == closed ? 0 : 1;
}

int run_table(const SweepArgs& a) {
    OutSink sink(a.out);

    // serial CSV streams rows as they are computed
    if (a.format == "csv" && (a.engine == "serial" || a.fail_fast)) {
        const SweepRange range{a.k_min, a.k_max, a.l_min, a.l_max, a.j_min, a.j_max};
        const Init init = parse_init(a.init);
        bool ok = true;
        sink.stream() << csv_header();
        for (const SweepCell& cell : make_cells(range)) {
            const SweepRow row = compute_row(cell, init);
            sink.stream() << csv_row(row);
            ok = ok && row.match;
            if (a.fail_fast && !row.match) break;
        }
        sink.stream().flush();
        return ok ? 0 : 1;
    }

    const std::vector<SweepRow> rows = run_sweep(a);
    emit_rows(rows, a.format, sink);
    return all_match(rows) ? 0 : 1;
}

int run_verify_theorem(const SweepArgs& a) {
    const std::vector<SweepRow> rows = run_sweep(a);
    const std::size_t bad =
        static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(),
                                               [](const SweepRow& r) { return !r.match; }));

    OutSink sink(a.out);
    emit_rows(rows, a.format, sink);

    if (bad == 0)
        std::cout << "checked " << rows.size() << " cells: all match\n";
    else
        std::cout << "checked " << rows.size() << " cells: " << bad << " mismatches\n";
    return bad == 0 ? 0 : 1;
}

int run_verify_derivation(int k, int l, double tol) {
    const Params p(k, l);
    std::cout << "derivation checks for k=" << k << " l=" << l << " (tol=" << tol << ")\n";

    const auto line = [](const std::string& name, double res, bool pass) {
        std::ostringstream row;
        row << "  " << std::left << std::setw(34) << name << " residual=" << std::scientific
            << std::setprecision(2) << res << (pass ? "  pass" : "  FAIL") << '\n';
        std::cout << row.str();
        return pass;
    };

    bool ok = true;
    const IdentityReport rep = verify_root_identities(p, tol);
    for (const IdentityCheck& c : rep.checks) ok &= line(c.name, c.residual, c.pass);

    const SchurCheck fixed = schur_h_check(2, {{2.0, 0.0}, {3.0, 0.0}, {5.0, 0.0}}, tol);
    ok &= line("schur quotient h_2(2,3,5)", fixed.residual, fixed.pass);

    const RootSet rs = find_roots(p, tol);
    std::vector<Complex> reciprocal;
    reciprocal.reserve(rs.roots.size());
    for (const Complex& r : rs.roots) reciprocal.push_back(1.0 / r);
    const SchurCheck at_roots = schur_h_check(p.ell - 1, reciprocal, tol);
    ok &= line("schur quotient h_{l-1}(1/r)", at_roots.residual, at_roots.pass);

    const Complex numeric = product_formula_det(p, tol);
    const Term exact = determinant(build_tilde_matrix(p, 0)).value;
    const double err = std::abs(numeric - Complex(exact.get_d(), 0.0));
    ok &= line("product formula vs exact det", err, err < 1e-6);

    std::cout << (ok ? "all checks pass\n" : "some checks FAILED\n");
    return ok ? 0 : 1;
}

int run_series(int k, int l, int m_max) {
    const Params p(k, l);
    if (m_max < 0) m_max = p.dim() - 1;
    const HSeries series = h_coefficients(p, m_max);
    for (std::size_t i = 0; i < series.coeffs.size(); ++i)
        std::cout << series.coeffs[i].get_str() << (i + 1 < series.coeffs.size() ? ", " : "\n");
    return 0;
}

int run_roots(int k, int l, double tol) {
    const Params p(k, l);
    const RootSet rs = find_roots(p, tol);
    std::cout << "k=" << k << " l=" << l << " degree=" << p.dim() << '\n'
              << std::setprecision(15);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const Complex& r = rs.roots[i];
        std::cout << "r[" << i << "] = " << r.real() << (r.imag() < 0 ? " - " : " + ")
                  << std::abs(r.imag()) << "i\n";
    }
    std::cout << std::setprecision(3) << std::scientific << "residual_bound=" << rs.residual_bound
              << " separation=" << rs.separation << '\n';
    return 0;
}

int run_period(int k0, int l_max) {
    if (k0 < 2) throw std::domain_error("period analysis requires k0 >= 2");
    if (l_max < 0) l_max = static_cast<int>(2 + 3 * k0 * radical(k0 - 1));
    const PeriodReport rep = alpha_period_analysis(k0, l_max);
    if (rep.period)
        std::cout << "period=" << *rep.period << ", bound=" << rep.bound
                  << ", divides=" << (rep.divides_bound ? "true" : "false") << '\n';
    else
        std::cout << "period=none, bound=" << rep.bound << ", divides=false\n";
    return rep.divides_bound ? 0 : 1;
}

int run_tail(int l0, int k_max) {
    if (l0 < 2) throw std::domain_error("tail analysis requires l0 >= 2");
    if (k_max < 0) k_max = std::max(l0 + 10, 20);
    const TailReport rep = beta_tail_analysis(l0, k_max);
    std::cout << "values k=2.." << k_max << ":";
    for (int v : rep.values) std::cout << ' ' << v;
    std::cout << '\n';
    if (rep.tail_zero_from)
        std::cout << "tail_zero_from=" << *rep.tail_zero_from << '\n';
    else
        std::cout << "tail_zero_from=none\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinants of dying-rabbit sequence matrices"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "print sequence terms");
    std::string gen_kind = "tilde";
    int gen_k = 2, gen_l = 2, gen_count = 10;
    gen->add_option("--kind", gen_kind, "which sequence to generate")
        ->check(CLI::IsMember({"tilde", "original", "miles", "fibonacci"}));
    gen->add_option("--k", gen_k, "death delay (order for miles)")->check(CLI::Range(2, 1000));
    gen->add_option("--l", gen_l, "maturation age")->check(CLI::Range(2, 1000));
    gen->add_option("--count", gen_count, "number of terms")->check(CLI::Range(1, 10000000));
    gen->callback([&] { exit_code = run_gen(gen_kind, gen_k, gen_l, gen_count); });

    // det
    auto* det = app.add_subcommand("det", "brute-force and closed-form determinant for one (k,l,j)");
    int det_k = 2, det_l = 2, det_j = 0;
    std::string det_init = "tilde";
    det->add_option("--k", det_k, "death delay")->check(CLI::Range(2, 1000));
    det->add_option("--l", det_l, "maturation age")->check(CLI::Range(2, 1000));
    det->add_option("--j", det_j, "shift")->check(CLI::Range(0, 1000000));
    det->add_option("--init", det_init, "matrix family")->check(CLI::IsMember({"tilde", "original"}));
    det->callback([&] { exit_code = run_det(det_k, det_l, det_j, det_init); });

    // table
    auto* table = app.add_subcommand("table", "sweep a (k,l,j) grid and emit determinant rows");
    SweepArgs table_args;
    add_sweep_options(table, table_args);
    table->add_option("--format", table_args.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    table->add_option("--out", table_args.out, "output path (default stdout)");
    table->callback([&] { exit_code = run_table(table_args); });

    // verify-theorem
    auto* verify = app.add_subcommand("verify-theorem",
                                      "check closed-form against exact determinants over a grid");
    SweepArgs verify_args;
    add_sweep_options(verify, verify_args);
    verify->add_option("--format", verify_args.format, "report format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    verify->add_option("--out", verify_args.out, "report path (default stdout)");
    verify->callback([&] { exit_code = run_verify_theorem(verify_args); });

    // verify-derivation
    auto* derivation = app.add_subcommand(
        "verify-derivation", "numerically verify each identity behind the determinant formula");
    int dv_k = 2, dv_l = 3;
    double dv_tol = 1e-8;
    derivation->add_option("--k", dv_k, "death delay")->check(CLI::Range(2, 1000));
    derivation->add_option("--l", dv_l, "maturation age")->check(CLI::Range(2, 1000));
    derivation->add_option("--tol", dv_tol, "residual tolerance")->check(CLI::PositiveNumber);
    derivation->callback([&] { exit_code = run_verify_derivation(dv_k, dv_l, dv_tol); });

    // series
    auto* series = app.add_subcommand("series", "integer coefficients of the h-series");
    int se_k = 2, se_l = 2, se_m_max = -1;
    series->add_option("--k", se_k, "death delay")->check(CLI::Range(2, 1000));
    series->add_option("--l", se_l, "maturation age")->check(CLI::Range(2, 1000));
    series->add_option("--m-max", se_m_max, "highest coefficient index (default k+l-2)")
        ->check(CLI::Range(0, 1000000));
    series->callback([&] { exit_code = run_series(se_k, se_l, se_m_max); });

    // roots
    auto* roots = app.add_subcommand("roots", "characteristic polynomial roots and diagnostics");
    int ro_k = 2, ro_l = 2;
    double ro_tol = 1e-8;
    roots->add_option("--k", ro_k, "death delay")->check(CLI::Range(2, 1000));
    roots->add_option("--l", ro_l, "maturation age")->check(CLI::Range(2, 1000));
    roots->add_option("--tol", ro_tol, "residual tolerance")->check(CLI::PositiveNumber);
    roots->callback([&] { exit_code = run_roots(ro_k, ro_l, ro_tol); });

    // period
    auto* period = app.add_subcommand("period", "period of |det| in l for fixed k0");
    int pe_k0 = 2, pe_l_max = -1;
    period->add_option("--k0", pe_k0, "fixed k")->required()->check(CLI::Range(2, 64));
    period->add_option("--l-max", pe_l_max, "scan limit (default 2 + 3*bound)")
        ->check(CLI::Range(2, 1000000));
    period->callback([&] { exit_code = run_period(pe_k0, pe_l_max); });

    // tail
    auto* tail = app.add_subcommand("tail", "vanishing threshold of |det| in k for fixed l0");
    int ta_l0 = 2, ta_k_max = -1;
    tail->add_option("--l0", ta_l0, "fixed l")->required()->check(CLI::Range(2, 1000));
    tail->add_option("--k-max", ta_k_max, "scan limit (default l0+10, at least 20)")
        ->check(CLI::Range(2, 1000000));
    tail->callback([&] { exit_code = run_tail(ta_l0, ta_k_max); });

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const numeric_failure& e) {
        std::cerr << "numeric failure: " << e.what() << " (best residual " << e.best_residual()
                  << ")\n";
        return 3;
    } catch (const analysis_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

// Command-line front end: closed-form constants, flip-equation solving, search
// oracles, conjecture scans, and the verification suites.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "hpcoef/bounds.hpp"
#include "hpcoef/candidates.hpp"
#include "hpcoef/errors.hpp"
#include "hpcoef/io.hpp"
#include "hpcoef/search.hpp"
#include "hpcoef/solver.hpp"
#include "hpcoef/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

struct PValue {
    double value = 0.0;
    bool rational = false;
    long num = 0;
    long den = 1;
};

PValue parse_p(const std::string& text) {
    PValue p;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        p.rational = true;
        p.num = std::stol(text.substr(0, slash));
        p.den = std::stol(text.substr(slash + 1));
        if (p.den <= 0) throw hpcoef::DomainError("p: denominator must be positive");
        p.value = static_cast<double>(p.num) / static_cast<double>(p.den);
    } else {
        p.value = std::stod(text);
    }
    if (!(p.value > 0.0)) throw hpcoef::DomainError("p must be positive");
    return p;
}

bool is_exact_two_thirds(const PValue& p) {
    return p.rational ? (3 * p.num == 2 * p.den) : p.value == 2.0 / 3.0;
}

void emit(const hpcoef::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        hpcoef::atomic_write_file(out_path, text);
    }
}

std::optional<hpcoef::CandidateTable> closed_form_table(int k, const PValue& p) {
    if (p.value >= 1.0) return std::nullopt;
    if (k == 1) return hpcoef::candidates_k1(p.value);
    if (k == 2) return hpcoef::candidates_k2(p.value);
    if (k == 3 && is_exact_two_thirds(p)) return hpcoef::candidates_k3_p23();
    return std::nullopt;
}

void print_table(const hpcoef::CandidateTable& t) {
    std::printf("candidates for k=%d, p=%.12g (best marked *)\n", t.k, t.p);
    std::printf("  %-10s %-3s %-14s %-9s %s\n", "branch", "l", "value", "status", "");
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const auto& e = t.entries[i];
        std::printf("  %-10s %-3d %-14.10f %-9s%s\n", e.branch_label.c_str(), e.l, e.value,
                    e.retained ? "retained" : "rejected", i == t.best ? " *" : "");
    }
}

void print_bounds(const hpcoef::BoundReport& r) {
    std::printf("bounds for k=%d, p=%.12g\n", r.k, r.p);
    if (r.closed_form) {
        std::printf("  closed form     %.12f\n", *r.closed_form);
    } else {
        std::printf("  closed form     (none for this k, p)\n");
    }
    std::printf("  monomial lower  %.12f\n", r.monomial_lower);
    std::printf("  Hardy-Littlewood %.12f\n", r.hl_bound);
    std::printf("  dual embedding  %.12f%s%s\n", r.dual_bound,
                r.dual_bound_conditional ? " (conditional on the embedding constant)" : "",
                r.inv_p_is_integer ? " [1/p integer: unconditional]" : "");
}

int cmd_constants(int k, const PValue& p, const std::string& format,
                  const std::string& out) {
    if (p.value >= 1.0) {
        hpcoef::json j{{"command", "constants"}, {"k", k}, {"p", p.value},
                       {"closed_form", 1.0}, {"note", "trivial range: C(k,p) = 1 for p >= 1"}};
        if (format == "json" || !out.empty()) {
            emit(j, out);
        } else {
            std::printf("C(%d, %.12g) = 1 (trivial range p >= 1)\n", k, p.value);
        }
        return 0;
    }
    const hpcoef::BoundReport rep = hpcoef::bounds_report(k, p.value);
    const auto table = closed_form_table(k, p);
    if (format == "json" || !out.empty()) {
        hpcoef::json j{{"command", "constants"}, {"k", k}, {"p", p.value},
                       {"bounds", hpcoef::to_json(rep)}};
        j["candidates"] = table ? hpcoef::to_json(*table) : hpcoef::json(nullptr);
        emit(j, out);
    } else {
        print_bounds(rep);
        if (table) {
            print_table(*table);
        } else {
            std::printf("no closed-form candidate table for this (k, p); "
                        "use `solve` or `search`.\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hpcoef: sharp coefficient constants for H^p spaces, 0 < p < 1"};
    app.require_subcommand(1);
    app.footer("Reproducibility: all stochastic commands default to --seed 12345.\n"
               "HPX_THREADS caps internal parallelism (default: all cores).");

    std::string p_text = "1/2";
    int k = 2;
    int l = 0;
    int degree = -1;
    int starts = 0;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-10;
    std::string format = "human";
    std::string out_path;
    std::string mode = "structured";
    bool census = false;

    auto add_common = [&](CLI::App* cmd, bool with_l) {
        cmd->add_option("--k", k, "coefficient index k");
        cmd->add_option("--p", p_text, "exponent p, decimal or rational like 2/3");
        if (with_l) cmd->add_option("--l", l, "Blaschke count l");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--format", format, "output format: human|json|csv");
        cmd->add_option("--out", out_path, "write output to this path (atomic)");
    };

    CLI::App* constants = app.add_subcommand("constants", "closed forms, bounds, candidate table");
    add_common(constants, false);

    std::string bounds_grid;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound report for (k, p)");
    add_common(bounds_cmd, false);
    bounds_cmd->add_option("--p-grid", bounds_grid,
                           "emit the bound envelope over a start:stop:step grid");

    CLI::App* solve_cmd = app.add_subcommand("solve", "multistart flip-equation solver");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--starts", starts, "number of starts (default 50)");
    solve_cmd->add_option("--tol", tol, "convergence tolerance (default 1e-11)");
    solve_cmd->add_flag("--census", census,
                        "do not enforce the Blaschke domain; census every algebraic branch");

    CLI::App* search_cmd = app.add_subcommand("search", "derivative-free search oracle");
    add_common(search_cmd, true);
    search_cmd->add_option("--mode", mode, "structured|polynomial");
    search_cmd->add_option("--degree", degree, "polynomial degree m (polynomial mode)");
    search_cmd->add_option("--starts", starts, "number of starts (default 64)");
    search_cmd->add_option("--tol", tol, "final quadrature tolerance (polynomial mode)");

    std::string p_spec = "0.1:0.9:0.1";
    int k_max = 3;
    CLI::App* scan_cmd = app.add_subcommand("scan", "conjecture-probing scan over (k, p)");
    scan_cmd->add_option("--kmax", k_max, "largest k");
    scan_cmd->add_option("--p", p_spec, "grid start:stop:step");
    scan_cmd->add_option("--starts", starts, "starts per cell (default 8)");
    scan_cmd->add_option("--seed", seed, "RNG seed");
    scan_cmd->add_option("--format", format, "csv|json");
    scan_cmd->add_option("--out", out_path, "write output to this path (atomic)");

    std::string suite = "all";
    std::string budget_name = "full";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "paper-values|identities|oracle|all");
    verify_cmd->add_option("--budget", budget_name, "small|full");
    verify_cmd->add_option("--out", out_path, "write the JSON report to this path");
    verify_cmd->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const PValue p = parse_p(p_text);

        if (constants->parsed()) {
            return cmd_constants(k, p, format, out_path);
        }
        if (bounds_cmd->parsed()) {
            if (!bounds_grid.empty()) {
                std::vector<hpcoef::BoundReport> rows;
                for (double gp : hpcoef::parse_p_spec(bounds_grid)) {
                    rows.push_back(hpcoef::bounds_report(k, gp));
                }
                if (format == "json") {
                    hpcoef::json arr = hpcoef::json::array();
                    for (const auto& r : rows) arr.push_back(hpcoef::to_json(r));
                    emit(hpcoef::json{{"command", "bounds"}, {"rows", arr}}, out_path);
                } else {
                    const std::string csv = hpcoef::bound_rows_csv(rows);
                    if (out_path.empty()) {
                        std::cout << csv;
                    } else {
                        hpcoef::atomic_write_file(out_path, csv);
                    }
                }
                return 0;
            }
            const hpcoef::BoundReport rep = hpcoef::bounds_report(k, p.value);
            if (format == "json" || !out_path.empty()) {
                hpcoef::json j{{"command", "bounds"}, {"bounds", hpcoef::to_json(rep)}};
                emit(j, out_path);
            } else {
                print_bounds(rep);
            }
            return 0;
        }
        if (solve_cmd->parsed()) {
            hpcoef::FlipSystem sys = hpcoef::make_flip_system(k, p.value, l);
            sys.enforce_blaschke_domain = !census;
            const int n = starts > 0 ? starts : 50;
            const auto reports = hpcoef::solve_multistart(sys, n, seed, 200,
                                                          tol > 0 ? tol : 1e-11);
            hpcoef::json arr = hpcoef::json::array();
            for (const auto& r : reports) arr.push_back(hpcoef::to_json(r));
            hpcoef::json j{{"command", "solve"}, {"k", k}, {"p", p.value}, {"l", l},
                           {"starts", n}, {"seed", seed}, {"distinct", arr}};
            emit(j, out_path);
            return 0;
        }
        if (search_cmd->parsed()) {
            const int n = starts > 0 ? starts : 64;
            hpcoef::SearchResult r;
            if (mode == "structured") {
                r = hpcoef::structured_search(k, p.value, l, n, seed);
            } else if (mode == "polynomial") {
                if (degree < k) throw hpcoef::DomainError("--degree must be >= k");
                r = hpcoef::polynomial_search(k, p.value, degree, n,
                                              tol > 0 ? tol : 1e-10, seed);
            } else {
                throw hpcoef::DomainError("--mode must be structured or polynomial");
            }
            hpcoef::json j{{"command", "search"}, {"k", k}, {"p", p.value},
                           {"result", hpcoef::to_json(r)}};
            emit(j, out_path);
            return 0;
        }
        if (scan_cmd->parsed()) {
            hpcoef::ScanSettings settings;
            if (starts > 0) settings.starts_per_cell = starts;
            settings.seed = seed;
            const auto rows = hpcoef::scan(k_max, hpcoef::parse_p_spec(p_spec), settings);
            if (format == "json") {
                hpcoef::json arr = hpcoef::json::array();
                for (const auto& r : rows) arr.push_back(hpcoef::to_json(r));
                emit(hpcoef::json{{"command", "scan"}, {"rows", arr}}, out_path);
            } else {
                const std::string csv = hpcoef::scan_rows_csv(rows);
                if (out_path.empty()) {
                    std::cout << csv;
                } else {
                    hpcoef::atomic_write_file(out_path, csv);
                }
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            const hpcoef::VerifyBudget budget = budget_name == "small"
                                                    ? hpcoef::VerifyBudget::small()
                                                    : hpcoef::VerifyBudget::full();
            hpcoef::VerifyBudget b = budget;
            b.seed = seed;
            bool all_pass = true;
            hpcoef::json checks = hpcoef::json::array();
            for (int crit : hpcoef::suite_criteria(suite)) {
                const hpcoef::CheckResult r = hpcoef::run_criterion(crit, b);
                all_pass = all_pass && r.pass;
                std::printf("[%2d] %-4s %s%s%s\n", r.criterion, r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.detail.empty() ? "" : " -- ",
                            r.detail.c_str());
                checks.push_back(hpcoef::json{{"criterion", r.criterion},
                                              {"name", r.name},
                                              {"pass", r.pass},
                                              {"detail", r.detail}});
            }
            if (!out_path.empty()) {
                emit(hpcoef::json{{"command", "verify"}, {"suite", suite},
                                  {"budget", budget_name}, {"pass", all_pass},
                                  {"checks", checks}},
                     out_path);
            }
            return all_pass ? 0 : 1;
        }
    } catch (const hpcoef::NoConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << " (best " << e.best_value
                  << ", err " << e.err_estimate << ")\n";
        return 3;
    } catch (const hpcoef::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

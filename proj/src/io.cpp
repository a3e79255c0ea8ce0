#include "hpcoef/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hpcoef/errors.hpp"

namespace hpcoef {

json to_json(const cx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const NormEstimate& e) {
    return json{{"value", e.value},
                {"p", e.p},
                {"samples", e.samples},
                {"err_estimate", e.err_estimate},
                {"converged", e.converged}};
}

json to_json(const StructuredCandidate& c) {
    json alphas = json::array();
    for (const cx& a : c.alphas) alphas.push_back(to_json(a));
    return json{{"k", c.k},
                {"p", c.p},
                {"l", c.l},
                {"alphas", alphas},
                {"lambda", to_json(c.lambda)},
                {"value", c.value},
                {"branch", c.branch_label},
                {"retained", c.retained},
                {"reject_reason", c.reject_reason}};
}

json to_json(const CandidateTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries) entries.push_back(to_json(e));
    return json{{"k", t.k}, {"p", t.p}, {"entries", entries}, {"best", t.best}};
}

json to_json(const SolveReport& r) {
    const char* status = r.status == SolveStatus::converged     ? "converged"
                         : r.status == SolveStatus::left_domain ? "left_domain"
                                                                : "diverged";
    json j{{"iterations", r.iterations},
           {"final_residual", r.final_residual},
           {"starts_tried", r.starts_tried},
           {"status", status}};
    if (r.candidate) j["candidate"] = to_json(*r.candidate);
    return j;
}

json to_json(const SearchResult& r) {
    json params = json::array();
    for (const cx& v : r.params) params.push_back(to_json(v));
    return json{{"objective", r.objective},
                {"params", params},
                {"mode", r.mode == SearchMode::structured ? "structured" : "polynomial"},
                {"starts", r.starts},
                {"evals", r.evals},
                {"seed", r.seed}};
}

json to_json(const ScanRow& row) {
    json j{{"k", row.k},
           {"p", row.p},
           {"best_l", row.best_l},
           {"best_value", row.best_value},
           {"zero_free", row.zero_free},
           {"a0_nonzero", row.a0_nonzero}};
    j["closed_form"] = row.closed_form ? json(*row.closed_form) : json(nullptr);
    j["gap"] = row.gap ? json(*row.gap) : json(nullptr);
    return j;
}

json to_json(const BoundReport& r) {
    json j{{"k", r.k},
           {"p", r.p},
           {"hl_bound", r.hl_bound},
           {"dual_bound", r.dual_bound},
           {"dual_bound_conditional", r.dual_bound_conditional},
           {"inv_p_is_integer", r.inv_p_is_integer},
           {"monomial_lower", r.monomial_lower}};
    j["closed_form"] = r.closed_form ? json(*r.closed_form) : json(nullptr);
    return j;
}

std::string scan_rows_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "k,p,best_l,best_value,closed_form,gap,zero_free,a0_nonzero\n";
    for (const ScanRow& r : rows) {
        out << r.k << ',' << r.p << ',' << r.best_l << ',' << r.best_value << ',';
        if (r.closed_form) out << *r.closed_form;
        out << ',';
        if (r.gap) out << *r.gap;
        out << ',' << (r.zero_free ? 1 : 0) << ',' << (r.a0_nonzero ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string bound_rows_csv(const std::vector<BoundReport>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "k,p,closed_form,monomial_lower,hl_bound,dual_bound,inv_p_is_integer\n";
    for (const BoundReport& r : rows) {
        out << r.k << ',' << r.p << ',';
        if (r.closed_form) out << *r.closed_form;
        out << ',' << r.monomial_lower << ',' << r.hl_bound << ',' << r.dual_bound << ','
            << (r.inv_p_is_integer ? 1 : 0) << '\n';
    }
    return out.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("rename failed for " + path);
    }
}

std::vector<double> parse_p_spec(const std::string& spec) {
    std::istringstream in(spec);
    double start = 0.0, stop = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0.0)) {
        throw DomainError("p spec must be start:stop:step with step > 0");
    }
    std::vector<double> grid;
    const long long n = std::llround((stop - start) / step);
    for (long long i = 0; i <= n; ++i) {
        const double p = start + static_cast<double>(i) * step;
        if (p <= stop + 1e-12 * step) grid.push_back(p);
    }
    if (grid.empty()) throw DomainError("p spec produced an empty grid");
    return grid;
}

}  // namespace hpcoef

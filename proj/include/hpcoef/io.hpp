#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hpcoef/bounds.hpp"
#include "hpcoef/candidates.hpp"
#include "hpcoef/hardy.hpp"
#include "hpcoef/search.hpp"
#include "hpcoef/solver.hpp"

namespace hpcoef {

using json = nlohmann::json;

json to_json(const cx& z);
json to_json(const NormEstimate& e);
json to_json(const StructuredCandidate& c);
json to_json(const CandidateTable& t);
json to_json(const SolveReport& r);
json to_json(const SearchResult& r);
json to_json(const ScanRow& row);
json to_json(const BoundReport& r);

/// CSV with the fixed column set
/// k,p,best_l,best_value,closed_form,gap,zero_free,a0_nonzero.
std::string scan_rows_csv(const std::vector<ScanRow>& rows);

/// Bound-envelope CSV: k,p,closed_form,monomial_lower,hl_bound,dual_bound,
/// inv_p_is_integer.
std::string bound_rows_csv(const std::vector<BoundReport>& rows);

/// Writes via a temporary file in the same directory, then renames.
void atomic_write_file(const std::string& path, const std::string& content);

/// Parses "start:stop:step" into an inclusive grid.
std::vector<double> parse_p_spec(const std::string& spec);

}  // namespace hpcoef

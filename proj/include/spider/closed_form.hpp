// closed_form.hpp - analytic indicators of Sp(M, K, L).
//
// Each function evaluates a closed formula at concrete parameters and checks
// its own bookkeeping identities (array length, sums) before returning. A
// FormulaError from here means a formula is wrong, not that the input is bad.
#pragma once

#include <vector>

#include "spider/checked.hpp"
#include "spider/spider.hpp"

namespace spider {

struct ClosedFormReport {
    std::vector<Count> delta;
    std::vector<Count> gamma;
    std::vector<Count> alpha;
    Count diameter = 0;
    Rational density;
    Count h_index = 0;
    Rational average_degree;
    Count total_distance = 0;
};

[[nodiscard]] std::vector<Count> delta_closed(const SpiderParams& p);
[[nodiscard]] std::vector<Count> gamma_closed(const SpiderParams& p);
/// Requires N >= 2 (DomainError otherwise).
[[nodiscard]] std::vector<Count> alpha_closed(const SpiderParams& p);
[[nodiscard]] Count diameter_closed(const SpiderParams& p);
/// Requires N >= 2.
[[nodiscard]] Rational density_closed(const SpiderParams& p);
[[nodiscard]] Count h_index_closed(const SpiderParams& p);
[[nodiscard]] Rational average_degree_closed(const SpiderParams& p);
/// Sum of distances over unordered pairs. Requires N >= 2.
[[nodiscard]] Count total_distance_closed(const SpiderParams& p);

/// All of the above; additionally checks total_distance against sum of j * alpha_j.
[[nodiscard]] ClosedFormReport closed_form_report(const SpiderParams& p);

}  // namespace spider

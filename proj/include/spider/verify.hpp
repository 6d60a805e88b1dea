// verify.hpp - exact comparison of closed forms against the brute-force oracle.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spider/closed_form.hpp"
#include "spider/graph.hpp"
#include "spider/spider.hpp"

namespace spider {

struct Mismatch {
    SpiderParams params;
    std::string indicator;
    std::optional<std::size_t> first_index;  ///< first differing entry, arrays only
    std::string detail;
};

/// Compares every field of `closed` with indicators computed on build_spider(p).
[[nodiscard]] std::vector<Mismatch> compare_with_oracle(const SpiderParams& p,
                                                        const ClosedFormReport& closed,
                                                        const IndicatorArrays& oracle);
[[nodiscard]] std::vector<Mismatch> compare_with_oracle(const SpiderParams& p,
                                                        const ClosedFormReport& closed);

using ReportProvider = std::function<ClosedFormReport(const SpiderParams&)>;

struct GridBounds {
    Count m_max = 8;
    Count k_max = 5;
    Count l_max = 6;
    Count node_cap = 2000;
};

/// Distinct normalized parameters in [1, m_max] x [0, k_max] x [0, l_max], sorted.
[[nodiscard]] std::vector<SpiderParams> normalized_grid(const GridBounds& bounds);

struct VerifySummary {
    std::size_t verified = 0;  ///< points compared (2 <= N <= node_cap)
    std::size_t skipped = 0;   ///< points outside that node range
    std::vector<Mismatch> mismatches;  ///< ordered by parameter triple
};

/// Runs the comparison over the grid. Points are evaluated on `threads` workers
/// (0 = hardware concurrency); results are reported in grid order.
[[nodiscard]] VerifySummary verify_grid(const GridBounds& bounds,
                                        const ReportProvider& provider = closed_form_report,
                                        unsigned threads = 1);

}  // namespace spider

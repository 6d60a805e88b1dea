#include "spider/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace spider {

namespace {

std::string join(const std::vector<Count>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void compare_array(const SpiderParams& p, const char* name, const std::vector<Count>& closed,
                   const std::vector<Count>& oracle, std::vector<Mismatch>& out) {
    if (closed == oracle) return;
    const std::size_t common = std::min(closed.size(), oracle.size());
    std::size_t i = 0;
    while (i < common && closed[i] == oracle[i]) ++i;
    out.push_back({p, name, i, "closed=(" + join(closed) + ") oracle=(" + join(oracle) + ")"});
}

template <typename T>
void compare_scalar(const SpiderParams& p, const char* name, const T& closed, const T& oracle,
                    std::vector<Mismatch>& out) {
    if (closed == oracle) return;
    std::ostringstream os;
    os << "closed=" << closed << " oracle=" << oracle;
    out.push_back({p, name, std::nullopt, os.str()});
}

std::vector<Mismatch> check_point(const SpiderParams& p, const ReportProvider& provider) {
    try {
        return compare_with_oracle(p, provider(p));
    } catch (const std::exception& e) {
        return {{p, "closed-form", std::nullopt, e.what()}};
    }
}

}  // namespace

std::vector<Mismatch> compare_with_oracle(const SpiderParams& p, const ClosedFormReport& closed,
                                          const IndicatorArrays& oracle) {
    std::vector<Mismatch> out;
    compare_array(p, "delta", closed.delta, oracle.delta, out);
    compare_array(p, "gamma", closed.gamma, oracle.gamma, out);
    compare_array(p, "alpha", closed.alpha, oracle.alpha, out);
    compare_scalar(p, "diameter", closed.diameter, oracle.diameter, out);
    compare_scalar(p, "density", closed.density, oracle.density, out);
    compare_scalar(p, "h-index", closed.h_index, oracle.h_index, out);
    Count total_degree = 0;
    for (Count d : oracle.delta) total_degree += d;
    compare_scalar(p, "average-degree", closed.average_degree,
                   Rational(total_degree, static_cast<Count>(oracle.delta.size())), out);
    compare_scalar(p, "total-distance", closed.total_distance, oracle.total_distance, out);
    return out;
}

std::vector<Mismatch> compare_with_oracle(const SpiderParams& p, const ClosedFormReport& closed) {
    return compare_with_oracle(p, closed, compute_indicators(build_spider(p)));
}

std::vector<SpiderParams> normalized_grid(const GridBounds& bounds) {
    std::set<SpiderParams> points;
    for (Count m = 1; m <= bounds.m_max; ++m) {
        for (Count k = 0; k <= bounds.k_max; ++k) {
            for (Count l = 0; l <= bounds.l_max; ++l) points.insert(normalize(m, k, l));
        }
    }
    return {points.begin(), points.end()};
}

VerifySummary verify_grid(const GridBounds& bounds, const ReportProvider& provider, unsigned threads) {
    VerifySummary summary;
    std::vector<SpiderParams> work;
    for (const auto& p : normalized_grid(bounds)) {
        const Count n = node_count(p);
        if (n < 2 || n > bounds.node_cap) {
            ++summary.skipped;
        } else {
            work.push_back(p);
        }
    }
    summary.verified = work.size();

    std::vector<std::vector<Mismatch>> results(work.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) results[i] = check_point(work[i], provider);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& r : results) summary.mismatches.insert(summary.mismatches.end(), r.begin(), r.end());
    return summary;
}

}  // namespace spider

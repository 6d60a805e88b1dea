#include "spider/small_world.hpp"

#include <algorithm>
#include <cmath>

#include "spider/closed_form.hpp"

namespace spider {

std::string_view to_string(Notion n) {
    switch (n) {
        case Notion::DSWL: return "DSWL";
        case Notion::DSWA: return "DSWA";
        case Notion::SWD: return "SWD";
        case Notion::SWA: return "SWA";
    }
    return "?";
}

std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::M: return "M";
        case Parameter::K: return "K";
        case Parameter::L: return "L";
    }
    return "?";
}

Notion parse_notion(std::string_view name) {
    for (Notion n : kAllNotions) {
        if (to_string(n) == name) return n;
    }
    throw InputError("unknown notion '" + std::string(name) + "' (expected DSWL, DSWA, SWD or SWA)");
}

Parameter parse_parameter(std::string_view name) {
    for (Parameter p : kAllParameters) {
        if (to_string(p) == name) return p;
    }
    throw InputError("unknown parameter '" + std::string(name) + "' (expected M, K or L)");
}

void GrowthDirection::validate() const {
    if (varying != Parameter::M && fixed.m < 2) throw DomainError("fixed M must be at least 2");
    if (varying != Parameter::K && fixed.k < 1) throw DomainError("fixed K must be at least 1");
    if (varying != Parameter::L && fixed.l < 1) throw DomainError("fixed L must be at least 1");
}

SpiderParams GrowthDirection::at(Count value) const {
    SpiderParams p = fixed;
    switch (varying) {
        case Parameter::M: p.m = value; break;
        case Parameter::K: p.k = value; break;
        case Parameter::L: p.l = value; break;
    }
    return normalize(p.m, p.k, p.l);
}

GrowthDirection canonical_direction(Parameter varying) { return {varying, {2, 1, 1}}; }

namespace {

// Leading entry of delta_closed without materializing the array.
Count largest_degree(const SpiderParams& p) {
    Count d = p.m - 1 + p.k;
    if (p.k > 0) d = std::max<Count>(d, p.l >= 2 ? 2 : 1);
    return d;
}

}  // namespace

Fraction numerator_fraction(Notion notion, const SpiderParams& p) {
    switch (notion) {
        case Notion::DSWL: return {largest_degree(p), 1};
        case Notion::DSWA: return {checked_mul(2, edge_count(p)), node_count(p)};
        case Notion::SWD: return {diameter_closed(p), 1};
        case Notion::SWA: return {total_distance_closed(p), pair_count(p)};
    }
    throw InputError("unknown notion");
}

Rational numerator(Notion notion, const SpiderParams& p) {
    if (node_count(p) < 3) throw DomainError("small-world numerators need N >= 3");
    const auto f = numerator_fraction(notion, p);
    return {f.top, f.bottom};
}

std::vector<RatioPoint> ratio_sequence(Notion notion, const GrowthDirection& dir,
                                       std::span<const Count> steps) {
    std::vector<RatioPoint> out;
    out.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0 && steps[i] <= steps[i - 1]) throw InputError("steps must be strictly increasing");
        const SpiderParams p = dir.at(steps[i]);
        RatioPoint pt;
        pt.step = steps[i];
        pt.n = node_count(p);
        pt.numerator = numerator(notion, p).to_double();
        pt.log_n = std::log(static_cast<double>(pt.n));
        pt.ratio = pt.numerator / pt.log_n;
        out.push_back(pt);
    }
    return out;
}

std::vector<Count> geometric_steps(const GrowthDirection& dir, Count base, int count,
                                   Count max_nodes) {
    if (base < 1) throw InputError("step base must be positive");
    std::vector<Count> steps;
    Count v = base;
    for (int i = 1; i <= count; ++i) {
        v = checked_mul(v, 2);
        if (node_count(dir.at(v)) > max_nodes) break;
        steps.push_back(v);
    }
    return steps;
}

int polynomial_degree(std::span<const Count> samples) {
    if (samples.size() < 3) throw FormulaError("polynomial_degree needs at least three samples");
    std::vector<Count> diff(samples.begin(), samples.end());
    int degree = 0;
    for (std::size_t order = 0; order < samples.size(); ++order) {
        if (std::any_of(diff.begin(), diff.end(), [](Count x) { return x != 0; })) {
            degree = static_cast<int>(order);
        }
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = checked_sub(diff[i + 1], diff[i]);
        diff.pop_back();
    }
    if (degree > static_cast<int>(samples.size()) - 3) {
        throw FormulaError("samples do not determine a polynomial of bounded degree");
    }
    return degree;
}

bool shows_trend(const std::vector<RatioPoint>& seq, LimitKind kind, std::size_t tail) {
    if (seq.size() < 2) return false;
    const std::size_t start = seq.size() > tail ? seq.size() - tail : 0;
    for (std::size_t i = start + 1; i < seq.size(); ++i) {
        const bool up = seq[i].ratio > seq[i - 1].ratio;
        const bool down = seq[i].ratio < seq[i - 1].ratio;
        if (kind == LimitKind::DivergesToInfinity ? !up : !down) return false;
    }
    return true;
}

namespace {

std::string limit_text(const Rational& r) {
    return r.den() == 1 ? std::to_string(r.num()) : r.str();
}

}  // namespace

std::string SmallWorldVerdict::describe() const {
    const bool degree_notion = notion == Notion::DSWL || notion == Notion::DSWA;
    if (degree_notion) {
        return is_small_world ? "degree small world (ratio -> +inf)"
                              : "not a small world (ratio -> " + std::string(
                                    kind == LimitKind::DivergesToInfinity ? "+inf" : limit_text(limit)) + ")";
    }
    if (is_ultra_small) return "ultra-small world (C=0)";
    if (is_small_world) return "small world (C=" + limit_text(limit) + ")";
    return "not a small world (ratio -> +inf)";
}

SmallWorldVerdict classify(Notion notion, const GrowthDirection& dir) {
    dir.validate();
    constexpr int kSamples = 10;
    std::vector<Count> tops, bottoms, sizes;
    for (Count v = dir.min_value(); v < dir.min_value() + kSamples; ++v) {
        const SpiderParams p = dir.at(v);
        const auto f = numerator_fraction(notion, p);
        tops.push_back(f.top);
        bottoms.push_back(f.bottom);
        sizes.push_back(node_count(p));
    }
    if (polynomial_degree(sizes) < 1) throw DomainError("node count does not grow along this direction");

    SmallWorldVerdict v;
    v.notion = notion;
    v.top_degree = polynomial_degree(tops);
    v.bottom_degree = polynomial_degree(bottoms);
    // ln N grows slower than any positive power, so a numerator of positive
    // degree diverges against it and a bounded numerator is driven to zero.
    if (v.top_degree > v.bottom_degree) {
        v.kind = LimitKind::DivergesToInfinity;
    } else {
        v.kind = LimitKind::ConvergesTo;
        v.limit = Rational(0);
    }
    const bool degree_notion = notion == Notion::DSWL || notion == Notion::DSWA;
    if (degree_notion) {
        v.is_small_world = v.kind == LimitKind::DivergesToInfinity;
    } else {
        v.is_small_world = v.kind == LimitKind::ConvergesTo;
        v.is_ultra_small = v.is_small_world && v.limit == Rational(0);
    }

    const auto steps = geometric_steps(dir, 1);
    v.corroborated = shows_trend(ratio_sequence(notion, dir, steps), v.kind);
    return v;
}

std::vector<VerdictCell> verdict_table() {
    std::vector<VerdictCell> cells;
    for (Notion n : kAllNotions) {
        for (Parameter p : kAllParameters) cells.push_back({n, p, classify(n, canonical_direction(p))});
    }
    return cells;
}

}  // namespace spider

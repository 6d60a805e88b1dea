// small_world.hpp - small-world classification of spider sequences.
//
// Four notions are supported, each a limit of some numerator over ln N as one
// spider parameter grows with the other two held fixed:
//
//   DSWL  largest degree / ln N    -> +inf         (degree small world)
//   DSWA  average degree / ln N    -> +inf         (degree small world)
//   SWD   diameter / ln N          -> finite C >= 0
//   SWA   mean distance / ln N     -> finite C >= 0
//
// A limit C = 0 for SWD/SWA is reported as an ultra-small world.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spider/checked.hpp"
#include "spider/spider.hpp"

namespace spider {

enum class Notion { DSWL, DSWA, SWD, SWA };
enum class Parameter { M, K, L };

inline constexpr Notion kAllNotions[] = {Notion::DSWL, Notion::DSWA, Notion::SWD, Notion::SWA};
inline constexpr Parameter kAllParameters[] = {Parameter::M, Parameter::K, Parameter::L};

[[nodiscard]] std::string_view to_string(Notion n);
[[nodiscard]] std::string_view to_string(Parameter p);
/// Throws InputError on unknown names.
[[nodiscard]] Notion parse_notion(std::string_view name);
[[nodiscard]] Parameter parse_parameter(std::string_view name);

/// One parameter varies; the other two keep the values stored in `fixed`
/// (the varying slot of `fixed` is ignored).
struct GrowthDirection {
    Parameter varying = Parameter::M;
    SpiderParams fixed{2, 1, 1};

    /// Throws DomainError unless fixed M >= 2, K >= 1, L >= 1 (for the fixed slots).
    void validate() const;
    /// Parameters with `value` in the varying slot.
    [[nodiscard]] SpiderParams at(Count value) const;
    /// Smallest value of the varying parameter inside the general case.
    [[nodiscard]] Count min_value() const { return varying == Parameter::M ? 2 : 1; }
};

/// Canonical direction: fixed parameters M = 2, K = 1, L = 1 where applicable.
[[nodiscard]] GrowthDirection canonical_direction(Parameter varying);

/// Numerator of the notion as an integer fraction (top, bottom), not reduced.
/// DSWL: (M-1+K, 1); DSWA: (2|E|, N); SWD: (diameter, 1); SWA: (total distance, N(N-1)/2).
struct Fraction {
    Count top;
    Count bottom;
};
[[nodiscard]] Fraction numerator_fraction(Notion notion, const SpiderParams& p);

/// Exact numerator value. Throws DomainError when N < 3.
[[nodiscard]] Rational numerator(Notion notion, const SpiderParams& p);

struct RatioPoint {
    Count step = 0;
    Count n = 0;
    double numerator = 0.0;
    double log_n = 0.0;
    double ratio = 0.0;
};

/// Ratios numerator / ln N at each step value. Steps must be strictly increasing.
[[nodiscard]] std::vector<RatioPoint> ratio_sequence(Notion notion, const GrowthDirection& dir,
                                                     std::span<const Count> steps);

/// base * 2^i for i = 1..count, stopping early once N would exceed max_nodes.
[[nodiscard]] std::vector<Count> geometric_steps(const GrowthDirection& dir, Count base,
                                                 int count = 12, Count max_nodes = 10'000'000);

enum class LimitKind { DivergesToInfinity, ConvergesTo };

struct SmallWorldVerdict {
    Notion notion = Notion::DSWL;
    LimitKind kind = LimitKind::ConvergesTo;
    Rational limit;  ///< meaningful when kind == ConvergesTo
    bool is_small_world = false;
    bool is_ultra_small = false;
    /// Polynomial degrees of the numerator fraction in the varying parameter.
    int top_degree = 0;
    int bottom_degree = 0;
    /// True when the geometric ratio sequence shows the trend the limit predicts.
    bool corroborated = false;

    [[nodiscard]] std::string describe() const;
};

/// Degree of an integer-valued polynomial sampled at consecutive integers, found
/// from its forward differences. Throws FormulaError if the samples do not fit a
/// polynomial of degree <= samples.size() - 3.
[[nodiscard]] int polynomial_degree(std::span<const Count> samples);

/// True when the last `tail` ratios move strictly in the direction the verdict predicts.
[[nodiscard]] bool shows_trend(const std::vector<RatioPoint>& seq, LimitKind kind,
                               std::size_t tail = 6);

[[nodiscard]] SmallWorldVerdict classify(Notion notion, const GrowthDirection& dir);

struct VerdictCell {
    Notion notion;
    Parameter varying;
    SmallWorldVerdict verdict;
};

/// All 12 (notion, direction) cells at canonical fixed parameters, notion-major.
[[nodiscard]] std::vector<VerdictCell> verdict_table();

}  // namespace spider

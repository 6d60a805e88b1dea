#include "spider/closed_form.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace spider {

namespace {

struct Group {
    Count value;
    Count times;
};

std::vector<Count> expand_sorted(std::initializer_list<Group> groups) {
    std::vector<Count> out;
    for (const auto& g : groups) {
        if (g.times < 0) throw FormulaError("negative multiplicity in closed-form group");
        out.insert(out.end(), static_cast<std::size_t>(g.times), g.value);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Count sum(const std::vector<Count>& v) {
    Count s = 0;
    for (Count x : v) s = checked_add(s, x);
    return s;
}

void require_pairs(const SpiderParams& p, const char* what) {
    if (node_count(p) < 2) throw DomainError(std::string(what) + " is undefined for a single node");
}

void check_length(const std::vector<Count>& v, Count expected, const char* what) {
    if (static_cast<Count>(v.size()) != expected) {
        throw FormulaError(std::string(what) + ": length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(expected));
    }
}

}  // namespace

std::vector<Count> delta_closed(const SpiderParams& p) {
    const Count mk = checked_mul(p.m, p.k);
    auto delta = expand_sorted({
        {p.m - 1 + p.k, p.m},
        {2, p.l > 0 ? checked_mul(mk, p.l - 1) : 0},
        {1, mk},
    });
    check_length(delta, node_count(p), "delta_closed");
    if (sum(delta) != checked_mul(2, edge_count(p))) {
        throw FormulaError("delta_closed: total degree differs from twice the edge count");
    }
    return delta;
}

std::vector<Count> gamma_closed(const SpiderParams& p) {
    const Count m = p.m, k = p.k, l = p.l;
    const Count mk = checked_mul(m, k);
    const Count core_degree = m - 1 + k;
    std::vector<Count> gamma;
    if (k == 0) {
        gamma = expand_sorted({{checked_mul(m, m - 1), m}});
    } else if (l == 1) {
        gamma = expand_sorted({
            {checked_add(checked_mul(m, core_degree), k), m},
            {m + k, mk},
        });
    } else if (l == 2) {
        gamma = expand_sorted({
            {checked_add(checked_mul(m, core_degree), 2 * k), m},
            {m + k + 2, mk},
            {3, mk},
        });
    } else {
        gamma = expand_sorted({
            {checked_add(checked_mul(m, core_degree), 2 * k), m},
            {m + k + 3, mk},
            {6, checked_mul(l - 3, mk)},
            {5, mk},
            {3, mk},
        });
    }
    check_length(gamma, node_count(p), "gamma_closed");
    // Sum of gamma = sum of degrees + sum of squared degrees.
    Count expected = 0;
    for (Count d : delta_closed(p)) expected = checked_add(expected, checked_add(d, checked_mul(d, d)));
    if (sum(gamma) != expected) throw FormulaError("gamma_closed: sum differs from sum(d + d^2)");
    return gamma;
}

std::vector<Count> alpha_closed(const SpiderParams& p) {
    require_pairs(p, "alpha array");
    const Count m = p.m, k = p.k, l = p.l;
    const Count n = node_count(p);
    // Pair families: a leg node against another core node, two legs of one
    // bundle, and two legs of different bundles.
    const Count leg_to_core = checked_product(k, m, m - 1);
    const Count same_bundle = checked_mul(m, checked_mul(k, k - 1) / 2);
    const Count cross_bundle = checked_product(m, k, k, m - 1) / 2;

    std::vector<Count> full(static_cast<std::size_t>(std::max<Count>(2 * l + 1, 1)), 0);
    full[0] = edge_count(p);
    for (Count j = 2; j <= l; ++j) {
        full[j - 1] = checked_add(
            checked_add(checked_product(k, m, l - (j - 1)), checked_mul(same_bundle, j - 1)),
            checked_add(leg_to_core, checked_mul(cross_bundle, j - 2)));
    }
    if (l >= 1) {
        full[l] = checked_add(checked_add(checked_mul(same_bundle, l), leg_to_core),
                              checked_mul(cross_bundle, l - 1));
        for (Count r = 2; r <= l; ++r) {
            full[l + r - 1] = checked_add(checked_mul(same_bundle, l - r + 1),
                                          checked_mul(cross_bundle, l - r + 2));
        }
        full[2 * l] = cross_bundle;
    }

    std::vector<Count> alpha(static_cast<std::size_t>(n - 1), 0);
    for (std::size_t j = 0; j < full.size(); ++j) {
        if (j < alpha.size()) {
            alpha[j] = full[j];
        } else if (full[j] != 0) {
            throw FormulaError("alpha_closed: nonzero count at distance " + std::to_string(j + 1) +
                               " beyond N-1");
        }
    }
    if (sum(alpha) != pair_count(p)) throw FormulaError("alpha_closed: sum differs from N(N-1)/2");
    return alpha;
}

Count diameter_closed(const SpiderParams& p) {
    if (p.m > 1) return 2 * p.l + 1;
    if (p.k > 1) return 2 * p.l;
    if (p.k == 1) return p.l;
    return 0;
}

Rational density_closed(const SpiderParams& p) {
    require_pairs(p, "density");
    const Count legs = checked_add(1, checked_mul(p.k, p.l));  // 1 + KL
    const Count num = checked_add(checked_mul(2, checked_mul(p.k, p.l)), p.m - 1);
    const Count den = checked_sub(checked_product(p.m, legs, legs), legs);
    return {num, den};
}

Count h_index_closed(const SpiderParams& p) {
    if (p.k == 0) return p.m - 1;
    if (p.m > 1) return p.m;
    if (p.l == 1) return 1;
    if (p.k > 1) return 2;
    return p.l > 2 ? 2 : 1;
}

Rational average_degree_closed(const SpiderParams& p) {
    const Count kl = checked_mul(p.k, p.l);
    return {checked_add(p.m - 1, checked_mul(2, kl)), checked_add(1, kl)};
}

Count total_distance_closed(const SpiderParams& p) {
    require_pairs(p, "total distance");
    const Count m = p.m, k = p.k, l = p.l;
    // Polynomial sums over positions along a leg.
    const Count within_leg = exact_div(checked_product(l, l - 1, l + 4), 6);
    const Count leg_core = exact_div(checked_mul(l, l + 3), 2);
    const Count bundle_near = exact_div(checked_product(l, l + 1, l + 2), 3);
    const Count bundle_far = exact_div(checked_product(2, l, l - 1, l + 1), 3);
    const Count cross_near = exact_div(checked_product(l, l + 1, 2 * l + 7), 6);
    const Count cross_far = exact_div(checked_product(l, l - 1, 4 * l + 7), 6);

    Count t = edge_count(p);
    t = checked_add(t, checked_product(k, m, within_leg));
    t = checked_add(t, checked_product(k, m, m - 1, leg_core));
    t = checked_add(t, checked_mul(checked_mul(m, checked_mul(k, k - 1) / 2),
                                   checked_add(bundle_near, bundle_far)));
    t = checked_add(t, checked_mul(checked_product(m, k, k, m - 1) / 2,
                                   checked_add(cross_near, cross_far)));
    return t;
}

ClosedFormReport closed_form_report(const SpiderParams& p) {
    ClosedFormReport r;
    r.delta = delta_closed(p);
    r.gamma = gamma_closed(p);
    r.alpha = alpha_closed(p);
    r.diameter = diameter_closed(p);
    r.density = density_closed(p);
    r.h_index = h_index_closed(p);
    r.average_degree = average_degree_closed(p);
    r.total_distance = total_distance_closed(p);
    Count weighted = 0;
    for (std::size_t j = 0; j < r.alpha.size(); ++j) {
        weighted = checked_add(weighted, checked_mul(static_cast<Count>(j + 1), r.alpha[j]));
    }
    if (weighted != r.total_distance) {
        throw FormulaError("total_distance_closed disagrees with sum of j * alpha_j");
    }
    return r;
}

}  // namespace spider

#pragma once

#include "tlmine/miner.hpp"
#include "tlmine/model.hpp"

#include <string>
#include <vector>

namespace tlmine {

/// antecedent => consequent, with the support of their union.
struct Rule {
    Itemset antecedent;
    Itemset consequent;
    Count support = 0;
    Ratio confidence;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleQuery {
    Ratio min_confidence{1, 1};

    /// Throws ThresholdError unless min_confidence is in (0, 1].
    void validate() const;
};

/// supp_xy / supp_x as an exact fraction. Throws Error when supp_x is 0 or
/// smaller than supp_xy.
Ratio confidence(Count supp_xy, Count supp_x);

/// Every rule X => Z\X with Z frequent, |Z| >= 2, X a non-empty proper
/// subset of Z and confidence >= q.min_confidence. Ordered by Z (level,
/// then canonical), then antecedent size, then canonical antecedent.
/// Throws Error if some subset of a frequent itemset is missing from
/// `frequents`.
std::vector<Rule> generate_rules(const MineResult& frequents, const RuleQuery& q);

/// c * 100 rounded half away from zero to two decimals, trailing zeros and
/// a trailing point removed, then '%': 7/9 -> "77.78%", 1 -> "100%".
std::string format_percent(const Ratio& c);

} // namespace tlmine

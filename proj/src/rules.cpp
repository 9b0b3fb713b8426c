#include "tlmine/rules.hpp"

#include <algorithm>
#include <unordered_map>

namespace tlmine {

void RuleQuery::validate() const
{
    if (min_confidence.num() == 0 || min_confidence > Ratio(1, 1))
        throw ThresholdError("minimum confidence must be in (0, 1], got " + min_confidence.str());
}

Ratio confidence(Count supp_xy, Count supp_x)
{
    if (supp_x == 0)
        throw Error("confidence: antecedent support is zero");
    if (supp_xy > supp_x)
        throw Error("confidence: joint support exceeds antecedent support");
    return Ratio(supp_xy, supp_x);
}

std::vector<Rule> generate_rules(const MineResult& frequents, const RuleQuery& q)
{
    q.validate();

    std::unordered_map<Itemset, Count, ItemsetHash> support;
    for (const auto& level : frequents.levels)
        for (const auto& f : level)
            support.emplace(f.itemset, f.support);

    std::vector<Rule> rules;
    for (std::size_t k = 2; k <= frequents.levels.size(); ++k) {
        for (const auto& z : frequents.levels[k - 1]) {
            if (k >= 64)
                throw Error("itemset too large for rule enumeration");
            // Antecedents grouped by size, each group in canonical order.
            std::vector<std::vector<std::pair<Itemset, Itemset>>> by_size(k);
            const std::uint64_t full = (std::uint64_t{1} << k) - 1;
            for (std::uint64_t mask = 1; mask < full; ++mask) {
                std::vector<ItemId> lhs, rhs;
                for (std::size_t b = 0; b < k; ++b)
                    (mask >> b & 1 ? lhs : rhs).push_back(z.itemset[b]);
                std::size_t size = lhs.size();
                by_size[size].emplace_back(Itemset(std::move(lhs)), Itemset(std::move(rhs)));
            }
            for (auto& group : by_size) {
                std::sort(group.begin(), group.end());
                for (auto& [lhs, rhs] : group) {
                    auto it = support.find(lhs);
                    if (it == support.end())
                        throw Error("inconsistent frequent itemsets: missing subset support");
                    Ratio conf = confidence(z.support, it->second);
                    if (conf >= q.min_confidence)
                        rules.push_back({lhs, rhs, z.support, conf});
                }
            }
        }
    }
    return rules;
}

std::string format_percent(const Ratio& c)
{
    // Hundredths of a percent, rounded half away from zero (c >= 0).
    using wide = unsigned __int128;
    wide scaled = static_cast<wide>(c.num()) * 10000;
    auto hundredths = static_cast<std::uint64_t>((scaled * 2 + c.den()) / (static_cast<wide>(c.den()) * 2));

    std::string out = std::to_string(hundredths / 100);
    std::uint64_t frac = hundredths % 100;
    if (frac != 0) {
        out += '.';
        out += static_cast<char>('0' + frac / 10);
        if (frac % 10 != 0)
            out += static_cast<char>('0' + frac % 10);
    }
    out += '%';
    return out;
}

} // namespace tlmine

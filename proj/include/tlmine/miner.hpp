#pragma once

#include "tlmine/intersect.hpp"
#include "tlmine/model.hpp"
#include "tlmine/tradelist.hpp"

#include <vector>

namespace tlmine {

struct FrequentItemset {
    Itemset itemset;
    Count support = 0;

    friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
    friend auto operator<=>(const FrequentItemset&, const FrequentItemset&) = default;
};

struct MineStats {
    /// Full scans of the horizontal database made by this call.
    std::size_t raw_passes = 0;
    /// Tidset intersections (trade-list miner) or candidate containment
    /// checks (Apriori).
    std::uint64_t work_ops = 0;
    /// Informational only; never part of any equality.
    double elapsed_ms = 0.0;
};

/// Frequent itemsets grouped by size: levels[0] holds L1, levels[1] L2, ...
/// Each level is in canonical itemset order. No trailing empty levels.
struct MineResult {
    std::vector<std::vector<FrequentItemset>> levels;
    MineStats stats;
    Count min_support = 0;

    std::size_t total() const;
    /// All itemsets, level by level.
    std::vector<FrequentItemset> flatten() const;
    std::size_t max_level() const { return levels.size(); }
    const std::vector<FrequentItemset>& level(std::size_t k) const;

    /// Same itemsets with the same supports; stats are ignored.
    bool same_itemsets(const MineResult& other) const { return levels == other.levels; }
};

/// Sorts `found` into canonical level/itemset order.
MineResult make_result(std::vector<FrequentItemset> found, Count min_support);

struct MineOptions {
    /// Worker threads for independent prefix subtrees. 0 or 1 runs inline.
    unsigned threads = 1;
};

/// Depth-first prefix extension over tidset intersections. Frequent items
/// are ordered by ascending support (ties by ordinal); each prefix is only
/// extended with later siblings and infrequent extensions are pruned.
/// Output and work_ops do not depend on options.threads.
MineResult mine(const TradeList& tl, const SupportThreshold& threshold, MineOptions options = {});

/// Re-mines an existing trade list at a new threshold. Never touches raw
/// data; stats.raw_passes is always 0.
MineResult remine(const TradeList& tl, const SupportThreshold& new_threshold, MineOptions options = {});

} // namespace tlmine

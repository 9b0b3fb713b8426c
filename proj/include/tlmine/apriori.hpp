#pragma once

#include "tlmine/miner.hpp"
#include "tlmine/model.hpp"

#include <span>
#include <vector>

namespace tlmine {

// Level-wise Apriori over the horizontal database. Deliberately plain: it is
// the correctness oracle and benchmark baseline for the trade-list miner.

struct CandidateSet {
    std::size_t level = 0;
    std::vector<Itemset> candidates;
    std::vector<Count> counts;
};

struct AprioriCounters {
    std::size_t raw_passes = 0;
    std::uint64_t containment_checks = 0;
};

/// Joins k-itemsets sharing a (k-1)-prefix and drops every join with an
/// infrequent k-subset. `frequent` must be canonical k-itemsets in
/// canonical order.
CandidateSet generate_candidates(std::span<const Itemset> frequent);

/// One full scan of `db` counting every candidate. Always increments
/// counters.raw_passes, even for an empty candidate set.
void count_support(const Database& db, CandidateSet& cands, AprioriCounters& counters);

/// Stops after the first level with no frequent itemsets, or when the join
/// produces no candidates. stats.raw_passes counts every scan made.
MineResult mine_apriori(const Database& db, const SupportThreshold& threshold);

} // namespace tlmine

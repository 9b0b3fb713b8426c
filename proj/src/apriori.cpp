#include "tlmine/apriori.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace tlmine {

CandidateSet generate_candidates(std::span<const Itemset> frequent)
{
    CandidateSet out;
    if (frequent.empty())
        return out;
    const std::size_t k = frequent.front().size();
    out.level = k + 1;

    std::unordered_set<Itemset, ItemsetHash> lookup(frequent.begin(), frequent.end());

    for (std::size_t i = 0; i < frequent.size(); ++i) {
        const auto& a = frequent[i].items();
        for (std::size_t j = i + 1; j < frequent.size(); ++j) {
            const auto& b = frequent[j].items();
            if (!std::equal(a.begin(), a.end() - 1, b.begin()))
                break; // canonical order groups equal prefixes together
            std::vector<ItemId> joined(a);
            joined.push_back(b.back());
            Itemset cand(joined);

            bool keep = true;
            // Subsets dropping one of the first k-1 items; dropping either
            // of the last two gives a or b, both frequent.
            for (std::size_t drop = 0; keep && drop + 2 < joined.size(); ++drop) {
                std::vector<ItemId> sub;
                sub.reserve(k);
                for (std::size_t m = 0; m < joined.size(); ++m)
                    if (m != drop)
                        sub.push_back(joined[m]);
                keep = lookup.contains(Itemset(std::move(sub)));
            }
            if (keep)
                out.candidates.push_back(std::move(cand));
        }
    }
    out.counts.assign(out.candidates.size(), 0);
    return out;
}

void count_support(const Database& db, CandidateSet& cands, AprioriCounters& counters)
{
    cands.counts.assign(cands.candidates.size(), 0);
    for (const auto& tx : db.transactions()) {
        for (std::size_t c = 0; c < cands.candidates.size(); ++c) {
            ++counters.containment_checks;
            if (cands.candidates[c].subset_of(tx.items))
                ++cands.counts[c];
        }
    }
    ++counters.raw_passes;
}

namespace {

// Level 1 is counted directly from the items of each transaction.
std::vector<Itemset> count_singletons(const Database& db, Count min_support, AprioriCounters& counters,
                                      std::vector<FrequentItemset>& found)
{
    std::vector<Count> counts(db.items().size(), 0);
    for (const auto& tx : db.transactions()) {
        for (ItemId item : tx.items) {
            ++counters.containment_checks;
            ++counts[item];
        }
    }
    ++counters.raw_passes;

    std::vector<Itemset> frequent;
    for (ItemId item = 0; item < counts.size(); ++item) {
        if (counts[item] >= min_support) {
            frequent.push_back(Itemset{item});
            found.push_back({Itemset{item}, counts[item]});
        }
    }
    return frequent;
}

} // namespace

MineResult mine_apriori(const Database& db, const SupportThreshold& threshold)
{
    auto start = std::chrono::steady_clock::now();
    const Count min_support = threshold.resolve(db.size());

    AprioriCounters counters;
    std::vector<FrequentItemset> found;
    std::vector<Itemset> frequent = count_singletons(db, min_support, counters, found);

    while (!frequent.empty()) {
        CandidateSet cands = generate_candidates(frequent);
        if (cands.candidates.empty())
            break;
        count_support(db, cands, counters);
        frequent.clear();
        for (std::size_t c = 0; c < cands.candidates.size(); ++c) {
            if (cands.counts[c] >= min_support) {
                frequent.push_back(cands.candidates[c]);
                found.push_back({cands.candidates[c], cands.counts[c]});
            }
        }
    }

    MineResult result = make_result(std::move(found), min_support);
    result.stats.raw_passes = counters.raw_passes;
    result.stats.work_ops = counters.containment_checks;
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace tlmine

#include "tlmine/miner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace tlmine {

std::size_t MineResult::total() const
{
    std::size_t n = 0;
    for (const auto& level : levels)
        n += level.size();
    return n;
}

std::vector<FrequentItemset> MineResult::flatten() const
{
    std::vector<FrequentItemset> out;
    out.reserve(total());
    for (const auto& level : levels)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

const std::vector<FrequentItemset>& MineResult::level(std::size_t k) const
{
    static const std::vector<FrequentItemset> none;
    if (k == 0 || k > levels.size())
        return none;
    return levels[k - 1];
}

MineResult make_result(std::vector<FrequentItemset> found, Count min_support)
{
    std::sort(found.begin(), found.end(), [](const FrequentItemset& a, const FrequentItemset& b) {
        if (a.itemset.size() != b.itemset.size())
            return a.itemset.size() < b.itemset.size();
        return a.itemset < b.itemset;
    });
    MineResult result;
    result.min_support = min_support;
    for (auto& f : found) {
        std::size_t k = f.itemset.size();
        if (result.levels.size() < k)
            result.levels.resize(k);
        result.levels[k - 1].push_back(std::move(f));
    }
    return result;
}

namespace {

struct ClassMember {
    ItemId item;
    TidSet tids;
};

struct Sink {
    std::vector<FrequentItemset> found;
    std::uint64_t intersections = 0;
};

class PrefixMiner {
public:
    explicit PrefixMiner(Count min_support) : min_support_(min_support) {}

    // Emits `prefix + cls[i]` and its whole subtree.
    void expand_member(std::vector<ItemId>& prefix, const std::vector<ClassMember>& cls, std::size_t i,
                       Sink& sink) const
    {
        prefix.push_back(cls[i].item);
        sink.found.push_back({Itemset::from_unsorted(prefix), cls[i].tids.size()});

        std::vector<ClassMember> next;
        TidSet scratch;
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            intersect_into(cls[i].tids, cls[j].tids, scratch);
            ++sink.intersections;
            if (scratch.size() >= min_support_)
                next.push_back({cls[j].item, scratch});
        }
        for (std::size_t k = 0; k < next.size(); ++k)
            expand_member(prefix, next, k, sink);
        prefix.pop_back();
    }

private:
    Count min_support_;
};

} // namespace

MineResult mine(const TradeList& tl, const SupportThreshold& threshold, MineOptions options)
{
    auto start = std::chrono::steady_clock::now();
    const Count min_support = threshold.resolve(tl.n_transactions());

    // Singleton supports come straight from tidset lengths.
    std::vector<ClassMember> roots;
    for (ItemId item = 0; item < tl.n_items(); ++item)
        if (tl.item_support(item) >= min_support)
            roots.push_back({item, tl.tidset(item)});
    std::stable_sort(roots.begin(), roots.end(), [](const ClassMember& a, const ClassMember& b) {
        return a.tids.size() < b.tids.size();
    });

    PrefixMiner miner(min_support);
    std::vector<Sink> sinks;
    unsigned n_threads = std::max(1u, options.threads);
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, std::max<std::size_t>(roots.size(), 1)));

    if (n_threads <= 1) {
        sinks.resize(1);
        std::vector<ItemId> prefix;
        for (std::size_t i = 0; i < roots.size(); ++i)
            miner.expand_member(prefix, roots, i, sinks[0]);
    } else {
        sinks.resize(n_threads);
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < n_threads; ++w) {
            workers.emplace_back([&, w] {
                std::vector<ItemId> prefix;
                for (std::size_t i = next++; i < roots.size(); i = next++)
                    miner.expand_member(prefix, roots, i, sinks[w]);
            });
        }
    }

    std::vector<FrequentItemset> found;
    std::uint64_t intersections = 0;
    for (auto& sink : sinks) {
        intersections += sink.intersections;
        found.insert(found.end(), std::make_move_iterator(sink.found.begin()),
                     std::make_move_iterator(sink.found.end()));
    }

    MineResult result = make_result(std::move(found), min_support);
    result.stats.raw_passes = 0;
    result.stats.work_ops = intersections;
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

MineResult remine(const TradeList& tl, const SupportThreshold& new_threshold, MineOptions options)
{
    return mine(tl, new_threshold, options);
}

} // namespace tlmine

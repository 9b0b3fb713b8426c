#pragma once

#include "tlmine/ingest.hpp"
#include "tlmine/miner.hpp"
#include "tlmine/model.hpp"

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#ifndef TLMINE_TEST_DATA_DIR
#error "TLMINE_TEST_DATA_DIR must be defined"
#endif

namespace tlmine::test {

inline const std::filesystem::path kDataDir{TLMINE_TEST_DATA_DIR};

inline std::string data_file(const std::string& name) { return read_file(kDataDir / name); }

/// Nine-transaction store basket sample over items I1..I5.
inline Database basket() { return parse_database(data_file("basket.txt")); }
/// The basket plus transaction T910 {I1,I4}.
inline Database basket_t910() { return parse_database(data_file("basket_t910.txt")); }

/// Random database with up to `max_tx` transactions over up to `max_items`
/// items. Item labels are shuffled so first-appearance order varies.
inline Database random_database(std::mt19937_64& rng, std::size_t max_tx = 10, std::size_t max_items = 8)
{
    std::uniform_int_distribution<std::size_t> n_tx_dist(0, max_tx);
    std::uniform_int_distribution<std::size_t> n_items_dist(1, max_items);
    std::size_t n_tx = n_tx_dist(rng);
    std::size_t n_items = n_items_dist(rng);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n_items; ++i)
        labels.push_back("I" + std::to_string(i + 1));
    std::shuffle(labels.begin(), labels.end(), rng);

    std::bernoulli_distribution pick(0.45);
    std::uniform_int_distribution<std::size_t> any_item(0, n_items - 1);
    Database db;
    for (std::size_t t = 0; t < n_tx; ++t) {
        TransactionRecord rec{"T" + std::to_string(100 * (t + 1)), {}};
        for (const auto& label : labels)
            if (pick(rng))
                rec.items.push_back(label);
        if (rec.items.empty())
            rec.items.push_back(labels[any_item(rng)]);
        std::shuffle(rec.items.begin(), rec.items.end(), rng);
        db.append(rec);
    }
    return db;
}

/// Transactions [begin, end) of `db` as a new database (labels preserved).
inline Database slice(const Database& db, std::size_t begin, std::size_t end)
{
    Database out;
    for (std::size_t i = begin; i < end; ++i)
        out.append(db.record(db.transactions()[i]));
    return out;
}

using SupportMap = std::map<Itemset, Count>;

/// Exhaustive oracle: every non-empty subset of the item universe, counted
/// by scanning all transactions. Independent of the trade list and Apriori.
inline SupportMap enumerate_frequent(const Database& db, Count min_support)
{
    const std::size_t n = db.items().size();
    if (n > 20)
        throw std::invalid_argument("oracle limited to 20 items");
    std::vector<std::uint32_t> tx_masks;
    for (const auto& tx : db.transactions()) {
        std::uint32_t m = 0;
        for (ItemId id : tx.items)
            m |= 1u << id;
        tx_masks.push_back(m);
    }
    SupportMap out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        Count support = 0;
        for (std::uint32_t m : tx_masks)
            if ((m & s) == s)
                ++support;
        if (support >= min_support) {
            std::vector<ItemId> items;
            for (ItemId id = 0; id < n; ++id)
                if (s >> id & 1)
                    items.push_back(id);
            out.emplace(Itemset(std::move(items)), support);
        }
    }
    return out;
}

/// Brute-force support of a single itemset by scanning transactions.
inline Count scan_support(const Database& db, const Itemset& s)
{
    Count n = 0;
    for (const auto& tx : db.transactions())
        if (std::includes(tx.items.begin(), tx.items.end(), s.begin(), s.end()))
            ++n;
    return n;
}

inline SupportMap to_map(const MineResult& r)
{
    SupportMap out;
    for (const auto& f : r.flatten())
        out.emplace(f.itemset, f.support);
    return out;
}

} // namespace tlmine::test

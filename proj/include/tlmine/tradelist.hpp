#pragma once

#include "tlmine/model.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlmine {

/// Strictly increasing transaction ordinals.
using TidSet = std::vector<TidOrdinal>;

/// Vertical index: for every item, the ordinals of the transactions that
/// contain it. Built from a single scan of the horizontal database and then
/// maintained incrementally.
///
/// Readers may share a TradeList freely; add_transaction needs exclusive
/// access.
class TradeList {
public:
    TradeList() = default;

    /// One pass over `db`. raw_passes() is 1 afterwards.
    static TradeList build(const Database& db);

    /// Appends a new transaction. Unknown item labels extend the item
    /// dictionary. Throws Error on a duplicate TID or an empty item list;
    /// the trade list is unchanged on error.
    void add_transaction(const TransactionRecord& record);
    /// add_transaction for every transaction of `update`, in order.
    void add_transactions(const Database& update);

    std::size_t n_transactions() const { return tids_.size(); }
    std::size_t n_items() const { return tidsets_.size(); }
    /// Number of full scans of a horizontal database performed so far.
    std::size_t raw_passes() const { return raw_passes_; }

    const Dictionary& items() const { return items_; }
    const Dictionary& tids() const { return tids_; }

    /// Throws Error for an unknown item.
    const TidSet& tidset(ItemId item) const;
    Count item_support(ItemId item) const { return tidset(item).size(); }
    Count item_support(std::string_view label) const;

    /// Intersection of the member tidsets, smallest first. `s` must be
    /// non-empty.
    TidSet tidset_of(const Itemset& s) const;
    Itemset itemset_of(std::initializer_list<std::string_view> labels) const;
    std::vector<std::string> labels_of(const Itemset& s) const;

    /// Sum of all tidset lengths.
    std::size_t total_entries() const;

    /// `<item> = <tid>, <tid>, ...` per item in first-appearance order.
    std::string serialize_log() const;

    bool operator==(const TradeList& other) const
    {
        return items_ == other.items_ && tids_ == other.tids_ && tidsets_ == other.tidsets_;
    }

private:
    void append(TidOrdinal tid, const std::vector<ItemId>& items);

    Dictionary items_;
    Dictionary tids_;
    std::vector<TidSet> tidsets_;
    std::size_t raw_passes_ = 0;
};

/// One parsed line of a trade-list log: item label and its TID labels.
using TradeListLogEntry = std::pair<std::string, std::vector<std::string>>;

/// Reads text produced by TradeList::serialize_log.
std::vector<TradeListLogEntry> parse_tradelist_log(std::string_view text);

} // namespace tlmine

#include "tlmine/tradelist.hpp"

#include "tlmine/intersect.hpp"

#include <algorithm>

namespace tlmine {

TradeList TradeList::build(const Database& db)
{
    TradeList tl;
    tl.items_ = db.items();
    tl.tids_ = db.tids();
    tl.tidsets_.resize(db.items().size());
    for (const auto& tx : db.transactions())
        for (ItemId item : tx.items)
            tl.tidsets_[item].push_back(tx.tid);
    tl.raw_passes_ = 1;
    return tl;
}

void TradeList::append(TidOrdinal tid, const std::vector<ItemId>& items)
{
    if (tidsets_.size() < items_.size())
        tidsets_.resize(items_.size());
    for (ItemId item : items)
        tidsets_[item].push_back(tid);
}

void TradeList::add_transaction(const TransactionRecord& record)
{
    std::string_view tid = trim(record.tid);
    if (tid.empty())
        throw ParseError("empty TID");
    if (tids_.find(tid))
        throw Error("duplicate TID '" + std::string(tid) + "'");
    if (record.items.empty())
        throw Error("transaction '" + std::string(tid) + "' has no items");
    for (const auto& label : record.items)
        if (trim(label).empty())
            throw ParseError("empty item label in transaction '" + std::string(tid) + "'");

    std::vector<ItemId> ids;
    for (const auto& label : record.items)
        ids.push_back(items_.intern(label));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    // The new ordinal is the largest, so appending keeps tidsets sorted.
    append(tids_.intern(tid), ids);
}

void TradeList::add_transactions(const Database& update)
{
    for (const auto& tx : update.transactions())
        add_transaction(update.record(tx));
}

const TidSet& TradeList::tidset(ItemId item) const
{
    if (item >= tidsets_.size())
        throw Error("unknown item ordinal " + std::to_string(item));
    return tidsets_[item];
}

Count TradeList::item_support(std::string_view label) const
{
    auto id = items_.find(label);
    if (!id)
        throw Error("unknown item '" + std::string(label) + "'");
    return item_support(*id);
}

TidSet TradeList::tidset_of(const Itemset& s) const
{
    if (s.empty())
        throw Error("tidset_of requires a non-empty itemset");
    std::vector<const TidSet*> members;
    members.reserve(s.size());
    for (ItemId item : s)
        members.push_back(&tidset(item));
    std::stable_sort(members.begin(), members.end(),
                     [](const TidSet* a, const TidSet* b) { return a->size() < b->size(); });

    TidSet acc = *members.front();
    TidSet scratch;
    for (std::size_t i = 1; i < members.size() && !acc.empty(); ++i) {
        intersect_into(acc, *members[i], scratch);
        acc.swap(scratch);
    }
    return acc;
}

Itemset TradeList::itemset_of(std::initializer_list<std::string_view> labels) const
{
    std::vector<ItemId> ids;
    for (auto label : labels) {
        auto id = items_.find(label);
        if (!id)
            throw Error("unknown item '" + std::string(label) + "'");
        ids.push_back(*id);
    }
    return Itemset::from_unsorted(std::move(ids));
}

std::vector<std::string> TradeList::labels_of(const Itemset& s) const
{
    std::vector<std::string> out;
    for (ItemId id : s)
        out.push_back(items_.label(id));
    return out;
}

std::size_t TradeList::total_entries() const
{
    std::size_t n = 0;
    for (const auto& t : tidsets_)
        n += t.size();
    return n;
}

std::string TradeList::serialize_log() const
{
    std::string out;
    for (ItemId item = 0; item < tidsets_.size(); ++item) {
        out += items_.label(item);
        out += " = ";
        const TidSet& ts = tidsets_[item];
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (i)
                out += ", ";
            out += tids_.label(ts[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<TradeListLogEntry> parse_tradelist_log(std::string_view text)
{
    std::vector<TradeListLogEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (trim(line).empty())
            continue;

        auto eq = line.find(" = ");
        if (eq == std::string_view::npos)
            throw ParseError("missing ' = ' separator", line_no);
        TradeListLogEntry entry{std::string(trim(line.substr(0, eq))), {}};
        std::string_view rest = line.substr(eq + 3);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto sep = rest.find(", ", start);
            std::string_view tid = trim(rest.substr(start, sep - start));
            if (tid.empty())
                throw ParseError("empty TID", line_no);
            entry.second.emplace_back(tid);
            if (sep == std::string_view::npos)
                break;
            start = sep + 2;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace tlmine

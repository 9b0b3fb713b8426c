#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace tlmine {

/// Dense ordinal of an item, assigned in order of first appearance.
using ItemId = std::uint32_t;
/// Dense ordinal of a transaction (its position in transaction order).
using TidOrdinal = std::uint32_t;
using Count = std::uint64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ThresholdError : public Error {
public:
    using Error::Error;
};

/// Exact non-negative rational, always held in lowest terms.
class Ratio {
public:
    Ratio() = default;
    Ratio(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    /// Accepts "0.7", "70%", "2/3" and plain integers.
    static Ratio parse(std::string_view text);

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

std::string_view trim(std::string_view s);

/// Bidirectional label <-> ordinal map. Ordinals are contiguous from 0 in
/// insertion order.
class Dictionary {
public:
    /// Returns the existing ordinal for `label` or assigns the next one.
    /// Surrounding whitespace is trimmed; an empty label is a ParseError.
    std::uint32_t intern(std::string_view label);
    std::optional<std::uint32_t> find(std::string_view label) const;
    const std::string& label(std::uint32_t ordinal) const { return labels_.at(ordinal); }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Dictionary& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// Canonical itemset: strictly increasing item ordinals.
class Itemset {
public:
    Itemset() = default;
    /// Throws std::invalid_argument unless `items` is strictly increasing.
    explicit Itemset(std::vector<ItemId> items);
    Itemset(std::initializer_list<ItemId> items) : Itemset(std::vector<ItemId>(items)) {}

    /// Sorts and deduplicates.
    static Itemset from_unsorted(std::vector<ItemId> items);

    const std::vector<ItemId>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    ItemId operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool contains(ItemId item) const;
    /// True when every item of `this` is in `other`.
    bool subset_of(const Itemset& other) const;

    friend bool operator==(const Itemset&, const Itemset&) = default;
    /// Canonical order: lexicographic over ordinals.
    friend auto operator<=>(const Itemset& a, const Itemset& b) { return a.items_ <=> b.items_; }

private:
    std::vector<ItemId> items_;
};

struct ItemsetHash {
    std::size_t operator()(const Itemset& s) const noexcept;
};

struct Transaction {
    TidOrdinal tid = 0;
    Itemset items;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// A transaction as written in a file: labels, not ordinals.
struct TransactionRecord {
    std::string tid;
    std::vector<std::string> items;
};

/// Horizontal transaction database.
class Database {
public:
    /// Appends a transaction, interning its labels. Duplicate items are
    /// dropped. Throws on a duplicate TID or an empty item list.
    const Transaction& append(const TransactionRecord& record);

    const std::vector<Transaction>& transactions() const { return transactions_; }
    std::size_t size() const { return transactions_.size(); }
    bool empty() const { return transactions_.empty(); }

    const Dictionary& items() const { return items_; }
    const Dictionary& tids() const { return tids_; }
    Dictionary& items() { return items_; }

    /// Labels of `s` in canonical order.
    std::vector<std::string> labels_of(const Itemset& s) const;
    /// Looks up each label; throws Error on an unknown label.
    Itemset itemset_of(std::initializer_list<std::string_view> labels) const;

    TransactionRecord record(const Transaction& tx) const;

    bool operator==(const Database& other) const = default;

private:
    std::vector<Transaction> transactions_;
    Dictionary items_;
    Dictionary tids_;
};

/// Minimum support, either as an absolute count or as a fraction of the
/// transaction count.
class SupportThreshold {
public:
    static SupportThreshold absolute(Count count);
    static SupportThreshold fraction(Ratio fraction);

    bool is_fraction() const { return std::holds_alternative<Ratio>(value_); }

    /// Absolute count: max(1, ceil(fraction * n)) for fractions.
    Count resolve(std::size_t n_transactions) const;

private:
    explicit SupportThreshold(std::variant<Count, Ratio> v) : value_(v) {}
    std::variant<Count, Ratio> value_;
};

/// Free-function spelling of Dictionary::intern on the item dictionary.
inline ItemId intern(std::string_view label, Database& db) { return db.items().intern(label); }

inline Count resolve_threshold(const SupportThreshold& spec, std::size_t n) { return spec.resolve(n); }

} // namespace tlmine

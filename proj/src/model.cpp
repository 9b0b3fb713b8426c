#include "tlmine/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace tlmine {

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

// ---------------------------------------------------------------- Ratio

Ratio::Ratio(std::uint64_t num, std::uint64_t den)
{
    if (den == 0)
        throw Error("ratio with zero denominator");
    std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
{
    using wide = unsigned __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
}

namespace {

std::uint64_t parse_digits(std::string_view digits, std::string_view whole)
{
    std::uint64_t v = 0;
    if (digits.empty())
        return 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("invalid number '" + std::string(whole) + "'");
    return v;
}

Ratio parse_decimal(std::string_view s, std::string_view whole)
{
    auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw ParseError("invalid number '" + std::string(whole) + "'");
    if (frac_part.size() > 15 || int_part.size() > 15)
        throw ParseError("too many digits in '" + std::string(whole) + "'");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i)
        den *= 10;
    std::uint64_t num = parse_digits(int_part, whole) * den + parse_digits(frac_part, whole);
    return Ratio(num, den);
}

} // namespace

Ratio Ratio::parse(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::uint64_t num = parse_digits(trim(s.substr(0, slash)), text);
        std::uint64_t den = parse_digits(trim(s.substr(slash + 1)), text);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Ratio(num, den);
    }
    if (s.back() == '%') {
        Ratio r = parse_decimal(trim(s.substr(0, s.size() - 1)), text);
        return Ratio(r.num(), r.den() * 100);
    }
    return parse_decimal(s, text);
}

std::string Ratio::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

// ----------------------------------------------------------- Dictionary

std::string_view trim(std::string_view s)
{
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::uint32_t Dictionary::intern(std::string_view label)
{
    std::string_view key = trim(label);
    if (key.empty())
        throw ParseError("empty label");
    std::string owned(key);
    if (auto it = index_.find(owned); it != index_.end())
        return it->second;
    auto ordinal = static_cast<std::uint32_t>(labels_.size());
    index_.emplace(owned, ordinal);
    labels_.push_back(std::move(owned));
    return ordinal;
}

std::optional<std::uint32_t> Dictionary::find(std::string_view label) const
{
    auto it = index_.find(std::string(trim(label)));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

// --------------------------------------------------------------- Itemset

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items))
{
    if (std::adjacent_find(items_.begin(), items_.end(), std::greater_equal<>()) != items_.end())
        throw std::invalid_argument("itemset items must be strictly increasing");
}

Itemset Itemset::from_unsorted(std::vector<ItemId> items)
{
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return Itemset(std::move(items));
}

bool Itemset::contains(ItemId item) const
{
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::subset_of(const Itemset& other) const
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (ItemId id : s) {
        h ^= id;
        h *= 0x100000001b3ull;
    }
    return h;
}

// -------------------------------------------------------------- Database

const Transaction& Database::append(const TransactionRecord& record)
{
    std::string_view tid = trim(record.tid);
    if (tid.empty())
        throw ParseError("empty TID");
    if (tids_.find(tid))
        throw Error("duplicate TID '" + std::string(tid) + "'");
    if (record.items.empty())
        throw Error("transaction '" + std::string(tid) + "' has no items");

    // Validate every label before mutating the dictionaries.
    for (const auto& label : record.items)
        if (trim(label).empty())
            throw ParseError("empty item label in transaction '" + std::string(tid) + "'");

    std::vector<ItemId> ids;
    ids.reserve(record.items.size());
    for (const auto& label : record.items)
        ids.push_back(items_.intern(label));

    Transaction tx;
    tx.tid = tids_.intern(tid);
    tx.items = Itemset::from_unsorted(std::move(ids));
    transactions_.push_back(std::move(tx));
    return transactions_.back();
}

std::vector<std::string> Database::labels_of(const Itemset& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (ItemId id : s)
        out.push_back(items_.label(id));
    return out;
}

Itemset Database::itemset_of(std::initializer_list<std::string_view> labels) const
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

TransactionRecord Database::record(const Transaction& tx) const
{
    return {tids_.label(tx.tid), labels_of(tx.items)};
}

// ------------------------------------------------------ SupportThreshold

SupportThreshold SupportThreshold::absolute(Count count)
{
    if (count < 1)
        throw ThresholdError("invalid threshold: absolute support must be >= 1");
    return SupportThreshold(count);
}

SupportThreshold SupportThreshold::fraction(Ratio fraction)
{
    if (fraction.num() == 0 || fraction > Ratio(1, 1))
        throw ThresholdError("invalid threshold: fraction must be in (0, 1], got " + fraction.str());
    return SupportThreshold(fraction);
}

Count SupportThreshold::resolve(std::size_t n_transactions) const
{
    if (auto count = std::get_if<Count>(&value_))
        return *count;
    const Ratio& f = std::get<Ratio>(value_);
    if (n_transactions == 0)
        throw ThresholdError("empty database: cannot resolve a fractional threshold");
    using wide = unsigned __int128;
    wide scaled = static_cast<wide>(f.num()) * n_transactions;
    auto ceil = static_cast<Count>((scaled + f.den() - 1) / f.den());
    return std::max<Count>(1, ceil);
}

} // namespace tlmine

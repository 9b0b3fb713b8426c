#pragma once

#include "tlmine/model.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace tlmine {

// Transaction file format: one `TID,item,item,...` per line. Fields are
// trimmed; blank lines and lines starting with '#' are skipped.

/// Throws ParseError (with the 1-based line number) on an empty field, a
/// line with no items or a duplicate TID.
Database parse_database(std::string_view text);

/// Parses `text` and appends its transactions to `db`. Line numbers in
/// errors refer to `text`.
void append_database(Database& db, std::string_view text);

std::string write_database(const Database& db);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

struct SyntheticSpec {
    std::size_t n_transactions = 1;
    std::size_t n_items = 1;
    double mean_length = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
    /// "n_tx,n_items,mean,seed"
    static SyntheticSpec parse(std::string_view text);
};

/// Transaction lengths are Poisson(mean) clamped to [1, n_items]; items are
/// drawn without replacement with Zipf (exponent 1) popularity. Labels are
/// `T<k>` and `I<rank>`, both 1-based. Deterministic for a fixed spec.
Database generate_synthetic(const SyntheticSpec& spec);

} // namespace tlmine

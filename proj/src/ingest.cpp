#include "tlmine/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace tlmine {

namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

} // namespace

void append_database(Database& db, std::string_view text)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        auto fields = split_fields(line);
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (fields[i].empty())
                throw ParseError("empty field " + std::to_string(i + 1), line_no);
        if (fields.size() < 2)
            throw ParseError("transaction '" + std::string(fields[0]) + "' has no items", line_no);

        TransactionRecord record{std::string(fields[0]), {}};
        for (std::size_t i = 1; i < fields.size(); ++i)
            record.items.emplace_back(fields[i]);
        try {
            db.append(record);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
}

Database parse_database(std::string_view text)
{
    Database db;
    append_database(db, text);
    return db;
}

std::string write_database(const Database& db)
{
    std::string out;
    for (const auto& tx : db.transactions()) {
        out += db.tids().label(tx.tid);
        for (ItemId id : tx.items) {
            out += ',';
            out += db.items().label(id);
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error("write failed for '" + path.string() + "'");
}

// ------------------------------------------------------------- synthetic

void SyntheticSpec::validate() const
{
    if (n_transactions < 1)
        throw Error("synthetic spec: n_transactions must be >= 1");
    if (n_items < 1)
        throw Error("synthetic spec: n_items must be >= 1");
    if (!(mean_length > 0.0))
        throw Error("synthetic spec: mean length must be > 0");
    if (mean_length > static_cast<double>(n_items))
        throw Error("synthetic spec: mean length exceeds n_items");
}

SyntheticSpec SyntheticSpec::parse(std::string_view text)
{
    auto fields = split_fields(text);
    if (fields.size() != 4)
        throw ParseError("synthetic spec must be n_tx,n_items,mean,seed");
    SyntheticSpec spec;
    try {
        spec.n_transactions = std::stoull(std::string(fields[0]));
        spec.n_items = std::stoull(std::string(fields[1]));
        spec.mean_length = std::stod(std::string(fields[2]));
        spec.seed = std::stoull(std::string(fields[3]));
    } catch (const std::logic_error&) {
        throw ParseError("invalid synthetic spec '" + std::string(text) + "'");
    }
    spec.validate();
    return spec;
}

Database generate_synthetic(const SyntheticSpec& spec)
{
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::poisson_distribution<std::size_t> length_dist(spec.mean_length);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Weighted sampling without replacement (Efraimidis-Spirakis): the k
    // largest keys u^(1/w) form the sample. Item rank r has weight 1/r.
    std::vector<std::pair<double, std::size_t>> keys(spec.n_items);

    Database db;
    for (std::size_t t = 0; t < spec.n_transactions; ++t) {
        std::size_t len = std::clamp<std::size_t>(length_dist(rng), 1, spec.n_items);
        for (std::size_t r = 0; r < spec.n_items; ++r) {
            double u = unit(rng);
            // log(u^(1/w)) = log(u) * (r+1); compare in log space.
            keys[r] = {std::log(u) * static_cast<double>(r + 1), r};
        }
        std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(len), keys.end(),
                          [](const auto& a, const auto& b) {
                              return a.first > b.first || (a.first == b.first && a.second < b.second);
                          });
        std::vector<std::size_t> chosen;
        chosen.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
            chosen.push_back(keys[i].second);
        std::sort(chosen.begin(), chosen.end());

        TransactionRecord record{"T" + std::to_string(t + 1), {}};
        for (std::size_t r : chosen)
            record.items.push_back("I" + std::to_string(r + 1));
        db.append(record);
    }
    return db;
}

} // namespace tlmine
